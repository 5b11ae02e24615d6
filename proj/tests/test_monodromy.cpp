#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "charvar/monodromy.hpp"

using namespace charvar;

namespace {

TwistWord W(const std::string& s) { return TwistWord::parse(s); }

TwistWord random_word(std::mt19937_64& rng, int max_len) {
  std::vector<Letter> ls;
  int n = 1 + static_cast<int>(rng() % max_len);
  long total = 0;
  while (total < n) {
    Gen g = (rng() & 1) ? Gen::Alpha : Gen::Beta;
    long e = 1 + static_cast<long>(rng() % 3);
    if (rng() & 1) e = -e;
    ls.push_back({g, e});
    total += std::abs(e);
  }
  return TwistWord(rng() % 4 == 0, std::move(ls));
}

}  // namespace

TEST_CASE("parse basics") {
  TwistWord w = W("A*B^-1");
  REQUIRE(w.letters().size() == 2);
  CHECK(w.letters()[0] == Letter{Gen::Alpha, 1});
  CHECK(w.letters()[1] == Letter{Gen::Beta, -1});
  CHECK(w.str() == "A*B^-1");

  w = W("A^2*B^3");
  CHECK(w.letters()[0] == Letter{Gen::Alpha, 2});
  CHECK(w.letters()[1] == Letter{Gen::Beta, 3});

  CHECK(W("A*A^-1").empty());
  CHECK(W("alpha*beta^-1") == W("A*B^-1"));
  CHECK(W("I^2").empty());
  CHECK(W("iota").str() == "I");
  CHECK(W(" A ^ 2 * B ") == W("A^2*B"));
  CHECK(W("I*A*I") == W("A"));  // involution commutes to the front, parity 0

  CHECK_THROWS_AS(W("A*C"), std::invalid_argument);
  CHECK_THROWS_AS(W("A^"), std::invalid_argument);
  CHECK_THROWS_WITH(W("A*C"), doctest::Contains("position"));
}

TEST_CASE("printer round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    TwistWord w = random_word(rng, 8);
    CHECK(TwistWord::parse(w.str()) == w);
  }
}

TEST_CASE("word matrices") {
  CHECK(word_matrix(W("")) == IntMatrix2::identity());
  IntMatrix2 m = word_matrix(W("A*B^-1"));
  CHECK(m == IntMatrix2{2, 1, 1, 1});
  CHECK(m.trace() == 3);
  CHECK(word_matrix(W("A^2*B^-2")) == IntMatrix2{5, 2, 2, 1});
  // relations
  CHECK(word_matrix(W("A*B*A")) == word_matrix(W("B*A*B")));
  CHECK(word_matrix(W("A*B*A").power(4)) == IntMatrix2::identity());
  CHECK(word_matrix(W("A*B*A").power(2)) == -IntMatrix2::identity());
  // B^-1 as a positive word
  CHECK(word_matrix(W("B^-1")) == word_matrix(W("A^2*B*A^2*B*A^2*B*A^2")));
}

TEST_CASE("determinant is one for random words") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    CHECK(word_matrix(random_word(rng, 12)).det() == 1);
  }
}

TEST_CASE("invariants") {
  MonodromyInvariants i1 = invariants(W("A*B^-1"));
  CHECK(i1.trace == 3);
  CHECK(i1.mod2_order == 3);
  CHECK(i1.b1 == 1);
  CHECK(i1.hyperbolic);
  CHECK(*i1.binary_dihedral_count == 2);

  MonodromyInvariants i2 = invariants(W("A^2*B^-2"));
  CHECK(i2.trace == 6);
  CHECK(i2.mod2_order == 1);
  CHECK(i2.b1 == 3);
  CHECK(*i2.binary_dihedral_count == 2);

  // family M_n with n = 5: word A*B^7, dihedral count (n-3)/2 = 1
  MonodromyInvariants i3 = invariants(W("A*B^7"));
  CHECK(i3.trace == -5);
  CHECK(*i3.binary_dihedral_count == 1);

  CHECK(!invariants(W("A")).hyperbolic);
  CHECK(!invariants(W("A")).binary_dihedral_count.has_value());
}

TEST_CASE("b1 equals 4 minus mod2 order on random words") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    MonodromyInvariants inv = invariants(random_word(rng, 12));
    CHECK(inv.b1 == 4 - inv.mod2_order);
    CHECK(inv.b1 >= 1);
    CHECK(inv.b1 <= 3);
  }
}

TEST_CASE("mutation") {
  TwistWord w = W("A*B^-1");
  TwistWord m = w.mutated();
  CHECK(m.iota());
  CHECK(word_matrix(m).trace() == -3);
  CHECK(m.mutated() == w);
  CHECK(W("").mutated().str() == "I");
}

TEST_CASE("standard positive form examples") {
  StandardPositiveForm f = standard_positive_form(IntMatrix2{2, 1, 1, 1});
  CHECK(f.sign == 1);
  REQUIRE(f.blocks.size() == 1);
  CHECK(f.blocks[0] == std::pair<Int, Int>{1, 1});

  f = standard_positive_form(IntMatrix2{5, 2, 2, 1});
  CHECK(f.sign == 1);
  REQUIRE(f.blocks.size() == 1);
  CHECK(f.blocks[0] == std::pair<Int, Int>{2, 2});

  CHECK_THROWS_AS(standard_positive_form(IntMatrix2{1, 1, 0, 1}), std::domain_error);
}

TEST_CASE("standard positive form on random hyperbolic words") {
  std::mt19937_64 rng(17);
  int tested = 0;
  while (tested < 60) {
    TwistWord w = random_word(rng, 8);
    IntMatrix2 m = word_matrix(w);
    if (abs(m.trace()) <= 2) continue;
    ++tested;
    StandardPositiveForm f = standard_positive_form(m);
    CHECK(f.sign == (m.trace() > 0 ? 1 : -1));
    IntMatrix2 re = word_matrix(f.word());
    if (f.sign < 0) re = -re;
    CHECK(re.trace() == m.trace());
    CHECK(mod2_order(re) == mod2_order(m));
    // canonical: least rotation
    for (size_t r = 1; r < f.blocks.size(); ++r) {
      std::vector<std::pair<Int, Int>> rot(f.blocks.begin() + r, f.blocks.end());
      rot.insert(rot.end(), f.blocks.begin(), f.blocks.begin() + r);
      CHECK(!(rot < f.blocks));
    }
  }
}

TEST_CASE("axis action of generators") {
  AxisAction a = axis_action(W("A"));
  CHECK(a.perm == std::array<int, 3>{0, 2, 1});
  CHECK(a.parity[0] == 0);
  CHECK(a.parity[1] + a.parity[2] == 1);  // exactly one sign change

  AxisAction ab = axis_action(W("A*B^-1"));
  // 3-cycle
  CHECK(ab.perm[0] != 0);
  int o = mod2_order(word_matrix(W("A*B^-1")));
  CHECK(o == 3);
}

TEST_CASE("axis action of A^2B^-2 and its square") {
  TwistWord w = W("A^2*B^-2");
  AxisAction a = axis_action(w);
  CHECK(a.perm == std::array<int, 3>{0, 1, 2});
  // exactly line 3 is fixed pointwise (the fixed set is V cup L3)
  CHECK(a.parity == std::array<int, 3>{1, 1, 0});
  CHECK(a.line_fixed_pointwise(2));
  CHECK(!a.line_fixed_pointwise(0));

  AxisAction a2 = axis_action(w.power(2));
  CHECK(a2.perm == std::array<int, 3>{0, 1, 2});
  CHECK(a2.parity == std::array<int, 3>{0, 0, 0});
}

TEST_CASE("axis action is a homomorphism and w^6 acts trivially") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    TwistWord w = random_word(rng, 6);
    AxisAction a = axis_action(w);
    AxisAction acc;
    for (int k = 1; k <= 6; ++k) {
      acc = acc.then(a);
      CHECK(acc == axis_action(w.power(k)));
    }
    CHECK(acc.perm == std::array<int, 3>{0, 1, 2});
    CHECK(acc.parity == std::array<int, 3>{0, 0, 0});
    // permutation order equals the order of the mod-2 matrix, and the number
    // of odd parities in the identity-permutation case is 0 or 2
    AxisAction one = axis_action(w);
    int order = 1;
    AxisAction it = one;
    while (it.perm != std::array<int, 3>{0, 1, 2} && order < 4) {
      it = it.then(one);
      ++order;
    }
    CHECK(order == mod2_order(word_matrix(w)));
    if (one.perm == std::array<int, 3>{0, 1, 2}) {
      int odd = one.parity[0] + one.parity[1] + one.parity[2];
      CHECK((odd == 0 || odd == 2));
    }
  }
}
