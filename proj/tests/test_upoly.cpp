#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "charvar/upoly.hpp"

using namespace charvar;

namespace {
UPoly U(std::vector<long> cs) {
  std::vector<Rat> r;
  for (long c : cs) r.emplace_back(c);
  return UPoly(std::move(r));
}
}  // namespace

TEST_CASE("basic arithmetic") {
  UPoly f = U({-1, 0, 1});  // t^2 - 1
  UPoly g = U({1, 1});      // t + 1
  CHECK(f.exact_div(g) == U({-1, 1}));
  CHECK((g * g) == U({1, 2, 1}));
  CHECK(f.eval(Rat(3)) == Rat(8));
  CHECK(UPoly::gcd(f, g) == g.monic());
}

TEST_CASE("squarefree") {
  UPoly f = U({1, 2, 1});  // (t+1)^2
  CHECK(!f.is_squarefree());
  CHECK(f.squarefree_part() == U({1, 1}).monic());
  CHECK(U({-1, 0, 1}).is_squarefree());
}

TEST_CASE("factor quadratics and products") {
  // t^2 - 1 = (t-1)(t+1)
  auto fac = factor_univariate(U({-1, 0, 1}));
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].multiplicity == 1);
  CHECK(fac.unit == Rat(1));
  // irreducible: t^2 + 1
  fac = factor_univariate(U({1, 0, 1}));
  REQUIRE(fac.factors.size() == 1);
  CHECK(fac.factors[0].factor.degree() == 2);
  // t^2 + t + 1 irreducible
  fac = factor_univariate(U({1, 1, 1}));
  CHECK(fac.factors.size() == 1);
}

TEST_CASE("factor with multiplicity and content") {
  // 6*(t-1)^2*(t^2+1)
  UPoly f = (U({-1, 1}) * U({-1, 1}) * U({1, 0, 1})) * Rat(6);
  auto fac = factor_univariate(f);
  UPoly rec = UPoly::constant(fac.unit);
  for (auto& fa : fac.factors)
    for (int i = 0; i < fa.multiplicity; ++i) rec = rec * fa.factor;
  CHECK(rec == f);
  CHECK(fac.factors.size() == 2);
}

TEST_CASE("random products reconstruct") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 120; ++iter) {
    UPoly f = UPoly::constant(Rat(1 + static_cast<long>(rng() % 5)));
    int nf = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < nf; ++k) {
      int d = 1 + static_cast<int>(rng() % 4);
      std::vector<Rat> cs(d + 1);
      for (int i = 0; i <= d; ++i) cs[i] = Rat(static_cast<long>(rng() % 11) - 5);
      cs[d] = Rat(1 + static_cast<long>(rng() % 3));
      f = f * UPoly(std::move(cs));
    }
    auto fac = factor_univariate(f);
    UPoly rec = UPoly::constant(fac.unit);
    for (auto& fa : fac.factors)
      for (int i = 0; i < fa.multiplicity; ++i) rec = rec * fa.factor;
    CHECK(rec == f);
    for (auto& fa : fac.factors) {
      auto refac = factor_univariate(fa.factor);
      CHECK(refac.factors.size() == 1);
      CHECK(refac.factors[0].multiplicity == 1);
    }
  }
}

TEST_CASE("bigger irreducible") {
  // cyclotomic-like: t^6 + t^5 + ... + 1 = (t^7-1)/(t-1), irreducible
  UPoly f = U({1, 1, 1, 1, 1, 1, 1});
  auto fac = factor_univariate(f);
  CHECK(fac.factors.size() == 1);
  CHECK(fac.factors[0].factor.degree() == 6);
}

TEST_CASE("repeated nonzero root detection") {
  CHECK(has_repeated_nonzero_root(U({1, 2, 1})));       // (t+1)^2
  CHECK(!has_repeated_nonzero_root(U({0, 0, 1})));      // t^2: repeated root 0
  CHECK(!has_repeated_nonzero_root(U({-1, 0, 1})));     // squarefree
  CHECK(has_repeated_nonzero_root(U({0, 1, 2, 1})));    // t*(t+1)^2
}
