#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "charvar/tracepoly.hpp"

using namespace charvar;

namespace {

using C = std::complex<double>;

struct M2 {
  C a{1}, b{0}, c{0}, d{1};
  M2 operator*(const M2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  M2 inv() const { return {d, -b, -c, a}; }  // unimodular inverse
  C tr() const { return a + d; }
};

M2 random_sl2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  // A = [[s, 0],[t, 1/s]] * [[1, v],[0, 1]] is unimodular for s != 0
  C s(u(rng), u(rng));
  while (std::abs(s) < 0.3) s = C(u(rng), u(rng));
  C t(u(rng), u(rng)), v(u(rng), u(rng));
  M2 lower{s, 0, t, 1.0 / s};
  M2 upper{1, v, 0, 1};
  return lower * upper;
}

M2 eval_word(const FreeWord& w, const M2& A, const M2& B) {
  M2 r;
  for (const FBlock& blk : w.blocks()) {
    M2 base = blk.g == 0 ? A : B;
    if (blk.e < 0) base = base.inv();
    for (long i = 0; i < std::abs(blk.e); ++i) r = r * base;
  }
  return r;
}

FreeWord random_freeword(std::mt19937_64& rng, int max_len) {
  std::vector<FBlock> bs;
  int n = 1 + static_cast<int>(rng() % max_len);
  long total = 0;
  while (total < n) {
    uint8_t g = rng() & 1;
    long e = 1 + static_cast<long>(rng() % 3);
    if (rng() & 1) e = -e;
    bs.push_back({g, e});
    total += std::abs(e);
  }
  return FreeWord(std::move(bs));
}

TwistWord random_twistword(std::mt19937_64& rng, int max_len) {
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
  return TwistWord(false, std::move(ls));
}

MPoly P(const std::string& s) { return MPoly::parse(s, kXYZ); }

const FreeWord a = FreeWord::gen(0), b = FreeWord::gen(1);

}  // namespace

TEST_CASE("trace polynomial base cases") {
  CHECK(trace_polynomial(FreeWord()) == P("2"));
  CHECK(trace_polynomial(a) == P("x"));
  CHECK(trace_polynomial(b) == P("y"));
  CHECK(trace_polynomial(a * b) == P("z"));
  CHECK(trace_polynomial(a * b.inverse()) == P("x*y - z"));
  CHECK(trace_polynomial(a.power(2)) == P("x^2 - 2"));
  // commutator
  FreeWord comm = a.inverse() * b.inverse() * a * b;
  CHECK(trace_polynomial(comm) == P("x^2 + y^2 + z^2 - x*y*z - 2"));
}

TEST_CASE("trace polynomial numeric soundness") {
  std::mt19937_64 rng(101);
  TraceContext ctx;
  for (int i = 0; i < 500; ++i) {
    FreeWord w = random_freeword(rng, 10);
    MPoly p = ctx.trace_of(w);
    M2 A = random_sl2(rng), B = random_sl2(rng);
    C x = A.tr(), y = B.tr(), z = (A * B).tr();
    C expect = eval_word(w, A, B).tr();
    C got = p.eval({x, y, z, C(0)});
    CHECK(std::abs(got - expect) < 1e-9 * (1.0 + std::abs(expect)));
  }
}

TEST_CASE("trace invariance under inversion and conjugation") {
  std::mt19937_64 rng(103);
  TraceContext ctx;
  for (int i = 0; i < 100; ++i) {
    FreeWord w = random_freeword(rng, 8);
    FreeWord g = random_freeword(rng, 4);
    CHECK(ctx.trace_of(w) == ctx.trace_of(w.inverse()));
    CHECK(ctx.trace_of(w) == ctx.trace_of(w.conjugated(g)));
  }
}

TEST_CASE("induced automorphisms of generators") {
  PolyAutomorphism al = induced_automorphism(TwistWord::parse("A"));
  CHECK(al.fx == P("x"));
  CHECK(al.fy == P("z"));
  CHECK(al.fz == P("x*z - y"));
  PolyAutomorphism bi = induced_automorphism(TwistWord::parse("B^-1"));
  CHECK(bi.fx == P("z"));
  CHECK(bi.fy == P("y"));
  CHECK(bi.fz == P("y*z - x"));
  CHECK(induced_automorphism(TwistWord::parse("A*A^-1")) == PolyAutomorphism::identity());
}

TEST_CASE("induced automorphism agrees with trace polynomials of images") {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 40; ++i) {
    TwistWord w = random_twistword(rng, 5);
    PolyAutomorphism phi = induced_automorphism(w);
    TraceContext ctx;
    CHECK(phi.fx == ctx.trace_of(apply_twist(w, a)));
    CHECK(phi.fy == ctx.trace_of(apply_twist(w, b)));
    CHECK(phi.fz == ctx.trace_of(apply_twist(w, a * b)));
  }
}

TEST_CASE("induced automorphism is an anti-homomorphism of words") {
  std::mt19937_64 rng(109);
  for (int i = 0; i < 100; ++i) {
    TwistWord w1 = random_twistword(rng, 4);
    TwistWord w2 = random_twistword(rng, 4);
    PolyAutomorphism lhs = induced_automorphism(w1 * w2);
    PolyAutomorphism rhs = induced_automorphism(w2).after(induced_automorphism(w1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("inverse words give inverse automorphisms") {
  std::mt19937_64 rng(113);
  for (int i = 0; i < 40; ++i) {
    TwistWord w = random_twistword(rng, 4);
    PolyAutomorphism p = induced_automorphism(w);
    PolyAutomorphism q = induced_automorphism(w.inverse());
    CHECK(p.after(q) == PolyAutomorphism::identity());
    CHECK(q.after(p) == PolyAutomorphism::identity());
  }
}

TEST_CASE("fixed ideal basics") {
  CurveIdeal I = fixed_ideal(TwistWord::parse("A*B^-1"));
  REQUIRE(I.generators.size() >= 1);
  std::array<Rat, kMaxVars> origin{Rat(0), Rat(0), Rat(0), Rat(0)};
  for (const MPoly& g : I.generators) CHECK(g.eval_rat(origin) == 0);
  CHECK_THROWS_AS(fixed_ideal(TwistWord::parse("A")), std::domain_error);
}

TEST_CASE("origin is always fixed") {
  std::mt19937_64 rng(127);
  int tested = 0;
  while (tested < 50) {
    TwistWord w = random_twistword(rng, 6);
    if (!invariants(w).hyperbolic) continue;
    ++tested;
    CurveIdeal I = fixed_ideal(w);
    std::array<Rat, kMaxVars> origin{Rat(0), Rat(0), Rat(0), Rat(0)};
    for (const MPoly& g : I.generators) CHECK(g.eval_rat(origin) == 0);
  }
}

TEST_CASE("axis consistency") {
  std::mt19937_64 rng(131);
  int tested = 0;
  while (tested < 40) {
    TwistWord w = random_twistword(rng, 6);
    if (!invariants(w).hyperbolic) continue;
    ++tested;
    CurveIdeal I = fixed_ideal(w);
    AxisAction ax = axis_action(w);
    for (int line = 0; line < 3; ++line) {
      // restrict generators to the line: set the two other variables to zero
      bool contained = true;
      for (const MPoly& g : I.generators) {
        MPoly r = g;
        for (int v = 0; v < 3; ++v)
          if (v != line) r = r.eval_var(v, Rat(0));
        if (!r.is_zero()) contained = false;
      }
      CHECK(contained == ax.line_fixed_pointwise(line));
    }
  }
}

TEST_CASE("A^2B^-2 fixed set contains the z axis") {
  CurveIdeal I = fixed_ideal(TwistWord::parse("A^2*B^-2"));
  for (const MPoly& g : I.generators) {
    MPoly r = g.eval_var(0, Rat(0)).eval_var(1, Rat(0));
    CHECK(r.is_zero());
  }
}

TEST_CASE("sign classes of signed fixed ideals") {
  TwistWord w = TwistWord::parse("A^2*B^-2");
  CurveIdeal s1 = fixed_ideal(w, SignClass::Sigma1);
  PolyAutomorphism phi = induced_automorphism(w);
  CHECK(s1.generators[0] == (phi.fx - P("x")).normalized_integer());
  CHECK(s1.generators[1] == (phi.fy + P("y")).normalized_integer());
  CHECK(s1.generators[2] == (phi.fz + P("z")).normalized_integer());
}

TEST_CASE("perp ideals by b1") {
  CHECK(perp_ideals(TwistWord::parse("A*B^-1")).empty());  // b1 = 1
  auto v3 = perp_ideals(TwistWord::parse("A^2*B^-2"));     // b1 = 3
  CHECK(v3.size() == 3);
  auto v2 = perp_ideals(TwistWord::parse("A*B^-2"));  // b1 = 2
  CHECK(v2.size() == 1);
  // family N_n with n = 1: psi_1 = A B^3 A, the sigma2 class
  auto vn = perp_ideals(TwistWord::parse("A*B^3*A"));
  REQUIRE(vn.size() == 1);
  CHECK(vn[0].sign_class == SignClass::Sigma2);
  // its variety contains L3 = {(0,0,z)}
  for (const MPoly& g : vn[0].generators) {
    MPoly r = g.eval_var(0, Rat(0)).eval_var(1, Rat(0));
    CHECK(r.is_zero());
  }
}

TEST_CASE("reducibility polynomial") {
  MPoly q = reducibility_polynomial();
  std::array<Rat, kMaxVars> p222{Rat(2), Rat(2), Rat(2), Rat(0)};
  CHECK(q.eval_rat(p222) == 0);
  std::array<Rat, kMaxVars> orig{Rat(0), Rat(0), Rat(0), Rat(0)};
  CHECK(q.eval_rat(orig) == -4);
  // (x,0,0) -> x^2 - 4
  CHECK(q.eval_var(1, Rat(0)).eval_var(2, Rat(0)) == P("x^2 - 4"));
}

TEST_CASE("quadric is invariant under the induced automorphisms") {
  MPoly q = reducibility_polynomial();
  for (const char* s : {"A", "B^-1", "A^-1", "B"}) {
    PolyAutomorphism phi = induced_automorphism(TwistWord::parse(s));
    CHECK(phi.apply(q) == q);
  }
  std::mt19937_64 rng(137);
  for (int i = 0; i < 20; ++i) {
    PolyAutomorphism phi = induced_automorphism(random_twistword(rng, 5));
    CHECK(phi.apply(q) == q);
  }
}
