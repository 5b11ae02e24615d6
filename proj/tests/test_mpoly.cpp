#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charvar/mpoly.hpp"

using namespace charvar;

namespace {
const std::vector<std::string> XYZ{"x", "y", "z"};
MPoly P(const std::string& s) { return MPoly::parse(s, XYZ); }
}  // namespace

TEST_CASE("parse and print round trip") {
  CHECK(P("x^2*y - 3*z + 1").str(XYZ) == "x^2*y - 3*z + 1");
  CHECK(P("-x + y").str(XYZ) == "-x + y");
  CHECK(P("0").str(XYZ) == "0");
  CHECK(P("2*x*x*x").str(XYZ) == "2*x^3");
  CHECK(P("1/2*x^2 - 1/3").str(XYZ) == "1/2*x^2 - 1/3");
  CHECK(P("x + y - x").str(XYZ) == "y");
}

TEST_CASE("arithmetic") {
  MPoly a = P("x + y");
  MPoly b = P("x - y");
  CHECK((a * b).str(XYZ) == "x^2 - y^2");
  CHECK((a + b).str(XYZ) == "2*x");
  CHECK(a.pow(2).str(XYZ) == "x^2 + 2*x*y + y^2");
  CHECK((a - a).is_zero());
}

TEST_CASE("degrees and leading terms") {
  MPoly f = P("x^2*y + z^4 + x*y*z");
  CHECK(f.total_degree() == 4);
  CHECK(f.degree_in(0) == 2);
  CHECK(f.degree_in(2) == 4);
  MonOrder grevlex = MonOrder::grevlex(3);
  // degree 4 tie between z^4 and nothing else; z^4 wins at degree 4
  Expo lm = f.leading_monomial(grevlex);
  CHECK(lm.e[2] == 4);
  MonOrder lex = MonOrder::lex(3);
  lm = f.leading_monomial(lex);
  CHECK(lm.e[0] == 2);
}

TEST_CASE("grevlex vs lex ordering") {
  MonOrder g = MonOrder::grevlex(3);
  // x*z vs y^2 at same degree: grevlex compares last index; x*z has z=1 vs
  // y^2 has z=0, so y^2 > x*z
  Expo xz;
  xz.e = {1, 0, 1, 0};
  Expo y2;
  y2.e = {0, 2, 0, 0};
  CHECK(g.greater(y2, xz));
  MonOrder l = MonOrder::lex(3);
  CHECK(l.greater(xz, y2));
}

TEST_CASE("substitution") {
  MPoly f = P("x^2 + y*z");
  MPoly r = f.substitute(0, P("y + z"));
  CHECK(r == P("y^2 + 2*y*z + z^2 + y*z"));
  // rational substitution: f(x -> y/z) * z^2
  MPoly rr = f.substitute_rational(0, P("y"), P("z"));
  CHECK(rr == P("y^2 + y*z^3"));
}

TEST_CASE("derivative and eval") {
  MPoly f = P("x^3 + x*y");
  CHECK(f.derivative(0) == P("3*x^2 + y"));
  std::array<Rat, kMaxVars> pt{Rat(2), Rat(3), Rat(0), Rat(0)};
  CHECK(f.eval_rat(pt) == Rat(14));
}

TEST_CASE("integer normalization") {
  MPoly f = P("1/2*x + 1/3*y");
  CHECK(f.normalized_integer() == P("3*x + 2*y"));
  MPoly g = P("-2*x - 4*y");
  CHECK(g.normalized_integer() == P("x + 2*y"));
}

TEST_CASE("remap and support") {
  MPoly f = P("y^2 + z");
  CHECK(f.supported_on({1, 2}));
  CHECK(!f.supported_on({0, 1}));
  std::array<int, kMaxVars> m{-1, 0, 1, -1};
  MPoly g = f.remap_vars(m, 2);
  CHECK(g.str({"u", "v"}) == "u^2 + v");
}
