#pragma once

#include <map>
#include <vector>

#include "charvar/freeword.hpp"
#include "charvar/mpoly.hpp"
#include "charvar/monodromy.hpp"

namespace charvar {

// Variables of the coordinate ring of X(S): x = tr(a), y = tr(b), z = tr(ab).
inline const std::vector<std::string> kXYZ{"x", "y", "z"};

// Trace polynomial engine with a memo table keyed on cyclic words. For every
// representation rho, trace_of(w) evaluated at (tr rho(a), tr rho(b),
// tr rho(ab)) equals tr rho(w).
class TraceContext {
 public:
  MPoly trace_of(const FreeWord& w);

 private:
  MPoly compute(const std::vector<FBlock>& cyc);
  std::map<std::vector<FBlock>, MPoly> memo_;
};

MPoly trace_polynomial(const FreeWord& w);

// Polynomial automorphism of C^3 = X(S) written by the images of x, y, z.
struct PolyAutomorphism {
  MPoly fx{3}, fy{3}, fz{3};

  static PolyAutomorphism identity();
  static PolyAutomorphism generator(Gen g, bool inverse);

  // this after other: (this o other)(v) = this(other(v))
  PolyAutomorphism after(const PolyAutomorphism& other) const;
  MPoly apply(const MPoly& p) const;  // substitute images into p
  std::array<std::complex<double>, 3> apply(const std::array<std::complex<double>, 3>& v) const;
  bool operator==(const PolyAutomorphism&) const = default;
};

PolyAutomorphism induced_automorphism(const TwistWord& w);

// Sign classes of the (signed) fixed-point sets; Id is the fixed-point set
// itself, SigmaI negates the two coordinates other than i.
enum class SignClass { Id, Sigma1, Sigma2, Sigma3 };

std::array<int, 3> sign_vector(SignClass sc);  // entries +1/-1
const char* sign_class_name(SignClass sc);

struct CurveIdeal {
  TwistWord word;
  SignClass sign_class = SignClass::Id;
  std::vector<MPoly> generators;  // integer-normalized, in Q[x,y,z]
};

CurveIdeal fixed_ideal(const TwistWord& w, SignClass sc = SignClass::Id);
std::vector<CurveIdeal> perp_ideals(const TwistWord& w);

// x^2 + y^2 + z^2 - x*y*z - 4; vanishes exactly at reducible characters
MPoly reducibility_polynomial();
std::complex<double> reducibility_value(std::complex<double> x, std::complex<double> y,
                                        std::complex<double> z);

}  // namespace charvar
