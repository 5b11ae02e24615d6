#pragma once

#include <complex>
#include <string>
#include <vector>

#include "charvar/mpoly.hpp"
#include "charvar/rational.hpp"

namespace charvar {

// Dense univariate polynomial over Q. c[i] is the coefficient of t^i; the top
// coefficient is nonzero (zero polynomial has empty c).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> cs) : c_(std::move(cs)) { trim(); }
  static UPoly constant(const Rat& a) { return UPoly(std::vector<Rat>{a}); }
  static UPoly t() { return UPoly({Rat(0), Rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rat& operator[](int i) const { return c_[i]; }
  Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }
  Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Rat& a) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  UPoly derivative() const;
  Rat eval(const Rat& x) const;
  std::complex<double> eval(const std::complex<double>& x) const;

  // euclidean division: *this = q*d + r with deg r < deg d
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  // exact division; throws if not divisible
  UPoly exact_div(const UPoly& d) const;
  bool divisible_by(const UPoly& d) const;

  UPoly monic() const;
  // primitive integer form: multiply by positive rational so coefficients are
  // coprime integers, leading coefficient positive
  UPoly primitive_integer() const;

  bool is_squarefree() const;
  UPoly squarefree_part() const;

  static UPoly gcd(const UPoly& a, const UPoly& b);  // monic gcd

  MPoly to_mpoly(int nv, int var) const;
  static UPoly from_mpoly(const MPoly& p, int var);  // p must only involve var

  std::string str(const std::string& name = "u") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Irreducible factorization over Q. Returns the constant `unit` and pairwise
// distinct primitive integer irreducible factors with multiplicities so that
// f = unit * prod factor^mult.
struct UFactor {
  UPoly factor;
  int multiplicity;
};
struct UFactorization {
  Rat unit;
  std::vector<UFactor> factors;
};
UFactorization factor_univariate(const UPoly& f);

// number of distinct complex roots != 0 test helpers
bool has_repeated_nonzero_root(const UPoly& f);

}  // namespace charvar
