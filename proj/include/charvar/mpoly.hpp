#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charvar/rational.hpp"

namespace charvar {

inline constexpr int kMaxVars = 4;

// Exponent vector for up to kMaxVars variables.
struct Expo {
  std::array<int16_t, kMaxVars> e{0, 0, 0, 0};

  int total() const { return e[0] + e[1] + e[2] + e[3]; }
  bool operator==(const Expo&) const = default;
  Expo operator+(const Expo& o) const {
    Expo r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
    return r;
  }
  // componentwise divisibility: this | other
  bool divides(const Expo& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Expo minus(const Expo& o) const {
    Expo r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<int16_t>(e[i] - o.e[i]);
    return r;
  }
  static Expo lcm(const Expo& a, const Expo& b) {
    Expo r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
};

struct ExpoLexLess {
  bool operator()(const Expo& a, const Expo& b) const { return a.e < b.e; }
};

enum class OrderKind { Grevlex, Lex, GradedLex };

// Monomial order on the first nv variables. perm lists variable indices from
// most significant to least significant.
struct MonOrder {
  OrderKind kind = OrderKind::Grevlex;
  int nv = 3;
  std::array<int, kMaxVars> perm{0, 1, 2, 3};

  static MonOrder grevlex(int nv);
  static MonOrder lex(int nv);
  static MonOrder graded_lex(int nv);
  // lex order that eliminates `first` (listed most significant, rest in
  // natural order afterwards)
  static MonOrder lex_eliminating(int nv, const std::vector<int>& first);

  // strict: a comes before b (a is larger in the order)
  bool greater(const Expo& a, const Expo& b) const;
};

// Sparse multivariate polynomial over Q in up to kMaxVars variables.
class MPoly {
 public:
  using TermMap = std::map<Expo, Rat, ExpoLexLess>;

  MPoly() : nv_(0) {}
  explicit MPoly(int nv) : nv_(nv) {}
  MPoly(int nv, const Rat& c) : nv_(nv) {
    if (c != 0) terms_[Expo{}] = c;
  }

  static MPoly var(int nv, int i, int exp = 1);
  static MPoly constant(int nv, const Rat& c) { return MPoly(nv, c); }

  int nvars() const { return nv_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{});
  }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int total_degree() const;
  int degree_in(int var) const;
  Rat coeff(const Expo& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }
  Rat constant_term() const { return coeff(Expo{}); }

  void add_term(const Expo& m, const Rat& c);

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly operator*(const Rat& c) const;
  MPoly operator/(const Rat& c) const;
  bool operator==(const MPoly& o) const { return nv_ == o.nv_ && terms_ == o.terms_; }

  MPoly pow(int e) const;
  MPoly derivative(int var) const;

  // leading data under a monomial order
  Expo leading_monomial(const MonOrder& ord) const;
  Rat leading_coeff(const MonOrder& ord) const;

  // substitute variable -> polynomial (same nvars)
  MPoly substitute(int var, const MPoly& value) const;
  // substitute variable -> num/den, returning den^deg * f(...)
  MPoly substitute_rational(int var, const MPoly& num, const MPoly& den) const;

  // exact evaluation / partial evaluation
  MPoly eval_var(int var, const Rat& value) const;  // keeps nvars
  std::complex<double> eval(const std::array<std::complex<double>, kMaxVars>& pt) const;
  Rat eval_rat(const std::array<Rat, kMaxVars>& pt) const;

  // integer normalization: multiply by the unique positive rational making the
  // coefficients coprime integers with positive leading coefficient (under
  // graded lex). Returns the normalized polynomial.
  MPoly normalized_integer() const;
  // divide by leading coefficient under ord
  MPoly monic(const MonOrder& ord) const;

  // true if the polynomial only involves variables in `vars`
  bool supported_on(const std::vector<int>& vars) const;
  std::vector<int> used_vars() const;

  // reinterpret with a different variable arrangement: new_index[i] gives the
  // slot in the result for old variable i, or -1 (requires degree 0 in i)
  MPoly remap_vars(const std::array<int, kMaxVars>& new_index, int new_nv) const;

  // dense coefficient list in `var` (entries are polynomials without `var`)
  std::vector<MPoly> coeffs_in(int var) const;

  std::string str(const std::vector<std::string>& names) const;
  static MPoly parse(const std::string& text, const std::vector<std::string>& names);

 private:
  int nv_;
  TermMap terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

// content (gcd of coefficients) over Q is meaningless; integer content of the
// normalized form is what normalized_integer computes.

}  // namespace charvar
