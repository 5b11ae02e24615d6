#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "charvar/rational.hpp"

namespace charvar {

// Dehn-twist generators of the mapping class group of the once-punctured
// torus. A TwistWord is a product of powers of the two twists together with an
// optional leading involution.
enum class Gen : uint8_t { Alpha = 0, Beta = 1 };

struct Letter {
  Gen g;
  long e;  // nonzero
  bool operator==(const Letter&) const = default;
};

class TwistWord {
 public:
  TwistWord() = default;
  TwistWord(bool iota, std::vector<Letter> letters);

  // Grammar: word := term ("*" term)* ; term := base ("^" signed_int)? ;
  // base := "A" | "B" | "I" | "alpha" | "beta" | "iota". Whitespace ignored.
  static TwistWord parse(const std::string& text);
  std::string str() const;  // canonical form, e.g. "A^2*B^-3"

  bool iota() const { return iota_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return !iota_ && letters_.empty(); }
  long twist_length() const;  // sum of |exponents|

  TwistWord operator*(const TwistWord& o) const;
  TwistWord power(int k) const;
  TwistWord inverse() const;
  TwistWord mutated() const;  // compose with the involution

  bool operator==(const TwistWord&) const = default;

 private:
  void normalize();
  bool iota_ = false;
  std::vector<Letter> letters_;
};

struct IntMatrix2 {
  Int a{1}, b{0}, c{0}, d{1};  // row major [[a,b],[c,d]]

  static IntMatrix2 identity() { return {}; }
  IntMatrix2 operator*(const IntMatrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  IntMatrix2 operator-() const { return {-a, -b, -c, -d}; }
  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }
  bool operator==(const IntMatrix2&) const = default;
};

// homology matrices of the twist generators
IntMatrix2 twist_matrix_alpha(long e);  // [[1,e],[0,1]]
IntMatrix2 twist_matrix_beta(long e);   // [[1,0],[-e,1]]
IntMatrix2 word_matrix(const TwistWord& w);

struct MonodromyInvariants {
  Int trace;
  int mod2_order;  // order of the mod-2 homology action, in {1,2,3}
  int b1;          // 4 - mod2_order
  int h_rank;      // b1 - 1
  bool hyperbolic;
  std::optional<Int> binary_dihedral_count;  // only when hyperbolic
};

MonodromyInvariants invariants(const TwistWord& w);
int mod2_order(const IntMatrix2& m);

// Conjugacy representative sign * A^{a1} B^{-b1} ... A^{an} B^{-bn} of a
// hyperbolic matrix, exponents positive, canonicalized by the
// lexicographically least cyclic rotation of the (a_i, b_i) pairs.
struct StandardPositiveForm {
  int sign;  // +1 or -1, the sign of the trace
  std::vector<std::pair<Int, Int>> blocks;

  TwistWord word() const;  // A^{a1}*B^{-b1}*... (without the sign)
};

struct PositiveFormOptions {
  long search_budget = 10000;
};

StandardPositiveForm standard_positive_form(const IntMatrix2& m,
                                            const PositiveFormOptions& opt = {});

// Action of the induced polynomial automorphism on the three coordinate axes
// of X(S): line i maps onto line perm[i] (0-based), and parity[i] is the
// number mod 2 of sign changes picked up along the trajectory of line i.
struct AxisAction {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> parity{0, 0, 0};

  AxisAction then(const AxisAction& next) const;
  bool line_fixed_pointwise(int i) const { return perm[i] == i && parity[i] % 2 == 0; }
  bool operator==(const AxisAction&) const = default;
};

AxisAction axis_action(const TwistWord& w);

}  // namespace charvar
