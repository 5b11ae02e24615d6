#include "charvar/monodromy.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace charvar {

TwistWord::TwistWord(bool iota, std::vector<Letter> letters)
    : iota_(iota), letters_(std::move(letters)) {
  normalize();
}

void TwistWord::normalize() {
  std::vector<Letter> out;
  for (const Letter& l : letters_) {
    if (l.e == 0) continue;
    if (!out.empty() && out.back().g == l.g) {
      out.back().e += l.e;
      if (out.back().e == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  letters_ = std::move(out);
}

long TwistWord::twist_length() const {
  long n = 0;
  for (const Letter& l : letters_) n += std::abs(l.e);
  return n;
}

TwistWord TwistWord::operator*(const TwistWord& o) const {
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
  return TwistWord(iota_ != o.iota_, std::move(ls));
}

TwistWord TwistWord::power(int k) const {
  TwistWord r;
  TwistWord base = *this;
  if (k < 0) {
    base = inverse();
    k = -k;
  }
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

TwistWord TwistWord::inverse() const {
  std::vector<Letter> ls;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) ls.push_back({it->g, -it->e});
  return TwistWord(iota_, std::move(ls));
}

TwistWord TwistWord::mutated() const { return TwistWord(!iota_, letters_); }

TwistWord TwistWord::parse(const std::string& text) {
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw std::invalid_argument("word parse error at position " + std::to_string(i) + ": " + msg);
  };
  bool iota = false;
  std::vector<Letter> letters;
  skip();
  if (i == text.size()) return TwistWord();  // empty word
  for (;;) {
    skip();
    int base = -1;  // 0 alpha, 1 beta, 2 iota
    if (text.compare(i, 5, "alpha") == 0) {
      base = 0;
      i += 5;
    } else if (text.compare(i, 4, "beta") == 0) {
      base = 1;
      i += 4;
    } else if (text.compare(i, 4, "iota") == 0) {
      base = 2;
      i += 4;
    } else if (i < text.size() && text[i] == 'A') {
      base = 0;
      ++i;
    } else if (i < text.size() && text[i] == 'B') {
      base = 1;
      ++i;
    } else if (i < text.size() && text[i] == 'I') {
      base = 2;
      ++i;
    } else {
      fail("unknown generator symbol");
    }
    long e = 1;
    skip();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip();
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      skip();
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) fail("expected exponent");
      e = std::stol(text.substr(i, j - i));
      i = j;
      if (neg) e = -e;
    }
    if (base == 2) {
      if (e % 2 != 0) iota = !iota;
    } else {
      letters.push_back({base == 0 ? Gen::Alpha : Gen::Beta, e});
    }
    skip();
    if (i == text.size()) break;
    if (text[i] != '*') fail("expected '*'");
    ++i;
  }
  return TwistWord(iota, std::move(letters));
}

std::string TwistWord::str() const {
  std::ostringstream os;
  bool first = true;
  if (iota_) {
    os << "I";
    first = false;
  }
  for (const Letter& l : letters_) {
    if (!first) os << "*";
    first = false;
    os << (l.g == Gen::Alpha ? "A" : "B");
    if (l.e != 1) os << "^" << l.e;
  }
  return os.str();
}

IntMatrix2 twist_matrix_alpha(long e) { return {1, e, 0, 1}; }
IntMatrix2 twist_matrix_beta(long e) { return {1, 0, -e, 1}; }

IntMatrix2 word_matrix(const TwistWord& w) {
  IntMatrix2 m = IntMatrix2::identity();
  for (const Letter& l : w.letters())
    m = m * (l.g == Gen::Alpha ? twist_matrix_alpha(l.e) : twist_matrix_beta(l.e));
  if (w.iota()) m = -m;
  return m;
}

int mod2_order(const IntMatrix2& m) {
  auto r = [](const Int& x) { return static_cast<int>(mpz_tstbit(x.get_mpz_t(), 0)); };
  int a = r(m.a), b = r(m.b), c = r(m.c), d = r(m.d);
  if (a == 1 && d == 1 && b == 0 && c == 0) return 1;
  return (a + d) % 2 == 0 ? 2 : 3;
}

MonodromyInvariants invariants(const TwistWord& w) {
  IntMatrix2 m = word_matrix(w);
  MonodromyInvariants inv;
  inv.trace = m.trace();
  inv.mod2_order = mod2_order(m);
  inv.b1 = 4 - inv.mod2_order;
  inv.h_rank = inv.b1 - 1;
  inv.hyperbolic = abs(inv.trace) > 2;
  if (inv.hyperbolic) {
    Int zeta = Int(1) << (inv.b1 - 1);
    inv.binary_dihedral_count = (abs(inv.trace + 2) - zeta) / 2;
  }
  return inv;
}

namespace {

// Greedy Stern-Brocot peeling of a nonnegative SL(2,Z) matrix into
// R^{a1} L^{b1} R^{a2} ... blocks (R = A, L = B^{-1}); fails if the matrix is
// not in the positive monoid.
std::optional<std::vector<std::pair<char, Int>>> try_peel(IntMatrix2 w) {
  std::vector<std::pair<char, Int>> blocks;
  if (w.a < 0 || w.b < 0 || w.c < 0 || w.d < 0) return std::nullopt;
  long guard = 0;
  while (!(w == IntMatrix2::identity())) {
    if (++guard > 100000) return std::nullopt;
    bool row1_ge = w.a >= w.c && w.b >= w.d;
    bool row2_ge = w.c >= w.a && w.d >= w.b;
    if (row1_ge && !(w.c == 0 && w.d == 0)) {
      // W = R^k * W'
      Int k(-1);
      if (w.c > 0) k = w.a / w.c;
      if (w.d > 0) {
        Int k2 = w.b / w.d;
        if (k < 0 || k2 < k) k = k2;
      }
      if (k <= 0) return std::nullopt;
      w = IntMatrix2{w.a - k * w.c, w.b - k * w.d, w.c, w.d};
      if (!blocks.empty() && blocks.back().first == 'R') return std::nullopt;
      blocks.push_back({'R', k});
    } else if (row2_ge) {
      Int k(-1);
      if (w.a > 0) k = w.c / w.a;
      if (w.b > 0) {
        Int k2 = w.d / w.b;
        if (k < 0 || k2 < k) k = k2;
      }
      if (k <= 0) return std::nullopt;
      w = IntMatrix2{w.a, w.b, w.c - k * w.a, w.d - k * w.b};
      if (!blocks.empty() && blocks.back().first == 'L') return std::nullopt;
      blocks.push_back({'L', k});
    } else {
      return std::nullopt;
    }
    if (w.a < 0 || w.b < 0 || w.c < 0 || w.d < 0) return std::nullopt;
  }
  if (blocks.size() < 2) return std::nullopt;  // pure powers are parabolic
  return blocks;
}

struct MatKey {
  std::string k;
  explicit MatKey(const IntMatrix2& m)
      : k(m.a.get_str() + "," + m.b.get_str() + "," + m.c.get_str() + "," + m.d.get_str()) {}
  bool operator<(const MatKey& o) const { return k < o.k; }
};

}  // namespace

TwistWord StandardPositiveForm::word() const {
  std::vector<Letter> ls;
  for (auto& [a, b] : blocks) {
    ls.push_back({Gen::Alpha, static_cast<long>(a.get_si())});
    ls.push_back({Gen::Beta, -static_cast<long>(b.get_si())});
  }
  return TwistWord(false, std::move(ls));
}

StandardPositiveForm standard_positive_form(const IntMatrix2& m, const PositiveFormOptions& opt) {
  Int tr = m.trace();
  if (abs(tr) <= 2) throw std::domain_error("standard_positive_form: matrix is not hyperbolic");
  int sign = tr > 0 ? 1 : -1;
  IntMatrix2 w0 = sign > 0 ? m : -m;

  // best-first search over conjugates until one peels
  auto score = [](const IntMatrix2& w) -> Int {
    return abs(w.a) + abs(w.b) + abs(w.c) + abs(w.d);
  };
  using QEntry = std::pair<Int, IntMatrix2>;
  struct Cmp {
    bool operator()(const QEntry& x, const QEntry& y) const { return x.first > y.first; }
  };
  std::priority_queue<QEntry, std::vector<QEntry>, Cmp> queue;
  std::set<MatKey> seen;
  queue.push({score(w0), w0});
  seen.insert(MatKey(w0));
  const IntMatrix2 gens[4] = {twist_matrix_alpha(1), twist_matrix_alpha(-1),
                              twist_matrix_beta(1), twist_matrix_beta(-1)};
  const IntMatrix2 inv_gens[4] = {twist_matrix_alpha(-1), twist_matrix_alpha(1),
                                  twist_matrix_beta(-1), twist_matrix_beta(1)};
  long steps = 0;
  std::optional<std::vector<std::pair<char, Int>>> blocks;
  while (!queue.empty()) {
    if (++steps > opt.search_budget)
      throw BudgetExceeded("standard_positive_form: search budget exceeded");
    IntMatrix2 w = queue.top().second;
    queue.pop();
    blocks = try_peel(w);
    if (blocks) break;
    for (int i = 0; i < 4; ++i) {
      IntMatrix2 w2 = inv_gens[i] * w * gens[i];
      MatKey key(w2);
      if (seen.insert(key).second) queue.push({score(w2), w2});
    }
  }
  if (!blocks) throw BudgetExceeded("standard_positive_form: search exhausted");

  // rotate so the block list starts with R and ends with L, merging across the
  // cyclic seam
  std::vector<std::pair<char, Int>> bs = *blocks;
  if (bs.size() > 1 && bs.front().first == bs.back().first) {
    bs.front().second += bs.back().second;
    bs.pop_back();
  }
  if (bs.front().first == 'L') {
    std::rotate(bs.begin(), bs.begin() + 1, bs.end());
  }
  std::vector<std::pair<Int, Int>> pairs;
  if (bs.size() % 2 != 0) throw std::logic_error("standard_positive_form: malformed block list");
  for (size_t i = 0; i + 1 < bs.size(); i += 2) {
    if (bs[i].first != 'R' || bs[i + 1].first != 'L')
      throw std::logic_error("standard_positive_form: malformed block list");
    pairs.push_back({bs[i].second, bs[i + 1].second});
  }

  // canonical representative: lexicographically least cyclic rotation
  auto rotation_less = [&](size_t r1, size_t r2) {
    size_t n = pairs.size();
    for (size_t i = 0; i < n; ++i) {
      const auto& p1 = pairs[(r1 + i) % n];
      const auto& p2 = pairs[(r2 + i) % n];
      if (p1 != p2) return p1 < p2;
    }
    return false;
  };
  size_t best = 0;
  for (size_t r = 1; r < pairs.size(); ++r)
    if (rotation_less(r, best)) best = r;
  std::rotate(pairs.begin(), pairs.begin() + best, pairs.end());

  return StandardPositiveForm{sign, std::move(pairs)};
}

AxisAction AxisAction::then(const AxisAction& next) const {
  AxisAction r;
  for (int i = 0; i < 3; ++i) {
    r.perm[i] = next.perm[perm[i]];
    r.parity[i] = (parity[i] + next.parity[perm[i]]) % 2;
  }
  return r;
}

namespace {

// Axis data of the induced automorphisms of the single twists: alpha fixes
// line 1 and swaps lines 2, 3 with the sign change on the image of line 2;
// beta^{-1} fixes line 2 and swaps lines 1, 3 with the sign change on the
// image of line 1.
AxisAction generator_axis(Gen g, bool inverse) {
  AxisAction a;
  if (g == Gen::Alpha) {
    a.perm = {0, 2, 1};
    a.parity[inverse ? 2 : 1] = 1;
  } else {
    a.perm = {2, 1, 0};
    a.parity[inverse ? 2 : 0] = 1;
  }
  return a;
}

}  // namespace

AxisAction axis_action(const TwistWord& w) {
  AxisAction total;
  for (const Letter& l : w.letters()) {
    bool inv = l.e < 0;
    // the beta table above is stated for beta^{-1}
    bool table_inverse = l.g == Gen::Alpha ? inv : !inv;
    AxisAction step = generator_axis(l.g, table_inverse);
    for (long k = 0; k < std::abs(l.e); ++k) total = total.then(step);
  }
  return total;
}

}  // namespace charvar
