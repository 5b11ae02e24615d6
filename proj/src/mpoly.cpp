#include "charvar/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace charvar {

MonOrder MonOrder::grevlex(int nv) { return MonOrder{OrderKind::Grevlex, nv, {0, 1, 2, 3}}; }
MonOrder MonOrder::lex(int nv) { return MonOrder{OrderKind::Lex, nv, {0, 1, 2, 3}}; }
MonOrder MonOrder::graded_lex(int nv) { return MonOrder{OrderKind::GradedLex, nv, {0, 1, 2, 3}}; }

MonOrder MonOrder::lex_eliminating(int nv, const std::vector<int>& first) {
  MonOrder o;
  o.kind = OrderKind::Lex;
  o.nv = nv;
  int k = 0;
  for (int v : first) o.perm[k++] = v;
  for (int i = 0; i < nv; ++i)
    if (std::find(first.begin(), first.end(), i) == first.end()) o.perm[k++] = i;
  for (int i = nv; i < kMaxVars; ++i) o.perm[i] = i;
  return o;
}

bool MonOrder::greater(const Expo& a, const Expo& b) const {
  switch (kind) {
    case OrderKind::Lex:
      for (int i = 0; i < nv; ++i) {
        int v = perm[i];
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v];
      }
      return false;
    case OrderKind::GradedLex: {
      int da = a.total(), db = b.total();
      if (da != db) return da > db;
      for (int i = 0; i < nv; ++i) {
        int v = perm[i];
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v];
      }
      return false;
    }
    case OrderKind::Grevlex: {
      int da = a.total(), db = b.total();
      if (da != db) return da > db;
      for (int i = nv - 1; i >= 0; --i) {
        int v = perm[i];
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v];
      }
      return false;
    }
  }
  return false;
}

MPoly MPoly::var(int nv, int i, int exp) {
  MPoly p(nv);
  Expo m;
  m.e[i] = static_cast<int16_t>(exp);
  p.terms_[m] = 1;
  return p;
}

int MPoly::total_degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.total());
  return d;
}

int MPoly::degree_in(int var) const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[var]));
  return d;
}

void MPoly::add_term(const Expo& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(nv_);
  for (auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  r += o;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  r -= o;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  nv_ = std::max(nv_, o.nv_);
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  nv_ = std::max(nv_, o.nv_);
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(std::max(nv_, o.nv_));
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) r.add_term(ma + mb, ca * cb);
  return r;
}

MPoly MPoly::operator*(const Rat& c) const {
  MPoly r(nv_);
  if (c == 0) return r;
  for (auto& [m, cc] : terms_) r.terms_[m] = cc * c;
  return r;
}

MPoly MPoly::operator/(const Rat& c) const {
  if (c == 0) throw std::domain_error("MPoly: division by zero");
  return *this * rat_inv(c);
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw std::domain_error("MPoly::pow: negative exponent");
  MPoly r(nv_, 1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

MPoly MPoly::derivative(int var) const {
  MPoly r(nv_);
  for (auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Expo d = m;
    d.e[var] = static_cast<int16_t>(d.e[var] - 1);
    r.add_term(d, c * m.e[var]);
  }
  return r;
}

Expo MPoly::leading_monomial(const MonOrder& ord) const {
  if (terms_.empty()) throw std::domain_error("leading_monomial of zero");
  auto it = terms_.begin();
  Expo best = it->first;
  for (++it; it != terms_.end(); ++it)
    if (ord.greater(it->first, best)) best = it->first;
  return best;
}

Rat MPoly::leading_coeff(const MonOrder& ord) const { return coeff(leading_monomial(ord)); }

MPoly MPoly::substitute(int var, const MPoly& value) const {
  // Horner over the coefficients of powers of `var`.
  std::vector<MPoly> cs = coeffs_in(var);
  MPoly r(std::max(nv_, value.nvars()));
  for (int d = static_cast<int>(cs.size()) - 1; d >= 0; --d) {
    r = r * value + cs[d];
  }
  return r;
}

MPoly MPoly::substitute_rational(int var, const MPoly& num, const MPoly& den) const {
  std::vector<MPoly> cs = coeffs_in(var);
  int d = static_cast<int>(cs.size()) - 1;
  MPoly r(nv_);
  MPoly denpow(nv_, 1);
  // sum cs[i] * num^i * den^(d-i)
  std::vector<MPoly> numpow(d + 1, MPoly(nv_, 1));
  for (int i = 1; i <= d; ++i) numpow[i] = numpow[i - 1] * num;
  for (int i = d; i >= 0; --i) {
    r += cs[i] * numpow[i] * denpow;
    denpow = denpow * den;
  }
  return r;
}

MPoly MPoly::eval_var(int var, const Rat& value) const {
  MPoly r(nv_);
  for (auto& [m, c] : terms_) {
    Expo mm = m;
    int e = mm.e[var];
    mm.e[var] = 0;
    r.add_term(mm, c * rat_pow(value, e));
  }
  return r;
}

std::complex<double> MPoly::eval(const std::array<std::complex<double>, kMaxVars>& pt) const {
  std::complex<double> s = 0.0;
  for (auto& [m, c] : terms_) {
    std::complex<double> t = c.get_d();
    for (int i = 0; i < kMaxVars; ++i)
      for (int k = 0; k < m.e[i]; ++k) t *= pt[i];
    s += t;
  }
  return s;
}

Rat MPoly::eval_rat(const std::array<Rat, kMaxVars>& pt) const {
  Rat s = 0;
  for (auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < kMaxVars; ++i)
      if (m.e[i] > 0) t *= rat_pow(pt[i], m.e[i]);
    s += t;
  }
  return s;
}

MPoly MPoly::normalized_integer() const {
  if (terms_.empty()) return *this;
  Int den(1), num(0);
  for (auto& [m, c] : terms_) den = lcm(den, Int(c.get_den()));
  for (auto& [m, c] : terms_) {
    Rat t = c * Rat(den);
    num = gcd(num, Int(t.get_num()));
  }
  Rat scale = Rat(den) / Rat(num);
  MPoly r = *this * scale;
  if (r.leading_coeff(MonOrder::graded_lex(nv_)) < 0) r = -r;
  return r;
}

MPoly MPoly::monic(const MonOrder& ord) const {
  if (terms_.empty()) return *this;
  return *this / leading_coeff(ord);
}

bool MPoly::supported_on(const std::vector<int>& vars) const {
  for (auto& [m, c] : terms_)
    for (int i = 0; i < kMaxVars; ++i)
      if (m.e[i] != 0 && std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
  return true;
}

std::vector<int> MPoly::used_vars() const {
  std::vector<int> r;
  for (int i = 0; i < kMaxVars; ++i) {
    for (auto& [m, c] : terms_)
      if (m.e[i] != 0) {
        r.push_back(i);
        break;
      }
  }
  return r;
}

MPoly MPoly::remap_vars(const std::array<int, kMaxVars>& new_index, int new_nv) const {
  MPoly r(new_nv);
  for (auto& [m, c] : terms_) {
    Expo mm;
    for (int i = 0; i < kMaxVars; ++i) {
      if (m.e[i] == 0) continue;
      if (new_index[i] < 0) throw std::domain_error("remap_vars: variable in use dropped");
      mm.e[new_index[i]] = m.e[i];
    }
    r.add_term(mm, c);
  }
  return r;
}

std::vector<MPoly> MPoly::coeffs_in(int var) const {
  int d = degree_in(var);
  std::vector<MPoly> cs(static_cast<size_t>(d) + 1, MPoly(nv_));
  for (auto& [m, c] : terms_) {
    Expo mm = m;
    int e = mm.e[var];
    mm.e[var] = 0;
    cs[e].add_term(mm, c);
  }
  return cs;
}

namespace {

void append_rat(std::ostream& os, const Rat& c) {
  os << c.get_num();
  if (c.get_den() != 1) os << "/" << c.get_den();
}

}  // namespace

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  MonOrder ord = MonOrder::graded_lex(nv_);
  std::vector<const TermMap::value_type*> ts;
  for (auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(),
            [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    Rat c = t->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool mono = t->first == Expo{};
    if (c != 1 || mono) {
      append_rat(os, c);
      if (!mono) os << "*";
    }
    bool started = false;
    for (int i = 0; i < nv_; ++i) {
      int e = t->first.e[i];
      if (e == 0) continue;
      if (started) os << "*";
      started = true;
      os << names[i];
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  const std::vector<std::string>& names;
  int nv;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) + ": " +
                                msg);
  }

  Rat number() {
    skip();
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected number");
    Int num(s.substr(i, j - i));
    i = j;
    if (eat('/')) {
      skip();
      size_t k = i;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k == i) fail("expected denominator");
      Int den(s.substr(i, k - i));
      i = k;
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    return Rat(num);
  }

  int variable() {
    skip();
    for (int v = 0; v < nv; ++v) {
      const std::string& n = names[v];
      if (s.compare(i, n.size(), n) == 0) {
        i += n.size();
        return v;
      }
    }
    return -1;
  }

  int exponent() {
    if (!eat('^')) return 1;
    skip();
    bool neg = eat('-');
    Rat n = number();
    if (n.get_den() != 1) fail("exponent must be integer");
    int e = static_cast<int>(n.get_num().get_si());
    return neg ? -e : e;
  }

  // factor := number | var ('^' int)?
  // term := factor ('*' factor)*
  MPoly term() {
    MPoly r(nv, Rat(1));
    bool any = false;
    for (;;) {
      skip();
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        r = r * number();
        any = true;
      } else {
        int v = variable();
        if (v < 0) {
          if (!any) fail("expected term");
          break;
        }
        int e = exponent();
        if (e < 0) fail("negative exponent");
        r = r * MPoly::var(nv, v, e);
        any = true;
      }
      if (!eat('*')) break;
    }
    return r;
  }

  MPoly poly() {
    MPoly r(nv);
    skip();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    for (;;) {
      MPoly t = term();
      r += neg ? -t : t;
      skip();
      if (eat('+'))
        neg = false;
      else if (eat('-'))
        neg = true;
      else
        break;
    }
    skip();
    if (i != s.size()) fail("trailing input");
    return r;
  }
};

}  // namespace

MPoly MPoly::parse(const std::string& text, const std::vector<std::string>& names) {
  Parser p{text, 0, names, static_cast<int>(names.size())};
  return p.poly();
}

}  // namespace charvar
