#include "charvar/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace charvar {

UPoly UPoly::operator-() const {
  std::vector<Rat> r(c_);
  for (auto& x : r) x = -x;
  return UPoly(std::move(r));
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rat& a) const {
  if (a == 0) return UPoly();
  std::vector<Rat> r(c_);
  for (auto& x : r) x *= a;
  return UPoly(std::move(r));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UPoly(std::move(r));
}

Rat UPoly::eval(const Rat& x) const {
  Rat s(0);
  for (int i = degree(); i >= 0; --i) s = s * x + c_[i];
  return s;
}

std::complex<double> UPoly::eval(const std::complex<double>& x) const {
  std::complex<double> s = 0.0;
  for (int i = degree(); i >= 0; --i) s = s * x + c_[i].get_d();
  return s;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("UPoly division by zero");
  UPoly r = *this;
  std::vector<Rat> q(std::max<int>(degree() - d.degree() + 1, 0), Rat(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    Rat f = r.lc() / d.lc();
    int shift = r.degree() - d.degree();
    q[shift] = f;
    std::vector<Rat> sub(r.c_);
    for (int i = 0; i <= d.degree(); ++i) sub[i + shift] -= f * d.c_[i];
    r = UPoly(std::move(sub));
  }
  return {UPoly(std::move(q)), r};
}

UPoly UPoly::exact_div(const UPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("UPoly exact_div: not divisible");
  return q;
}

bool UPoly::divisible_by(const UPoly& d) const { return divmod(d).second.is_zero(); }

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * rat_inv(lc());
}

UPoly UPoly::primitive_integer() const {
  if (is_zero()) return *this;
  Int den(1);
  for (auto& x : c_) den = charvar::lcm(den, Int(x.get_den()));
  Int num(0);
  for (auto& x : c_) {
    Rat t = x * Rat(den);
    num = charvar::gcd(num, Int(t.get_num()));
  }
  Rat scale = Rat(den) / Rat(num);
  UPoly r = *this * scale;
  if (r.lc() < 0) r = -r;
  return r;
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    // keep coefficients small
    if (!r.is_zero()) r = r.primitive_integer();
    x = y;
    y = r;
  }
  return x.monic();
}

bool UPoly::is_squarefree() const {
  if (degree() <= 0) return true;
  return gcd(*this, derivative()).degree() == 0;
}

UPoly UPoly::squarefree_part() const {
  if (degree() <= 0) return monic();
  UPoly g = gcd(*this, derivative());
  if (g.degree() == 0) return monic();
  return exact_div(g).monic();
}

MPoly UPoly::to_mpoly(int nv, int var) const {
  MPoly p(nv);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Expo m;
    m.e[var] = static_cast<int16_t>(i);
    p.add_term(m, c_[i]);
  }
  return p;
}

UPoly UPoly::from_mpoly(const MPoly& p, int var) {
  std::vector<Rat> cs(static_cast<size_t>(p.degree_in(var)) + 1, Rat(0));
  for (auto& [m, c] : p.terms()) {
    for (int i = 0; i < kMaxVars; ++i)
      if (i != var && m.e[i] != 0)
        throw std::domain_error("UPoly::from_mpoly: polynomial is not univariate");
    cs[m.e[var]] = c;
  }
  return UPoly(std::move(cs));
}

std::string UPoly::str(const std::string& name) const {
  return to_mpoly(1, 0).str({name});
}

bool has_repeated_nonzero_root(const UPoly& f) {
  UPoly g = UPoly::gcd(f, f.derivative());
  // strip powers of t
  std::vector<Rat> cs = g.coeffs();
  size_t k = 0;
  while (k < cs.size() && cs[k] == 0) ++k;
  return cs.size() - k > 1;
}

}  // namespace charvar
