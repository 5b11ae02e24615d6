#include "charvar/tracepoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace charvar {

namespace {

// cyclically reduce a block list (merge across the seam)
std::vector<FBlock> cyclic_reduce(std::vector<FBlock> b) {
  b = FreeWord(std::move(b)).blocks();
  while (b.size() >= 2 && b.front().g == b.back().g) {
    b.front().e += b.back().e;
    b.pop_back();
    if (b.front().e == 0) b.erase(b.begin());
    // re-reduce in case new neighbours merged
    b = FreeWord(std::move(b)).blocks();
  }
  return b;
}

// canonical representative among block rotations of w and w^{-1}
std::vector<FBlock> cyclic_key(const std::vector<FBlock>& b) {
  if (b.empty()) return b;
  std::vector<FBlock> best;
  auto consider = [&](const std::vector<FBlock>& v) {
    for (size_t r = 0; r < v.size(); ++r) {
      std::vector<FBlock> rot(v.begin() + r, v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + r);
      if (best.empty() || rot < best) best = rot;
    }
  };
  consider(b);
  std::vector<FBlock> inv;
  for (auto it = b.rbegin(); it != b.rend(); ++it) inv.push_back({it->g, -it->e});
  consider(inv);
  return best;
}

MPoly cheb_trace(long k, const MPoly& t) {
  // T_0 = 2, T_1 = t, T_k = t*T_{k-1} - T_{k-2}
  k = std::abs(k);
  MPoly prev(3, Rat(2));
  if (k == 0) return prev;
  MPoly cur = t;
  for (long i = 2; i <= k; ++i) {
    MPoly next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MPoly var_x() { return MPoly::var(3, 0); }
MPoly var_y() { return MPoly::var(3, 1); }
MPoly var_z() { return MPoly::var(3, 2); }

}  // namespace

MPoly TraceContext::trace_of(const FreeWord& w) {
  std::vector<FBlock> cyc = cyclic_key(cyclic_reduce(w.blocks()));
  auto it = memo_.find(cyc);
  if (it != memo_.end()) return it->second;
  MPoly r = compute(cyc);
  memo_[cyc] = r;
  return r;
}

MPoly TraceContext::compute(const std::vector<FBlock>& cyc) {
  if (cyc.empty()) return MPoly(3, Rat(2));
  if (cyc.size() == 1) return cheb_trace(cyc[0].e, cyc[0].g == 0 ? var_x() : var_y());

  // locate a block with |e| >= 2 (largest, first on tie)
  size_t big = cyc.size();
  long bige = 1;
  for (size_t i = 0; i < cyc.size(); ++i)
    if (std::abs(cyc[i].e) > bige) {
      bige = std::abs(cyc[i].e);
      big = i;
    }
  if (big < cyc.size()) {
    // rotate so that block is last: w = u * g^e
    std::vector<FBlock> rot(cyc.begin() + big + 1, cyc.end());
    rot.insert(rot.end(), cyc.begin(), cyc.begin() + big + 1);
    FBlock last = rot.back();
    rot.pop_back();
    FreeWord u(rot);
    long s = last.e > 0 ? 1 : -1;
    MPoly tg = last.g == 0 ? var_x() : var_y();
    FreeWord w1 = u * FreeWord::gen(last.g, last.e - s);
    FreeWord w2 = u * FreeWord::gen(last.g, last.e - 2 * s);
    return trace_of(w1) * tg - trace_of(w2);
  }

  // all exponents are +-1; remove an inverse letter if present
  for (size_t i = 0; i < cyc.size(); ++i) {
    if (cyc[i].e == -1) {
      std::vector<FBlock> rot(cyc.begin() + i + 1, cyc.end());
      rot.insert(rot.end(), cyc.begin(), cyc.begin() + i + 1);
      FBlock last = rot.back();
      rot.pop_back();
      FreeWord u(rot);
      MPoly tg = last.g == 0 ? var_x() : var_y();
      FreeWord ug = u * FreeWord::gen(last.g, 1);
      return trace_of(u) * tg - trace_of(ug);
    }
  }

  // positive alternating word (ab)^k
  if (cyc.size() % 2 != 0) throw std::logic_error("trace engine: odd alternating word");
  return cheb_trace(static_cast<long>(cyc.size() / 2), var_z());
}

MPoly trace_polynomial(const FreeWord& w) {
  TraceContext ctx;
  return ctx.trace_of(w);
}

PolyAutomorphism PolyAutomorphism::identity() {
  return {MPoly::var(3, 0), MPoly::var(3, 1), MPoly::var(3, 2)};
}

PolyAutomorphism PolyAutomorphism::generator(Gen g, bool inverse) {
  MPoly x = MPoly::var(3, 0), y = MPoly::var(3, 1), z = MPoly::var(3, 2);
  if (g == Gen::Alpha) {
    if (!inverse) return {x, z, x * z - y};  // alpha
    return {x, x * y - z, y};                // alpha^{-1}
  }
  if (inverse) return {z, y, y * z - x};  // beta^{-1}
  return {x * y - z, y, x};               // beta
}

PolyAutomorphism PolyAutomorphism::after(const PolyAutomorphism& other) const {
  // simultaneous substitution x,y,z -> other's images
  return {other.apply(fx), other.apply(fy), other.apply(fz)};
}

MPoly PolyAutomorphism::apply(const MPoly& p) const {
  MPoly r(3);
  for (auto& [m, c] : p.terms()) {
    MPoly t(3, c);
    if (m.e[0]) t *= fx.pow(m.e[0]);
    if (m.e[1]) t *= fy.pow(m.e[1]);
    if (m.e[2]) t *= fz.pow(m.e[2]);
    r += t;
  }
  return r;
}

std::array<std::complex<double>, 3> PolyAutomorphism::apply(
    const std::array<std::complex<double>, 3>& v) const {
  std::array<std::complex<double>, kMaxVars> pt{v[0], v[1], v[2], 0.0};
  return {fx.eval(pt), fy.eval(pt), fz.eval(pt)};
}

PolyAutomorphism induced_automorphism(const TwistWord& w) {
  // The induced maps compose contravariantly: for w = g1 g2 ... gk the
  // automorphism of X(S) is bar(gk) o ... o bar(g1). The involution induces
  // the identity.
  PolyAutomorphism total = PolyAutomorphism::identity();
  for (const Letter& l : w.letters()) {
    PolyAutomorphism step = PolyAutomorphism::generator(l.g, l.e < 0);
    for (long i = 0; i < std::abs(l.e); ++i) total = step.after(total);
  }
  return total;
}

std::array<int, 3> sign_vector(SignClass sc) {
  switch (sc) {
    case SignClass::Id:
      return {1, 1, 1};
    case SignClass::Sigma1:
      return {1, -1, -1};
    case SignClass::Sigma2:
      return {-1, 1, -1};
    case SignClass::Sigma3:
      return {-1, -1, 1};
  }
  return {1, 1, 1};
}

const char* sign_class_name(SignClass sc) {
  switch (sc) {
    case SignClass::Id:
      return "id";
    case SignClass::Sigma1:
      return "sigma1";
    case SignClass::Sigma2:
      return "sigma2";
    case SignClass::Sigma3:
      return "sigma3";
  }
  return "id";
}

CurveIdeal fixed_ideal(const TwistWord& w, SignClass sc) {
  MonodromyInvariants inv = invariants(w);
  if (!inv.hyperbolic)
    throw std::domain_error("fixed_ideal: word is not hyperbolic (|trace| <= 2)");
  PolyAutomorphism phi = induced_automorphism(w);
  std::array<int, 3> eps = sign_vector(sc);
  CurveIdeal out;
  out.word = w;
  out.sign_class = sc;
  MPoly gx = phi.fx - MPoly::var(3, 0) * Rat(eps[0]);
  MPoly gy = phi.fy - MPoly::var(3, 1) * Rat(eps[1]);
  MPoly gz = phi.fz - MPoly::var(3, 2) * Rat(eps[2]);
  for (MPoly* g : {&gx, &gy, &gz})
    if (!g->is_zero()) out.generators.push_back(g->normalized_integer());
  return out;
}

std::vector<CurveIdeal> perp_ideals(const TwistWord& w) {
  MonodromyInvariants inv = invariants(w);
  if (!inv.hyperbolic) throw std::domain_error("perp_ideals: word is not hyperbolic");
  IntMatrix2 m = word_matrix(w);
  auto bit = [](const Int& v) { return static_cast<int>(mpz_tstbit(v.get_mpz_t(), 0)); };
  int k1 = bit(m.a), k2 = bit(m.b), k3 = bit(m.c), k4 = bit(m.d);

  // orbit of the identity class under the sign action of H^1(S, Z_2)
  auto class_of = [](int t1, int t2, int t3) {
    if (t1 == 0 && t2 == 0 && t3 == 0) return SignClass::Id;
    if (t1 == 0) return SignClass::Sigma1;
    if (t2 == 0) return SignClass::Sigma2;
    return SignClass::Sigma3;
  };
  std::array<bool, 4> in_orbit{false, false, false, false};
  for (int ha = 0; ha <= 1; ++ha)
    for (int hb = 0; hb <= 1; ++hb) {
      int hpa = (k1 * ha + k3 * hb) % 2;
      int hpb = (k2 * ha + k4 * hb) % 2;
      int hpab = ((k1 + k2) * ha + (k3 + k4) * hb) % 2;
      int t1 = (ha + hpa) % 2;
      int t2 = (hb + hpb) % 2;
      int t3 = (ha + hb + hpab) % 2;
      in_orbit[static_cast<int>(class_of(t1, t2, t3))] = true;
    }

  std::vector<CurveIdeal> out;
  if (inv.b1 == 1) return out;  // all four classes in one orbit
  if (inv.b1 == 3) {
    for (SignClass sc : {SignClass::Sigma1, SignClass::Sigma2, SignClass::Sigma3})
      out.push_back(fixed_ideal(w, sc));
    return out;
  }
  // b1 == 2: the complement of the orbit of Id is a single 2-element orbit;
  // report its highest-index representative
  for (SignClass sc : {SignClass::Sigma3, SignClass::Sigma2, SignClass::Sigma1}) {
    if (!in_orbit[static_cast<int>(sc)]) {
      out.push_back(fixed_ideal(w, sc));
      break;
    }
  }
  return out;
}

MPoly reducibility_polynomial() {
  MPoly x = MPoly::var(3, 0), y = MPoly::var(3, 1), z = MPoly::var(3, 2);
  return x * x + y * y + z * z - x * y * z - MPoly(3, Rat(4));
}

std::complex<double> reducibility_value(std::complex<double> x, std::complex<double> y,
                                        std::complex<double> z) {
  return x * x + y * y + z * z - x * y * z - 4.0;
}

}  // namespace charvar
