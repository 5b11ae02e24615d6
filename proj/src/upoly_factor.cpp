#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "charvar/upoly.hpp"

namespace charvar {

namespace {

// ---------- arithmetic mod a word-sized prime ----------

using PVec = std::vector<int64_t>;  // dense, c[i] coeff of t^i, trimmed

void ptrim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PVec& a) { return static_cast<int>(a.size()) - 1; }

PVec padd(const PVec& a, const PVec& b, int64_t p) {
  PVec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  ptrim(r);
  return r;
}

PVec psub(const PVec& a, const PVec& b, int64_t p) {
  PVec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
  ptrim(r);
  return r;
}

PVec pmul(const PVec& a, const PVec& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  ptrim(r);
  return r;
}

int64_t inv_mod(int64_t a, int64_t p) {
  int64_t t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return ((t % p) + p) % p;
}

// division with remainder; d nonzero
std::pair<PVec, PVec> pdivmod(const PVec& a, const PVec& d, int64_t p) {
  PVec r = a, q;
  int dd = pdeg(d);
  int64_t inv = inv_mod(d.back(), p);
  if (pdeg(r) >= dd) q.assign(pdeg(r) - dd + 1, 0);
  while (pdeg(r) >= dd) {
    int64_t f = r.back() * inv % p;
    int shift = pdeg(r) - dd;
    q[shift] = f;
    for (int i = 0; i <= dd; ++i) r[i + shift] = ((r[i + shift] - f * d[i]) % p + p) % p;
    ptrim(r);
  }
  return {q, r};
}

PVec pmonic(const PVec& a, int64_t p) {
  if (a.empty()) return a;
  int64_t inv = inv_mod(a.back(), p);
  PVec r(a);
  for (auto& x : r) x = x * inv % p;
  return r;
}

PVec pgcd(PVec a, PVec b, int64_t p) {
  while (!b.empty()) {
    PVec r = pdivmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a, p);
}

PVec ppowmod(PVec base, Int e, const PVec& mod, int64_t p) {
  PVec r{1};
  base = pdivmod(base, mod, p).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = pdivmod(pmul(r, base, p), mod, p).second;
    base = pdivmod(pmul(base, base, p), mod, p).second;
    e >>= 1;
  }
  return r;
}

PVec pderiv(const PVec& a, int64_t p) {
  if (a.size() <= 1) return {};
  PVec r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = static_cast<int64_t>(i % p) * a[i] % p;
  ptrim(r);
  return r;
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<PVec> berlekamp(const PVec& f, int64_t p) {
  int n = pdeg(f);
  if (n <= 1) return {f};
  // Q[i] = x^(i*p) mod f, as column vectors
  PVec xp = ppowmod(PVec{0, 1}, Int(static_cast<long>(p)), f, p);
  std::vector<PVec> rows(n);
  PVec cur{1};
  for (int i = 0; i < n; ++i) {
    rows[i] = cur;
    cur = pdivmod(pmul(cur, xp, p), f, p).second;
  }
  // M = Q - I acting on coefficient columns; kernel basis
  std::vector<std::vector<int64_t>> M(n, std::vector<int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= pdeg(rows[i]); ++j) M[j][i] = rows[i][j];
    M[i][i] = ((M[i][i] - 1) % p + p) % p;
  }
  // gaussian elimination to find null space
  std::vector<int> pivot_col(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int sel = -1;
    for (int row = rank; row < n; ++row)
      if (M[row][col] != 0) {
        sel = row;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[sel], M[rank]);
    int64_t inv = inv_mod(M[rank][col], p);
    for (int j = 0; j < n; ++j) M[rank][j] = M[rank][j] * inv % p;
    for (int row = 0; row < n; ++row) {
      if (row != rank && M[row][col] != 0) {
        int64_t f2 = M[row][col];
        for (int j = 0; j < n; ++j) M[row][j] = ((M[row][j] - f2 * M[rank][j]) % p + p) % p;
      }
    }
    pivot_col[rank] = col;
    ++rank;
  }
  std::vector<PVec> basis;
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    PVec v(n, 0);
    v[col] = 1;
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = ((-M[i][col]) % p + p) % p;
    ptrim(v);
    basis.push_back(v);
  }
  size_t r = basis.size();
  std::vector<PVec> factors{pmonic(f, p)};
  if (r <= 1) return factors;

  std::mt19937_64 rng(0x5eedf00dULL);  // deterministic
  for (const PVec& v : basis) {
    if (factors.size() >= r) break;
    if (pdeg(v) < 1) continue;
    if (p <= 257) {
      for (int64_t s = 0; s < p && factors.size() < r; ++s) {
        PVec vs = psub(v, PVec{s}, p);
        std::vector<PVec> next;
        for (const PVec& u : factors) {
          if (pdeg(u) <= 1) {
            next.push_back(u);
            continue;
          }
          PVec g = pgcd(u, vs, p);
          if (pdeg(g) > 0 && pdeg(g) < pdeg(u)) {
            next.push_back(g);
            next.push_back(pmonic(pdivmod(u, g, p).first, p));
          } else {
            next.push_back(u);
          }
        }
        factors = std::move(next);
      }
    } else {
      // probabilistic splitting for larger primes
      for (int attempt = 0; attempt < 200 && factors.size() < r; ++attempt) {
        int64_t s = static_cast<int64_t>(rng() % static_cast<uint64_t>(p));
        PVec vs = padd(v, PVec{s}, p);
        std::vector<PVec> next;
        for (const PVec& u : factors) {
          if (pdeg(u) <= 1) {
            next.push_back(u);
            continue;
          }
          PVec w = ppowmod(vs, Int((static_cast<long>(p) - 1) / 2), u, p);
          w = psub(w, PVec{1}, p);
          PVec g = pgcd(u, w, p);
          if (pdeg(g) > 0 && pdeg(g) < pdeg(u)) {
            next.push_back(g);
            next.push_back(pmonic(pdivmod(u, g, p).first, p));
          } else {
            next.push_back(u);
          }
        }
        factors = std::move(next);
      }
    }
  }
  return factors;
}

// ---------- arithmetic mod p^k with big integers ----------

using MVec = std::vector<Int>;  // entries reduced into [0, m)

void mtrim(MVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mdeg(const MVec& a) { return static_cast<int>(a.size()) - 1; }

Int mreduce(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

MVec mreduce_poly(const MVec& a, const Int& m) {
  MVec r(a);
  for (auto& x : r) x = mreduce(x, m);
  mtrim(r);
  return r;
}

MVec mmul(const MVec& a, const MVec& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  MVec r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return mreduce_poly(r, m);
}

MVec msub(const MVec& a, const MVec& b, const Int& m) {
  MVec r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = mreduce(r[i] - b[i], m);
  mtrim(r);
  return r;
}

MVec madd(const MVec& a, const MVec& b, const Int& m) {
  MVec r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = mreduce(r[i] + b[i], m);
  mtrim(r);
  return r;
}

// division by a monic divisor
std::pair<MVec, MVec> mdivmod_monic(const MVec& a, const MVec& d, const Int& m) {
  MVec r = a, q;
  int dd = mdeg(d);
  if (mdeg(r) >= dd) q.assign(mdeg(r) - dd + 1, Int(0));
  while (mdeg(r) >= dd) {
    Int f = r.back();
    int shift = mdeg(r) - dd;
    q[shift] = f;
    for (int i = 0; i <= dd; ++i) r[i + shift] = mreduce(r[i + shift] - f * d[i], m);
    mtrim(r);
  }
  return {q, r};
}

MVec from_pvec(const PVec& a) {
  MVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<long>(a[i]));
  return r;
}

// Linear Hensel lifting of a monic pair: F == G*H (mod p^k) -> (mod p^(k+1)).
// Bezout data aG + bH == 1 (mod p) stays fixed.
struct HenselPair {
  MVec g, h;
};

// Bezout input: b satisfies a*g + b*h == 1 (mod p) for some a.
HenselPair hensel_step(const MVec& f, const MVec& g, const MVec& h, const PVec& b, int64_t p,
                       const Int& m /* current modulus p^k */) {
  Int m2 = m * static_cast<long>(p);
  // e = f - g*h mod m2, divisible by m
  MVec gh = mmul(g, h, m2);
  MVec e = msub(mreduce_poly(f, m2), gh, m2);
  // e1 = e / m (exact), reduced mod p
  PVec e1(e.size(), 0);
  for (size_t i = 0; i < e.size(); ++i) {
    Int q = e[i] / m;
    e1[i] = static_cast<int64_t>(mreduce(q, Int(static_cast<long>(p))).get_si());
  }
  ptrim(e1);
  // dg = (b*e1) mod g  (mod p), dh = (e1 - h*dg)/g (mod p)
  PVec gp(g.size()), hp(h.size());
  for (size_t i = 0; i < g.size(); ++i)
    gp[i] = static_cast<int64_t>(mreduce(g[i], Int(static_cast<long>(p))).get_si());
  for (size_t i = 0; i < h.size(); ++i)
    hp[i] = static_cast<int64_t>(mreduce(h[i], Int(static_cast<long>(p))).get_si());
  ptrim(gp);
  ptrim(hp);
  // gp, hp monic mod p by construction (leading coeff 1)
  PVec dg = pdivmod(pmul(b, e1, p), gp, p).second;
  PVec num = psub(e1, pmul(hp, dg, p), p);
  PVec dh = pdivmod(num, gp, p).first;  // exact
  HenselPair out;
  out.g = madd(g, [&] {
    MVec t = from_pvec(dg);
    for (auto& x : t) x *= m;
    return t;
  }(), m2);
  out.h = madd(h, [&] {
    MVec t = from_pvec(dh);
    for (auto& x : t) x *= m;
    return t;
  }(), m2);
  return out;
}

// Lift the full list of monic factors of monic F from mod p to mod p^K
// (tree-structured pairwise lifting).
std::vector<MVec> hensel_lift_tree(const MVec& F, std::vector<PVec> facs, int64_t p, int K,
                                   const Int& pK) {
  if (facs.size() == 1) {
    // must equal F mod p^K (monic); lift trivially: F itself
    return {mreduce_poly(F, pK)};
  }
  size_t half = facs.size() / 2;
  PVec G1{1}, H1{1};
  std::vector<PVec> left(facs.begin(), facs.begin() + half);
  std::vector<PVec> right(facs.begin() + half, facs.end());
  for (auto& x : left) G1 = pmul(G1, x, p);
  for (auto& x : right) H1 = pmul(H1, x, p);
  // Bezout a*G1 + b*H1 = 1 mod p via extended euclid
  PVec a, b;
  {
    PVec r0 = G1, r1 = H1;
    PVec s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r2] = pdivmod(r0, r1, p);
      PVec s2 = psub(s0, pmul(q, s1, p), p);
      PVec t2 = psub(t0, pmul(q, t1, p), p);
      r0 = r1;
      r1 = r2;
      s0 = s1;
      s1 = s2;
      t0 = t1;
      t1 = t2;
    }
    // r0 = gcd = constant (factors coprime)
    int64_t inv = inv_mod(r0.empty() ? 1 : r0[0], p);
    for (auto& x : s0) x = x * inv % p;
    for (auto& x : t0) x = x * inv % p;
    a = s0;
    b = t0;
    (void)a;
  }
  MVec G = from_pvec(G1), H = from_pvec(H1);
  Int m(static_cast<long>(p));
  for (int k = 1; k < K; ++k) {
    HenselPair pr = hensel_step(F, G, H, b, p, m);
    G = pr.g;
    H = pr.h;
    m *= static_cast<long>(p);
  }
  auto lifted_left = hensel_lift_tree(G, left, p, K, pK);
  auto lifted_right = hensel_lift_tree(H, right, p, K, pK);
  lifted_left.insert(lifted_left.end(), lifted_right.begin(), lifted_right.end());
  return lifted_left;
}

// symmetric representative in (-m/2, m/2]
Int symmetric(const Int& x, const Int& m) {
  Int r = mreduce(x, m);
  if (r * 2 > m) r -= m;
  return r;
}

UPoly from_mvec_symmetric(const MVec& a, const Int& m) {
  std::vector<Rat> cs(a.size());
  for (size_t i = 0; i < a.size(); ++i) cs[i] = Rat(symmetric(a[i], m));
  return UPoly(std::move(cs));
}

std::vector<int64_t> small_primes(int count) {
  std::vector<int64_t> ps;
  int64_t n = 3;
  while (static_cast<int>(ps.size()) < count) {
    bool prime = true;
    for (int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) ps.push_back(n);
    n += 2;
  }
  return ps;
}

// Zassenhaus factorization of a primitive squarefree integer polynomial.
std::vector<UPoly> factor_squarefree_integer(const UPoly& f) {
  int n = f.degree();
  if (n <= 1) return {f};
  Int lcf = Int(f.lc().get_num());

  static const std::vector<int64_t> primes = small_primes(600);
  int64_t p = 0;
  PVec fp;
  for (int64_t q : primes) {
    if (lcf % static_cast<long>(q) == 0) continue;
    PVec cand(n + 1);
    for (int i = 0; i <= n; ++i) {
      Int ci = Int(f.coeff(i).get_num());
      cand[i] = static_cast<int64_t>(mreduce(ci, Int(static_cast<long>(q))).get_si());
    }
    ptrim(cand);
    if (pdeg(cand) != n) continue;
    PVec d = pderiv(cand, q);
    if (pdeg(pgcd(cand, d, q)) == 0) {
      p = q;
      fp = cand;
      break;
    }
  }
  if (p == 0) throw std::runtime_error("factor: no good prime found");

  std::vector<PVec> modular = berlekamp(pmonic(fp, p), p);
  std::sort(modular.begin(), modular.end());
  if (modular.size() == 1) return {f};

  // coefficient bound: factors of f have coefficients bounded by
  // 2^n * ||f||_2 * |lc(f)|  (Mignotte)
  Int norm2(0);
  for (int i = 0; i <= n; ++i) norm2 += Int(f.coeff(i).get_num()) * Int(f.coeff(i).get_num());
  Int bound = Int(1) << n;
  bound *= (sqrt(norm2) + 1);
  bound *= abs(lcf);
  bound = bound * 2 + 1;
  int K = 1;
  Int pK(static_cast<long>(p));
  while (pK < bound) {
    pK *= static_cast<long>(p);
    ++K;
  }

  // monic image of f mod p^K
  MVec F(n + 1);
  Int lcinv;
  {
    // invert lcf mod p^K by Newton iteration from mod p
    Int inv1(inv_mod(static_cast<int64_t>(mreduce(lcf, Int(static_cast<long>(p))).get_si()), p));
    Int m(static_cast<long>(p));
    lcinv = inv1;
    while (m < pK) {
      m = m * m;
      lcinv = mreduce(lcinv * (2 - lcf * lcinv), m);
    }
    lcinv = mreduce(lcinv, pK);
  }
  for (int i = 0; i <= n; ++i) F[i] = mreduce(Int(f.coeff(i).get_num()) * lcinv, pK);
  mtrim(F);

  std::vector<MVec> lifted = hensel_lift_tree(F, modular, p, K, pK);

  // subset recombination
  std::vector<UPoly> out;
  UPoly rem = f;
  Int lcr = lcf;
  std::vector<MVec> pool = lifted;
  size_t max_subset = pool.size() / 2;
  for (size_t card = 1; card <= max_subset && pool.size() > 1;) {
    bool found = false;
    std::vector<int> idx(card);
    for (size_t i = 0; i < card; ++i) idx[i] = static_cast<int>(i);
    for (;;) {
      MVec prod{mreduce(lcr, pK)};
      for (int j : idx) prod = mmul(prod, pool[j], pK);
      UPoly cand = from_mvec_symmetric(prod, pK).primitive_integer();
      if (!cand.is_zero() && cand.degree() >= 1 && rem.divisible_by(cand)) {
        out.push_back(cand);
        rem = rem.exact_div(cand).primitive_integer();
        lcr = Int(rem.lc().get_num());
        std::vector<MVec> np;
        for (size_t i2 = 0; i2 < pool.size(); ++i2)
          if (std::find(idx.begin(), idx.end(), static_cast<int>(i2)) == idx.end())
            np.push_back(pool[i2]);
        pool = std::move(np);
        found = true;
        break;
      }
      // next combination
      int i = static_cast<int>(card) - 1;
      while (i >= 0 && idx[i] == static_cast<int>(pool.size() - card + i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (size_t j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++card;
    max_subset = pool.size() / 2;
  }
  if (rem.degree() >= 1) out.push_back(rem.primitive_integer());
  std::sort(out.begin(), out.end(), [](const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
  });
  return out;
}

}  // namespace

UFactorization factor_univariate(const UPoly& f) {
  UFactorization out;
  out.unit = Rat(1);
  if (f.is_zero()) {
    out.unit = 0;
    return out;
  }
  if (f.degree() == 0) {
    out.unit = f.lc();
    return out;
  }
  UPoly prim = f.primitive_integer();

  // Yun squarefree decomposition of prim
  std::vector<std::pair<UPoly, int>> sqf;
  {
    UPoly fp = prim.derivative();
    UPoly g = UPoly::gcd(prim, fp);
    UPoly c = prim.exact_div(g);
    UPoly d = fp.exact_div(g) - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
      UPoly a = UPoly::gcd(c, d);
      if (a.degree() > 0) sqf.emplace_back(a, i);
      c = c.exact_div(a);
      d = d.exact_div(a) - c.derivative();
      ++i;
    }
  }

  for (auto& [s, mult] : sqf) {
    UPoly sp = s.primitive_integer();
    for (const UPoly& irr : factor_squarefree_integer(sp)) {
      out.factors.push_back({irr.primitive_integer(), mult});
    }
  }
  // unit = lc(f) / prod lc(factor)^mult
  Rat l = f.lc();
  for (auto& fa : out.factors) l /= rat_pow(fa.factor.lc(), fa.multiplicity);
  out.unit = l;
  std::sort(out.factors.begin(), out.factors.end(), [](const UFactor& a, const UFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    for (int i = a.factor.degree(); i >= 0; --i)
      if (a.factor.coeff(i) != b.factor.coeff(i)) return a.factor.coeff(i) < b.factor.coeff(i);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

}  // namespace charvar
