#include "charvar/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace charvar {

namespace {

struct LeadInfo {
  Expo lm;
  Rat lc;
};

// deterministic total order on term maps (tie-breaking only)
bool terms_less(const MPoly::TermMap& a, const MPoly::TermMap& b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia->first.e != ib->first.e) return ia->first.e < ib->first.e;
    int c = cmp(ia->second, ib->second);
    if (c != 0) return c < 0;
  }
  return ia == a.end() && ib != b.end();
}

}  // namespace

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis, const MonOrder& ord) {
  if (basis.empty()) return f;
  std::vector<LeadInfo> leads(basis.size());
  for (size_t i = 0; i < basis.size(); ++i)
    leads[i] = {basis[i].leading_monomial(ord), basis[i].leading_coeff(ord)};

  MPoly p = f;
  MPoly r(f.nvars());
  while (!p.is_zero()) {
    Expo lm = p.leading_monomial(ord);
    Rat lc = p.coeff(lm);
    bool reduced = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (leads[i].lm.divides(lm)) {
        Expo shift = lm.minus(leads[i].lm);
        Rat factor = lc / leads[i].lc;
        MPoly mul(p.nvars());
        mul.add_term(shift, factor);
        p -= mul * basis[i];
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      MPoly mono(p.nvars());
      mono.add_term(lm, lc);
      r += mono;
      p -= mono;
    }
  }
  return r;
}

namespace {

// reduce only until the leading term is irreducible, used inside Buchberger
MPoly head_reduce(MPoly p, const std::vector<MPoly>& basis, const std::vector<LeadInfo>& leads,
                  const MonOrder& ord, long& budget) {
  while (!p.is_zero()) {
    Expo lm = p.leading_monomial(ord);
    Rat lc = p.coeff(lm);
    bool reduced = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (leads[i].lm.divides(lm)) {
        if (--budget < 0) throw BudgetExceeded("groebner: reduction budget exceeded");
        Expo shift = lm.minus(leads[i].lm);
        Rat factor = lc / leads[i].lc;
        MPoly mul(p.nvars());
        mul.add_term(shift, factor);
        p -= mul * basis[i];
        reduced = true;
        break;
      }
    }
    if (!reduced) break;
  }
  return p;
}

}  // namespace

std::vector<MPoly> groebner_basis(const std::vector<MPoly>& gens, const MonOrder& ord,
                                  const GroebnerOptions& opt) {
  std::vector<MPoly> basis;
  for (const MPoly& g : gens)
    if (!g.is_zero()) basis.push_back(g.normalized_integer());
  if (basis.empty()) return {};
  // deterministic input order
  std::sort(basis.begin(), basis.end(), [&](const MPoly& a, const MPoly& b) {
    Expo la = a.leading_monomial(ord), lb = b.leading_monomial(ord);
    if (!(la == lb)) return ord.greater(lb, la);
    return terms_less(a.terms(), b.terms());
  });
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  std::vector<LeadInfo> leads;
  for (auto& b : basis) leads.push_back({b.leading_monomial(ord), b.leading_coeff(ord)});

  // pair queue keyed by (total degree of lcm, lcm, i, j)
  using Key = std::tuple<int, std::array<int16_t, kMaxVars>, size_t, size_t>;
  std::set<Key> queue;
  std::set<std::pair<size_t, size_t>> done;
  auto push_pair = [&](size_t i, size_t j) {
    Expo l = Expo::lcm(leads[i].lm, leads[j].lm);
    queue.insert({l.total(), l.e, i, j});
  };
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

  long budget = opt.max_pair_reductions;

  while (!queue.empty()) {
    auto it = queue.begin();
    auto [deg, lcme, i, j] = *it;
    queue.erase(it);
    Expo lij = Expo::lcm(leads[i].lm, leads[j].lm);
    done.insert({i, j});

    // product criterion
    if (lij == leads[i].lm + leads[j].lm) continue;
    // chain criterion
    {
      bool skip = false;
      for (size_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == i || k == j) continue;
        if (!leads[k].lm.divides(lij)) continue;
        auto p1 = std::minmax(i, k);
        auto p2 = std::minmax(j, k);
        if (done.count({p1.first, p1.second}) && done.count({p2.first, p2.second})) skip = true;
      }
      if (skip) continue;
    }

    // S-polynomial
    MPoly a(basis[i].nvars()), b(basis[j].nvars());
    a.add_term(lij.minus(leads[i].lm), Rat(1) / leads[i].lc);
    b.add_term(lij.minus(leads[j].lm), Rat(1) / leads[j].lc);
    MPoly s = a * basis[i] - b * basis[j];
    s = head_reduce(std::move(s), basis, leads, ord, budget);
    if (s.is_zero()) continue;
    s = normal_form(s, basis, ord).normalized_integer();
    basis.push_back(s);
    leads.push_back({s.leading_monomial(ord), s.leading_coeff(ord)});
    if (static_cast<long>(basis.size()) > opt.max_basis_size)
      throw BudgetExceeded("groebner: basis size budget exceeded");
    size_t n = basis.size() - 1;
    for (size_t k = 0; k < n; ++k) push_pair(k, n);
  }

  // minimalize: drop elements whose leading monomial is divisible by another
  std::vector<size_t> keep;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (leads[j].lm.divides(leads[i].lm)) {
        if (!(leads[i].lm == leads[j].lm) || j < i) redundant = true;
      }
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<MPoly> minimal;
  for (size_t i : keep) minimal.push_back(basis[i]);

  // reduce tails
  std::vector<MPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MPoly r = normal_form(minimal[i], others, ord);
    if (!r.is_zero()) reduced.push_back(r.monic(ord));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MPoly& x, const MPoly& y) {
    Expo lx = x.leading_monomial(ord), ly = y.leading_monomial(ord);
    if (!(lx == ly)) return ord.greater(lx, ly);
    return false;
  });
  return reduced;
}

bool ideal_contains(const std::vector<MPoly>& gb, const MonOrder& ord, const MPoly& f) {
  return normal_form(f, gb, ord).is_zero();
}

bool ideal_equal(const std::vector<MPoly>& gens1, const std::vector<MPoly>& gens2, int nv,
                 const GroebnerOptions& opt) {
  MonOrder ord = MonOrder::grevlex(nv);
  auto g1 = groebner_basis(gens1, ord, opt);
  auto g2 = groebner_basis(gens2, ord, opt);
  if (g1.size() != g2.size()) return false;
  for (size_t i = 0; i < g1.size(); ++i)
    if (!(g1[i] == g2[i])) return false;
  return true;
}

std::vector<MPoly> eliminate(const std::vector<MPoly>& gens, int nv, const std::vector<int>& keep,
                             const GroebnerOptions& opt) {
  std::vector<int> drop;
  for (int i = 0; i < nv; ++i)
    if (std::find(keep.begin(), keep.end(), i) == keep.end()) drop.push_back(i);
  MonOrder ord = MonOrder::lex_eliminating(nv, drop);
  auto gb = groebner_basis(gens, ord, opt);
  std::vector<MPoly> out;
  for (auto& g : gb)
    if (g.supported_on(keep)) out.push_back(g);
  return out;
}

bool is_zero_dimensional(const std::vector<MPoly>& gb, const MonOrder& ord,
                         const std::vector<int>& vars) {
  for (int v : vars) {
    bool found = false;
    for (const MPoly& g : gb) {
      Expo lm = g.leading_monomial(ord);
      if (lm.e[v] == 0) continue;
      bool pure = true;
      for (int i = 0; i < kMaxVars; ++i)
        if (i != v && lm.e[i] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace charvar
