#pragma once

#include <vector>

#include "charvar/mpoly.hpp"

namespace charvar {

struct GroebnerOptions {
  long max_pair_reductions = 500000;
  long max_basis_size = 4000;
};

// Reduced Groebner basis (monic, tails reduced, no leading term divides
// another). Deterministic for fixed input and order.
std::vector<MPoly> groebner_basis(const std::vector<MPoly>& gens, const MonOrder& ord,
                                  const GroebnerOptions& opt = {});

// Full normal form of f with respect to a (not necessarily reduced) basis.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis, const MonOrder& ord);

bool ideal_contains(const std::vector<MPoly>& gb, const MonOrder& ord, const MPoly& f);

// Equality of ideals via reduced Groebner bases in the given order.
bool ideal_equal(const std::vector<MPoly>& gens1, const std::vector<MPoly>& gens2, int nv,
                 const GroebnerOptions& opt = {});

// Generators of the elimination ideal I cap Q[keep] (lex order eliminating the
// complement of keep first).
std::vector<MPoly> eliminate(const std::vector<MPoly>& gens, int nv,
                             const std::vector<int>& keep, const GroebnerOptions& opt = {});

// staircase test: every variable in `vars` has a pure-power leading monomial
bool is_zero_dimensional(const std::vector<MPoly>& gb, const MonOrder& ord,
                         const std::vector<int>& vars);

}  // namespace charvar
