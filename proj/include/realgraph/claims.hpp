#pragma once

#include <string>
#include <utility>

#include "realgraph/group.hpp"

// Checkers for the structural claims about real elements: properties P and R,
// the no-independent-triple property of Γ(G) for solvable groups, the
// every-prime-is-a-real-vertex property, the {2,p} 2-Frobenius equivalence,
// the real-spectrum corollary, the Fitting-prime uniqueness, and the two
// component-count witness groups.

namespace rg {

struct ClaimResult {
  std::string claim;     // stable identifier
  bool holds = false;
  std::string observed;  // short value, suitable for "<claim> = <observed>"
  std::string witness;   // element/structure exhibiting failure or success
};

// P: every real element has prime power order.  Failure witness: a real
// class representative of composite order.
ClaimResult satisfies_P(const FiniteGroup& g);

// R: every real element has 2-power order or odd order.
ClaimResult satisfies_R(const FiniteGroup& g);

// For solvable g: no three pairwise non-adjacent vertices in Γ(g).
// Throws std::domain_error on non-solvable input.
ClaimResult lucido_check(const FiniteGroup& g);

// For solvable g: vertices of Γ_ℝ(g) = prime divisors of |g|.
// Throws std::domain_error on non-solvable input.
ClaimResult dmn_vertex_check(const FiniteGroup& g);

// The {2,p} equivalence: with g solvable, O^{2'}(g) = g, g not a 2-group and
// O₂(g) ≠ 1 (violations throw std::domain_error), checks
//   P  ⇔  [|g| = 2^a p^b; g = N⋊(K⋊Q) 2-Frobenius with N = O₂(g), K a cyclic
//          Sylow p-subgroup, Q a cyclic Sylow 2-subgroup of N_g(K); the
//          involution z of Q inverts every element of K; and every element
//          of g has prime power order]
// and reports holds = (the two sides agree).
ClaimResult theorem_a_check(const FiniteGroup& g);

// With g solvable, satisfying P, and O₂(g) ≠ 1 (violations throw
// std::domain_error): π(ω_ℝ(g)) = {2} or {2,p} for an odd prime p.
ClaimResult corollary_spectrum_check(const FiniteGroup& g);

// With g nontrivial solvable, O^{2'}(g) = g, O₂(g) = 1 and P (violations
// throw std::domain_error): exactly one prime p has O_p(g) ⊄ Z(g).
ClaimResult fitting_prime_check(const FiniteGroup& g);

// Builds the two witness groups of orders 150 and 199650 and verifies their
// real prime graphs are edgeless with 3 and 4 components.
std::pair<ClaimResult, ClaimResult> theorem_b_witnesses();

}  // namespace rg
