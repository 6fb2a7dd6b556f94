#pragma once

#include <cstdint>
#include <vector>

#include "realgraph/group.hpp"

// Subgroup-level operations: spans, closures, centralizers, derived series,
// cores, Sylow subgroups, quotients, and the Frobenius predicates.  A Subgroup
// is a value: it holds a handle to its parent group plus the member set and a
// small generating set (the elements adjoined while spanning).

namespace rg {

struct Subgroup {
  FiniteGroup parent;
  std::vector<uint32_t> members;  // ascending parent indices
  IndexSet mask;
  std::vector<uint32_t> gens;     // parent indices; may be empty for {1}

  size_t order() const { return members.size(); }
  bool contains(uint32_t i) const { return mask.test(i); }
  bool is_trivial() const { return members.size() == 1; }
  bool is_full() const { return members.size() == parent.order(); }
};

struct Quotient {
  FiniteGroup group;           // cosets as a standalone group
  Subgroup kernel;
  std::vector<uint32_t> proj;  // parent element index -> quotient index
};

Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup full_subgroup(const FiniteGroup& G);

// Subgroup generated by the candidates, adjoined in the given order (elements
// already spanned are skipped).  Throws ResourceLimitError past `cap`.
Subgroup span(const FiniteGroup& G, const std::vector<uint32_t>& candidates,
              uint64_t cap = UINT64_MAX);

// Wrap an already-closed member set (sorted), extracting a generating set.
Subgroup subgroup_from_members(const FiniteGroup& G,
                               std::vector<uint32_t> members);

// Re-enumerate a subgroup as its own FiniteGroup (same element operations).
FiniteGroup as_group(const Subgroup& H);

Subgroup normal_closure(const FiniteGroup& G, const std::vector<uint32_t>& seed);
bool is_normal(const FiniteGroup& G, const Subgroup& H);

Subgroup centralizer(const FiniteGroup& G, const std::vector<uint32_t>& S);
Subgroup center(const FiniteGroup& G);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& P);

// [A,B]: normal closure of generator-pair commutators.  Intended for A, B
// with ⟨A ∪ B⟩ = G or both normal in G, where this equals the commutator
// subgroup.
Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A,
                             const Subgroup& B);

Subgroup derived_subgroup(const FiniteGroup& G);
Subgroup derived_subgroup_in(const Subgroup& H);
std::vector<Subgroup> derived_series(const FiniteGroup& G);
int derived_length(const FiniteGroup& G);  // domain_error if not solvable
bool is_solvable(const FiniteGroup& G);
bool is_nilpotent(const FiniteGroup& G);

bool is_abelian(const Subgroup& H);
bool is_abelian(const FiniteGroup& G);
bool is_cyclic(const Subgroup& H);

Subgroup p_core(const FiniteGroup& G, uint64_t p);
Subgroup o2prime(const FiniteGroup& G);
Subgroup fitting(const FiniteGroup& G);
Subgroup sylow(const FiniteGroup& G, uint64_t p);

// Cosets of a verified-normal N; throws domain_error otherwise.
Quotient quotient(const FiniteGroup& G, const Subgroup& N);

// True iff every nonidentity h ∈ H has trivial centralizer in K.
// Requires K normal and H ∩ K = 1 (domain_error otherwise).
bool acts_fixed_point_freely(const FiniteGroup& G, const Subgroup& K,
                             const Subgroup& H);

// True iff 1 < N < M < G, M is Frobenius with kernel N, and G/N is Frobenius
// with kernel M/N.  N and M must be normal in G (domain_error otherwise).
bool is_2frobenius(const FiniteGroup& G, const Subgroup& N, const Subgroup& M);

// All normal subgroups, as the join-closure of class normal closures,
// sorted by (order, members).  Throws ResourceLimitError past cap candidates.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& G,
                                       uint64_t cap = 4096);

}  // namespace rg
