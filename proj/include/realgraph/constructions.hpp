#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "realgraph/group.hpp"

// Concrete groups: named small groups, permutation and matrix groups from
// explicit generators, affine semidirect products V ⋊ ⟨matrices⟩, the two
// order-150/199650 example groups, and a text export of generators for
// cross-checking in an external computer-algebra system.

namespace rg {

struct GroupSpec {
  enum class Tag {
    named,        // name + parameter
    permutation,  // degree n + image lists
    matrix,       // prime p, dimension n + row-major generators
    semidirect,   // prime p, dimension n + acting row-major generators
    paper_g150,
    paper_h199650,
    twisted,      // degree k
  };
  Tag tag = Tag::named;
  std::string name;
  uint64_t parameter = 0;
  uint32_t n = 0;
  uint32_t p = 0;
  std::vector<std::vector<uint32_t>> perm_gens;  // image lists
  std::vector<std::vector<uint32_t>> mat_gens;   // row-major entries
  unsigned k = 0;
};

// name ∈ {cyclic, dihedral, symmetric, quaternion8}; cyclic n ≥ 1,
// dihedral n ≥ 3 (both ≤ 2^16), symmetric n ≤ 6.
FiniteGroup make_named(const std::string& name, uint64_t parameter,
                       uint64_t cap = kDefaultClosureCap);

FiniteGroup make_perm_group(uint32_t n,
                            const std::vector<std::vector<uint32_t>>& gens,
                            uint64_t cap = kDefaultClosureCap);

FiniteGroup make_matrix_group(uint32_t p, uint32_t n,
                              const std::vector<std::vector<uint32_t>>& gens,
                              uint64_t cap = kDefaultClosureCap);

// V ⋊ ⟨action_gens⟩ with V = GF(p)^n: affine pairs, the acting factor
// multiplying the translation part on the left.
FiniteGroup make_semidirect(uint32_t p, uint32_t n,
                            const std::vector<std::vector<uint32_t>>& action_gens,
                            uint64_t cap = kDefaultClosureCap);

// GF(5)² ⋊ S₃ of order 150: swap matrix + companion matrix of x²+x+1.
FiniteGroup make_g150(uint64_t cap = kDefaultClosureCap);

// GF(11)³ ⋊ (group of four explicit matrices of orders 2,3,5,5); the matrix
// group must come out of order 150, giving |G| = 199650.
FiniteGroup make_h199650(uint64_t cap = kDefaultClosureCap);

FiniteGroup build_group(const GroupSpec& spec, uint64_t cap = kDefaultClosureCap);

// Generator listing: header "order: <n>", then one line per generator,
// "perm: (1 2 3)(4 5)" (1-based cycles) or "mat p=<p> rows=[[...],[...]]".
// Affine and twisted groups are exported as faithful matrix embeddings.
std::string export_gap(const GroupSpec& spec, uint64_t cap = kDefaultClosureCap);

}  // namespace rg
