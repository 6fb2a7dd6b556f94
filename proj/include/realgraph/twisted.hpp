#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "realgraph/ffield.hpp"
#include "realgraph/group.hpp"
#include "realgraph/subgroup_ops.hpp"

// The twisted truncated polynomial ring R = F{x}/(x^k) over F = GF(2^k) with
// xα = α²x, its unit-subgroup filtration S = S_1 > S_2 > ... > S_k = 1, and
// the group G = S ⋊ (P ⋊ 𝒢) where P is the Sylow-p subgroup of F^× for the
// primitive prime divisor p of 2^k − 1 and 𝒢 = ⟨σ⟩ is the Galois group.

namespace rg {

inline constexpr unsigned kMaxTwistedK = 8;

// α₀ + α₁x + ... + α_{k−1}x^{k−1}; c[i] holds the bits of α_i.
struct RingElem {
  std::array<uint8_t, kMaxTwistedK> c{};
  friend bool operator==(const RingElem&, const RingElem&) = default;
};

class TwistedRing {
 public:
  explicit TwistedRing(unsigned k);  // 2 <= k <= 8

  unsigned k() const { return k_; }
  const Gf2kField& field() const { return *field_; }
  uint64_t ring_order() const;  // (2^k)^k

  RingElem zero() const { return RingElem{}; }
  RingElem one() const;
  RingElem x() const;
  RingElem from_coeffs(const std::vector<uint64_t>& coeffs) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  bool is_unit(const RingElem& a) const { return a.c[0] != 0; }
  RingElem inverse(const RingElem& a) const;  // domain_error on non-units

  bool in_J(const RingElem& a) const { return a.c[0] == 0; }
  bool in_S(const RingElem& a) const { return a.c[0] == 1; }
  bool in_Su(const RingElem& a, unsigned u) const;

  // a^(2^u) coefficient-wise (σ^u extended to R with x^σ = x).
  RingElem frob(const RingElem& a, unsigned u) const;

  uint8_t frob_bits(unsigned u, uint8_t bits) const { return ftab_[u][bits]; }

 private:
  unsigned k_;
  std::shared_ptr<const Gf2kField> field_;
  std::vector<std::vector<uint8_t>> ftab_;  // [u][bits] -> bits^(2^u)
};

// Coefficient of x^u; domain_error unless s ∈ S_u.
uint64_t psi_u(const TwistedRing& R, const RingElem& s, unsigned u);

// Element operations for S (encoding: coefficient bytes 1..k−1; α₀ = 1).
class SOps : public ElementOps {
 public:
  explicit SOps(unsigned k);
  const TwistedRing& ring() const { return ring_; }
  Elem encode(const RingElem& s) const;
  RingElem decode(const Elem& e) const;

  Elem identity() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  std::string show(const Elem& a) const override;
  std::string kind() const override;

 private:
  TwistedRing ring_;
};

// Element operations for G = S ⋊ (P ⋊ 𝒢): triples (s, γ, j) encoded as the
// S bytes, the γ bits, and j.
class TwistedOps : public ElementOps {
 public:
  explicit TwistedOps(unsigned k);
  const TwistedRing& ring() const { return ring_; }
  uint64_t p() const { return p_; }
  uint64_t p_order() const { return pelems_.size(); }
  uint64_t p_generator() const;  // minimal-bits element of order |P|
  const std::vector<uint8_t>& p_elements() const { return pelems_; }

  Elem encode(const RingElem& s, uint64_t gamma, unsigned j) const;
  void decode(const Elem& e, RingElem* s, uint64_t* gamma, unsigned* j) const;

  // Left action of (γ, j) on s ∈ S: σ^j on coefficients, then the inner
  // γ-scaling (coefficient u is multiplied by γ^{1−2^u}).
  RingElem act(const RingElem& s, uint64_t gamma, unsigned j) const;

  Elem identity() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  std::string show(const Elem& a) const override;
  std::string kind() const override;

 private:
  TwistedRing ring_;
  uint64_t p_;
  std::vector<uint8_t> pelems_;            // P sorted by bits (starts at 1)
  std::array<int16_t, 256> pindex_;        // bits -> index into pelems_
  std::vector<std::vector<uint8_t>> scale_;  // [p index][u] = γ^{1−2^u}
};

// S as a group under the twisted multiplication; |S| = 2^{k(k−1)}.
// Refuses enumerations past the cap (k = 8) with a ResourceLimitError.
FiniteGroup make_S(unsigned k, uint64_t cap = kDefaultClosureCap);

// S_u = 1 + J^u inside an enumerated S; |S_u| = (2^k)^{k−u}.
Subgroup make_Su(const FiniteGroup& S, unsigned u);

// G = S ⋊ (P ⋊ 𝒢); order 2^{k(k−1)} · |P| · k.  Refuses k = 8.
FiniteGroup make_twisted_group(unsigned k, uint64_t cap = kDefaultClosureCap);

// t₁ = 2, t_{n+1} = 2t_n + 2.
uint64_t tn_sequence(unsigned n);

// Seeded random validation of the ring laws, for k too large to enumerate.
struct RingSampleReport {
  uint64_t samples = 0;
  bool associativity = false;
  bool j_nilpotent = false;      // random length-k products in J vanish
  bool j_km1_nonzero = false;    // x^{k−1} ≠ 0 witnesses J^{k−1} ≠ 1
  bool psi_additive = false;
  bool commutator_law = false;   // ψ_{u+v}([s,t]) = αβ^{σ^u} + βα^{σ^v}
  bool coeff_action_law = false; // conjugation by γ scales coeff u by γ^{2^u−1}
  bool filtration = false;       // [S_u, S_v] ⊆ S_{u+v} on samples
  bool all() const {
    return associativity && j_nilpotent && j_km1_nonzero && psi_additive &&
           commutator_law && coeff_action_law && filtration;
  }
};

RingSampleReport sample_ring_checks(unsigned k, uint64_t seed,
                                    uint64_t samples);

}  // namespace rg
