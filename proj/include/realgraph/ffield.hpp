#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

// Finite field arithmetic: prime fields Z/p and binary fields GF(2^k) in a
// polynomial basis.  GF(2^k) always uses the lexicographically smallest
// irreducible modulus of degree k, so element encodings are canonical and two
// fields of the same degree are interchangeable.
//
// Elements carry a pointer to their field; operations on elements from
// different fields throw std::domain_error eagerly.  Fields returned by
// make_gf2k are cached per k and live for the whole process, so element
// pointers never dangle.

namespace rg {

// ---------------------------------------------------------------- Z/p ------

struct PrimeField {
  uint32_t p;
};

// Validates primality (throws std::domain_error otherwise).
PrimeField make_prime_field(uint32_t p);

struct Zp {
  uint32_t v;
  uint32_t p;
};

Zp zp(const PrimeField& f, uint64_t value);
Zp zp_add(Zp a, Zp b);
Zp zp_sub(Zp a, Zp b);
Zp zp_mul(Zp a, Zp b);
Zp zp_neg(Zp a);
Zp zp_inv(Zp a);  // throws std::domain_error on zero

// Modular inverse of a mod p (p prime, a not divisible by p).
uint32_t mod_inverse(uint32_t a, uint32_t p);

// ------------------------------------------------------------ GF(2^k) ------

class Gf2kField {
 public:
  explicit Gf2kField(unsigned k);

  unsigned k() const { return k_; }

  // Modulus without its leading x^k term (the monic bit is implicit), so the
  // representation works uniformly up to k = 64.
  uint64_t modulus_low() const { return mod_low_; }

  // Full (k+1)-bit modulus; only representable for k <= 63.
  uint64_t modulus() const;

  uint64_t field_order() const;  // 2^k, valid for k <= 63

  uint64_t add(uint64_t a, uint64_t b) const { return a ^ b; }
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inv(uint64_t a) const;  // throws std::domain_error on zero
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t frob(uint64_t a, unsigned u) const;  // a^(2^u)
  unsigned trace(uint64_t a) const;             // 0 or 1

  // Multiplicative order of a nonzero element.
  uint64_t mult_order(uint64_t a) const;

 private:
  unsigned k_;
  uint64_t mod_low_;
  // log/exp tables for small fields (k <= 16); larger fields use shift-xor.
  std::vector<uint32_t> log_, exp_;

  uint64_t mul_generic(uint64_t a, uint64_t b) const;
};

// Cached field objects, one per degree; k in [2, 64].
std::shared_ptr<const Gf2kField> make_gf2k(unsigned k);

struct Gf2k {
  uint64_t bits;
  const Gf2kField* field;
};

Gf2k gf(const std::shared_ptr<const Gf2kField>& f, uint64_t bits);
Gf2k gf_add(Gf2k a, Gf2k b);
Gf2k gf_mul(Gf2k a, Gf2k b);
Gf2k gf_inv(Gf2k a);
Gf2k frobenius(Gf2k a, unsigned u);
unsigned trace(Gf2k a);

// Smallest prime dividing 2^k - 1 but no 2^i - 1 for 0 < i < k.  Throws
// std::domain_error when none exists (k = 1, 6) per Zsigmondy.
uint64_t primitive_prime_divisor(unsigned k);

}  // namespace rg
