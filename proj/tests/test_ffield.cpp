#include "doctest.h"
#include "realgraph/ffield.hpp"

#include <cstdint>

using namespace rg;

namespace {

// Carry-less multiply then long division by the full modulus: an independent
// model of GF(2^k) multiplication in the polynomial basis.
uint64_t naive_gf_mul(uint64_t a, uint64_t b, unsigned k, uint64_t modulus) {
  uint64_t prod = 0;
  for (unsigned i = 0; i < 2 * k; ++i)
    if ((b >> i) & 1) prod ^= a << i;
  for (int d = 2 * static_cast<int>(k) - 2; d >= static_cast<int>(k); --d)
    if ((prod >> d) & 1) prod ^= modulus << (d - k);
  return prod;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f = make_prime_field(7);
  Zp a = zp(f, 12);  // 5 mod 7
  CHECK(a.v == 5);
  CHECK(zp_add(a, zp(f, 3)).v == 1);
  CHECK(zp_sub(zp(f, 2), a).v == 4);
  CHECK(zp_mul(a, a).v == 4);
  CHECK(zp_neg(a).v == 2);
  CHECK(zp_mul(a, zp_inv(a)).v == 1);
  CHECK_THROWS_AS(zp_inv(zp(f, 0)), std::domain_error);
  CHECK_THROWS_AS(make_prime_field(6), std::domain_error);
  CHECK(mod_inverse(3, 11) == 4);
}

TEST_CASE("GF(2^k) multiplication matches the polynomial model") {
  for (unsigned k : {2u, 3u, 4u}) {
    Gf2kField F(k);
    const uint64_t q = F.field_order();
    for (uint64_t a = 0; a < q; ++a)
      for (uint64_t b = 0; b < q; ++b)
        CHECK(F.mul(a, b) == naive_gf_mul(a, b, k, F.modulus()));
  }
  Gf2kField F8(8);
  for (uint64_t a = 0; a < 256; ++a) {
    CHECK(F8.mul(a, 97) == naive_gf_mul(a, 97, 8, F8.modulus()));
    CHECK(F8.mul(a, 255) == naive_gf_mul(a, 255, 8, F8.modulus()));
  }
}

TEST_CASE("GF(2^k) inverses, powers and Frobenius") {
  Gf2kField F(4);
  for (uint64_t a = 1; a < 16; ++a) {
    CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.frob(a, 1) == F.mul(a, a));
    CHECK(F.frob(a, 2) == F.pow(a, 4));
    CHECK(F.pow(a, 15) == 1);
    CHECK(15 % F.mult_order(a) == 0);
    CHECK(F.pow(a, F.mult_order(a)) == 1);
  }
  CHECK_THROWS_AS(F.inv(0), std::domain_error);
  // some element attains the full multiplicative order
  bool has_generator = false;
  for (uint64_t a = 1; a < 16; ++a) has_generator |= F.mult_order(a) == 15;
  CHECK(has_generator);
}

TEST_CASE("trace is additive, {0,1}-valued and surjective") {
  Gf2kField F(3);
  bool seen_one = false;
  for (uint64_t a = 0; a < 8; ++a) {
    CHECK(F.trace(a) <= 1);
    seen_one |= F.trace(a) == 1;
    for (uint64_t b = 0; b < 8; ++b)
      CHECK(F.trace(a ^ b) == (F.trace(a) ^ F.trace(b)));
  }
  CHECK(seen_one);
}

TEST_CASE("field handles are cached and elements reject mixed fields") {
  auto f4 = make_gf2k(4);
  CHECK(f4 == make_gf2k(4));
  auto f8 = make_gf2k(8);
  Gf2k a = gf(f4, 5), b = gf(f8, 5);
  CHECK(gf_mul(a, gf_inv(a)).bits == 1);
  CHECK(frobenius(a, 1).bits == f4->mul(5, 5));
  CHECK_THROWS_AS(gf_add(a, b), std::domain_error);
}

TEST_CASE("primitive prime divisors of 2^k - 1") {
  CHECK(primitive_prime_divisor(2) == 3);
  CHECK(primitive_prime_divisor(3) == 7);
  CHECK(primitive_prime_divisor(4) == 5);
  CHECK(primitive_prime_divisor(5) == 31);
  CHECK(primitive_prime_divisor(8) == 17);
  CHECK(primitive_prime_divisor(11) == 23);
  CHECK_THROWS_AS(primitive_prime_divisor(1), std::domain_error);
  CHECK_THROWS_AS(primitive_prime_divisor(6), std::domain_error);
}
