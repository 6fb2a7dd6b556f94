#pragma once

#include <cstdint>
#include <vector>

// Small number-theoretic utilities shared by the field and group code.
// Everything here works on 64-bit integers; factorization uses Pollard's rho
// so Mersenne-sized inputs (2^k - 1 for k <= 64) are fine.

namespace rg {

bool is_prime(uint64_t n);

// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);

// Distinct prime divisors, ascending.
std::vector<uint64_t> prime_divisors(uint64_t n);

// Largest power of p dividing n (1 if p does not divide n).
uint64_t p_part(uint64_t n, uint64_t p);

bool is_prime_power(uint64_t n);  // 1 counts as a prime power (p^0)

// n == p^k for some k >= 0 (true for n == 1).
bool is_power_of(uint64_t n, uint64_t p);

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);

}  // namespace rg
