#include "realgraph/ffield.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "realgraph/numtheory.hpp"

namespace rg {

// ---------------------------------------------------------------- Z/p ------

PrimeField make_prime_field(uint32_t p) {
  if (!is_prime(p)) throw std::domain_error("modulus " + std::to_string(p) + " is not prime");
  return PrimeField{p};
}

Zp zp(const PrimeField& f, uint64_t value) { return Zp{static_cast<uint32_t>(value % f.p), f.p}; }

namespace {
void check_same_field(Zp a, Zp b) {
  if (a.p != b.p) throw std::domain_error("mixed prime fields: p=" + std::to_string(a.p) + " vs p=" + std::to_string(b.p));
}
}  // namespace

Zp zp_add(Zp a, Zp b) {
  check_same_field(a, b);
  uint64_t s = static_cast<uint64_t>(a.v) + b.v;
  return Zp{static_cast<uint32_t>(s >= a.p ? s - a.p : s), a.p};
}

Zp zp_sub(Zp a, Zp b) {
  check_same_field(a, b);
  return Zp{a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p};
}

Zp zp_mul(Zp a, Zp b) {
  check_same_field(a, b);
  return Zp{static_cast<uint32_t>(static_cast<uint64_t>(a.v) * b.v % a.p), a.p};
}

Zp zp_neg(Zp a) { return Zp{a.v == 0 ? 0 : a.p - a.v, a.p}; }

uint32_t mod_inverse(uint32_t a, uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(p) + ")");
  return static_cast<uint32_t>(powmod_u64(a % p, p - 2, p));
}

Zp zp_inv(Zp a) { return Zp{mod_inverse(a.v, a.p), a.p}; }

// ------------------------------------------------------------ GF(2^k) ------

namespace {

// GF(2)[x] helpers on bit-packed polynomials (degree < 64).

int poly_degree(uint64_t a) { return a == 0 ? -1 : 63 - __builtin_clzll(a); }

uint64_t poly_mod(uint64_t a, uint64_t m) {
  int dm = poly_degree(m);
  int da = poly_degree(a);
  while (da >= dm) {
    a ^= m << (da - dm);
    da = poly_degree(a);
  }
  return a;
}

uint64_t poly_gcd(uint64_t a, uint64_t b) {
  while (b) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// Multiplication in GF(2)[x] / (x^k + low), with the monic x^k bit implicit.
uint64_t mulmod_implicit(uint64_t a, uint64_t b, unsigned k, uint64_t low) {
  uint64_t r = 0;
  uint64_t top = 1ull << (k - 1);
  uint64_t mask = (k == 64) ? ~0ull : ((1ull << k) - 1);
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    bool carry = (a & top) != 0;
    a = (a << 1) & mask;
    if (carry) a ^= low;
  }
  return r;
}

// x^k mod r where r is a nonzero polynomial of degree <= k (shift-reduce).
uint64_t xk_mod(unsigned k, uint64_t r) {
  uint64_t t = poly_mod(1, r);
  for (unsigned i = 0; i < k; ++i) {
    t <<= 1;
    t = poly_mod(t, r);
  }
  return t;
}

// Irreducibility of x^k + low over GF(2): gcd(x^(2^i) - x, f) = 1 for
// i = 1..k/2, computed in the quotient ring with the implicit-top trick.
bool irreducible(unsigned k, uint64_t low) {
  if ((low & 1) == 0) return false;  // x divides f
  if (k == 1) return true;
  uint64_t xp = 2;
  for (unsigned i = 1; i <= k / 2; ++i) {
    xp = mulmod_implicit(xp, xp, k, low);  // x^(2^i) mod f
    uint64_t diff = xp ^ 2;                // x^(2^i) + x, already reduced
    uint64_t g;
    if (diff == 0) {
      g = 0;  // f divides diff: gcd is f itself, not 1
    } else if (k <= 63) {
      g = poly_gcd((1ull << k) | low, diff);
    } else {
      // gcd(f, diff) with deg f = 64: one division step by hand, then plain gcd
      uint64_t f_mod_diff = xk_mod(k, diff) ^ poly_mod(low, diff);
      g = poly_gcd(diff, f_mod_diff);
    }
    if (g != 1) return false;
  }
  return true;
}

uint64_t smallest_irreducible_low(unsigned k) {
  uint64_t limit = (k >= 64) ? ~0ull : ((1ull << k) - 1);
  for (uint64_t low = 1;; low += 2) {
    if (irreducible(k, low)) return low;
    if (low >= limit) break;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

Gf2kField::Gf2kField(unsigned k) : k_(k) {
  if (k < 1 || k > 64) throw std::domain_error("GF(2^k) supports 1 <= k <= 64");
  mod_low_ = smallest_irreducible_low(k);
  if (k_ <= 16) {
    // log/exp tables over a fixed generator (smallest primitive element)
    uint64_t n = (1ull << k_) - 1;
    for (uint64_t g = 2; g <= n; ++g) {
      // build exp table; g is a generator iff it closes only after n steps
      std::vector<uint32_t> exp(2 * n);
      std::vector<uint32_t> log(n + 1, 0);
      uint64_t x = 1;
      bool ok = true;
      for (uint64_t i = 0; i < n; ++i) {
        if (i > 0 && x == 1) {
          ok = false;
          break;
        }
        exp[i] = static_cast<uint32_t>(x);
        log[x] = static_cast<uint32_t>(i);
        x = mul_generic(x, g);
      }
      if (ok && x == 1) {
        for (uint64_t i = 0; i < n; ++i) exp[n + i] = exp[i];
        exp_ = std::move(exp);
        log_ = std::move(log);
        break;
      }
    }
  }
}

uint64_t Gf2kField::modulus() const {
  if (k_ > 63) throw std::domain_error("modulus does not fit in 64 bits for k=64");
  return (1ull << k_) | mod_low_;
}

uint64_t Gf2kField::field_order() const {
  if (k_ > 63) throw std::domain_error("field order does not fit in 64 bits for k=64");
  return 1ull << k_;
}

uint64_t Gf2kField::mul_generic(uint64_t a, uint64_t b) const {
  return mulmod_implicit(a, b, k_, mod_low_);
}

uint64_t Gf2kField::mul(uint64_t a, uint64_t b) const {
  if (!log_.empty()) {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  return mul_generic(a, b);
}

uint64_t Gf2kField::pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t Gf2kField::inv(uint64_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(2^" + std::to_string(k_) + ")");
  if (!log_.empty()) {
    uint64_t n = (1ull << k_) - 1;
    return exp_[(n - log_[a]) % n];
  }
  // a^(2^k - 2) via square-and-multiply on the exponent pattern
  uint64_t r = 1, sq = a;
  for (unsigned i = 1; i < k_; ++i) {
    sq = mul(sq, sq);
    r = mul(r, sq);
  }
  return r;
}

uint64_t Gf2kField::frob(uint64_t a, unsigned u) const {
  u %= k_;
  for (unsigned i = 0; i < u; ++i) a = mul(a, a);
  return a;
}

unsigned Gf2kField::trace(uint64_t a) const {
  uint64_t t = 0, x = a;
  for (unsigned i = 0; i < k_; ++i) {
    t ^= x;
    x = mul(x, x);
  }
  if (t != 0 && t != 1) throw std::logic_error("trace left the prime field");
  return static_cast<unsigned>(t);
}

uint64_t Gf2kField::mult_order(uint64_t a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  if (k_ > 63) throw std::domain_error("mult_order unsupported for k=64");
  uint64_t n = (1ull << k_) - 1;
  uint64_t o = n;
  for (auto [p, e] : factorize(n)) {
    while (o % p == 0 && pow(a, o / p) == 1) o /= p;
  }
  return o;
}

std::shared_ptr<const Gf2kField> make_gf2k(unsigned k) {
  if (k < 2 || k > 64) throw std::domain_error("make_gf2k requires 2 <= k <= 64");
  static std::mutex mu;
  static std::unordered_map<unsigned, std::shared_ptr<const Gf2kField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, std::make_shared<Gf2kField>(k)).first;
  return it->second;
}

Gf2k gf(const std::shared_ptr<const Gf2kField>& f, uint64_t bits) {
  if (f->k() <= 63 && bits >= (1ull << f->k())) throw std::domain_error("element bits out of field range");
  return Gf2k{bits, f.get()};
}

namespace {
const Gf2kField* check_same_field(Gf2k a, Gf2k b) {
  if (a.field != b.field)
    throw std::domain_error("mixed GF(2^k) fields: k=" + std::to_string(a.field->k()) + " vs k=" + std::to_string(b.field->k()));
  return a.field;
}
}  // namespace

Gf2k gf_add(Gf2k a, Gf2k b) { return Gf2k{check_same_field(a, b)->add(a.bits, b.bits), a.field}; }
Gf2k gf_mul(Gf2k a, Gf2k b) { return Gf2k{check_same_field(a, b)->mul(a.bits, b.bits), a.field}; }
Gf2k gf_inv(Gf2k a) { return Gf2k{a.field->inv(a.bits), a.field}; }
Gf2k frobenius(Gf2k a, unsigned u) { return Gf2k{a.field->frob(a.bits, u), a.field}; }
unsigned trace(Gf2k a) { return a.field->trace(a.bits); }

uint64_t primitive_prime_divisor(unsigned k) {
  if (k < 2 || k > 64) throw std::domain_error("primitive_prime_divisor requires 2 <= k <= 64");
  uint64_t n = (k == 64) ? ~0ull : ((1ull << k) - 1);
  for (auto [p, e] : factorize(n)) {
    // p is primitive iff the multiplicative order of 2 mod p is exactly k
    uint64_t o = 1, x = 2 % p;
    while (x != 1) {
      x = mulmod_u64(x, 2, p);
      ++o;
    }
    if (o == k) return p;
  }
  throw std::domain_error("no primitive prime divisor of 2^" + std::to_string(k) + "-1");
}

}  // namespace rg
