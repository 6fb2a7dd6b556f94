#include "doctest.h"
#include "realgraph/constructions.hpp"
#include "realgraph/ffield.hpp"
#include "realgraph/numtheory.hpp"
#include "realgraph/subgroup_ops.hpp"
#include "realgraph/twisted.hpp"

#include <cstdint>
#include <vector>

using namespace rg;

namespace {

std::vector<RingElem> all_ring_elems(const TwistedRing& R) {
  const unsigned k = R.k();
  const uint64_t q = uint64_t{1} << k;
  uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i) total *= q;
  std::vector<RingElem> out;
  out.reserve(total);
  for (uint64_t code = 0; code < total; ++code) {
    RingElem e;
    uint64_t rest = code;
    for (unsigned i = 0; i < k; ++i) {
      e.c[i] = static_cast<uint8_t>(rest % q);
      rest /= q;
    }
    out.push_back(e);
  }
  return out;
}

RingElem constant(const TwistedRing& R, uint64_t a) {
  std::vector<uint64_t> coeffs(R.k(), 0);
  coeffs[0] = a;
  return R.from_coeffs(coeffs);
}

}  // namespace

TEST_CASE("ring constructor and coefficient validation") {
  CHECK_THROWS_AS(TwistedRing(1), std::domain_error);
  CHECK_THROWS_AS(TwistedRing(9), std::domain_error);
  TwistedRing R(3);
  CHECK(R.k() == 3);
  CHECK(R.ring_order() == 512);
  CHECK_THROWS_AS(R.from_coeffs({1, 2}), std::domain_error);       // length
  CHECK_THROWS_AS(R.from_coeffs({8, 0, 0}), std::domain_error);    // outside field
  RingElem e = R.from_coeffs({1, 5, 3});
  CHECK(e.c[0] == 1);
  CHECK(e.c[1] == 5);
  CHECK(e.c[2] == 3);
}

TEST_CASE("ring axioms hold exhaustively for k = 2") {
  TwistedRing R(2);
  std::vector<RingElem> all = all_ring_elems(R);
  REQUIRE(all.size() == 16);
  for (const RingElem& a : all) {
    CHECK(R.mul(a, R.one()) == a);
    CHECK(R.mul(R.one(), a) == a);
    CHECK(R.add(a, a) == R.zero());
    for (const RingElem& b : all) {
      CHECK(R.add(a, b) == R.add(b, a));
      for (const RingElem& c : all) {
        CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
        CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
        CHECK(R.mul(R.add(a, b), c) == R.add(R.mul(a, c), R.mul(b, c)));
      }
    }
  }
}

TEST_CASE("the twist moves constants past x through Frobenius") {
  for (unsigned k : {2u, 3u}) {
    TwistedRing R(k);
    const uint64_t q = uint64_t{1} << k;
    for (uint64_t a = 0; a < q; ++a) {
      RingElem ca = constant(R, a);
      // x·α = α²·x
      CHECK(R.mul(R.x(), ca) == R.mul(R.frob(ca, 1), R.x()));
      // constants multiply as field elements
      for (uint64_t b = 0; b < q; ++b)
        CHECK(R.mul(ca, constant(R, b)) == constant(R, R.field().mul(a, b)));
    }
  }
}

TEST_CASE("units and inverses") {
  TwistedRing R(3);
  int units = 0;
  for (const RingElem& a : all_ring_elems(R)) {
    CHECK(R.is_unit(a) == (a.c[0] != 0));
    CHECK(R.in_J(a) == (a.c[0] == 0));
    if (R.is_unit(a)) {
      ++units;
      CHECK(R.mul(a, R.inverse(a)) == R.one());
      CHECK(R.mul(R.inverse(a), a) == R.one());
    } else {
      CHECK_THROWS_AS(R.inverse(a), std::domain_error);
    }
  }
  CHECK(units == 7 * 64);  // (q−1)·q^{k−1}
}

TEST_CASE("the radical is nilpotent of the right index") {
  TwistedRing R(3);
  std::vector<RingElem> j;
  for (const RingElem& a : all_ring_elems(R))
    if (R.in_J(a)) j.push_back(a);
  REQUIRE(j.size() == 64);
  for (const RingElem& a : j)
    for (const RingElem& b : j)
      for (const RingElem& c : j)
        CHECK(R.mul(R.mul(a, b), c) == R.zero());
  // x^{k−1} ≠ 0 shows the index is exactly k
  CHECK(R.mul(R.x(), R.x()) != R.zero());
  CHECK(R.mul(R.mul(R.x(), R.x()), R.x()) == R.zero());
}

TEST_CASE("filtration membership and psi coefficients") {
  TwistedRing R(3);
  const Gf2kField& F = R.field();
  for (const RingElem& a : all_ring_elems(R)) {
    for (unsigned u = 1; u <= 3; ++u) {
      bool expect = a.c[0] == 1;
      for (unsigned i = 1; i < u; ++i) expect = expect && a.c[i] == 0;
      CHECK(R.in_Su(a, u) == expect);
      if (R.in_Su(a, u)) CHECK(psi_u(R, a, u) == (u < 3 ? a.c[u] : 0));
    }
    CHECK(R.in_S(a) == R.in_Su(a, 1));
  }
  CHECK_THROWS_AS(psi_u(R, R.x(), 1), std::domain_error);
  CHECK_THROWS_AS(psi_u(R, R.one(), 0), std::domain_error);

  // additivity on each layer, and the kernel is the next layer
  for (unsigned u = 1; u <= 2; ++u) {
    std::vector<RingElem> su;
    for (const RingElem& a : all_ring_elems(R))
      if (R.in_Su(a, u)) su.push_back(a);
    for (const RingElem& s : su)
      for (const RingElem& t : su) {
        CHECK(psi_u(R, R.mul(s, t), u) == (psi_u(R, s, u) ^ psi_u(R, t, u)));
        CHECK((psi_u(R, s, u) == 0) == R.in_Su(s, u + 1));
      }
  }
  // Frobenius on the ring is coefficient-wise
  for (const RingElem& a : all_ring_elems(R))
    for (unsigned u = 1; u <= 2; ++u) {
      RingElem fa = R.frob(a, u);
      for (unsigned i = 0; i < 3; ++i) CHECK(fa.c[i] == F.frob(a.c[i], u));
    }
}

TEST_CASE("S is a group matching the ring multiplication") {
  FiniteGroup s = make_S(3);
  CHECK(s.order() == 64);
  const auto& ops = dynamic_cast<const SOps&>(s.ops());
  const TwistedRing& R = ops.ring();
  for (uint32_t i = 0; i < s.order(); ++i) {
    RingElem a = ops.decode(s.element(i));
    CHECK(R.in_S(a));
    CHECK(s.index_of(ops.encode(a)) == i);
    for (uint32_t j = 0; j < s.order(); ++j) {
      RingElem prod = R.mul(a, ops.decode(s.element(j)));
      CHECK(s.element(s.mul(i, j)) == ops.encode(prod));
    }
  }
  CHECK(make_S(2).order() == 4);
  CHECK_THROWS_AS(make_S(8), ResourceLimitError);
  CHECK_THROWS_AS(ops.encode(R.x()), std::domain_error);
}

TEST_CASE("the S_u chain inside an enumerated S") {
  FiniteGroup s = make_S(3);
  const auto& ops = dynamic_cast<const SOps&>(s.ops());
  std::vector<uint64_t> orders;
  for (unsigned u = 1; u <= 3; ++u) {
    Subgroup su = make_Su(s, u);
    orders.push_back(su.order());
    for (uint32_t m : su.members)
      CHECK(ops.ring().in_Su(ops.decode(s.element(m)), u));
    CHECK(is_normal(s, su));
  }
  CHECK(orders == std::vector<uint64_t>{64, 8, 1});
  CHECK_THROWS_AS(make_Su(s, 0), std::domain_error);
  CHECK_THROWS_AS(make_Su(s, 4), std::domain_error);
  CHECK_THROWS_AS(make_Su(make_named("cyclic", 4), 1), std::domain_error);
}

TEST_CASE("the twisted group composes S with the field action") {
  FiniteGroup g = make_twisted_group(3);
  CHECK(g.order() == 64 * 7 * 3);
  const auto& ops = dynamic_cast<const TwistedOps&>(g.ops());
  CHECK(ops.p() == 7);
  CHECK(ops.p_order() == 7);
  CHECK(ops.ring().field().mult_order(ops.p_generator()) == 7);

  RingElem s;
  uint64_t gamma;
  unsigned j;
  ops.decode(g.element(FiniteGroup::kIdentityIndex), &s, &gamma, &j);
  CHECK(s == ops.ring().one());
  CHECK(gamma == 1);
  CHECK(j == 0);

  // the (γ, j) pairs act on S by automorphisms
  FiniteGroup sgrp = make_S(3);
  const auto& sops = dynamic_cast<const SOps&>(sgrp.ops());
  for (uint8_t g1 : ops.p_elements())
    for (unsigned jj = 0; jj < 3; ++jj) {
      for (uint32_t a = 0; a < sgrp.order(); ++a) {
        RingElem ra = sops.decode(sgrp.element(a));
        CHECK(ops.act(ra, 1, 0) == ra);
        for (uint32_t b = 0; b < sgrp.order(); ++b) {
          RingElem rb = sops.decode(sgrp.element(b));
          CHECK(ops.act(ops.ring().mul(ra, rb), g1, jj) ==
                ops.ring().mul(ops.act(ra, g1, jj), ops.act(rb, g1, jj)));
        }
      }
    }

  // nontrivial γ have no fixed points on S apart from the identity
  for (uint8_t g1 : ops.p_elements()) {
    if (g1 == 1) continue;
    for (uint32_t a = 1; a < sgrp.order(); ++a)
      CHECK(ops.act(sops.decode(sgrp.element(a)), g1, 0) !=
            sops.decode(sgrp.element(a)));
  }

  CHECK(make_twisted_group(2).order() == 24);
  CHECK_THROWS_AS(make_twisted_group(8), ResourceLimitError);
  CHECK_THROWS_AS(make_twisted_group(6), std::domain_error);  // no primitive prime
  CHECK_THROWS_AS(ops.encode(ops.ring().one(), 0, 0), std::domain_error);
  CHECK_THROWS_AS(ops.encode(ops.ring().one(), 1, 5), std::domain_error);
}

TEST_CASE("tn sequence satisfies its recurrence and closed form") {
  std::vector<uint64_t> values;
  for (unsigned n = 1; n <= 5; ++n) values.push_back(tn_sequence(n));
  CHECK(values == std::vector<uint64_t>{2, 6, 14, 30, 62});
  for (unsigned n = 1; n < 30; ++n) {
    CHECK(tn_sequence(n + 1) == 2 * tn_sequence(n) + 2);
    CHECK(tn_sequence(n) == (uint64_t{1} << (n + 1)) - 2);
  }
  CHECK_THROWS_AS(tn_sequence(0), std::domain_error);
  CHECK_THROWS_AS(tn_sequence(63), std::domain_error);
}

TEST_CASE("sampled ring checks are deterministic and pass") {
  RingSampleReport a = sample_ring_checks(8, 0xC0FFEE, 5000);
  CHECK(a.samples == 5000);
  CHECK(a.all());
  RingSampleReport b = sample_ring_checks(8, 0xC0FFEE, 5000);
  CHECK(a.associativity == b.associativity);
  CHECK(a.commutator_law == b.commutator_law);
  CHECK(sample_ring_checks(5, 12345, 2000).all());
  CHECK(sample_ring_checks(7, 1, 2000).all());
}
