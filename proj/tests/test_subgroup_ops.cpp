#include "doctest.h"
#include "realgraph/constructions.hpp"
#include "realgraph/group.hpp"
#include "realgraph/numtheory.hpp"
#include "realgraph/subgroup_ops.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace rg;

namespace {

// Every subgroup of the groups used here is generated by at most two
// elements, so spanning all pairs enumerates the full subgroup lattice.
std::set<std::vector<uint32_t>> brute_subgroups(const FiniteGroup& g) {
  std::set<std::vector<uint32_t>> out;
  out.insert({FiniteGroup::kIdentityIndex});
  for (uint32_t a = 0; a < g.order(); ++a)
    for (uint32_t b = a; b < g.order(); ++b) out.insert(span(g, {a, b}).members);
  return out;
}

bool brute_is_normal(const FiniteGroup& g, const std::vector<uint32_t>& members) {
  std::set<uint32_t> set(members.begin(), members.end());
  for (uint32_t m : members)
    for (uint32_t e = 0; e < g.order(); ++e)
      if (!set.count(g.conj(m, e))) return false;
  return true;
}

bool is_p_group(const FiniteGroup& g, const Subgroup& h, uint64_t p) {
  for (uint32_t m : h.members)
    if (!is_power_of(g.element_order(m), p)) return false;
  return true;
}

}  // namespace

TEST_CASE("span, trivial and full subgroups") {
  FiniteGroup g = make_named("symmetric", 4);
  CHECK(trivial_subgroup(g).members == std::vector<uint32_t>{0});
  CHECK(full_subgroup(g).order() == 24);
  CHECK(full_subgroup(g).is_full());

  Subgroup all = span(g, g.generators());
  CHECK(all.is_full());
  for (uint32_t a = 0; a < g.order(); ++a) {
    Subgroup h = span(g, {a});
    CHECK(h.order() == g.element_order(a));
    CHECK(std::is_sorted(h.members.begin(), h.members.end()));
    for (uint32_t m : h.members) CHECK(h.contains(m));
    // closed under multiplication
    for (uint32_t x : h.members)
      for (uint32_t y : h.members) CHECK(h.mask.test(g.mul(x, y)));
  }
  CHECK_THROWS_AS(span(make_named("cyclic", 64), {1}, 10), ResourceLimitError);
}

TEST_CASE("subgroup_from_members recovers a generating set") {
  FiniteGroup g = make_named("symmetric", 4);
  Subgroup a4 = span(g, {g.mul(g.generators()[0], g.generators()[1])});
  for (uint32_t a = 0; a < g.order(); ++a) {
    Subgroup h = span(g, {a});
    Subgroup back = subgroup_from_members(g, h.members);
    CHECK(back.members == h.members);
    CHECK(span(g, back.gens).members == h.members);
  }
}

TEST_CASE("as_group re-enumerates with matching element sets") {
  FiniteGroup s4 = make_named("symmetric", 4);
  Subgroup v4 = p_core(s4, 2);
  FiniteGroup k = as_group(v4);
  CHECK(k.order() == v4.order());
  std::set<Elem> outer, inner;
  for (uint32_t m : v4.members) outer.insert(s4.element(m));
  for (uint32_t i = 0; i < k.order(); ++i) inner.insert(k.element(i));
  CHECK(outer == inner);
}

TEST_CASE("centralizers and the center against brute force") {
  for (FiniteGroup g : {make_named("symmetric", 4), make_named("quaternion8", 0)}) {
    for (uint32_t x = 0; x < g.order(); ++x) {
      std::vector<uint32_t> expect;
      for (uint32_t e = 0; e < g.order(); ++e)
        if (g.mul(e, x) == g.mul(x, e)) expect.push_back(e);
      CHECK(centralizer(g, {x}).members == expect);
    }
    std::vector<uint32_t> central;
    for (uint32_t e = 0; e < g.order(); ++e) {
      bool commutes = true;
      for (uint32_t x = 0; x < g.order(); ++x)
        commutes = commutes && g.mul(e, x) == g.mul(x, e);
      if (commutes) central.push_back(e);
    }
    CHECK(center(g).members == central);
  }
  CHECK(center(make_named("symmetric", 4)).is_trivial());
  CHECK(center(make_named("quaternion8", 0)).order() == 2);
}

TEST_CASE("normalizer against brute force") {
  FiniteGroup g = make_named("symmetric", 4);
  for (uint32_t a = 1; a < g.order(); ++a) {
    Subgroup h = span(g, {a});
    std::vector<uint32_t> expect;
    for (uint32_t e = 0; e < g.order(); ++e) {
      bool stable = true;
      for (uint32_t m : h.members) stable = stable && h.contains(g.conj(m, e));
      if (stable) expect.push_back(e);
    }
    CHECK(normalizer(g, h).members == expect);
  }
}

TEST_CASE("normal subgroups match the brute-force lattice scan") {
  for (FiniteGroup g : {make_named("symmetric", 4), make_named("dihedral", 6),
                        make_named("quaternion8", 0), make_perm_group(4, {{1, 2, 0, 3}, {0, 2, 3, 1}})}) {
    std::set<std::vector<uint32_t>> expect;
    for (const auto& members : brute_subgroups(g))
      if (brute_is_normal(g, members)) expect.insert(members);
    std::set<std::vector<uint32_t>> got;
    for (const Subgroup& n : normal_subgroups(g)) {
      CHECK(is_normal(g, n));
      got.insert(n.members);
    }
    CHECK(got == expect);
  }
  // sorted by (order, members)
  FiniteGroup s4 = make_named("symmetric", 4);
  std::vector<uint64_t> orders;
  for (const Subgroup& n : normal_subgroups(s4)) orders.push_back(n.order());
  CHECK(orders == std::vector<uint64_t>{1, 4, 12, 24});
}

TEST_CASE("normal closure and is_normal") {
  FiniteGroup g = make_named("symmetric", 4);
  uint32_t transposition = 0, double_transposition = 0;
  for (uint32_t i = 0; i < g.order(); ++i) {
    if (g.element_order(i) != 2) continue;
    Subgroup cz = centralizer(g, {i});
    if (cz.order() == 4) transposition = i;       // class size 6
    if (cz.order() == 8) double_transposition = i;  // class size 3
  }
  CHECK(normal_closure(g, {transposition}).is_full());
  CHECK(normal_closure(g, {double_transposition}).order() == 4);
  CHECK_FALSE(is_normal(g, span(g, {transposition})));
  CHECK(is_normal(g, normal_closure(g, {double_transposition})));
}

TEST_CASE("derived series, solvability and nilpotency") {
  FiniteGroup s4 = make_named("symmetric", 4);
  std::vector<uint64_t> orders;
  for (const Subgroup& s : derived_series(s4)) orders.push_back(s.order());
  CHECK(orders == std::vector<uint64_t>{24, 12, 4, 1});
  CHECK(derived_subgroup(s4).order() == 12);
  CHECK(derived_length(s4) == 3);
  CHECK(is_solvable(s4));
  CHECK_FALSE(is_nilpotent(s4));

  FiniteGroup q8 = make_named("quaternion8", 0);
  CHECK(derived_subgroup(q8).members == center(q8).members);
  CHECK(is_nilpotent(q8));
  CHECK(is_abelian(make_named("cyclic", 12)));
  CHECK_FALSE(is_abelian(s4));
  CHECK(is_cyclic(span(s4, {s4.generators()[0]})));
  CHECK_FALSE(is_cyclic(p_core(s4, 2)));

  FiniteGroup a5 = make_perm_group(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}});
  REQUIRE(a5.order() == 60);
  CHECK_FALSE(is_solvable(a5));
  CHECK_THROWS_AS(derived_length(a5), std::domain_error);
}

TEST_CASE("commutator subgroup of subgroup pairs") {
  FiniteGroup s4 = make_named("symmetric", 4);
  Subgroup full = full_subgroup(s4);
  CHECK(commutator_subgroup(s4, full, full).order() == 12);
  Subgroup v4 = p_core(s4, 2);
  Subgroup a4 = normal_closure(s4, {s4.mul(s4.generators()[0], s4.generators()[1])});
  REQUIRE(a4.order() == 12);
  // [A4, V4] = V4: the 3-cycles permute the involutions transitively
  CHECK(commutator_subgroup(s4, a4, v4).members == v4.members);
}

TEST_CASE("p-cores against the brute-force normal lattice") {
  for (FiniteGroup g : {make_named("symmetric", 4), make_named("dihedral", 6)}) {
    for (uint64_t p : prime_divisors(g.order())) {
      Subgroup core = p_core(g, p);
      CHECK(is_normal(g, core));
      CHECK(is_p_group(g, core, p));
      // maximal among normal p-subgroups
      for (const auto& members : brute_subgroups(g)) {
        if (!brute_is_normal(g, members)) continue;
        Subgroup h = subgroup_from_members(g, members);
        if (is_p_group(g, h, p)) CHECK(h.order() <= core.order());
      }
    }
  }
  CHECK(p_core(make_named("symmetric", 4), 2).order() == 4);
  CHECK(p_core(make_named("symmetric", 4), 3).is_trivial());
  CHECK(p_core(make_named("symmetric", 4), 5).is_trivial());
}

TEST_CASE("o2prime spans the 2-element classes") {
  CHECK(o2prime(make_named("symmetric", 4)).is_full());
  CHECK(o2prime(make_perm_group(4, {{1, 2, 0, 3}, {0, 2, 3, 1}})).order() == 4);
  CHECK(o2prime(make_named("cyclic", 6)).order() == 2);
  CHECK(o2prime(make_named("cyclic", 9)).is_trivial());
}

TEST_CASE("Fitting subgroup is the product of the p-cores") {
  for (FiniteGroup g : {make_named("symmetric", 4), make_named("dihedral", 6),
                        make_named("quaternion8", 0)}) {
    Subgroup f = fitting(g);
    std::vector<uint32_t> seed;
    for (uint64_t p : prime_divisors(g.order())) {
      Subgroup core = p_core(g, p);
      seed.insert(seed.end(), core.members.begin(), core.members.end());
    }
    CHECK(span(g, seed).members == f.members);
    CHECK(is_normal(g, f));
  }
  CHECK(fitting(make_named("symmetric", 4)).order() == 4);
  CHECK(fitting(make_named("dihedral", 6)).order() == 6);
  CHECK(fitting(make_named("quaternion8", 0)).order() == 8);
}

TEST_CASE("Sylow subgroups have full p-part order") {
  for (FiniteGroup g : {make_named("symmetric", 4), make_named("dihedral", 6),
                        make_g150()}) {
    for (uint64_t p : {uint64_t{2}, uint64_t{3}, uint64_t{5}, uint64_t{7}}) {
      Subgroup s = sylow(g, p);
      CHECK(s.order() == p_part(g.order(), p));
      CHECK(is_p_group(g, s, p));
      CHECK(sylow(g, p).members == s.members);  // deterministic
    }
  }
  CHECK(sylow(make_named("symmetric", 4), 7).is_trivial());
}

TEST_CASE("quotients against the coset-table model") {
  FiniteGroup g = make_named("symmetric", 4);
  Subgroup v4 = p_core(g, 2);
  Quotient q = quotient(g, v4);
  CHECK(q.group.order() == 6);
  CHECK_FALSE(is_abelian(q.group));  // S4 / V4 is the symmetric group on 3 points
  CHECK(q.kernel.members == v4.members);

  // proj is a homomorphism with kernel exactly v4
  for (uint32_t a = 0; a < g.order(); ++a) {
    CHECK((q.proj[a] == FiniteGroup::kIdentityIndex) == v4.contains(a));
    for (uint32_t b = 0; b < g.order(); ++b)
      CHECK(q.proj[g.mul(a, b)] == q.group.mul(q.proj[a], q.proj[b]));
  }
  // cosets are the proj fibers: same image iff same coset aN
  for (uint32_t a = 0; a < g.order(); ++a)
    for (uint32_t b = 0; b < g.order(); ++b) {
      bool same_coset = v4.contains(g.mul(g.inv(a), b));
      CHECK((q.proj[a] == q.proj[b]) == same_coset);
    }

  Quotient whole = quotient(g, trivial_subgroup(g));
  CHECK(whole.group.order() == g.order());
  Quotient point = quotient(g, full_subgroup(g));
  CHECK(point.group.order() == 1);
  CHECK_THROWS_AS(quotient(g, span(g, {g.generators()[0]})), std::domain_error);
}

TEST_CASE("fixed-point-free actions and the 2-Frobenius predicate") {
  FiniteGroup s3 = make_named("symmetric", 3);
  Subgroup c3 = p_core(s3, 3);
  Subgroup flip = span(s3, {s3.generators()[1]});
  CHECK(acts_fixed_point_freely(s3, c3, flip));

  FiniteGroup d6 = make_named("dihedral", 6);
  Subgroup rot = p_core(d6, 3);
  // a reflection centralizes the central rotation, so the action on the
  // full rotation subgroup is not fixed-point-free
  Subgroup c6 = fitting(d6);
  uint32_t refl = 0;
  for (uint32_t i = 1; i < d6.order(); ++i)
    if (d6.element_order(i) == 2 && !c6.contains(i)) refl = i;
  CHECK_FALSE(acts_fixed_point_freely(d6, c6, span(d6, {refl})));

  FiniteGroup s4 = make_named("symmetric", 4);
  Subgroup v4 = p_core(s4, 2);
  Subgroup a4 = normal_closure(s4, {s4.mul(s4.generators()[0], s4.generators()[1])});
  REQUIRE(a4.order() == 12);
  CHECK(is_2frobenius(s4, v4, a4));
  CHECK_FALSE(is_2frobenius(s4, v4, full_subgroup(s4)));
  CHECK_FALSE(is_2frobenius(s4, trivial_subgroup(s4), a4));
  CHECK_THROWS_AS(is_2frobenius(s4, span(s4, {s4.generators()[0]}), a4),
                  std::domain_error);
}
