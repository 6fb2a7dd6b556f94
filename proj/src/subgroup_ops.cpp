#include "realgraph/subgroup_ops.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "realgraph/numtheory.hpp"

namespace rg {

namespace {

// Breadth-first enumeration of ⟨gens⟩ inside an already-enumerated parent.
// Returns ascending member indices; throws past cap.
std::vector<uint32_t> bfs_members(const FiniteGroup& G,
                                  const std::vector<uint32_t>& gens,
                                  uint64_t cap) {
  IndexSet seen(G.order());
  std::vector<uint32_t> queue;
  seen.set(FiniteGroup::kIdentityIndex);
  queue.push_back(FiniteGroup::kIdentityIndex);
  for (size_t head = 0; head < queue.size(); ++head) {
    for (uint32_t g : gens) {
      uint32_t y = G.mul(g, queue[head]);
      if (!seen.test(y)) {
        seen.set(y);
        queue.push_back(y);
        if (queue.size() > cap)
          throw ResourceLimitError(
              "subgroup span exceeded cap of " + std::to_string(cap),
              queue.size());
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

Subgroup make_subgroup(const FiniteGroup& G, std::vector<uint32_t> members,
                       std::vector<uint32_t> gens) {
  Subgroup H;
  H.parent = G;
  H.members = std::move(members);
  H.mask = IndexSet(G.order());
  for (uint32_t m : H.members) H.mask.set(m);
  H.gens = std::move(gens);
  return H;
}

}  // namespace

Subgroup trivial_subgroup(const FiniteGroup& G) {
  return make_subgroup(G, {FiniteGroup::kIdentityIndex}, {});
}

Subgroup full_subgroup(const FiniteGroup& G) {
  std::vector<uint32_t> all(G.order());
  for (uint32_t i = 0; i < G.order(); ++i) all[i] = i;
  return make_subgroup(G, std::move(all), G.generators());
}

Subgroup span(const FiniteGroup& G, const std::vector<uint32_t>& candidates,
              uint64_t cap) {
  std::vector<uint32_t> gens;
  Subgroup cur = trivial_subgroup(G);
  for (uint32_t c : candidates) {
    if (cur.contains(c)) continue;
    gens.push_back(c);
    cur = make_subgroup(G, bfs_members(G, gens, cap), gens);
  }
  return cur;
}

Subgroup subgroup_from_members(const FiniteGroup& G,
                               std::vector<uint32_t> members) {
  std::sort(members.begin(), members.end());
  Subgroup H = span(G, members, members.size());
  if (H.order() != members.size())
    throw std::logic_error("subgroup_from_members: set is not closed");
  return H;
}

FiniteGroup as_group(const Subgroup& H) {
  if (H.gens.empty())
    return FiniteGroup::close(H.parent.ops_ptr(),
                              {H.parent.ops().identity()});
  std::vector<Elem> gens;
  gens.reserve(H.gens.size());
  for (uint32_t g : H.gens) gens.push_back(H.parent.element(g));
  return FiniteGroup::close(H.parent.ops_ptr(), gens);
}

namespace {

// Orbit of `seed` under conjugation by the parent's generators.
std::vector<uint32_t> conjugation_orbit(const FiniteGroup& G,
                                        const std::vector<uint32_t>& seed) {
  IndexSet seen(G.order());
  std::vector<uint32_t> queue;
  for (uint32_t s : seed) {
    if (!seen.test(s)) {
      seen.set(s);
      queue.push_back(s);
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    for (uint32_t g : G.generators()) {
      uint32_t y = G.conj(queue[head], g);
      if (!seen.test(y)) {
        seen.set(y);
        queue.push_back(y);
      }
    }
  }
  return queue;
}

}  // namespace

Subgroup normal_closure(const FiniteGroup& G,
                        const std::vector<uint32_t>& seed) {
  return span(G, conjugation_orbit(G, seed));
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (uint32_t g : G.generators())
    for (uint32_t h : H.gens)
      if (!H.contains(G.conj(h, g))) return false;
  return true;
}

Subgroup centralizer(const FiniteGroup& G, const std::vector<uint32_t>& S) {
  std::vector<uint32_t> members;
  for (uint32_t g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (uint32_t s : S)
      if (G.mul(g, s) != G.mul(s, g)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(g);
  }
  return subgroup_from_members(G, std::move(members));
}

Subgroup center(const FiniteGroup& G) {
  // C_G(generators) = C_G(G): centralizing the generators centralizes all.
  return centralizer(G, G.generators());
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& P) {
  std::vector<uint32_t> members;
  for (uint32_t g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (uint32_t h : P.gens)
      if (!P.contains(G.conj(h, g))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(g);
  }
  return subgroup_from_members(G, std::move(members));
}

namespace {

uint32_t commutator(const FiniteGroup& G, uint32_t a, uint32_t b) {
  return G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
}

std::vector<uint32_t> generator_commutators(const FiniteGroup& G,
                                            const std::vector<uint32_t>& A,
                                            const std::vector<uint32_t>& B) {
  std::vector<uint32_t> seeds;
  for (uint32_t a : A)
    for (uint32_t b : B) {
      uint32_t c = commutator(G, a, b);
      if (c != FiniteGroup::kIdentityIndex) seeds.push_back(c);
    }
  return seeds;
}

}  // namespace

Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A,
                             const Subgroup& B) {
  return normal_closure(G, generator_commutators(G, A.gens, B.gens));
}

Subgroup derived_subgroup(const FiniteGroup& G) {
  return normal_closure(
      G, generator_commutators(G, G.generators(), G.generators()));
}

Subgroup derived_subgroup_in(const Subgroup& H) {
  const FiniteGroup& G = H.parent;
  std::vector<uint32_t> seeds = generator_commutators(G, H.gens, H.gens);
  // Normal closure inside H: orbit under conjugation by H's generators.
  IndexSet seen(G.order());
  std::vector<uint32_t> orbit;
  for (uint32_t s : seeds)
    if (!seen.test(s)) {
      seen.set(s);
      orbit.push_back(s);
    }
  for (size_t head = 0; head < orbit.size(); ++head) {
    for (uint32_t g : H.gens) {
      uint32_t y = G.conj(orbit[head], g);
      if (!seen.test(y)) {
        seen.set(y);
        orbit.push_back(y);
      }
    }
  }
  return span(G, orbit);
}

std::vector<Subgroup> derived_series(const FiniteGroup& G) {
  std::vector<Subgroup> series;
  series.push_back(full_subgroup(G));
  while (true) {
    Subgroup next = derived_subgroup_in(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().is_trivial()) break;
  }
  return series;
}

int derived_length(const FiniteGroup& G) {
  std::vector<Subgroup> series = derived_series(G);
  if (!series.back().is_trivial())
    throw std::domain_error(
        "derived_length: series stabilized above the identity (group is not "
        "solvable)");
  return static_cast<int>(series.size()) - 1;
}

bool is_solvable(const FiniteGroup& G) {
  return derived_series(G).back().is_trivial();
}

bool is_nilpotent(const FiniteGroup& G) {
  for (const auto& [p, e] : G.order_factorization()) {
    (void)e;
    if (!is_normal(G, sylow(G, p))) return false;
  }
  return true;
}

bool is_abelian(const Subgroup& H) {
  const FiniteGroup& G = H.parent;
  for (size_t i = 0; i < H.gens.size(); ++i)
    for (size_t j = i + 1; j < H.gens.size(); ++j)
      if (G.mul(H.gens[i], H.gens[j]) != G.mul(H.gens[j], H.gens[i]))
        return false;
  return true;
}

bool is_abelian(const FiniteGroup& G) { return is_abelian(full_subgroup(G)); }

bool is_cyclic(const Subgroup& H) {
  const uint64_t n = H.order();
  for (uint32_t m : H.members)
    if (H.parent.element_order(m) == n) return true;
  return false;
}

Subgroup p_core(const FiniteGroup& G, uint64_t p) {
  if (G.order() % p != 0) return trivial_subgroup(G);
  const uint64_t cap = p_part(G.order(), p);
  std::vector<uint32_t> good;
  for (const ConjugacyClass& c : G.classes().classes) {
    if (c.order == 1 || !is_power_of(c.order, p)) continue;
    // The class is a union of conjugates; its span is its normal closure.
    try {
      Subgroup nc = span(G, c.members, cap);
      if (is_power_of(nc.order(), p))
        good.insert(good.end(), c.members.begin(), c.members.end());
    } catch (const ResourceLimitError&) {
      // Larger than the full p-part: not a p-group.
    }
  }
  Subgroup core = span(G, good, cap);
  if (!is_power_of(core.order(), p))
    throw std::logic_error("p_core: result is not a p-group");
  return core;
}

Subgroup o2prime(const FiniteGroup& G) {
  std::vector<uint32_t> twos;
  for (const ConjugacyClass& c : G.classes().classes)
    if (c.order > 1 && is_power_of(c.order, 2))
      twos.insert(twos.end(), c.members.begin(), c.members.end());
  Subgroup H = span(G, twos);
  if ((G.order() / H.order()) % 2 == 0)
    throw std::logic_error("o2prime: index is even");
  if (!H.is_full()) {
    // Idempotence: the 2-elements of H must span all of H again.
    if (o2prime(as_group(H)).order() != H.order())
      throw std::logic_error("o2prime: not idempotent");
  }
  return H;
}

Subgroup fitting(const FiniteGroup& G) {
  std::vector<uint32_t> parts;
  uint64_t predicted = 1;
  for (const auto& [p, e] : G.order_factorization()) {
    (void)e;
    Subgroup core = p_core(G, p);
    predicted *= core.order();
    parts.insert(parts.end(), core.members.begin(), core.members.end());
  }
  Subgroup F = span(G, parts);
  if (F.order() != predicted)
    throw std::logic_error("fitting: cores do not form a direct product");
  FiniteGroup Fg = as_group(F);
  if (!is_nilpotent(Fg)) throw std::logic_error("fitting: not nilpotent");
  return F;
}

namespace {

// Members of the normalizer of P, without extracting a generating set.
std::vector<uint32_t> normalizer_members(const FiniteGroup& G,
                                         const Subgroup& P) {
  std::vector<uint32_t> members;
  for (uint32_t g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (uint32_t h : P.gens)
      if (!P.contains(G.conj(h, g))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(g);
  }
  return members;
}

// Among `pool`, the p-power-order element outside `P` with minimal encoding.
std::optional<uint32_t> min_p_element_outside(
    const FiniteGroup& G, const std::vector<uint32_t>& pool, uint64_t p,
    const Subgroup& P) {
  std::optional<uint32_t> best;
  for (uint32_t i : pool) {
    if (i == FiniteGroup::kIdentityIndex || P.contains(i)) continue;
    if (!is_power_of(G.element_order(i), p)) continue;
    if (!best || G.element(i) < G.element(*best)) best = i;
  }
  return best;
}

}  // namespace

Subgroup sylow(const FiniteGroup& G, uint64_t p) {
  if (G.order() % p != 0) return trivial_subgroup(G);
  const uint64_t target = p_part(G.order(), p);

  std::vector<uint32_t> all(G.order());
  for (uint32_t i = 0; i < G.order(); ++i) all[i] = i;
  Subgroup P = trivial_subgroup(G);
  std::optional<uint32_t> seed = min_p_element_outside(G, all, p, P);
  if (!seed) throw std::logic_error("sylow: no p-element found");
  std::vector<uint32_t> gens{*seed};
  P = span(G, gens);

  // Normalizer ascent: a proper p-subgroup always has a p-element in its
  // normalizer outside itself, and adjoining one keeps the span a p-group.
  while (P.order() < target) {
    std::vector<uint32_t> nm = normalizer_members(G, P);
    std::optional<uint32_t> next = min_p_element_outside(G, nm, p, P);
    if (!next) throw std::logic_error("sylow: normalizer ascent stalled");
    gens.push_back(*next);
    P = span(G, gens);
  }
  if (P.order() != target) throw std::logic_error("sylow: overshot p-part");
  return P;
}

namespace {

class QuotientOps : public ElementOps {
 public:
  QuotientOps(FiniteGroup parent, std::vector<uint32_t> canon, size_t kernel)
      : parent_(std::move(parent)), canon_(std::move(canon)) {
    static std::atomic<uint64_t> counter{0};
    kind_ = parent_.ops().kind() + "/n" + std::to_string(kernel) + "#" +
            std::to_string(counter.fetch_add(1));
  }

  Elem identity() const override {
    return parent_.element(canon_[FiniteGroup::kIdentityIndex]);
  }
  Elem mul(const Elem& a, const Elem& b) const override {
    return parent_.element(
        canon_[parent_.mul(parent_.index_of(a), parent_.index_of(b))]);
  }
  Elem inv(const Elem& a) const override {
    return parent_.element(canon_[parent_.inv(parent_.index_of(a))]);
  }
  std::string show(const Elem& a) const override {
    return parent_.ops().show(a) + "N";
  }
  std::string kind() const override { return kind_; }

 private:
  FiniteGroup parent_;
  std::vector<uint32_t> canon_;
  std::string kind_;
};

}  // namespace

Quotient quotient(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N))
    throw std::domain_error("quotient: subgroup is not normal");

  // Coset of g = orbit of g under left multiplication by N's generators;
  // canonical representative = minimal encoding in the orbit.
  std::vector<uint32_t> canon(G.order(), UINT32_MAX);
  std::vector<uint32_t> orbit;
  for (uint32_t start = 0; start < G.order(); ++start) {
    if (canon[start] != UINT32_MAX) continue;
    orbit.clear();
    orbit.push_back(start);
    canon[start] = start;
    uint32_t best = start;
    for (size_t head = 0; head < orbit.size(); ++head) {
      for (uint32_t n : N.gens) {
        uint32_t y = G.mul(n, orbit[head]);
        if (canon[y] == UINT32_MAX) {
          canon[y] = start;  // provisional: marks visited
          orbit.push_back(y);
          if (G.element(y) < G.element(best)) best = y;
        }
      }
    }
    for (uint32_t m : orbit) canon[m] = best;
  }

  auto ops = std::make_shared<QuotientOps>(G, canon, N.order());
  std::vector<Elem> qgens;
  for (uint32_t g : G.generators()) qgens.push_back(G.element(canon[g]));
  FiniteGroup Q = FiniteGroup::close(std::move(ops), qgens);
  if (Q.order() != G.order() / N.order())
    throw std::logic_error("quotient: coset count mismatch");

  Quotient result{std::move(Q), N, std::vector<uint32_t>(G.order())};
  for (uint32_t i = 0; i < G.order(); ++i)
    result.proj[i] = result.group.index_of(G.element(canon[i]));
  return result;
}

bool acts_fixed_point_freely(const FiniteGroup& G, const Subgroup& K,
                             const Subgroup& H) {
  if (!is_normal(G, K))
    throw std::domain_error("acts_fixed_point_freely: K is not normal");
  if (K.mask.intersection_count(H.mask) != 1)
    throw std::domain_error("acts_fixed_point_freely: K ∩ H is nontrivial");
  for (uint32_t h : H.members) {
    if (h == FiniteGroup::kIdentityIndex) continue;
    for (uint32_t k : K.members) {
      if (k == FiniteGroup::kIdentityIndex) continue;
      if (G.conj(k, h) == k) return false;
    }
  }
  return true;
}

namespace {

// Frobenius test for kernel K inside group M, examining only class
// representatives: reps is one element per conjugacy class of elements of
// M ∖ K (conjugation preserves C_K(x) up to isomorphism when K is normal).
template <typename ConjFn>
bool frobenius_kernel_check(const std::vector<uint32_t>& reps,
                            const std::vector<uint32_t>& kernel_members,
                            ConjFn conj) {
  for (uint32_t r : reps) {
    for (uint32_t k : kernel_members) {
      if (k == FiniteGroup::kIdentityIndex) continue;
      if (conj(k, r) == k) return false;
    }
  }
  return true;
}

}  // namespace

bool is_2frobenius(const FiniteGroup& G, const Subgroup& N, const Subgroup& M) {
  if (!is_normal(G, N) || !is_normal(G, M))
    throw std::domain_error("is_2frobenius: N and M must be normal");
  if (!N.mask.subset_of(M.mask))
    throw std::domain_error("is_2frobenius: N must be contained in M");
  // Frobenius groups have proper nontrivial kernels on both levels.
  if (N.is_trivial() || N.order() == M.order() || M.is_full()) return false;

  // Lower level: M Frobenius with kernel N.  Since N and M are normal in G,
  // fixed-point-freeness is constant on G-classes; test one rep per class.
  std::vector<uint32_t> reps;
  for (const ConjugacyClass& c : G.classes().classes) {
    uint32_t r = c.rep;
    if (M.contains(r) && !N.contains(r)) reps.push_back(r);
  }
  if (!frobenius_kernel_check(reps, N.members, [&](uint32_t k, uint32_t r) {
        return G.conj(k, r);
      }))
    return false;

  // Upper level: G/N Frobenius with kernel M/N.
  Quotient q = quotient(G, N);
  const FiniteGroup& Q = q.group;
  IndexSet mbar(Q.order());
  std::vector<uint32_t> mbar_members;
  for (uint32_t m : M.members) {
    uint32_t im = q.proj[m];
    if (!mbar.test(im)) {
      mbar.set(im);
      mbar_members.push_back(im);
    }
  }
  std::vector<uint32_t> qreps;
  for (const ConjugacyClass& c : Q.classes().classes)
    if (!mbar.test(c.rep)) qreps.push_back(c.rep);
  return frobenius_kernel_check(qreps, mbar_members,
                                [&](uint32_t k, uint32_t r) {
                                  return Q.conj(k, r);
                                });
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G, uint64_t cap) {
  std::vector<Subgroup> all;
  auto lookup = [&](size_t order, const IndexSet& mask) -> const Subgroup* {
    for (const Subgroup& s : all)
      if (s.order() == order && s.mask == mask) return &s;
    return nullptr;
  };
  auto add = [&](Subgroup s) -> bool {
    if (lookup(s.order(), s.mask)) return false;
    all.push_back(std::move(s));
    if (all.size() > cap)
      throw ResourceLimitError(
          "normal_subgroups exceeded cap of " + std::to_string(cap) +
              " candidates",
          all.size());
    return true;
  };

  add(trivial_subgroup(G));
  for (const ConjugacyClass& c : G.classes().classes)
    add(span(G, c.members));  // class members form a full conjugation orbit

  // Join closure: every normal subgroup is a join of class closures.
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      const Subgroup &A = all[i], &B = all[j];
      size_t inter = A.mask.intersection_count(B.mask);
      size_t predicted = A.order() / inter * B.order();
      if (predicted == A.order() || predicted == B.order())
        continue;  // one contains the other
      // If a known subgroup of exactly the product-set size contains both,
      // it is the join (|AB| = |A||B|/|A∩B| ≤ |⟨A,B⟩| ≤ |S| = |AB|).
      bool found = false;
      for (const Subgroup& s : all)
        if (s.order() == predicted && A.mask.subset_of(s.mask) &&
            B.mask.subset_of(s.mask)) {
          found = true;
          break;
        }
      if (found) continue;
      std::vector<uint32_t> joint = A.gens;
      joint.insert(joint.end(), B.gens.begin(), B.gens.end());
      add(span(G, joint));
    }
  }

  std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return all;
}

}  // namespace rg
