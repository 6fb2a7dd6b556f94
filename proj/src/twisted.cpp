#include "realgraph/twisted.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "realgraph/numtheory.hpp"

namespace rg {

TwistedRing::TwistedRing(unsigned k) : k_(k) {
  if (k < 2 || k > kMaxTwistedK)
    throw std::domain_error("twisted ring degree must be between 2 and 8");
  field_ = make_gf2k(k);
  const uint64_t q = field_->field_order();
  ftab_.assign(k, std::vector<uint8_t>(q));
  for (unsigned u = 0; u < k; ++u)
    for (uint64_t b = 0; b < q; ++b)
      ftab_[u][b] = static_cast<uint8_t>(field_->frob(b, u));
}

uint64_t TwistedRing::ring_order() const {
  return 1ull << (static_cast<uint64_t>(k_) * k_);
}

RingElem TwistedRing::one() const {
  RingElem r;
  r.c[0] = 1;
  return r;
}

RingElem TwistedRing::x() const {
  RingElem r;
  r.c[1] = 1;
  return r;
}

RingElem TwistedRing::from_coeffs(const std::vector<uint64_t>& coeffs) const {
  if (coeffs.size() != k_)
    throw std::domain_error("coefficient list must have length k");
  RingElem r;
  for (unsigned i = 0; i < k_; ++i) {
    if (coeffs[i] >= field_->field_order())
      throw std::domain_error("coefficient outside the field");
    r.c[i] = static_cast<uint8_t>(coeffs[i]);
  }
  return r;
}

RingElem TwistedRing::add(const RingElem& a, const RingElem& b) const {
  RingElem r;
  for (unsigned i = 0; i < k_; ++i) r.c[i] = a.c[i] ^ b.c[i];
  return r;
}

// (α x^i)(β x^j) = α β^{σ^i} x^{i+j}; terms of degree >= k vanish.
RingElem TwistedRing::mul(const RingElem& a, const RingElem& b) const {
  RingElem r;
  for (unsigned i = 0; i < k_; ++i) {
    if (!a.c[i]) continue;
    for (unsigned j = 0; i + j < k_; ++j) {
      if (!b.c[j]) continue;
      r.c[i + j] ^= static_cast<uint8_t>(field_->mul(a.c[i], ftab_[i][b.c[j]]));
    }
  }
  return r;
}

// Triangular solve: the degree-m coefficient of a·b is
// α₀ β_m + Σ_{i=1..m} α_i β_{m−i}^{σ^i}, forced to δ_{m,0}.
RingElem TwistedRing::inverse(const RingElem& a) const {
  if (!is_unit(a)) throw std::domain_error("ring element is not a unit");
  const uint64_t a0inv = field_->inv(a.c[0]);
  RingElem b;
  b.c[0] = static_cast<uint8_t>(a0inv);
  for (unsigned m = 1; m < k_; ++m) {
    uint64_t acc = 0;
    for (unsigned i = 1; i <= m; ++i)
      if (a.c[i]) acc ^= field_->mul(a.c[i], ftab_[i][b.c[m - i]]);
    b.c[m] = static_cast<uint8_t>(field_->mul(a0inv, acc));
  }
  return b;
}

bool TwistedRing::in_Su(const RingElem& a, unsigned u) const {
  if (a.c[0] != 1) return false;
  for (unsigned i = 1; i < u && i < k_; ++i)
    if (a.c[i]) return false;
  return true;
}

RingElem TwistedRing::frob(const RingElem& a, unsigned u) const {
  RingElem r;
  for (unsigned i = 0; i < k_; ++i) r.c[i] = ftab_[u % k_][a.c[i]];
  return r;
}

uint64_t psi_u(const TwistedRing& R, const RingElem& s, unsigned u) {
  if (u < 1 || u > R.k()) throw std::domain_error("psi_u: u out of range");
  if (!R.in_Su(s, u)) throw std::domain_error("psi_u: element not in S_u");
  return u == R.k() ? 0 : s.c[u];
}

// ------------------------------------------------------------------ S ------

SOps::SOps(unsigned k) : ring_(k) {}

Elem SOps::encode(const RingElem& s) const {
  if (!ring_.in_S(s)) throw std::domain_error("element is not in S (α₀ ≠ 1)");
  Elem e(ring_.k() - 1, '\0');
  for (unsigned i = 1; i < ring_.k(); ++i) e[i - 1] = static_cast<char>(s.c[i]);
  return e;
}

RingElem SOps::decode(const Elem& e) const {
  RingElem s;
  s.c[0] = 1;
  for (unsigned i = 1; i < ring_.k(); ++i)
    s.c[i] = static_cast<uint8_t>(e[i - 1]);
  return s;
}

Elem SOps::identity() const { return encode(ring_.one()); }

Elem SOps::mul(const Elem& a, const Elem& b) const {
  return encode(ring_.mul(decode(a), decode(b)));
}

Elem SOps::inv(const Elem& a) const {
  return encode(ring_.inverse(decode(a)));
}

std::string SOps::show(const Elem& a) const {
  RingElem s = decode(a);
  std::ostringstream out;
  out << "[1";
  for (unsigned i = 1; i < ring_.k(); ++i) out << "," << unsigned(s.c[i]);
  out << "]";
  return out.str();
}

std::string SOps::kind() const {
  return "twistedS" + std::to_string(ring_.k());
}

FiniteGroup make_S(unsigned k, uint64_t cap) {
  auto ops = std::make_shared<SOps>(k);
  const TwistedRing& R = ops->ring();
  const uint64_t order = 1ull << (static_cast<uint64_t>(k) * (k - 1));
  if (order > cap)
    throw ResourceLimitError(
        "S for k=" + std::to_string(k) + " has " + std::to_string(order) +
            " elements, past the cap; use the sampled ring checks instead",
        0);
  // 1 + βx^u over a field basis β = 2^b spans S.
  std::vector<Elem> gens;
  for (unsigned u = 1; u < k; ++u)
    for (unsigned b = 0; b < k; ++b) {
      RingElem g = R.one();
      g.c[u] = static_cast<uint8_t>(1u << b);
      gens.push_back(ops->encode(g));
    }
  FiniteGroup S = FiniteGroup::close(ops, gens, cap);
  if (S.order() != order) throw std::logic_error("make_S: wrong order");
  return S;
}

Subgroup make_Su(const FiniteGroup& S, unsigned u) {
  auto ops = dynamic_cast<const SOps*>(&S.ops());
  if (!ops) throw std::domain_error("make_Su: group is not an S group");
  const TwistedRing& R = ops->ring();
  const unsigned k = R.k();
  if (u < 1 || u > k) throw std::domain_error("make_Su: u out of range");
  std::vector<uint32_t> members;
  for (uint32_t i = 0; i < S.order(); ++i)
    if (R.in_Su(ops->decode(S.element(i)), u)) members.push_back(i);
  Subgroup Su = subgroup_from_members(S, std::move(members));
  const uint64_t expect = 1ull << (static_cast<uint64_t>(k) * (k - u));
  if (Su.order() != expect) throw std::logic_error("make_Su: wrong order");
  return Su;
}

// ------------------------------------------------- G = S ⋊ (P ⋊ 𝒢) ------

TwistedOps::TwistedOps(unsigned k) : ring_(k) {
  const Gf2kField& F = ring_.field();
  p_ = primitive_prime_divisor(k);
  const uint64_t p_ord = p_part(F.field_order() - 1, p_);
  pindex_.fill(-1);
  for (uint64_t b = 1; b < F.field_order(); ++b)
    if (p_ord % F.mult_order(b) == 0) {
      pindex_[b] = static_cast<int16_t>(pelems_.size());
      pelems_.push_back(static_cast<uint8_t>(b));
    }
  if (pelems_.size() != p_ord)
    throw std::logic_error("TwistedOps: Sylow subgroup of F^x has wrong size");
  // γ^{1−2^u} = γ · (γ^{2^u})^{-1}, the inner scaling h_γ = γ s γ⁻¹.
  scale_.assign(pelems_.size(), std::vector<uint8_t>(k, 1));
  for (size_t gi = 0; gi < pelems_.size(); ++gi)
    for (unsigned u = 1; u < k; ++u) {
      uint64_t g = pelems_[gi];
      scale_[gi][u] =
          static_cast<uint8_t>(F.mul(g, F.inv(F.frob(g, u))));
    }
}

uint64_t TwistedOps::p_generator() const {
  for (uint8_t b : pelems_)
    if (ring_.field().mult_order(b) == pelems_.size()) return b;
  throw std::logic_error("TwistedOps: P has no generator");
}

Elem TwistedOps::encode(const RingElem& s, uint64_t gamma, unsigned j) const {
  const unsigned k = ring_.k();
  if (!ring_.in_S(s)) throw std::domain_error("twisted element: s not in S");
  if (gamma > 255 || pindex_[gamma] < 0)
    throw std::domain_error("twisted element: γ not in P");
  if (j >= k) throw std::domain_error("twisted element: Galois exponent");
  Elem e(k + 1, '\0');
  for (unsigned i = 1; i < k; ++i) e[i - 1] = static_cast<char>(s.c[i]);
  e[k - 1] = static_cast<char>(gamma);
  e[k] = static_cast<char>(j);
  return e;
}

void TwistedOps::decode(const Elem& e, RingElem* s, uint64_t* gamma,
                        unsigned* j) const {
  const unsigned k = ring_.k();
  *s = RingElem{};
  s->c[0] = 1;
  for (unsigned i = 1; i < k; ++i) s->c[i] = static_cast<uint8_t>(e[i - 1]);
  *gamma = static_cast<uint8_t>(e[k - 1]);
  *j = static_cast<uint8_t>(e[k]);
}

RingElem TwistedOps::act(const RingElem& s, uint64_t gamma, unsigned j) const {
  const unsigned k = ring_.k();
  const Gf2kField& F = ring_.field();
  const std::vector<uint8_t>& sc = scale_[pindex_[gamma]];
  RingElem out;
  out.c[0] = 1;
  for (unsigned u = 1; u < k; ++u)
    if (s.c[u])
      out.c[u] = static_cast<uint8_t>(F.mul(sc[u], ring_.frob_bits(j, s.c[u])));
  return out;
}

Elem TwistedOps::identity() const { return encode(ring_.one(), 1, 0); }

Elem TwistedOps::mul(const Elem& a, const Elem& b) const {
  const unsigned k = ring_.k();
  RingElem sa, sb;
  uint64_t ga, gb;
  unsigned ja, jb;
  decode(a, &sa, &ga, &ja);
  decode(b, &sb, &gb, &jb);
  RingElem s = ring_.mul(sa, act(sb, ga, ja));
  uint64_t g = ring_.field().mul(ga, ring_.frob_bits(ja, gb));
  return encode(s, g, (ja + jb) % k);
}

Elem TwistedOps::inv(const Elem& a) const {
  const unsigned k = ring_.k();
  RingElem s;
  uint64_t g;
  unsigned j;
  decode(a, &s, &g, &j);
  // (γ, j)⁻¹ = (σ^{−j}(γ⁻¹), −j); the s part is that inverse acting on s⁻¹.
  unsigned ji = (k - j) % k;
  uint64_t gi = ring_.frob_bits(ji, ring_.field().inv(g));
  return encode(act(ring_.inverse(s), gi, ji), gi, ji);
}

std::string TwistedOps::show(const Elem& a) const {
  RingElem s;
  uint64_t g;
  unsigned j;
  decode(a, &s, &g, &j);
  std::ostringstream out;
  out << "(s=[1";
  for (unsigned i = 1; i < ring_.k(); ++i) out << "," << unsigned(s.c[i]);
  out << "],g=" << g << ",j=" << j << ")";
  return out.str();
}

std::string TwistedOps::kind() const {
  return "twisted" + std::to_string(ring_.k());
}

FiniteGroup make_twisted_group(unsigned k, uint64_t cap) {
  auto ops = std::make_shared<TwistedOps>(k);
  const TwistedRing& R = ops->ring();
  const uint64_t s_order = 1ull << (static_cast<uint64_t>(k) * (k - 1));
  const uint64_t order = s_order * ops->p_order() * k;
  if (order > cap)
    throw ResourceLimitError(
        "twisted group for k=" + std::to_string(k) + " has " +
            std::to_string(order) +
            " elements, past the cap; use the sampled ring checks instead",
        0);
  std::vector<Elem> gens;
  for (unsigned u = 1; u < k; ++u)
    for (unsigned b = 0; b < k; ++b) {
      RingElem g = R.one();
      g.c[u] = static_cast<uint8_t>(1u << b);
      gens.push_back(ops->encode(g, 1, 0));
    }
  gens.push_back(ops->encode(R.one(), ops->p_generator(), 0));
  gens.push_back(ops->encode(R.one(), 1, 1));
  FiniteGroup G = FiniteGroup::close(ops, gens, cap);
  if (G.order() != order)
    throw std::logic_error("make_twisted_group: wrong order");
  return G;
}

uint64_t tn_sequence(unsigned n) {
  if (n < 1 || n > 62) throw std::domain_error("tn_sequence: n out of range");
  uint64_t t = 2;
  for (unsigned i = 1; i < n; ++i) t = 2 * t + 2;
  if (t != (1ull << (n + 1)) - 2)
    throw std::logic_error("tn_sequence: recurrence/closed form mismatch");
  return t;
}

// ------------------------------------------------------- sampled laws ------

RingSampleReport sample_ring_checks(unsigned k, uint64_t seed,
                                    uint64_t samples) {
  TwistedRing R(k);
  const Gf2kField& F = R.field();
  std::mt19937_64 rng(seed);
  const uint64_t q = F.field_order();
  auto random_elem = [&](bool unit_alpha0) {
    RingElem r;
    for (unsigned i = 0; i < k; ++i)
      r.c[i] = static_cast<uint8_t>(rng() % q);
    if (unit_alpha0) r.c[0] = 1;
    return r;
  };

  RingSampleReport rep;
  rep.samples = samples;
  rep.associativity = true;
  rep.j_nilpotent = true;
  rep.psi_additive = true;
  rep.commutator_law = true;
  rep.coeff_action_law = true;
  rep.filtration = true;

  // J^{k−1} ≠ 0: x·x·...·x (k−1 factors) has coefficient 1 at degree k−1.
  RingElem xp = R.x();
  for (unsigned i = 2; i < k; ++i) xp = R.mul(xp, R.x());
  rep.j_km1_nonzero = xp.c[k - 1] != 0 && !(xp == R.zero());

  const uint64_t p = primitive_prime_divisor(k);
  const uint64_t p_ord = p_part(q - 1, p);
  std::vector<uint8_t> pel;
  for (uint64_t b = 1; b < q; ++b)
    if (p_ord % F.mult_order(b) == 0) pel.push_back(uint8_t(b));

  for (uint64_t it = 0; it < samples; ++it) {
    RingElem a = random_elem(false), b = random_elem(false),
             c = random_elem(false);
    if (!(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))))
      rep.associativity = false;

    // Product of k random members of J vanishes.
    RingElem prod = random_elem(false);
    prod.c[0] = 0;
    for (unsigned t = 1; t < k; ++t) {
      RingElem f = random_elem(false);
      f.c[0] = 0;
      prod = R.mul(prod, f);
    }
    if (!(prod == R.zero())) rep.j_nilpotent = false;

    // ψ laws on a random degree pair u, v.
    unsigned u = 1 + rng() % (k - 1);
    unsigned v = 1 + rng() % (k - 1);
    RingElem s = random_elem(true), t = random_elem(true);
    for (unsigned i = 1; i < u; ++i) s.c[i] = 0;
    for (unsigned i = 1; i < v; ++i) t.c[i] = 0;
    if (u == v) {
      uint64_t lhs = psi_u(R, R.mul(s, t), u);
      if (lhs != (psi_u(R, s, u) ^ psi_u(R, t, u))) rep.psi_additive = false;
    }
    RingElem comm = R.mul(R.mul(R.inverse(s), R.inverse(t)), R.mul(s, t));
    if (u + v <= k - 1) {
      if (!R.in_Su(comm, u + v)) rep.filtration = false;
      uint64_t alpha = s.c[u], beta = t.c[v];
      uint64_t want = F.mul(alpha, F.frob(beta, u)) ^
                      F.mul(beta, F.frob(alpha, v));
      if (comm.c[u + v] != want) rep.commutator_law = false;
    } else if (!(comm == R.one())) {
      rep.filtration = false;  // [S_u, S_v] ⊆ S_{u+v} = 1 past the truncation
    }

    // Conjugation by γ ∈ P scales coefficient u of s ∈ S by γ^{2^u−1}.
    uint64_t gamma = pel[rng() % pel.size()];
    RingElem gs = R.one();
    gs.c[0] = static_cast<uint8_t>(gamma);
    RingElem conj = R.mul(R.mul(R.inverse(gs), s), gs);
    for (unsigned i = 1; i < k; ++i) {
      uint64_t want = F.mul(s.c[i], F.mul(F.inv(gamma), F.frob(gamma, i)));
      if (conj.c[i] != want) rep.coeff_action_law = false;
    }
  }
  return rep;
}

}  // namespace rg
