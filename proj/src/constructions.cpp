#include "realgraph/constructions.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "realgraph/elements.hpp"
#include "realgraph/twisted.hpp"

namespace rg {

namespace {

constexpr uint64_t kMaxNamedParameter = 1u << 16;

FiniteGroup close_perms(uint32_t n, const std::vector<std::vector<uint32_t>>& image_lists,
                        uint64_t cap) {
  auto ops = std::make_shared<PermOps>(n);
  std::vector<Elem> gens;
  gens.reserve(image_lists.size());
  for (const auto& images : image_lists) gens.push_back(ops->encode(images));
  return FiniteGroup::close(ops, gens, cap);
}

std::vector<uint32_t> rotation_images(uint32_t n) {
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return img;
}

std::vector<uint32_t> reflection_images(uint32_t n) {
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; ++i) img[i] = (n - i) % n;
  return img;
}

std::vector<uint32_t> identity_matrix(uint32_t n) {
  std::vector<uint32_t> m(static_cast<size_t>(n) * n, 0);
  for (uint32_t i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1;
  return m;
}

}  // namespace

FiniteGroup make_named(const std::string& name, uint64_t parameter,
                       uint64_t cap) {
  if (name == "cyclic") {
    if (parameter < 1 || parameter > kMaxNamedParameter)
      throw std::invalid_argument("make_named: cyclic parameter must be in [1, 65536]");
    const uint32_t n = static_cast<uint32_t>(parameter);
    return close_perms(n, {rotation_images(n)}, cap);
  }
  if (name == "dihedral") {
    if (parameter < 3 || parameter > kMaxNamedParameter)
      throw std::invalid_argument("make_named: dihedral parameter must be in [3, 65536]");
    const uint32_t n = static_cast<uint32_t>(parameter);
    return close_perms(n, {rotation_images(n), reflection_images(n)}, cap);
  }
  if (name == "symmetric") {
    if (parameter < 1 || parameter > 6)
      throw std::invalid_argument("make_named: symmetric parameter must be in [1, 6]");
    const uint32_t n = static_cast<uint32_t>(parameter);
    std::vector<std::vector<uint32_t>> gens{rotation_images(n)};
    if (n >= 2) {
      auto transposition = rotation_images(n);
      for (uint32_t i = 0; i < n; ++i) transposition[i] = i;
      transposition[0] = 1;
      transposition[1] = 0;
      gens.push_back(transposition);
    }
    return close_perms(n, gens, cap);
  }
  if (name == "quaternion8" || (name == "quaternion" && parameter == 8)) {
    // i = [[0,-1],[1,0]], j = [[1,1],[1,-1]] inside SL(2,3).
    auto ops = std::make_shared<MatrixOps>(3, 2);
    std::vector<Elem> gens = {ops->encode({0, 2, 1, 0}), ops->encode({1, 1, 1, 2})};
    return FiniteGroup::close(ops, gens, cap);
  }
  throw std::invalid_argument("make_named: unknown group name \"" + name + "\"");
}

FiniteGroup make_perm_group(uint32_t n, const std::vector<std::vector<uint32_t>>& gens,
                            uint64_t cap) {
  if (n == 0) throw std::invalid_argument("make_perm_group: degree must be positive");
  return close_perms(n, gens, cap);
}

FiniteGroup make_matrix_group(uint32_t p, uint32_t n,
                              const std::vector<std::vector<uint32_t>>& gens, uint64_t cap) {
  auto ops = std::make_shared<MatrixOps>(p, n);
  std::vector<Elem> egens;
  egens.reserve(gens.size());
  for (const auto& m : gens) egens.push_back(ops->encode(m));
  return FiniteGroup::close(ops, egens, cap);
}

FiniteGroup make_semidirect(uint32_t p, uint32_t n,
                            const std::vector<std::vector<uint32_t>>& action_gens,
                            uint64_t cap) {
  auto ops = std::make_shared<AffineOps>(p, n);
  const std::vector<uint32_t> id = identity_matrix(n);
  std::vector<Elem> gens;
  gens.reserve(n + action_gens.size());
  for (uint32_t i = 0; i < n; ++i) {
    std::vector<uint32_t> v(n, 0);
    v[i] = 1;
    gens.push_back(ops->encode(v, id));
  }
  const std::vector<uint32_t> zero(n, 0);
  for (const auto& m : action_gens) gens.push_back(ops->encode(zero, m));
  return FiniteGroup::close(ops, gens, cap);
}

FiniteGroup make_g150(uint64_t cap) {
  // GF(5)^2 with S3 acting through the swap matrix and the companion matrix
  // of x^2 + x + 1.
  return make_semidirect(5, 2, {{0, 1, 1, 0}, {0, 4, 1, 4}}, cap);
}

FiniteGroup make_h199650(uint64_t cap) {
  const std::vector<std::vector<uint32_t>> mats = {
      {0, 0, 1, 0, 1, 0, 1, 0, 0},
      {0, 0, 1, 1, 0, 0, 0, 1, 0},
      {9, 0, 0, 0, 3, 0, 0, 0, 9},
      {5, 0, 0, 0, 9, 0, 0, 0, 1},
  };
  const FiniteGroup acting = make_matrix_group(11, 3, mats, cap);
  if (acting.order() != 150)
    throw std::logic_error("make_h199650: acting matrix group has order " +
                           std::to_string(acting.order()) + ", expected 150");
  return make_semidirect(11, 3, mats, cap);
}

FiniteGroup build_group(const GroupSpec& spec, uint64_t cap) {
  switch (spec.tag) {
    case GroupSpec::Tag::named:
      return make_named(spec.name, spec.parameter, cap);
    case GroupSpec::Tag::permutation:
      return make_perm_group(spec.n, spec.perm_gens, cap);
    case GroupSpec::Tag::matrix:
      return make_matrix_group(spec.p, spec.n, spec.mat_gens, cap);
    case GroupSpec::Tag::semidirect:
      return make_semidirect(spec.p, spec.n, spec.mat_gens, cap);
    case GroupSpec::Tag::paper_g150:
      return make_g150(cap);
    case GroupSpec::Tag::paper_h199650:
      return make_h199650(cap);
    case GroupSpec::Tag::twisted:
      return make_twisted_group(spec.k, cap);
  }
  throw std::logic_error("build_group: corrupt GroupSpec tag");
}

namespace {

// GAP-style cycle form, 1-based: "(1 2 3)(4 5)", identity "()".
std::string gap_cycles(const PermOps& ops, const Elem& a) {
  const auto img = ops.decode(a);
  std::ostringstream out;
  std::vector<bool> done(img.size(), false);
  bool any = false;
  for (uint32_t i = 0; i < img.size(); ++i) {
    if (done[i] || img[i] == i) continue;
    any = true;
    out << '(';
    uint32_t j = i;
    bool first = true;
    do {
      if (!first) out << ' ';
      first = false;
      out << j + 1;
      done[j] = true;
      j = img[j];
    } while (j != i);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

void write_mat_line(std::ostringstream& out, uint32_t p, uint32_t n,
                    const std::vector<uint32_t>& row_major) {
  out << "mat p=" << p << " rows=[";
  for (uint32_t r = 0; r < n; ++r) {
    if (r) out << ',';
    out << '[';
    for (uint32_t c = 0; c < n; ++c) {
      if (c) out << ',';
      out << row_major[static_cast<size_t>(r) * n + c];
    }
    out << ']';
  }
  out << "]\n";
}

// Faithful GF(2) matrix of (s, γ, j) acting on R by r ↦ s·γ·σ^j(r)·γ⁻¹,
// in the basis (bit b of coefficient i) ↦ index i·k + b, column convention.
std::vector<uint32_t> twisted_matrix(const TwistedOps& ops, const Elem& e) {
  const TwistedRing& R = ops.ring();
  const unsigned k = R.k();
  const unsigned dim = k * k;
  RingElem s;
  uint64_t gamma = 0;
  unsigned j = 0;
  ops.decode(e, &s, &gamma, &j);
  std::vector<uint64_t> gamma_coeffs(k, 0);
  gamma_coeffs[0] = gamma;
  const RingElem gc = R.from_coeffs(gamma_coeffs);
  const RingElem gci = R.inverse(gc);
  std::vector<uint32_t> rows(static_cast<size_t>(dim) * dim, 0);
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned b = 0; b < k; ++b) {
      RingElem basis;
      basis.c[i] = static_cast<uint8_t>(1u << b);
      const RingElem image = R.mul(s, R.mul(gc, R.mul(R.frob(basis, j), gci)));
      const unsigned col = i * k + b;
      for (unsigned i2 = 0; i2 < k; ++i2)
        for (unsigned b2 = 0; b2 < k; ++b2)
          if (image.c[i2] >> b2 & 1) rows[static_cast<size_t>(i2 * k + b2) * dim + col] = 1;
    }
  }
  return rows;
}

}  // namespace

std::string export_gap(const GroupSpec& spec, uint64_t cap) {
  const FiniteGroup g = build_group(spec, cap);
  std::ostringstream out;
  out << "order: " << g.order() << "\n";
  const std::string kind = g.ops().kind();
  if (kind == "perm") {
    const auto& ops = dynamic_cast<const PermOps&>(g.ops());
    for (uint32_t gi : g.generators())
      out << "perm: " << gap_cycles(ops, g.element(gi)) << "\n";
  } else if (kind == "matrix") {
    const auto& ops = dynamic_cast<const MatrixOps&>(g.ops());
    const uint32_t n = ops.n();
    for (uint32_t gi : g.generators()) {
      const Elem& e = g.element(gi);
      std::vector<uint32_t> rows(static_cast<size_t>(n) * n);
      for (size_t idx = 0; idx < rows.size(); ++idx)
        rows[idx] = static_cast<uint8_t>(e[idx]);
      write_mat_line(out, ops.p(), n, rows);
    }
  } else if (kind == "affine") {
    // Embed (v, m) as the (n+1) x (n+1) block matrix [[m, v], [0, 1]].
    const auto& ops = dynamic_cast<const AffineOps&>(g.ops());
    const uint32_t n = ops.n();
    for (uint32_t gi : g.generators()) {
      const Elem& e = g.element(gi);
      std::vector<uint32_t> rows(static_cast<size_t>(n + 1) * (n + 1), 0);
      for (uint32_t r = 0; r < n; ++r) {
        for (uint32_t c = 0; c < n; ++c)
          rows[static_cast<size_t>(r) * (n + 1) + c] = static_cast<uint8_t>(e[n + r * n + c]);
        rows[static_cast<size_t>(r) * (n + 1) + n] = static_cast<uint8_t>(e[r]);
      }
      rows[static_cast<size_t>(n) * (n + 1) + n] = 1;
      write_mat_line(out, ops.p(), n + 1, rows);
    }
  } else {
    const auto& ops = dynamic_cast<const TwistedOps&>(g.ops());
    const unsigned dim = ops.ring().k() * ops.ring().k();
    for (uint32_t gi : g.generators())
      write_mat_line(out, 2, dim, twisted_matrix(ops, g.element(gi)));
  }
  return out.str();
}

}  // namespace rg
