#include "realgraph/elements.hpp"

#include <sstream>
#include <stdexcept>

#include "realgraph/ffield.hpp"
#include "realgraph/numtheory.hpp"

namespace rg {

// ------------------------------------------------------- permutations ------

PermOps::PermOps(uint32_t n) : n_(n), width_(n <= 256 ? 1 : 2) {
  if (n == 0 || n > 65536) throw std::domain_error("permutation degree out of range");
}

Elem PermOps::encode(const std::vector<uint32_t>& images) const {
  if (images.size() != n_) throw std::domain_error("image list has wrong length");
  std::vector<bool> seen(n_, false);
  Elem e(static_cast<size_t>(n_) * width_, '\0');
  for (uint32_t i = 0; i < n_; ++i) {
    uint32_t v = images[i];
    if (v >= n_ || seen[v]) throw std::domain_error("image list is not a permutation");
    seen[v] = true;
    if (width_ == 1) {
      e[i] = static_cast<char>(v);
    } else {
      e[2 * i] = static_cast<char>(v & 0xff);
      e[2 * i + 1] = static_cast<char>(v >> 8);
    }
  }
  return e;
}

std::vector<uint32_t> PermOps::decode(const Elem& a) const {
  std::vector<uint32_t> out(n_);
  for (uint32_t i = 0; i < n_; ++i) {
    out[i] = width_ == 1 ? static_cast<uint8_t>(a[i])
                         : static_cast<uint32_t>(static_cast<uint8_t>(a[2 * i])) |
                               (static_cast<uint32_t>(static_cast<uint8_t>(a[2 * i + 1])) << 8);
  }
  return out;
}

Elem PermOps::identity() const {
  std::vector<uint32_t> id(n_);
  for (uint32_t i = 0; i < n_; ++i) id[i] = i;
  return encode(id);
}

Elem PermOps::mul(const Elem& a, const Elem& b) const {
  // (a·b)(i) = b(a(i))
  Elem e(a.size(), '\0');
  if (width_ == 1) {
    for (uint32_t i = 0; i < n_; ++i) e[i] = b[static_cast<uint8_t>(a[i])];
  } else {
    for (uint32_t i = 0; i < n_; ++i) {
      uint32_t ai = static_cast<uint32_t>(static_cast<uint8_t>(a[2 * i])) |
                    (static_cast<uint32_t>(static_cast<uint8_t>(a[2 * i + 1])) << 8);
      e[2 * i] = b[2 * ai];
      e[2 * i + 1] = b[2 * ai + 1];
    }
  }
  return e;
}

Elem PermOps::inv(const Elem& a) const {
  Elem e(a.size(), '\0');
  if (width_ == 1) {
    for (uint32_t i = 0; i < n_; ++i) e[static_cast<uint8_t>(a[i])] = static_cast<char>(i);
  } else {
    for (uint32_t i = 0; i < n_; ++i) {
      uint32_t ai = static_cast<uint32_t>(static_cast<uint8_t>(a[2 * i])) |
                    (static_cast<uint32_t>(static_cast<uint8_t>(a[2 * i + 1])) << 8);
      e[2 * ai] = static_cast<char>(i & 0xff);
      e[2 * ai + 1] = static_cast<char>(i >> 8);
    }
  }
  return e;
}

std::string PermOps::show(const Elem& a) const {
  auto img = decode(a);
  std::ostringstream out;
  std::vector<bool> done(n_, false);
  bool any = false;
  for (uint32_t i = 0; i < n_; ++i) {
    if (done[i] || img[i] == i) continue;
    any = true;
    out << '(';
    uint32_t j = i;
    bool first = true;
    do {
      if (!first) out << ' ';
      first = false;
      out << j;
      done[j] = true;
      j = img[j];
    } while (j != i);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Elem perm_from_cycles(const PermOps& ops, const std::vector<std::vector<uint32_t>>& cycles) {
  std::vector<uint32_t> img(ops.degree());
  for (uint32_t i = 0; i < ops.degree(); ++i) img[i] = i;
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= ops.degree()) throw std::domain_error("cycle point out of range");
      img[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return ops.encode(img);
}

// ------------------------------------------------ matrices over GF(p) ------

MatrixOps::MatrixOps(uint32_t p, uint32_t n) : p_(p), n_(n) {
  if (!is_prime(p) || p > 251) throw std::domain_error("matrix field modulus must be a prime < 256");
  if (n == 0 || n > 15) throw std::domain_error("matrix dimension out of range");
}

Elem MatrixOps::identity() const {
  Elem e(static_cast<size_t>(n_) * n_, '\0');
  for (uint32_t i = 0; i < n_; ++i) e[i * n_ + i] = 1;
  return e;
}

Elem MatrixOps::mul(const Elem& a, const Elem& b) const {
  Elem e(static_cast<size_t>(n_) * n_, '\0');
  for (uint32_t i = 0; i < n_; ++i) {
    for (uint32_t j = 0; j < n_; ++j) {
      uint32_t acc = 0;
      for (uint32_t k = 0; k < n_; ++k) {
        acc += static_cast<uint32_t>(static_cast<uint8_t>(a[i * n_ + k])) *
               static_cast<uint8_t>(b[k * n_ + j]);
      }
      e[i * n_ + j] = static_cast<char>(acc % p_);
    }
  }
  return e;
}

std::vector<uint32_t> matrix_inverse_mod_p(const std::vector<uint32_t>& m, uint32_t n, uint32_t p) {
  // Gauss-Jordan on [m | I]
  std::vector<std::vector<uint32_t>> a(n, std::vector<uint32_t>(2 * n, 0));
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) a[i][j] = m[i * n + j] % p;
    a[i][n + i] = 1;
  }
  for (uint32_t c = 0; c < n; ++c) {
    uint32_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw std::domain_error("matrix is singular mod " + std::to_string(p));
    std::swap(a[c], a[piv]);
    uint32_t ic = mod_inverse(a[c][c], p);
    for (uint32_t j = 0; j < 2 * n; ++j) a[c][j] = a[c][j] * ic % p;
    for (uint32_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      uint32_t f = a[r][c];
      for (uint32_t j = 0; j < 2 * n; ++j) a[r][j] = (a[r][j] + (p - f) * a[c][j]) % p;
    }
  }
  std::vector<uint32_t> out(static_cast<size_t>(n) * n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) out[i * n + j] = a[i][n + j];
  return out;
}

Elem MatrixOps::inv(const Elem& a) const {
  std::vector<uint32_t> m(static_cast<size_t>(n_) * n_);
  for (size_t i = 0; i < m.size(); ++i) m[i] = static_cast<uint8_t>(a[i]);
  auto mi = matrix_inverse_mod_p(m, n_, p_);
  Elem e(m.size(), '\0');
  for (size_t i = 0; i < m.size(); ++i) e[i] = static_cast<char>(mi[i]);
  return e;
}

Elem MatrixOps::encode(const std::vector<uint32_t>& row_major) const {
  if (row_major.size() != static_cast<size_t>(n_) * n_) throw std::domain_error("matrix entry list has wrong length");
  Elem e(row_major.size(), '\0');
  for (size_t i = 0; i < row_major.size(); ++i) {
    if (row_major[i] >= p_) throw std::domain_error("matrix entry not reduced mod p");
    e[i] = static_cast<char>(row_major[i]);
  }
  inv(e);  // validates invertibility
  return e;
}

std::string MatrixOps::show(const Elem& a) const {
  std::ostringstream out;
  out << '[';
  for (uint32_t i = 0; i < n_; ++i) {
    if (i) out << ',';
    out << '[';
    for (uint32_t j = 0; j < n_; ++j) {
      if (j) out << ',';
      out << static_cast<uint32_t>(static_cast<uint8_t>(a[i * n_ + j]));
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

// ------------------------------------------------------- affine pairs ------

AffineOps::AffineOps(uint32_t p, uint32_t n) : p_(p), n_(n), mat_(p, n) {}

Elem AffineOps::identity() const {
  Elem e(static_cast<size_t>(n_) + static_cast<size_t>(n_) * n_, '\0');
  for (uint32_t i = 0; i < n_; ++i) e[n_ + i * n_ + i] = 1;
  return e;
}

Elem AffineOps::mul(const Elem& a, const Elem& b) const {
  Elem e(a.size(), '\0');
  // v = v1 + m1·v2
  for (uint32_t i = 0; i < n_; ++i) {
    uint32_t acc = static_cast<uint8_t>(a[i]);
    for (uint32_t k = 0; k < n_; ++k) {
      acc += static_cast<uint32_t>(static_cast<uint8_t>(a[n_ + i * n_ + k])) *
             static_cast<uint8_t>(b[k]);
    }
    e[i] = static_cast<char>(acc % p_);
  }
  // m = m1·m2
  for (uint32_t i = 0; i < n_; ++i) {
    for (uint32_t j = 0; j < n_; ++j) {
      uint32_t acc = 0;
      for (uint32_t k = 0; k < n_; ++k) {
        acc += static_cast<uint32_t>(static_cast<uint8_t>(a[n_ + i * n_ + k])) *
               static_cast<uint8_t>(b[n_ + k * n_ + j]);
      }
      e[n_ + i * n_ + j] = static_cast<char>(acc % p_);
    }
  }
  return e;
}

Elem AffineOps::inv(const Elem& a) const {
  std::vector<uint32_t> m(static_cast<size_t>(n_) * n_);
  for (size_t i = 0; i < m.size(); ++i) m[i] = static_cast<uint8_t>(a[n_ + i]);
  auto mi = matrix_inverse_mod_p(m, n_, p_);
  Elem e(a.size(), '\0');
  // v' = -m^{-1}·v
  for (uint32_t i = 0; i < n_; ++i) {
    uint32_t acc = 0;
    for (uint32_t k = 0; k < n_; ++k) acc += mi[i * n_ + k] * static_cast<uint8_t>(a[k]);
    acc %= p_;
    e[i] = static_cast<char>(acc == 0 ? 0 : p_ - acc);
  }
  for (size_t i = 0; i < mi.size(); ++i) e[n_ + i] = static_cast<char>(mi[i]);
  return e;
}

Elem AffineOps::encode(const std::vector<uint32_t>& v, const std::vector<uint32_t>& m_row_major) const {
  if (v.size() != n_) throw std::domain_error("vector part has wrong length");
  Elem mat = mat_.encode(m_row_major);
  Elem e(static_cast<size_t>(n_) + mat.size(), '\0');
  for (uint32_t i = 0; i < n_; ++i) {
    if (v[i] >= p_) throw std::domain_error("vector entry not reduced mod p");
    e[i] = static_cast<char>(v[i]);
  }
  for (size_t i = 0; i < mat.size(); ++i) e[n_ + i] = mat[i];
  return e;
}

std::string AffineOps::show(const Elem& a) const {
  std::ostringstream out;
  out << "([";
  for (uint32_t i = 0; i < n_; ++i) {
    if (i) out << ',';
    out << static_cast<uint32_t>(static_cast<uint8_t>(a[i]));
  }
  out << "], " << mat_.show(a.substr(n_)) << ')';
  return out.str();
}

}  // namespace rg
