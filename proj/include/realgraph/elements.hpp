#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

// Group elements are canonical byte strings; an ElementOps object interprets
// them.  Encodings are injective per group and fixed-length, so equality and
// deterministic ordering are plain string comparisons.  Keeping elements
// type-erased lets one engine handle permutation, matrix, affine, twisted and
// quotient groups uniformly.

namespace rg {

using Elem = std::string;

class ElementOps {
 public:
  virtual ~ElementOps() = default;
  virtual Elem identity() const = 0;
  virtual Elem mul(const Elem& a, const Elem& b) const = 0;
  virtual Elem inv(const Elem& a) const = 0;
  virtual std::string show(const Elem& a) const = 0;  // human-readable form
  virtual std::string kind() const = 0;               // "perm", "matrix", ...
};

using OpsPtr = std::shared_ptr<const ElementOps>;

// ------------------------------------------------------- permutations ------

// Permutations on points 0..n-1; encoding is the image list, one byte per
// point for n <= 256 and two little-endian bytes otherwise.
class PermOps : public ElementOps {
 public:
  explicit PermOps(uint32_t n);
  Elem identity() const override;
  Elem mul(const Elem& a, const Elem& b) const override;  // apply a, then b
  Elem inv(const Elem& a) const override;
  std::string show(const Elem& a) const override;  // cycle notation
  std::string kind() const override { return "perm"; }

  uint32_t degree() const { return n_; }
  Elem encode(const std::vector<uint32_t>& images) const;
  std::vector<uint32_t> decode(const Elem& a) const;

 private:
  uint32_t n_;
  unsigned width_;
};

// Builds the permutation mapping given in cycle form, e.g. {{0,1,2},{3,4}}.
Elem perm_from_cycles(const PermOps& ops, const std::vector<std::vector<uint32_t>>& cycles);

// ------------------------------------------------ matrices over GF(p) ------

// Invertible n x n matrices over GF(p), p < 256 prime; encoding is the
// row-major entry list, one byte per entry.
class MatrixOps : public ElementOps {
 public:
  MatrixOps(uint32_t p, uint32_t n);
  Elem identity() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;  // throws on singular input
  std::string show(const Elem& a) const override;
  std::string kind() const override { return "matrix"; }

  uint32_t p() const { return p_; }
  uint32_t n() const { return n_; }
  // Validates entries < p and invertibility.
  Elem encode(const std::vector<uint32_t>& row_major) const;

 private:
  uint32_t p_, n_;
};

// --------------------------- affine pairs (v, m) for V ⋊ <matrices> --------

// Elements (v, m) with v in GF(p)^n and m invertible; the product is
// (v1, m1)(v2, m2) = (v1 + m1·v2, m1·m2).  Encoding: v bytes then m row-major.
class AffineOps : public ElementOps {
 public:
  AffineOps(uint32_t p, uint32_t n);
  Elem identity() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  std::string show(const Elem& a) const override;
  std::string kind() const override { return "affine"; }

  uint32_t p() const { return p_; }
  uint32_t n() const { return n_; }
  Elem encode(const std::vector<uint32_t>& v, const std::vector<uint32_t>& m_row_major) const;

 private:
  uint32_t p_, n_;
  MatrixOps mat_;
};

// Row-major matrix inverse over GF(p); throws std::domain_error if singular.
std::vector<uint32_t> matrix_inverse_mod_p(const std::vector<uint32_t>& m, uint32_t n, uint32_t p);

}  // namespace rg
