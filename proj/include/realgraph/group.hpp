#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "realgraph/elements.hpp"

// Finite group engine.  A FiniteGroup is an immutable, fully enumerated group:
// elements indexed 0..n-1 in breadth-first discovery order (identity = 0),
// with a hash index from encodings back to indices.  Conjugacy classes and
// element orders are computed lazily and cached.  FiniteGroup is a cheap
// shared handle, so subgroups and quotients can hold their parent by value.

namespace rg {

inline constexpr uint64_t kDefaultClosureCap = 1ull << 21;

// Thrown when an enumeration or search exceeds its configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, uint64_t partial)
      : std::runtime_error(what), partial_size(partial) {}
  uint64_t partial_size;
};

// Fixed-size bitset over element indices.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  bool test(uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(uint32_t i) { w_[i >> 6] |= 1ull << (i & 63); }
  size_t size() const { return n_; }
  size_t count() const;
  bool subset_of(const IndexSet& o) const;
  size_t intersection_count(const IndexSet& o) const;
  bool operator==(const IndexSet& o) const { return w_ == o.w_; }

 private:
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

struct ConjugacyClass {
  uint32_t rep;                   // member with minimal encoding
  std::vector<uint32_t> members;  // ascending element indices
  uint64_t order;                 // common element order
  bool real;                      // inverse of rep lies in the class
};

struct ClassData {
  std::vector<ConjugacyClass> classes;  // sorted by (order, size, rep encoding)
  std::vector<uint32_t> class_of;       // element index -> class id
};

class FiniteGroup {
 public:
  // Breadth-first closure under left multiplication by the generators.
  // Deterministic; throws ResourceLimitError past `cap` elements.
  static FiniteGroup close(OpsPtr ops, const std::vector<Elem>& generators,
                           uint64_t cap = kDefaultClosureCap);

  size_t order() const;
  const ElementOps& ops() const;
  OpsPtr ops_ptr() const;

  const Elem& element(uint32_t i) const;
  std::optional<uint32_t> find(const Elem& e) const;
  uint32_t index_of(const Elem& e) const;  // throws std::out_of_range
  bool contains(const Elem& e) const { return find(e).has_value(); }

  static constexpr uint32_t kIdentityIndex = 0;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t conj(uint32_t x, uint32_t g) const;  // g^{-1} x g
  uint32_t pow(uint32_t x, uint64_t e) const;

  const std::vector<uint32_t>& generators() const;

  uint64_t element_order(uint32_t i) const;  // memoized
  const ClassData& classes() const;          // lazy, cached
  uint32_t class_of(uint32_t i) const { return classes().class_of[i]; }
  bool is_real(uint32_t i) const;

  // All g with g^{-1} x g = x^{-1}, ascending; empty iff x is not real.
  std::vector<uint32_t> inverting_elements(uint32_t x) const;

  const std::vector<std::pair<uint64_t, int>>& order_factorization() const;

  std::string show(uint32_t i) const { return ops().show(element(i)); }

  bool same_group(const FiniteGroup& o) const { return impl_ == o.impl_; }

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

}  // namespace rg
