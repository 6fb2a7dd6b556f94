#include "realgraph/group.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <unordered_map>

#include "realgraph/numtheory.hpp"

namespace rg {

size_t IndexSet::count() const {
  size_t c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool IndexSet::subset_of(const IndexSet& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

size_t IndexSet::intersection_count(const IndexSet& o) const {
  size_t c = 0;
  for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
  return c;
}

struct FiniteGroup::Impl {
  OpsPtr ops;
  std::vector<Elem> elems;                         // BFS order, elems[0] = id
  std::unordered_map<Elem, uint32_t> index;
  std::vector<uint32_t> gens;                      // indices, duplicates removed
  std::vector<uint32_t> inverse;                   // eager

  std::vector<std::pair<uint64_t, int>> order_fact;

  mutable std::mutex mu;
  mutable std::vector<uint64_t> elem_order;        // 0 = unknown
  mutable std::unique_ptr<ClassData> class_data;
};

FiniteGroup FiniteGroup::close(OpsPtr ops, const std::vector<Elem>& generators,
                               uint64_t cap) {
  if (!ops) throw std::invalid_argument("close: null element operations");
  if (generators.empty())
    throw std::invalid_argument("close: generator list is empty");

  auto impl = std::make_shared<Impl>();
  impl->ops = ops;
  const Elem id = ops->identity();
  impl->elems.push_back(id);
  impl->index.emplace(id, 0);

  std::vector<Elem> gen_elems;
  for (const Elem& g : generators) {
    if (std::find(gen_elems.begin(), gen_elems.end(), g) == gen_elems.end())
      gen_elems.push_back(g);
  }

  // Breadth-first: multiply each discovered element on the left by every
  // generator.  The queue is the element vector itself.
  for (size_t head = 0; head < impl->elems.size(); ++head) {
    for (const Elem& g : gen_elems) {
      Elem y = ops->mul(g, impl->elems[head]);
      auto [it, fresh] = impl->index.emplace(std::move(y), impl->elems.size());
      if (fresh) {
        impl->elems.push_back(it->first);
        if (impl->elems.size() > cap)
          throw ResourceLimitError(
              "group closure exceeded cap of " + std::to_string(cap) +
                  " elements",
              impl->elems.size());
      }
    }
  }

  impl->gens.reserve(gen_elems.size());
  for (const Elem& g : gen_elems) {
    uint32_t gi = impl->index.at(g);
    if (std::find(impl->gens.begin(), impl->gens.end(), gi) == impl->gens.end())
      impl->gens.push_back(gi);
  }

  impl->inverse.resize(impl->elems.size());
  for (size_t i = 0; i < impl->elems.size(); ++i)
    impl->inverse[i] = impl->index.at(ops->inv(impl->elems[i]));

  impl->order_fact = factorize(impl->elems.size());
  impl->elem_order.assign(impl->elems.size(), 0);
  impl->elem_order[0] = 1;

  FiniteGroup g;
  g.impl_ = std::move(impl);
  return g;
}

size_t FiniteGroup::order() const { return impl_->elems.size(); }
const ElementOps& FiniteGroup::ops() const { return *impl_->ops; }
OpsPtr FiniteGroup::ops_ptr() const { return impl_->ops; }

const Elem& FiniteGroup::element(uint32_t i) const { return impl_->elems[i]; }

std::optional<uint32_t> FiniteGroup::find(const Elem& e) const {
  auto it = impl_->index.find(e);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

uint32_t FiniteGroup::index_of(const Elem& e) const {
  auto it = impl_->index.find(e);
  if (it == impl_->index.end())
    throw std::out_of_range("element does not belong to the group");
  return it->second;
}

uint32_t FiniteGroup::mul(uint32_t a, uint32_t b) const {
  return impl_->index.at(impl_->ops->mul(impl_->elems[a], impl_->elems[b]));
}

uint32_t FiniteGroup::inv(uint32_t a) const { return impl_->inverse[a]; }

uint32_t FiniteGroup::conj(uint32_t x, uint32_t g) const {
  return mul(mul(impl_->inverse[g], x), g);
}

uint32_t FiniteGroup::pow(uint32_t x, uint64_t e) const {
  uint32_t acc = kIdentityIndex;
  uint32_t base = x;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

const std::vector<uint32_t>& FiniteGroup::generators() const {
  return impl_->gens;
}

const std::vector<std::pair<uint64_t, int>>& FiniteGroup::order_factorization()
    const {
  return impl_->order_fact;
}

// Start from o = |G| (so x^o = 1 by Lagrange) and strip each prime factor
// while the power test keeps passing; what remains is the exact order.
uint64_t FiniteGroup::element_order(uint32_t i) const {
  {
    std::lock_guard<std::mutex> lk(impl_->mu);
    if (impl_->elem_order[i]) return impl_->elem_order[i];
  }
  uint64_t o = impl_->elems.size();
  for (const auto& [p, e] : impl_->order_fact) {
    (void)e;
    while (o % p == 0 && pow(i, o / p) == kIdentityIndex) o /= p;
  }
  std::lock_guard<std::mutex> lk(impl_->mu);
  impl_->elem_order[i] = o;
  return o;
}

const ClassData& FiniteGroup::classes() const {
  {
    std::lock_guard<std::mutex> lk(impl_->mu);
    if (impl_->class_data) return *impl_->class_data;
  }

  const size_t n = impl_->elems.size();
  auto data = std::make_unique<ClassData>();
  data->class_of.assign(n, UINT32_MAX);

  // Orbit of each unvisited element under conjugation by the generators.
  std::vector<uint32_t> queue;
  for (uint32_t start = 0; start < n; ++start) {
    if (data->class_of[start] != UINT32_MAX) continue;
    const uint32_t cid = static_cast<uint32_t>(data->classes.size());
    queue.clear();
    queue.push_back(start);
    data->class_of[start] = cid;
    for (size_t head = 0; head < queue.size(); ++head) {
      for (uint32_t g : impl_->gens) {
        uint32_t y = conj(queue[head], g);
        if (data->class_of[y] == UINT32_MAX) {
          data->class_of[y] = cid;
          queue.push_back(y);
        }
      }
    }
    ConjugacyClass cls;
    cls.members = queue;
    std::sort(cls.members.begin(), cls.members.end());
    cls.rep = *std::min_element(
        cls.members.begin(), cls.members.end(),
        [&](uint32_t a, uint32_t b) { return impl_->elems[a] < impl_->elems[b]; });
    cls.order = element_order(cls.rep);
    cls.real = data->class_of[impl_->inverse[cls.rep]] == cid;
    data->classes.push_back(std::move(cls));
  }

  std::sort(data->classes.begin(), data->classes.end(),
            [&](const ConjugacyClass& a, const ConjugacyClass& b) {
              if (a.order != b.order) return a.order < b.order;
              if (a.members.size() != b.members.size())
                return a.members.size() < b.members.size();
              return impl_->elems[a.rep] < impl_->elems[b.rep];
            });
  for (uint32_t cid = 0; cid < data->classes.size(); ++cid)
    for (uint32_t m : data->classes[cid].members) data->class_of[m] = cid;

  std::lock_guard<std::mutex> lk(impl_->mu);
  if (!impl_->class_data) impl_->class_data = std::move(data);
  return *impl_->class_data;
}

bool FiniteGroup::is_real(uint32_t i) const {
  const ClassData& cd = classes();
  return cd.classes[cd.class_of[i]].real;
}

std::vector<uint32_t> FiniteGroup::inverting_elements(uint32_t x) const {
  std::vector<uint32_t> out;
  const uint32_t xi = impl_->inverse[x];
  for (uint32_t g = 0; g < impl_->elems.size(); ++g)
    if (conj(x, g) == xi) out.push_back(g);
  return out;
}

}  // namespace rg
