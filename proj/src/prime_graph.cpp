#include "realgraph/prime_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "realgraph/numtheory.hpp"

#include "json.hpp"

namespace rg {

namespace {

// Distinct element orders of g, restricted to real classes when real_only.
std::vector<uint64_t> class_orders(const FiniteGroup& g, bool real_only) {
  std::set<uint64_t> orders;
  for (const ConjugacyClass& c : g.classes().classes)
    if (!real_only || c.real) orders.insert(c.order);
  return {orders.begin(), orders.end()};
}

PrimeGraph graph_from(const std::vector<uint64_t>& vertices,
                      const std::vector<uint64_t>& orders, PrimeGraph::Kind kind) {
  PrimeGraph out;
  out.kind = kind;
  out.vertices = vertices;
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      const uint64_t pq = vertices[i] * vertices[j];
      for (uint64_t o : orders) {
        if (o % pq == 0) {
          out.edges.emplace_back(vertices[i], vertices[j]);
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace

RealSpectrum real_spectrum(const FiniteGroup& g) {
  RealSpectrum spec;
  spec.orders = class_orders(g, /*real_only=*/true);
  std::set<uint64_t> primes;
  for (uint64_t o : spec.orders)
    for (uint64_t p : prime_divisors(o)) primes.insert(p);
  spec.primes.assign(primes.begin(), primes.end());
  return spec;
}

PrimeGraph prime_graph(const FiniteGroup& g) {
  return graph_from(prime_divisors(g.order()), class_orders(g, false),
                    PrimeGraph::Kind::full);
}

PrimeGraph real_prime_graph(const FiniteGroup& g) {
  const RealSpectrum spec = real_spectrum(g);
  return graph_from(spec.primes, spec.orders, PrimeGraph::Kind::real);
}

ComponentPartition components(const PrimeGraph& g) {
  const size_t n = g.vertices.size();
  std::vector<size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](size_t v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  auto vertex_index = [&](uint64_t p) {
    return static_cast<size_t>(
        std::lower_bound(g.vertices.begin(), g.vertices.end(), p) - g.vertices.begin());
  };
  for (const auto& [p, q] : g.edges) {
    const size_t a = find(vertex_index(p)), b = find(vertex_index(q));
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  // Vertices ascend, so grouping by root in one ascending sweep orders the
  // blocks by smallest member.
  ComponentPartition out;
  std::vector<int> block_of(n, -1);
  for (size_t v = 0; v < n; ++v) {
    const size_t r = find(v);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<int>(out.blocks.size());
      out.blocks.emplace_back();
    }
    out.blocks[block_of[r]].push_back(g.vertices[v]);
  }
  return out;
}

std::string graph_dot(const PrimeGraph& g) {
  std::ostringstream out;
  out << "graph G {";
  for (uint64_t v : g.vertices) out << ' ' << v << ';';
  for (const auto& [p, q] : g.edges) out << ' ' << p << " -- " << q << ';';
  out << " }";
  return out.str();
}

std::string graph_json(const PrimeGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertices;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [p, q] : g.edges) j["edges"].push_back({p, q});
  j["components"] = components(g).blocks;
  return j.dump();
}

}  // namespace rg
