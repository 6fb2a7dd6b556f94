#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "realgraph/group.hpp"

// Real-element spectra and the two prime graphs: the Gruenberg–Kegel graph
// Γ(G) on the prime divisors of |G|, and its real-element variant Γ_ℝ(G)
// whose vertices are the primes occurring as orders of real elements.

namespace rg {

struct RealSpectrum {
  std::vector<uint64_t> orders;  // orders of real elements, ascending; 1 ∈ orders
  std::vector<uint64_t> primes;  // π(ω_ℝ(G)), ascending
};

struct PrimeGraph {
  enum class Kind { full, real };
  Kind kind = Kind::full;
  std::vector<uint64_t> vertices;                    // ascending
  std::vector<std::pair<uint64_t, uint64_t>> edges;  // p < q, lexicographic
};

struct ComponentPartition {
  std::vector<std::vector<uint64_t>> blocks;  // ordered by smallest vertex
  size_t count() const { return blocks.size(); }
};

RealSpectrum real_spectrum(const FiniteGroup& g);

// Vertices: prime divisors of |G|.  Edge {p,q} iff some element order is
// divisible by pq.
PrimeGraph prime_graph(const FiniteGroup& g);

// Vertices: primes dividing the order of a real element.  Edge {p,q} iff some
// real element's order is divisible by pq.  (Powers of real elements are
// real, so divisibility by pq yields a real element of order exactly pq.)
PrimeGraph real_prime_graph(const FiniteGroup& g);

ComponentPartition components(const PrimeGraph& g);

// "graph G { 2; 3; 5; 2 -- 3; }" — one line, vertices then edges, no newline.
std::string graph_dot(const PrimeGraph& g);

// {"vertices":[...],"edges":[[p,q],...],"components":[[...],...]} — compact,
// keys in that order, no newline.
std::string graph_json(const PrimeGraph& g);

}  // namespace rg
