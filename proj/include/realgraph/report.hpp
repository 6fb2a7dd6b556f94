#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "realgraph/group.hpp"
#include "realgraph/prime_graph.hpp"

// The per-group summary behind `report`: order, spectra, both prime graphs,
// solvability flags and structural subgroup orders.

namespace rg {

struct Report {
  uint64_t order = 0;
  std::vector<uint64_t> primes;  // prime divisors of the order
  RealSpectrum spectrum;
  PrimeGraph full_graph;
  PrimeGraph real_graph;
  size_t full_components = 0;
  size_t real_components = 0;
  bool solvable = false;
  bool nilpotent = false;
  bool p_holds = false;
  bool r_holds = false;
  uint64_t center_order = 0;
  uint64_t fitting_order = 0;
  uint64_t o2_order = 0;
  uint64_t o2prime_order = 0;
  std::vector<uint64_t> derived_orders;  // full derived series, |G| first
};

Report make_report(const FiniteGroup& g);

// One "key: value" line per field; lists as [1,2,3] without spaces.
std::string render_text(const Report& r);

// Compact JSON with sorted keys.
std::string render_json(const Report& r);

}  // namespace rg
