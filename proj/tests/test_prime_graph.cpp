#include "doctest.h"
#include "realgraph/constructions.hpp"
#include "realgraph/numtheory.hpp"
#include "realgraph/prime_graph.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "json.hpp"

using namespace rg;

namespace {

// Direct per-element scan of the spectra and adjacency.
std::set<uint64_t> brute_orders(const FiniteGroup& g, bool real_only) {
  std::set<uint64_t> out;
  for (uint32_t i = 0; i < g.order(); ++i)
    if (!real_only || g.is_real(i)) out.insert(g.element_order(i));
  return out;
}

std::set<std::pair<uint64_t, uint64_t>> brute_edges(const FiniteGroup& g,
                                                    bool real_only) {
  std::set<std::pair<uint64_t, uint64_t>> out;
  for (uint64_t o : brute_orders(g, real_only)) {
    const auto ps = prime_divisors(o);
    for (size_t i = 0; i < ps.size(); ++i)
      for (size_t j = i + 1; j < ps.size(); ++j) out.insert({ps[i], ps[j]});
  }
  return out;
}

}  // namespace

TEST_CASE("real spectrum against the element scan") {
  for (FiniteGroup g : {make_named("cyclic", 6), make_named("dihedral", 6),
                        make_named("symmetric", 4), make_named("quaternion8", 0),
                        make_g150()}) {
    RealSpectrum s = real_spectrum(g);
    std::set<uint64_t> orders = brute_orders(g, true);
    CHECK(s.orders == std::vector<uint64_t>(orders.begin(), orders.end()));
    std::set<uint64_t> primes;
    for (uint64_t o : orders)
      for (uint64_t p : prime_divisors(o)) primes.insert(p);
    CHECK(s.primes == std::vector<uint64_t>(primes.begin(), primes.end()));
  }
  // only the identity and the involution of a cyclic group are real
  CHECK(real_spectrum(make_named("cyclic", 6)).orders == std::vector<uint64_t>{1, 2});
  CHECK(real_spectrum(make_named("cyclic", 9)).orders == std::vector<uint64_t>{1});
  // dihedral groups are ambivalent: every order shows up
  CHECK(real_spectrum(make_named("dihedral", 6)).orders ==
        std::vector<uint64_t>{1, 2, 3, 6});
}

TEST_CASE("both graphs against the element scan") {
  for (FiniteGroup g : {make_named("cyclic", 30), make_named("dihedral", 6),
                        make_named("symmetric", 4), make_g150()}) {
    PrimeGraph full = prime_graph(g);
    CHECK(full.kind == PrimeGraph::Kind::full);
    CHECK(full.vertices == prime_divisors(g.order()));
    std::set<std::pair<uint64_t, uint64_t>> expect = brute_edges(g, false);
    CHECK(full.edges == std::vector<std::pair<uint64_t, uint64_t>>(expect.begin(),
                                                                   expect.end()));

    PrimeGraph real = real_prime_graph(g);
    CHECK(real.kind == PrimeGraph::Kind::real);
    CHECK(real.vertices == real_spectrum(g).primes);
    std::set<std::pair<uint64_t, uint64_t>> rexpect = brute_edges(g, true);
    CHECK(real.edges == std::vector<std::pair<uint64_t, uint64_t>>(rexpect.begin(),
                                                                   rexpect.end()));
  }
}

TEST_CASE("connected components with ordered blocks") {
  PrimeGraph g;
  g.vertices = {2, 3, 5, 7};
  SUBCASE("edgeless") {
    ComponentPartition parts = components(g);
    CHECK(parts.count() == 4);
    CHECK(parts.blocks == std::vector<std::vector<uint64_t>>{{2}, {3}, {5}, {7}});
  }
  SUBCASE("one chain") {
    g.edges = {{2, 5}, {5, 7}};
    ComponentPartition parts = components(g);
    CHECK(parts.count() == 2);
    CHECK(parts.blocks == std::vector<std::vector<uint64_t>>{{2, 5, 7}, {3}});
  }
  SUBCASE("complete") {
    g.edges = {{2, 3}, {2, 5}, {2, 7}, {3, 5}, {3, 7}, {5, 7}};
    CHECK(components(g).count() == 1);
  }
  CHECK(components(PrimeGraph{}).count() == 0);
}

TEST_CASE("DOT rendering is exact") {
  CHECK(graph_dot(prime_graph(make_named("cyclic", 6))) ==
        "graph G { 2; 3; 2 -- 3; }");
  CHECK(graph_dot(real_prime_graph(make_named("cyclic", 6))) == "graph G { 2; }");
  CHECK(graph_dot(prime_graph(make_named("cyclic", 30))) ==
        "graph G { 2; 3; 5; 2 -- 3; 2 -- 5; 3 -- 5; }");
  CHECK(graph_dot(real_prime_graph(make_g150())) == "graph G { 2; 3; 5; }");
  CHECK(graph_dot(PrimeGraph{}) == "graph G { }");
}

TEST_CASE("JSON rendering is exact and round-trips") {
  const std::string text = graph_json(prime_graph(make_named("cyclic", 6)));
  CHECK(text == R"({"vertices":[2,3],"edges":[[2,3]],"components":[[2,3]]})");
  CHECK(graph_json(real_prime_graph(make_g150())) ==
        R"({"vertices":[2,3,5],"edges":[],"components":[[2],[3],[5]]})");

  // parse(emit(x)) = x, and re-emission is byte-identical
  auto parsed = nlohmann::ordered_json::parse(text);
  CHECK(parsed.dump() == text);
  CHECK(parsed["vertices"] == std::vector<uint64_t>{2, 3});
  CHECK(parsed["edges"][0] == std::vector<uint64_t>{2, 3});
}
