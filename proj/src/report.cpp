#include "realgraph/report.hpp"

#include <sstream>

#include "realgraph/claims.hpp"
#include "realgraph/numtheory.hpp"
#include "realgraph/subgroup_ops.hpp"

#include "json.hpp"

namespace rg {

namespace {

std::string fmt_list(const std::vector<uint64_t>& xs) {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
  out << ']';
  return out.str();
}

const char* fmt_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

Report make_report(const FiniteGroup& g) {
  Report r;
  r.order = g.order();
  r.primes = prime_divisors(g.order());
  r.spectrum = real_spectrum(g);
  r.full_graph = prime_graph(g);
  r.real_graph = real_prime_graph(g);
  r.full_components = components(r.full_graph).count();
  r.real_components = components(r.real_graph).count();
  r.solvable = is_solvable(g);
  r.nilpotent = is_nilpotent(g);
  r.p_holds = satisfies_P(g).holds;
  r.r_holds = satisfies_R(g).holds;
  r.center_order = center(g).order();
  r.fitting_order = fitting(g).order();
  r.o2_order = p_core(g, 2).order();
  r.o2prime_order = o2prime(g).order();
  for (const Subgroup& term : derived_series(g)) r.derived_orders.push_back(term.order());
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "order: " << r.order << "\n";
  out << "primes: " << fmt_list(r.primes) << "\n";
  out << "real_orders: " << fmt_list(r.spectrum.orders) << "\n";
  out << "real_primes: " << fmt_list(r.spectrum.primes) << "\n";
  out << "full_graph: " << graph_dot(r.full_graph) << "\n";
  out << "full_components: " << r.full_components << "\n";
  out << "real_graph: " << graph_dot(r.real_graph) << "\n";
  out << "real_components: " << r.real_components << "\n";
  out << "solvable: " << fmt_bool(r.solvable) << "\n";
  out << "nilpotent: " << fmt_bool(r.nilpotent) << "\n";
  out << "satisfies_P: " << fmt_bool(r.p_holds) << "\n";
  out << "satisfies_R: " << fmt_bool(r.r_holds) << "\n";
  out << "center_order: " << r.center_order << "\n";
  out << "fitting_order: " << r.fitting_order << "\n";
  out << "o2_order: " << r.o2_order << "\n";
  out << "o2prime_order: " << r.o2prime_order << "\n";
  out << "derived_orders: " << fmt_list(r.derived_orders) << "\n";
  return out.str();
}

std::string render_json(const Report& r) {
  auto graph = [](const PrimeGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices;
    j["edges"] = nlohmann::json::array();
    for (const auto& [p, q] : g.edges) j["edges"].push_back({p, q});
    j["components"] = components(g).blocks;
    return j;
  };
  nlohmann::json j;
  j["order"] = r.order;
  j["primes"] = r.primes;
  j["real_orders"] = r.spectrum.orders;
  j["real_primes"] = r.spectrum.primes;
  j["full_graph"] = graph(r.full_graph);
  j["full_components"] = r.full_components;
  j["real_graph"] = graph(r.real_graph);
  j["real_components"] = r.real_components;
  j["solvable"] = r.solvable;
  j["nilpotent"] = r.nilpotent;
  j["satisfies_P"] = r.p_holds;
  j["satisfies_R"] = r.r_holds;
  j["center_order"] = r.center_order;
  j["fitting_order"] = r.fitting_order;
  j["o2_order"] = r.o2_order;
  j["o2prime_order"] = r.o2prime_order;
  j["derived_orders"] = r.derived_orders;
  return j.dump();
}

}  // namespace rg
