#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "realgraph/constructions.hpp"
#include "realgraph/prime_graph.hpp"
#include "realgraph/report.hpp"
#include "realgraph/spec_parse.hpp"
#include "realgraph/verify.hpp"

namespace {

// Exit codes: 0 success, 1 claim failure, 2 usage error, 3 resource cap.
constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

uint64_t parse_seed(const std::string& text) {
  try {
    size_t pos = 0;
    const uint64_t value = std::stoull(text, &pos, 16);
    if (pos == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("--seed: '" + text + "' is not a hex number");
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ','))
    if (!part.empty()) out.push_back(part);
  return out;
}

int cmd_report(const std::string& spec_text, bool json, uint64_t cap) {
  const rg::GroupSpec spec = rg::parse_spec_string(spec_text);
  const rg::FiniteGroup g = rg::build_group(spec, cap);
  const rg::Report r = rg::make_report(g);
  if (json)
    std::cout << rg::render_json(r) << "\n";
  else
    std::cout << rg::render_text(r);
  return kExitOk;
}

int cmd_graph(const std::string& spec_text, bool full, bool json, uint64_t cap) {
  const rg::GroupSpec spec = rg::parse_spec_string(spec_text);
  const rg::FiniteGroup g = rg::build_group(spec, cap);
  const rg::PrimeGraph graph = full ? rg::prime_graph(g) : rg::real_prime_graph(g);
  std::cout << (json ? rg::graph_json(graph) : rg::graph_dot(graph)) << "\n";
  return kExitOk;
}

int cmd_verify_paper(const std::string& only, uint64_t cap, uint64_t seed) {
  rg::VerifyOptions opts;
  opts.cap = cap;
  opts.seed = seed;
  opts.only = split_commas(only);
  const int failures = rg::run_verify(opts, std::cout);
  return failures == 0 ? kExitOk : kExitClaimFailure;
}

int cmd_export_gap(const std::string& spec_text, uint64_t cap) {
  const rg::GroupSpec spec = rg::parse_spec_string(spec_text);
  std::cout << rg::export_gap(spec, cap);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real prime graphs of finite groups: reports, graph emission, "
               "claim verification, and generator export"};
  app.require_subcommand(1);

  uint64_t cap = rg::kDefaultClosureCap;
  std::string seed_text = "C0FFEE";
  app.add_option("--cap", cap, "Enumeration cap (elements)")->capture_default_str();
  app.add_option("--seed", seed_text, "Seed for sampled invariants (hex)")
      ->capture_default_str();

  std::string report_spec;
  bool report_json = false;
  CLI::App* report = app.add_subcommand("report", "Group summary: order, spectra, graphs, structure");
  report->add_option("spec", report_spec, "Group spec (named:<name>:<param>, paper:g150, paper:h199650, twisted:<k>, file:<path>)")
      ->required();
  report->add_flag("--json", report_json, "Emit JSON instead of text");

  std::string graph_spec;
  bool graph_full = false, graph_real = false;
  bool graph_json_flag = false, graph_dot_flag = false;
  CLI::App* graph = app.add_subcommand("graph", "Emit the prime graph or the real prime graph");
  graph->add_option("spec", graph_spec, "Group spec")->required();
  graph->add_flag("--full", graph_full, "Prime graph on all element orders");
  graph->add_flag("--real", graph_real, "Real prime graph (default)");
  graph->add_flag("--dot", graph_dot_flag, "DOT output (default)");
  graph->add_flag("--json", graph_json_flag, "JSON output");

  std::string only;
  CLI::App* verify = app.add_subcommand("verify-paper", "Run the claim verification suite");
  verify->add_option("--only", only, "Comma-separated claim-id prefixes");

  std::string export_spec;
  CLI::App* export_gap = app.add_subcommand("export-gap", "Emit generators in the exchange format");
  export_gap->add_option("spec", export_spec, "Group spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (graph_full && graph_real)
      throw std::invalid_argument("choose one of --full / --real");
    if (graph_dot_flag && graph_json_flag)
      throw std::invalid_argument("choose one of --dot / --json");
    const uint64_t seed = parse_seed(seed_text);
    if (report->parsed()) return cmd_report(report_spec, report_json, cap);
    if (graph->parsed()) return cmd_graph(graph_spec, graph_full, graph_json_flag, cap);
    if (verify->parsed()) return cmd_verify_paper(only, cap, seed);
    if (export_gap->parsed()) return cmd_export_gap(export_spec, cap);
    return kExitUsage;
  } catch (const rg::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
