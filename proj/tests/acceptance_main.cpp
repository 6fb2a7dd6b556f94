// Acceptance harness: one line of output per criterion, exit 0 iff all pass.
// argv[1] is the path to the realgraph command-line binary (used by the
// determinism criterion).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "realgraph/claims.hpp"
#include "realgraph/constructions.hpp"
#include "realgraph/subgroup_ops.hpp"
#include "realgraph/verify.hpp"

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& cmd) {
  CommandResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

// Runs the selected verification claims; returns a failure description or ""
// when every selected claim passes.
std::string claims_pass(const std::vector<std::string>& prefixes) {
  rg::VerifyOptions opts;
  opts.only = prefixes;
  std::ostringstream out;
  const int failures = rg::run_verify(opts, out);
  if (failures == 0) return "";
  std::string detail;
  std::istringstream lines(out.str());
  std::string line;
  while (std::getline(lines, line))
    if (line.find(" FAIL") != std::string::npos) detail += "\n    " + line;
  return std::to_string(failures) + " claim(s) failed:" + detail;
}

struct Criterion {
  std::string label;
  double limit_seconds;  // 0 = no limit
  std::function<std::string()> run;  // "" on success, reason on failure
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-realgraph-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  std::vector<Criterion> criteria;

  criteria.push_back({"order-150 example bundle", 1.0, [] {
    return claims_pass({"theorem_b.g150."});
  }});

  criteria.push_back({"order-199650 example bundle", 180.0, [] {
    std::string r = claims_pass({"theorem_b.h199650."});
    if (!r.empty()) return r;
    const auto [g_claim, h_claim] = rg::theorem_b_witnesses();
    if (!g_claim.holds || g_claim.observed != "3")
      return std::string("witness component count for the order-150 group: ") +
             g_claim.observed;
    if (!h_claim.holds || h_claim.observed != "4")
      return std::string("witness component count for the order-199650 group: ") +
             h_claim.observed;
    if (g_claim.witness.empty() || h_claim.witness.empty())
      return std::string("witness payload missing");
    return std::string();
  }});

  criteria.push_back({"twisted family, degree 4", 120.0, [] {
    return claims_pass({"twisted.k4."});
  }});

  criteria.push_back({"twisted family, degree 2 smoke", 1.0, [] {
    return claims_pass({"twisted.k2."});
  }});

  criteria.push_back({"lemma suite over the catalog", 180.0, [] {
    return claims_pass({"lemma_", "dmn_vertices", "catalog."});
  }});

  criteria.push_back({"two-prime equivalence on the symmetric group", 1.0, [] {
    rg::FiniteGroup s4 = rg::make_named("symmetric", 4);
    const rg::ClaimResult r = rg::theorem_a_check(s4);
    if (!r.holds) return "equivalence fails: " + r.witness;
    const rg::Subgroup n = rg::p_core(s4, 2);
    const rg::Subgroup k = rg::sylow(s4, 3);
    if (n.order() != 4) return std::string("|O_2| = ") + std::to_string(n.order());
    if (k.order() != 3 || !rg::is_cyclic(k))
      return std::string("Sylow 3-subgroup is not cyclic of order 3");
    std::vector<uint32_t> mgens = n.gens;
    mgens.insert(mgens.end(), k.gens.begin(), k.gens.end());
    const rg::Subgroup m = rg::span(s4, mgens);
    if (m.order() != 12) return std::string("|NK| = ") + std::to_string(m.order());
    if (!rg::is_2frobenius(s4, n, m))
      return std::string("chain is not 2-Frobenius");
    if (s4.order() / m.order() != 2) return std::string("|Q| != 2");
    for (const rg::ConjugacyClass& c : s4.classes().classes)
      if (c.order != 1 && c.order != 2 && c.order != 3 && c.order != 4)
        return std::string("element order ") + std::to_string(c.order) +
               " is not a prime power";
    // the unique involution of a Sylow 2-subgroup of N_G(K) inverts K
    if (r.witness.find("structure holds") == std::string::npos)
      return std::string("chain witness missing: ") + r.witness;
    return std::string();
  }});

  criteria.push_back({"byte-identical reruns", 0.0, [&cli] {
    std::vector<std::string> commands = {"verify-paper"};
    const std::vector<std::string> specs = {
        "named:cyclic:6",  "named:symmetric:4", "named:quaternion:8",
        "paper:g150",      "twisted:2",         "twisted:4"};
    for (const std::string& spec : specs) {
      commands.push_back("report " + spec);
      commands.push_back("report " + spec + " --json");
      commands.push_back("graph " + spec + " --real --dot");
      commands.push_back("graph " + spec + " --full --dot");
      commands.push_back("graph " + spec + " --real --json");
      commands.push_back("graph " + spec + " --full --json");
      commands.push_back("export-gap " + spec);
    }
    commands.push_back("graph paper:h199650 --real --dot");
    for (const std::string& args : commands) {
      const std::string cmd = "'" + cli + "' " + args;
      CommandResult first = run_command(cmd);
      CommandResult second = run_command(cmd);
      if (first.exit_code != 0)
        return cmd + " exited with " + std::to_string(first.exit_code);
      if (first.output != second.output || first.exit_code != second.exit_code)
        return "output of " + cmd + " differs between runs";
      if (first.output.empty() || first.output.back() != '\n')
        return "output of " + cmd + " is not newline-terminated";
    }
    return std::string();
  }});

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = criteria[i].run();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (reason.empty() && criteria[i].limit_seconds > 0 &&
        seconds > criteria[i].limit_seconds) {
      std::ostringstream over;
      over << "took " << seconds << "s, limit " << criteria[i].limit_seconds << "s";
      reason = over.str();
    }
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2fs", seconds);
    if (reason.empty()) {
      std::cout << "criterion " << (i + 1) << " (" << criteria[i].label
                << "): PASS [" << timing << "]\n";
    } else {
      std::cout << "criterion " << (i + 1) << " (" << criteria[i].label
                << "): FAIL [" << timing << "] " << reason << "\n";
      ++failures;
    }
  }
  if (failures) std::cout << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
