#include "realgraph/spec_parse.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "realgraph/elements.hpp"
#include "realgraph/numtheory.hpp"

namespace rg {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

uint64_t parse_u64(const std::string& tok, const std::string& what) {
  uint64_t value = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end)
    fail(what + ": expected a nonnegative integer, got \"" + tok + "\"");
  return value;
}

// "p=11" with the given key.
uint64_t parse_kv(const std::string& tok, const std::string& key, const std::string& where) {
  if (tok.size() <= key.size() + 1 || tok.compare(0, key.size(), key) != 0 ||
      tok[key.size()] != '=')
    fail(where + ": expected " + key + "=<value>, got \"" + tok + "\"");
  return parse_u64(tok.substr(key.size() + 1), where);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_colons(const std::string& text) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t colon = text.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, colon - start));
    start = colon + 1;
  }
}

GroupSpec named_spec(const std::string& name, uint64_t parameter) {
  GroupSpec spec;
  spec.tag = GroupSpec::Tag::named;
  spec.name = name;
  spec.parameter = parameter;
  return spec;
}

GroupSpec paper_spec(const std::string& which, const std::string& where) {
  GroupSpec spec;
  if (which == "g150")
    spec.tag = GroupSpec::Tag::paper_g150;
  else if (which == "h199650")
    spec.tag = GroupSpec::Tag::paper_h199650;
  else
    fail(where + ": unknown paper group \"" + which + "\" (expected g150 or h199650)");
  return spec;
}

GroupSpec twisted_spec(const std::string& ktok, const std::string& where) {
  const uint64_t k = parse_u64(ktok, where + ": twisted degree");
  if (k < 2 || k > 8) fail(where + ": twisted degree must be in [2, 8], got " + ktok);
  GroupSpec spec;
  spec.tag = GroupSpec::Tag::twisted;
  spec.k = static_cast<unsigned>(k);
  return spec;
}

// Shared validation for matrix and semidirect generator lists.
void check_matrices(const std::vector<std::vector<uint32_t>>& gens, uint32_t p, uint32_t n,
                    const std::vector<int>& end_lines) {
  for (size_t i = 0; i < gens.size(); ++i) {
    try {
      matrix_inverse_mod_p(gens[i], n, p);
    } catch (const std::domain_error&) {
      fail("line " + std::to_string(end_lines[i]) + ": generator " + std::to_string(i + 1) +
           " is singular mod " + std::to_string(p));
    }
  }
}

}  // namespace

GroupSpec parse_spec_text(const std::string& text) {
  // Significant lines with their 1-based numbers; '#' starts a comment line.
  std::vector<std::pair<int, std::string>> lines;
  {
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const size_t first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.emplace_back(no, line);
    }
  }
  if (lines.empty()) fail("spec is empty");

  const std::string head_where = "line " + std::to_string(lines[0].first);
  const std::vector<std::string> head = split_ws(lines[0].second);
  auto expect_one_line = [&] {
    if (lines.size() > 1)
      fail("line " + std::to_string(lines[1].first) + ": unexpected content after \"" +
           head[0] + "\" line");
  };
  auto expect_tokens = [&](size_t want, const char* usage) {
    if (head.size() != want) fail(head_where + ": usage: " + usage);
  };

  if (head[0] == "named") {
    if (head.size() == 2 && head[1] == "quaternion8") {
      expect_one_line();
      return named_spec("quaternion8", 0);
    }
    expect_tokens(3, "named <name> <parameter>");
    expect_one_line();
    return named_spec(head[1], parse_u64(head[2], head_where + ": parameter"));
  }
  if (head[0] == "paper") {
    expect_tokens(2, "paper g150|h199650");
    expect_one_line();
    return paper_spec(head[1], head_where);
  }
  if (head[0] == "twisted") {
    expect_tokens(2, "twisted <k>");
    expect_one_line();
    return twisted_spec(head[1], head_where);
  }

  if (head[0] == "perm") {
    expect_tokens(2, "perm n=<degree>");
    const uint64_t n = parse_kv(head[1], "n", head_where);
    if (n < 1 || n > 65536) fail(head_where + ": degree must be in [1, 65536]");
    GroupSpec spec;
    spec.tag = GroupSpec::Tag::permutation;
    spec.n = static_cast<uint32_t>(n);
    for (size_t li = 1; li < lines.size(); ++li) {
      const std::string where = "line " + std::to_string(lines[li].first);
      const std::vector<std::string> toks = split_ws(lines[li].second);
      if (toks.size() != n)
        fail(where + ": expected " + std::to_string(n) + " images, got " +
             std::to_string(toks.size()));
      std::vector<uint32_t> images;
      std::vector<bool> seen(n, false);
      for (const std::string& t : toks) {
        const uint64_t img = parse_u64(t, where + ": image");
        if (img >= n || seen[img])
          fail(where + ": image list is not a permutation of 0.." + std::to_string(n - 1));
        seen[img] = true;
        images.push_back(static_cast<uint32_t>(img));
      }
      spec.perm_gens.push_back(std::move(images));
    }
    if (spec.perm_gens.empty()) fail(head_where + ": expected at least one image line");
    return spec;
  }

  if (head[0] == "matrix" || head[0] == "semidirect") {
    expect_tokens(3, "matrix|semidirect p=<prime> n=<dimension>");
    const uint64_t p = parse_kv(head[1], "p", head_where);
    const uint64_t n = parse_kv(head[2], "n", head_where);
    if (!is_prime(p) || p >= 256)
      fail(head_where + ": modulus must be a prime below 256, got " + std::to_string(p));
    if (n < 1 || n > 64) fail(head_where + ": dimension must be in [1, 64]");
    GroupSpec spec;
    spec.tag = head[0] == "matrix" ? GroupSpec::Tag::matrix : GroupSpec::Tag::semidirect;
    spec.p = static_cast<uint32_t>(p);
    spec.n = static_cast<uint32_t>(n);
    std::vector<uint32_t> current;
    std::vector<int> end_lines;
    for (size_t li = 1; li < lines.size(); ++li) {
      const std::string where = "line " + std::to_string(lines[li].first);
      const std::vector<std::string> toks = split_ws(lines[li].second);
      if (toks.size() != n)
        fail(where + ": expected " + std::to_string(n) + " entries, got " +
             std::to_string(toks.size()));
      for (const std::string& t : toks) {
        const uint64_t entry = parse_u64(t, where + ": entry");
        if (entry >= p)
          fail(where + ": entry " + t + " is not reduced mod " + std::to_string(p));
        current.push_back(static_cast<uint32_t>(entry));
      }
      if (current.size() == n * n) {
        spec.mat_gens.push_back(std::move(current));
        current.clear();
        end_lines.push_back(lines[li].first);
      }
    }
    if (!current.empty())
      fail("line " + std::to_string(lines.back().first) + ": generator " +
           std::to_string(spec.mat_gens.size() + 1) + " is incomplete (expected " +
           std::to_string(n) + " rows)");
    if (spec.mat_gens.empty()) fail(head_where + ": expected at least one generator matrix");
    check_matrices(spec.mat_gens, spec.p, spec.n, end_lines);
    return spec;
  }

  fail(head_where + ": unknown tag \"" + head[0] +
       "\" (expected named, paper, twisted, perm, matrix, or semidirect)");
}

GroupSpec parse_spec_string(const std::string& text) {
  const std::vector<std::string> parts = split_colons(text);
  const std::string& tag = parts[0];
  if (tag == "named") {
    if (parts.size() == 2 && parts[1] == "quaternion8") return named_spec("quaternion8", 0);
    if (parts.size() != 3)
      fail("spec \"" + text + "\": usage named:<name>:<parameter>");
    return named_spec(parts[1], parse_u64(parts[2], "spec \"" + text + "\": parameter"));
  }
  if (tag == "paper") {
    if (parts.size() != 2) fail("spec \"" + text + "\": usage paper:g150 or paper:h199650");
    return paper_spec(parts[1], "spec \"" + text + "\"");
  }
  if (tag == "twisted") {
    if (parts.size() != 2) fail("spec \"" + text + "\": usage twisted:<k>");
    return twisted_spec(parts[1], "spec \"" + text + "\"");
  }
  if (tag == "file") {
    if (parts.size() < 2 || parts[1].empty())
      fail("spec \"" + text + "\": usage file:<path>");
    const std::string path = text.substr(5);  // keep any later colons in the path
    std::ifstream in(path);
    if (!in) fail("cannot open spec file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str());
  }
  fail("unknown spec \"" + text + "\" (expected named:, paper:, twisted:, or file:)");
}

}  // namespace rg
