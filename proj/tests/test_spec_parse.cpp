#include "doctest.h"
#include "realgraph/constructions.hpp"
#include "realgraph/report.hpp"
#include "realgraph/spec_parse.hpp"

#include <fstream>
#include <string>

#include "json.hpp"

using namespace rg;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_spec_text(text);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("spec strings parse to the matching tags") {
  GroupSpec s = parse_spec_string("named:dihedral:6");
  CHECK(s.tag == GroupSpec::Tag::named);
  CHECK(s.name == "dihedral");
  CHECK(s.parameter == 6);
  CHECK(parse_spec_string("named:quaternion8").tag == GroupSpec::Tag::named);
  CHECK(parse_spec_string("paper:g150").tag == GroupSpec::Tag::paper_g150);
  CHECK(parse_spec_string("paper:h199650").tag == GroupSpec::Tag::paper_h199650);
  CHECK(parse_spec_string("twisted:4").k == 4);

  CHECK_THROWS_AS(parse_spec_string("bogus:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec_string("twisted:9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec_string("twisted:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec_string("paper:g151"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec_string("named:cyclic"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec_string("file:/no/such/file"), std::invalid_argument);
}

TEST_CASE("file specs accept the one-line forms") {
  CHECK(parse_spec_text("named dihedral 6").parameter == 6);
  CHECK(parse_spec_text("# a comment\n\npaper g150\n").tag == GroupSpec::Tag::paper_g150);
  CHECK(parse_spec_text("twisted 4\n# trailing comment\n").k == 4);
  CHECK(contains(error_of("named dihedral 6\npaper g150"), "line 2"));
  CHECK(contains(error_of(""), "empty"));
  CHECK(contains(error_of("# only a comment\n"), "empty"));
}

TEST_CASE("permutation files list image rows") {
  GroupSpec s = parse_spec_text("perm n=3\n1 0 2\n1 2 0\n");
  CHECK(s.tag == GroupSpec::Tag::permutation);
  CHECK(s.n == 3);
  REQUIRE(s.perm_gens.size() == 2);
  CHECK(s.perm_gens[0] == std::vector<uint32_t>{1, 0, 2});
  CHECK(build_group(s).order() == 6);

  CHECK(contains(error_of("perm n=3\n1 0\n"), "line 2"));
  CHECK(contains(error_of("perm n=3\n1 1 0\n"), "not a permutation"));
  CHECK(contains(error_of("perm n=3"), "at least one image line"));
  CHECK(contains(error_of("perm m=3\n0 1 2\n"), "n=<value>"));
}

TEST_CASE("matrix files validate the modulus and invertibility") {
  GroupSpec s = parse_spec_text(
      "matrix p=3 n=2\n"
      "0 2\n1 0\n"
      "# second generator\n"
      "1 1\n1 2\n");
  CHECK(s.tag == GroupSpec::Tag::matrix);
  REQUIRE(s.mat_gens.size() == 2);
  CHECK(s.mat_gens[0] == std::vector<uint32_t>{0, 2, 1, 0});
  CHECK(build_group(s).order() == 8);

  CHECK(contains(error_of("matrix p=6 n=2\n1 0\n0 1\n"), "prime"));
  CHECK(contains(error_of("matrix p=3 n=2\n1 0\n"), "generator 1 is incomplete"));
  CHECK(contains(error_of("matrix p=3 n=2\n1 7\n0 1\n"), "not reduced"));
  const std::string singular = error_of("matrix p=3 n=2\n1 1\n1 1\n");
  CHECK(contains(singular, "singular"));
  CHECK(contains(singular, "generator 1"));
}

TEST_CASE("semidirect files reuse the matrix body") {
  GroupSpec s = parse_spec_text("semidirect p=5 n=2\n0 1\n1 0\n0 4\n1 4\n");
  CHECK(s.tag == GroupSpec::Tag::semidirect);
  CHECK(build_group(s).order() == 150);
  CHECK(contains(error_of("semidirect p=4 n=2\n1 0\n0 1\n"), "prime"));
}

TEST_CASE("unknown headers carry their line number") {
  const std::string err = error_of("# leading comment\nfrobnicate n=3\n0 1 2\n");
  CHECK(contains(err, "line 2"));
  CHECK(contains(err, "unknown tag"));
}

TEST_CASE("file round trip through a real file") {
  const char* path = "roundtrip_spec.tmp";
  {
    std::ofstream out(path);
    out << "# symmetric group on three points\nperm n=3\n1 0 2\n1 2 0\n";
  }
  GroupSpec s = parse_spec_string(std::string("file:") + path);
  CHECK(s.tag == GroupSpec::Tag::permutation);
  CHECK(build_group(s).order() == 6);
  std::remove(path);
}

TEST_CASE("report text layout and JSON round trip") {
  Report r = make_report(make_named("cyclic", 6));
  const std::string text = render_text(r);
  CHECK(contains(text, "order: 6\n"));
  CHECK(contains(text, "primes: [2,3]\n"));
  CHECK(contains(text, "real_orders: [1,2]\n"));
  CHECK(contains(text, "full_graph: graph G { 2; 3; 2 -- 3; }\n"));
  CHECK(contains(text, "satisfies_P: true\n"));
  CHECK(contains(text, "solvable: true\n"));
  CHECK(contains(text, "nilpotent: true\n"));
  CHECK(contains(text, "derived_orders: [6,1]\n"));
  CHECK(text.back() == '\n');

  const std::string json = render_json(r);
  auto parsed = nlohmann::json::parse(json);
  CHECK(parsed.dump() == json);  // emitted with sorted keys
  CHECK(parsed["order"] == 6);
  CHECK(parsed["real_components"] == 1);
  CHECK(parsed["full_graph"]["edges"][0] == std::vector<uint64_t>{2, 3});
  CHECK(parsed["derived_orders"] == std::vector<uint64_t>{6, 1});

  // component counts agree with the embedded graphs
  Report g = make_report(make_g150());
  CHECK(g.real_components == 3);
  CHECK(g.full_components == 2);
  CHECK(g.o2prime_order == 150);
  CHECK(g.fitting_order == 25);
}
