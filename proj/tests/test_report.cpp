#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "newton/parser.hpp"
#include "newton/report.hpp"

using namespace newton;

namespace {

SparsePolynomial P(const std::string& s) { return parse_polynomial(s); }

FiberTopologyReport analyze(const std::string& s, long xi) {
  return analyze_fiber(P(s), GaussianRational(xi));
}

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t p = hay.find(needle); p != std::string::npos;
       p = hay.find(needle, p + needle.size()))
    ++n;
  return n;
}

#ifdef NEWTON_ATLAS_BIN
int run_cli(const std::string& args) {
  std::string cmd = std::string(NEWTON_ATLAS_BIN) + " " + args +
                    " > /dev/null 2> /dev/null";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}
#endif

}  // namespace

TEST_CASE("json report structure") {
  SparsePolynomial f = P("z^3 + w^3");
  FiberTopologyReport rep = analyze_fiber(f, GaussianRational(1));
  auto j = report_to_json(rep, f);

  CHECK(j["schema"] == "newton-atlas/1");
  CHECK(j["xi"] == nlohmann::ordered_json::array({1.0, 0.0}));
  CHECK(j["genus"]["value"] == 1);
  CHECK(j["n_mu"]["value"] == 3);
  CHECK(j["genus"].contains("formula"));
  CHECK(j["polygon"]["dimension"] == 2);
  CHECK(j["polygon"]["edges"].size() == 3);
  CHECK(j["nondegeneracy"]["overall"] == true);
  CHECK(j["punctures"].size() == 3);
  for (const auto& p : j["punctures"]) {
    CHECK(p["pole_order"] == 0);
    CHECK(p["kappa"] == 1);  // exact when (1,1) misses the edge
    CHECK(p["root"].is_array());
    CHECK(p["root"].size() == 2);
  }
  CHECK(j["completeness"] == "incomplete-compact-completion");
  CHECK(j["pick_identity"]["holds"] == true);
  CHECK(j["index_sum"]["holds"] == true);
  CHECK(j["connectivity"] == "asserted");
  CHECK(j["hypothesis_failures"].empty());

  // complex kappa serializes as [re, im]
  SparsePolynomial g = P("z^2 + w^2");
  auto j2 = report_to_json(analyze_fiber(g, GaussianRational(1)), g);
  CHECK(j2["punctures"][0]["kappa"].is_array());

  // generic xi
  auto j3 = report_to_json(analyze_fiber(P("z^2 + w^3"), std::nullopt),
                           P("z^2 + w^3"));
  CHECK(j3["xi"] == "generic");
  CHECK(!j3["bad_xi"].empty());
}

TEST_CASE("identical reports emit identical bytes") {
  SparsePolynomial f = P("z^2 + w^5 + w");
  std::string a = emit_json(analyze_fiber(f, GaussianRational(3)), f);
  std::string b = emit_json(analyze_fiber(f, GaussianRational(3)), f);
  CHECK(a == b);
  CHECK(a.back() == '\n');

  // parse-and-redump round-trips byte for byte
  auto parsed = nlohmann::ordered_json::parse(a);
  CHECK(parsed.dump(2) + "\n" == a);
}

TEST_CASE("text report carries the headline identities") {
  SparsePolynomial f = P("z^3 + w^3");
  std::string t = emit_text(analyze_fiber(f, GaussianRational(1)), f);
  CHECK(t.find("pick identity: n_mu - 2S = 2 - 2B+ : 0 = 0 (holds)") !=
        std::string::npos);
  CHECK(t.find("genus: 1") != std::string::npos);
  CHECK(t.find("n_mu: 3") != std::string::npos);
  CHECK(t.find("completeness: incomplete-compact-completion") !=
        std::string::npos);
  CHECK(t.find("index sum: 0 = 0 (holds)") != std::string::npos);

  std::string d = emit_text(analyze("z^2 + w^2 + 2*z*w + w", 1),
                            P("z^2 + w^2 + 2*z*w + w"));
  CHECK(d.find("nondegenerate: no") != std::string::npos);
  CHECK(d.find("hypothesis failure:") != std::string::npos);
}

TEST_CASE("svg polygon rendering") {
  std::string svg = emit_svg(newton_polygon(P("z^3 + w^3 - 1")));
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("<polygon") != std::string::npos);
  // exactly one interior lattice point for this triangle
  CHECK(count_occurrences(svg, "class=\"interior\"") == 1);
  // outward normal rays, one per edge
  CHECK(count_occurrences(svg, "<line") == 3);

  std::string svg2 = emit_svg(newton_polygon(P("z^4 + w^4 - 1")));
  CHECK(count_occurrences(svg2, "class=\"interior\"") == 3);
}

#ifdef NEWTON_ATLAS_BIN

TEST_CASE("cli exit codes") {
  // clean analysis
  CHECK(run_cli("analyze 'z^3 + w^3' --xi 1") == 0);
  CHECK(run_cli("analyze 'z^3 + w^3' --xi 1 --format json") == 0);
  // hypothesis failure (degenerate polynomial)
  CHECK(run_cli("analyze 'z^2 + w^2 + 2*z*w + w' --xi 1") == 2);
  CHECK(run_cli("check 'z^2 + w^2 + 2*z*w + w'") == 2);
  CHECK(run_cli("check 'z^3 + w^3 - 1'") == 0);
  // malformed input
  CHECK(run_cli("analyze 'z^' --xi 1") == 2);
  // other subcommands
  CHECK(run_cli("critical-values 'z^2 + w^3 - 3*w'") == 0);
  CHECK(run_cli("polygon-svg 'z^3 + w^3' --out /tmp/newton_atlas_test.svg") ==
        0);
  CHECK(run_cli("flow 'z^2 + w^3' --xi 1 --start-z 1 --start-w 0 "
                "--t-max 1 --format json") == 0);
  CHECK(run_cli("charts 'z^2 + w^3' --xi 1 --format json") == 0);
}

TEST_CASE("cli json output is machine readable") {
  std::string path = "/tmp/newton_atlas_test_report.json";
  int code = run_cli("analyze 'z^3 + w^3' --xi 1 --format json --out " + path);
  REQUIRE(code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  auto j = nlohmann::ordered_json::parse(ss.str());
  CHECK(j["schema"] == "newton-atlas/1");
  CHECK(j["genus"]["value"] == 1);
}

#endif
