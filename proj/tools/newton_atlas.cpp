// Command-line front end: parse a polynomial, run the analyses, and
// serialize the results. Exit codes: 0 success, 2 hypothesis failure
// (degenerate polynomial, condition (i) violation, ...), 1 internal
// error.

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "newton/charts.hpp"
#include "newton/critical.hpp"
#include "newton/flow.hpp"
#include "newton/parser.hpp"
#include "newton/report.hpp"
#include "newton/roots.hpp"

namespace {

using newton::GaussianRational;
using newton::SparsePolynomial;
using json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::string mode = "full";
  double tol = 1e-9;
  std::string out;
};

void write_out(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream os(opt.out, std::ios::binary);
  if (!os) throw newton::error("cannot open output file: " + opt.out);
  os << payload;
}

newton::CertifyMode mode_of(const Options& opt) {
  return opt.mode == "relaxed" ? newton::CertifyMode::positive_coordinate_only
                               : newton::CertifyMode::full;
}

std::complex<double> parse_complex(const std::string& text) {
  return newton::parse_gaussian_rational(text).to_complex();
}

json complex_json(std::complex<double> c) {
  return json::array({c.real(), c.imag()});
}

// Roots and edges that carry charts: every root of every off-axis edge
// polynomial of the polygon of f - xi.
struct ChartKey {
  newton::Edge edge;
  std::complex<double> root;
};

std::vector<ChartKey> chart_keys(const SparsePolynomial& f,
                                 const GaussianRational& xi) {
  SparsePolynomial g = f;
  g.add_term({0, 0}, -xi);
  auto p = newton::newton_polygon(g);
  std::vector<ChartKey> keys;
  for (const auto& e : p.edges) {
    if (e.on_axis) continue;
    auto ep = newton::edge_polynomial(g, e);
    auto roots = newton::polynomial_roots(ep.poly.complex_coeffs());
    for (auto r : roots.roots) keys.push_back({e, r});
  }
  return keys;
}

int run_analyze(const Options& opt, const std::string& poly_text,
                const std::string& xi_text, bool with_charts, bool with_flow) {
  SparsePolynomial f = newton::parse_polynomial(poly_text);
  std::optional<GaussianRational> xi;
  if (xi_text != "generic") xi = newton::parse_gaussian_rational(xi_text);
  auto rep = newton::analyze_fiber(f, xi, mode_of(opt));

  if (opt.format == "json") {
    json j = newton::report_to_json(rep, f);
    if (with_charts && xi && rep.hypotheses_ok()) {
      json charts = json::array();
      for (const auto& key : chart_keys(f, *xi)) {
        auto sol = newton::build_chart(f, key.edge, key.root,
                                       xi->to_complex());
        auto fit = newton::pullback_exponent(f, key.edge, key.root,
                                             xi->to_complex());
        charts.push_back(
            json{{"edge", json::array({json::array({key.edge.start.l,
                                                    key.edge.start.m}),
                                       json::array({key.edge.end.l,
                                                    key.edge.end.m})})},
                 {"root", complex_json(key.root)},
                 {"max_residual", sol.max_residual},
                 {"pullback_exponent", fit.slope},
                 {"fit_r_squared", fit.r_squared}});
      }
      j["charts"] = std::move(charts);
    }
    if (with_flow && xi && rep.hypotheses_ok()) {
      // one trajectory from a point on the fiber over z = 1
      auto slice = [&] {
        std::vector<std::complex<double>> c(
            static_cast<std::size_t>(
                std::max<std::int64_t>(f.degree_w(), 0)) +
            1);
        // f(1, w) - xi as a dense polynomial in w
        for (const auto& [e, a] : f.terms())
          c[static_cast<std::size_t>(e.m)] += a.to_complex();
        c[0] -= xi->to_complex();
        return c;
      }();
      auto roots = newton::polynomial_roots(slice);
      auto traj = newton::integrate_flow(f, xi->to_complex(), {1.0, 0.0},
                                         roots.roots.front(), {1.0, 0.0},
                                         50.0, {1e3, 1e4, 1e5});
      json events = json::array();
      for (const auto& e : traj.escape_events)
        events.push_back(json{{"radius", e.radius}, {"t", e.t}});
      j["flow"] = json{{"max_drift", traj.max_drift},
                       {"t_end", traj.t_end},
                       {"escape_events", std::move(events)}};
    }
    write_out(opt, j.dump(2) + "\n");
  } else {
    write_out(opt, newton::emit_text(rep, f));
  }
  return rep.hypotheses_ok() ? 0 : 2;
}

int run_check(const Options& opt, const std::string& poly_text) {
  SparsePolynomial f = newton::parse_polynomial(poly_text);
  auto verdict = newton::certify_nondegenerate(f, mode_of(opt));
  if (opt.format == "json") {
    write_out(opt, newton::verdict_to_json(verdict).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << (verdict.overall ? "nondegenerate" : "degenerate") << "\n";
    for (const auto& r : verdict.face_reports)
      if (r.status != newton::FaceStatus::pass)
        os << "  " << r.descriptor
           << (r.witness.empty() ? "" : ": " + r.witness) << "\n";
    write_out(opt, os.str());
  }
  return verdict.overall ? 0 : 2;
}

int run_charts(const Options& opt, const std::string& poly_text,
               const std::string& xi_text) {
  SparsePolynomial f = newton::parse_polynomial(poly_text);
  GaussianRational xi = newton::parse_gaussian_rational(xi_text);
  std::ostringstream csv;
  csv << "xi_re,xi_im,u_re,u_im,z_re,z_im,w_re,w_im,residual\n";
  csv.precision(17);
  json summary = json::array();
  for (const auto& key : chart_keys(f, xi)) {
    auto sol = newton::build_chart(f, key.edge, key.root, xi.to_complex());
    for (const auto& s : sol.samples)
      csv << s.xi.real() << "," << s.xi.imag() << "," << s.u.real() << ","
          << s.u.imag() << "," << s.z.real() << "," << s.z.imag() << ","
          << s.w.real() << "," << s.w.imag() << "," << s.residual << "\n";
    auto fit =
        newton::pullback_exponent(f, key.edge, key.root, xi.to_complex());
    summary.push_back(json{{"root", complex_json(key.root)},
                           {"samples", sol.samples.size()},
                           {"max_residual", sol.max_residual},
                           {"pullback_exponent", fit.slope},
                           {"fit_r_squared", fit.r_squared}});
  }
  if (opt.format == "json")
    write_out(opt, summary.dump(2) + "\n");
  else
    write_out(opt, csv.str());
  return 0;
}

int run_flow(const Options& opt, const std::string& poly_text,
             const std::string& xi_text, const std::string& z_text,
             const std::string& w_text, const std::string& dir_text,
             double t_max) {
  SparsePolynomial f = newton::parse_polynomial(poly_text);
  auto xi = parse_complex(xi_text);
  auto traj = newton::integrate_flow(f, xi, parse_complex(z_text),
                                     parse_complex(w_text),
                                     parse_complex(dir_text), t_max,
                                     {1e3, 1e4, 1e5});
  if (opt.format == "json") {
    json events = json::array();
    for (const auto& e : traj.escape_events)
      events.push_back(json{{"radius", e.radius}, {"t", e.t}});
    json j{{"max_drift", traj.max_drift},
           {"t_end", traj.t_end},
           {"step_underflow", traj.step_underflow},
           {"escape_events", std::move(events)}};
    write_out(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream csv;
    csv.precision(17);
    csv << "t,z_re,z_im,w_re,w_im,drift\n";
    for (const auto& s : traj.samples)
      csv << s.t << "," << s.z.real() << "," << s.z.imag() << ","
          << s.w.real() << "," << s.w.imag() << "," << s.drift << "\n";
    write_out(opt, csv.str());
  }
  return 0;
}

int run_critical_values(const Options& opt, const std::string& poly_text) {
  SparsePolynomial f = newton::parse_polynomial(poly_text);
  auto cs = newton::critical_set(f);
  auto values = newton::critical_values(f, opt.tol > 0 ? opt.tol : 1e-8);
  if (opt.format == "json") {
    json vals = json::array();
    for (auto v : values) vals.push_back(complex_json(v));
    json j{{"positive_dimensional_locus", cs.positive_dimensional},
           {"values", std::move(vals)}};
    write_out(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os.precision(15);
    if (cs.positive_dimensional)
      os << "critical locus has a positive-dimensional part\n";
    for (auto v : values)
      os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i\n";
    write_out(opt, os.str());
  }
  return 0;
}

int run_svg(const Options& opt, const std::string& poly_text, double scale) {
  SparsePolynomial f = newton::parse_polynomial(poly_text);
  write_out(opt, newton::emit_svg(newton::newton_polygon(f), scale));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton polygon analysis of complex Hamiltonian fibers"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", opt.tol, "Numeric tolerance");
  app.add_option("--mode", opt.mode, "Nondegeneracy mode")
      ->check(CLI::IsMember({"full", "relaxed"}));
  int seed = 0;
  app.add_option("--seed", seed, "Seed for randomized corpora");
  app.add_option("--out", opt.out, "Output path (default stdout)");

  std::string poly, xi = "generic", start_z = "1", start_w = "0",
                    direction = "1";
  double t_max = 50.0, scale = 40.0;
  bool with_charts = false, with_flow = false, check_only = false;

  auto* analyze = app.add_subcommand("analyze", "Full fiber report");
  analyze->add_option("polynomial", poly)->required();
  analyze->add_option("--xi", xi, "Fiber value (or 'generic')");
  analyze->add_flag("--charts", with_charts, "Include chart verification");
  analyze->add_flag("--flow", with_flow, "Include a flow trajectory");
  analyze->add_flag("--check-only", check_only,
                    "Only certify nondegeneracy");

  auto* check = app.add_subcommand("check", "Nondegeneracy certificate");
  check->add_option("polynomial", poly)->required();

  auto* charts = app.add_subcommand("charts", "Chart samples at infinity");
  charts->add_option("polynomial", poly)->required();
  charts->add_option("--xi", xi)->required();

  auto* flow = app.add_subcommand("flow", "Integrate the Hamiltonian flow");
  flow->add_option("polynomial", poly)->required();
  flow->add_option("--xi", xi)->required();
  flow->add_option("--start-z", start_z);
  flow->add_option("--start-w", start_w);
  flow->add_option("--direction", direction);
  flow->add_option("--t-max", t_max);

  auto* crit = app.add_subcommand("critical-values", "Critical values of f");
  crit->add_option("polynomial", poly)->required();

  auto* svg = app.add_subcommand("polygon-svg", "Newton polygon as SVG");
  svg->add_option("polynomial", poly)->required();
  svg->add_option("--scale", scale, "Pixels per lattice unit");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is an input error
  }

  try {
    if (analyze->parsed())
      return check_only ? run_check(opt, poly)
                        : run_analyze(opt, poly, xi, with_charts, with_flow);
    if (check->parsed()) return run_check(opt, poly);
    if (charts->parsed()) return run_charts(opt, poly, xi);
    if (flow->parsed())
      return run_flow(opt, poly, xi, start_z, start_w, direction, t_max);
    if (crit->parsed()) return run_critical_values(opt, poly);
    if (svg->parsed()) return run_svg(opt, poly, scale);
  } catch (const newton::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const newton::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
