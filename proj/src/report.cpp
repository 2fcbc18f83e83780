#include "newton/report.hpp"

#include <cmath>
#include <sstream>

#include "newton/parser.hpp"

namespace newton {

namespace {

using json = nlohmann::ordered_json;

json complex_json(std::complex<double> c) {
  if (std::isnan(c.real()) || std::isnan(c.imag())) return nullptr;
  return json::array({c.real(), c.imag()});
}

json lattice_json(LatticeExponent e) { return json::array({e.l, e.m}); }

json edge_json(const Edge& e) {
  return json{{"start", lattice_json(e.start)},
              {"end", lattice_json(e.end)},
              {"normal", json::array({e.alpha, e.beta})},
              {"lattice_count", e.lattice_count},
              {"on_axis", e.on_axis}};
}

const char* status_name(FaceStatus s) {
  switch (s) {
    case FaceStatus::pass:
      return "pass";
    case FaceStatus::fail:
      return "fail";
    default:
      return "inconclusive";
  }
}

const char* kind_name(FaceReport::Kind k) {
  switch (k) {
    case FaceReport::Kind::vertex:
      return "vertex";
    case FaceReport::Kind::edge:
      return "edge";
    case FaceReport::Kind::segment:
      return "segment";
    default:
      return "whole";
  }
}

const char* completeness_name(Completeness c) {
  switch (c) {
    case Completeness::incomplete_compact_completion:
      return "incomplete-compact-completion";
    case Completeness::complete_plane:
      return "complete-plane";
    default:
      return "complete-cylinder";
  }
}

}  // namespace

json verdict_to_json(const NondegeneracyVerdict& v) {
  json faces = json::array();
  for (const auto& r : v.face_reports) {
    json f{{"kind", kind_name(r.kind)},
           {"descriptor", r.descriptor},
           {"status", status_name(r.status)}};
    if (!r.witness.empty()) f["witness"] = r.witness;
    if (r.witness_value) f["witness_value"] = complex_json(*r.witness_value);
    faces.push_back(std::move(f));
  }
  return json{{"overall", v.overall},
              {"mode", v.mode == CertifyMode::full
                           ? "full"
                           : "positive-coordinate-only"},
              {"faces", std::move(faces)}};
}

json report_to_json(const FiberTopologyReport& rep,
                    const SparsePolynomial& f) {
  json j;
  j["schema"] = "newton-atlas/1";
  j["polynomial"] = render(f);
  if (rep.xi)
    j["xi"] = complex_json(rep.xi->to_complex());
  else
    j["xi"] = "generic";
  {
    json vertices = json::array();
    for (const auto& v : rep.polygon.vertices) vertices.push_back(lattice_json(v));
    json edges = json::array();
    for (const auto& e : rep.polygon.edges) edges.push_back(edge_json(e));
    j["polygon"] = json{{"dimension", rep.polygon.dimension},
                        {"vertices", std::move(vertices)},
                        {"edges", std::move(edges)}};
  }
  j["nondegeneracy"] = verdict_to_json(rep.nondegeneracy);
  j["genus"] = json{{"value", rep.genus},
                    {"formula", "B+ = lattice points strictly inside P"}};
  j["n_mu"] = json{{"value", rep.n_mu},
                   {"formula", "sum of n_Gamma over off-axis edges"}};
  j["arithmetic_genus"] =
      json{{"value", rep.arithmetic_genus_value},
           {"formula", "1 - (-1)^dim * B+"}};
  {
    json punctures = json::array();
    for (const auto& p : rep.punctures) {
      punctures.push_back(
          json{{"edge", edge_json(p.edge)},
               {"root_index", p.root_index},
               {"root", complex_json(p.root)},
               {"pole_order", p.pole_order},
               {"cone_angle_over_2pi", p.cone_angle_over_2pi},
               {"index", p.index},
               {"kappa", p.kappa_exact_one ? json(1) : complex_json(p.kappa)},
               {"formula", "k = (u0-1)*alpha + (v0-1)*beta - 1"}});
    }
    j["punctures"] = std::move(punctures);
  }
  j["completeness"] = completeness_name(rep.completeness);
  j["pick_identity"] = json{{"lhs", rep.pick.lhs},
                            {"rhs", rep.pick.rhs},
                            {"twice_area", rep.pick.twice_area},
                            {"holds", rep.pick.holds},
                            {"formula", "n_mu - 2S = 2 - 2B+"}};
  {
    IndexSumCheck c = index_sum_check(rep);
    j["index_sum"] = json{
        {"lhs", c.lhs},
        {"rhs", c.rhs},
        {"holds", c.holds},
        {"formula", "sum((1-u0)*alpha + (1-v0)*beta + 1) = 2 - 2*genus"}};
  }
  j["connectivity"] =
      rep.connectivity_asserted ? "asserted" : "not-asserted";
  j["relaxed_condition_only"] = rep.relaxed_condition_only;
  j["warnings"] = rep.warnings;
  j["hypothesis_failures"] = rep.hypothesis_failures;
  {
    json bad = json::array();
    for (const auto& x : rep.bad_xi) bad.push_back(complex_json(x));
    j["bad_xi"] = std::move(bad);
  }
  return j;
}

std::string emit_json(const FiberTopologyReport& report,
                      const SparsePolynomial& f) {
  return report_to_json(report, f).dump(2) + "\n";
}

std::string emit_text(const FiberTopologyReport& rep,
                      const SparsePolynomial& f) {
  std::ostringstream os;
  os << "polynomial: " << render(f) << "\n";
  if (rep.xi) {
    os << "xi: " << to_string(*rep.xi) << "\n";
  } else {
    os << "xi: generic\n";
  }
  os << "polygon: dim " << rep.polygon.dimension << ", vertices";
  for (const auto& v : rep.polygon.vertices)
    os << " (" << v.l << "," << v.m << ")";
  os << "\n";
  os << "nondegenerate: " << (rep.nondegeneracy.overall ? "yes" : "no")
     << " (mode "
     << (rep.nondegeneracy.mode == CertifyMode::full
             ? "full"
             : "positive-coordinate-only")
     << ")\n";
  for (const auto& r : rep.nondegeneracy.face_reports)
    if (r.status != FaceStatus::pass)
      os << "  " << status_name(r.status) << " at " << kind_name(r.kind) << " "
         << r.descriptor << (r.witness.empty() ? "" : ": " + r.witness)
         << "\n";
  os << "genus: " << rep.genus << "\n";
  os << "n_mu: " << rep.n_mu << "\n";
  os << "arithmetic genus: " << rep.arithmetic_genus_value << "\n";
  os << "punctures:\n";
  for (const auto& p : rep.punctures) {
    os << "  edge (" << p.edge.start.l << "," << p.edge.start.m << ")-("
       << p.edge.end.l << "," << p.edge.end.m << ") root " << p.root_index
       << ": pole order " << p.pole_order << ", cone angle "
       << p.cone_angle_over_2pi << " * 2pi, index " << p.index << "\n";
  }
  os << "completeness: " << completeness_name(rep.completeness) << "\n";
  os << "pick identity: n_mu - 2S = 2 - 2B+ : " << rep.pick.lhs << " = "
     << rep.pick.rhs << (rep.pick.holds ? " (holds)" : " (FAILS)") << "\n";
  IndexSumCheck c = index_sum_check(rep);
  os << "index sum: " << c.lhs << " = " << c.rhs
     << (c.holds ? " (holds)" : " (FAILS)") << "\n";
  os << "connectivity: "
     << (rep.connectivity_asserted ? "asserted" : "not-asserted") << "\n";
  for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
  for (const auto& h : rep.hypothesis_failures)
    os << "hypothesis failure: " << h << "\n";
  return os.str();
}

std::string emit_svg(const NewtonPolygon& p, double scale) {
  std::int64_t xmax = 1, ymax = 1;
  for (const auto& v : p.vertices) {
    xmax = std::max(xmax, v.l);
    ymax = std::max(ymax, v.m);
  }
  const double margin = scale;
  const double w = (xmax + 1) * scale + 2 * margin;
  const double h = (ymax + 1) * scale + 2 * margin;
  auto X = [&](double x) { return margin + x * scale; };
  auto Y = [&](double y) { return h - margin - y * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\">\n";
  // lattice grid
  for (std::int64_t x = 0; x <= xmax + 1; ++x)
    for (std::int64_t y = 0; y <= ymax + 1; ++y)
      os << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y)
         << "\" r=\"1.5\" fill=\"#bbb\"/>\n";
  // polygon
  os << "<polygon points=\"";
  for (const auto& v : p.vertices) os << X(v.l) << "," << Y(v.m) << " ";
  os << "\" fill=\"#cde\" fill-opacity=\"0.5\" stroke=\"#246\" "
        "stroke-width=\"2\"/>\n";
  // interior lattice points
  for (std::int64_t x = 0; x <= xmax; ++x)
    for (std::int64_t y = 0; y <= ymax; ++y)
      if (p.contains_strictly({x, y}))
        os << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y)
           << "\" r=\"4\" fill=\"#c33\" class=\"interior\"/>\n";
  // outward normals from edge midpoints
  for (const auto& e : p.edges) {
    double mx = (e.start.l + e.end.l) / 2.0;
    double my = (e.start.m + e.end.m) / 2.0;
    double n = std::hypot(static_cast<double>(e.alpha),
                          static_cast<double>(e.beta));
    double ux = e.alpha / n * 0.6, uy = e.beta / n * 0.6;
    os << "<line x1=\"" << X(mx) << "\" y1=\"" << Y(my) << "\" x2=\""
       << X(mx + ux) << "\" y2=\"" << Y(my + uy)
       << "\" stroke=\"#282\" stroke-width=\"1.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace newton
