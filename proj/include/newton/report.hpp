#pragma once

#include <string>

#include <json.hpp>

#include "newton/topology.hpp"

namespace newton {

// JSON payload, schema "newton-atlas/1". Complex values serialize as
// [re, im]; quantities derived from a lattice formula carry a "formula"
// string stating it. Key order is fixed so identical reports emit
// identical bytes.
nlohmann::ordered_json report_to_json(const FiberTopologyReport& report,
                                      const SparsePolynomial& f);

nlohmann::ordered_json verdict_to_json(const NondegeneracyVerdict& verdict);

std::string emit_json(const FiberTopologyReport& report,
                      const SparsePolynomial& f);

// Human-readable summary, including the Pick identity line
// "n_mu - 2S = 2 - 2B+" with both sides evaluated.
std::string emit_text(const FiberTopologyReport& report,
                      const SparsePolynomial& f);

// The polygon with its interior lattice points marked and outward edge
// normals drawn; `scale` is pixels per lattice unit.
std::string emit_svg(const NewtonPolygon& polygon, double scale = 40.0);

}  // namespace newton
