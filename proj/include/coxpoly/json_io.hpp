#pragma once

#include "coxpoly/coxeter.hpp"
#include "coxpoly/graph.hpp"
#include "coxpoly/spectra.hpp"
#include "coxpoly/sweep.hpp"

#include <json.hpp>

#include <string>

namespace coxpoly {

using Json = nlohmann::ordered_json;

/// Polynomial wire format: a JSON array of ascending integer
/// coefficients, e.g. [0,-2,0,1]. Coefficients that fit a 64-bit signed
/// integer are written as numbers, anything larger as a decimal string;
/// the parser accepts both.
Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

/// Graph wire format: {"n": int, "edges": [[i, j, mult], ...]} with
/// 0-based vertices, i < j and mult >= 1 ([i, j] defaults to mult 1).
Json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);

Json report_to_json(const RootLocationReport& r);
Json bundle_to_json(const CoxeterBundle& b);
Json sweep_to_json(const SweepReport& s);

/// Semicolon-separated columns:
/// weights;degree;on_circle;off_circle;rho_is_one;cyclotomic_indices
std::string sweep_to_csv(const SweepReport& s);

} // namespace coxpoly
