#pragma once

#include <json.hpp>
#include <string_view>

#include "matchroot/algebraic.hpp"
#include "matchroot/classify.hpp"

namespace matchroot {

/// "p/q", an integer, or a finite decimal such as "0.4".
Rational parse_rational(std::string_view text);

/// `p/q`, an integer, or `poly:[c0,c1,...];interval:lo,hi`. Errors are
/// ParseError with the byte offset into `text`.
AlgebraicNumber parse_theta_spec(std::string_view text);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json integer_to_json(const Integer& z);
nlohmann::json polynomial_to_json(const Polynomial& p);

/// {"defpoly": [...], "point": "p/q"} or {"defpoly": [...], "interval": ["lo", "hi"]}.
nlohmann::json theta_to_json(const AlgebraicNumber& t);

nlohmann::json vertex_set_to_json(VertexSet s);
nlohmann::json decomposition_to_json(const ThetaDecomposition& d);

/// Comma-separated vertex indices, e.g. "1,3,5".
VertexSet parse_vertex_list(std::string_view text);

}  // namespace matchroot
