#pragma once

#include <string>

#include "json.hpp"
#include "tripv/arrangement.hpp"
#include "tripv/lie.hpp"
#include "tripv/prehomog.hpp"
#include "tripv/rational.hpp"

namespace tripv {

using Json = nlohmann::ordered_json;

/// {"n": n, "triangles": [[i,j,k], ...]} with sorted 1-based triples.
Json to_json(const TriangleArrangement& a);
/// Throws ParseError on a malformed document and the arrangement errors on bad content.
TriangleArrangement arrangement_from_json(const Json& j);
TriangleArrangement parse_arrangement(const std::string& text);
TriangleArrangement load_arrangement(const std::string& path);

/// {"dim": n, "elements": [{"entries": [[i,j,"num/den"], ...]}, ...]}
Json to_json(const MatrixBasis& b);
MatrixBasis basis_from_json(const Json& j);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const RationalMatrix& m);

/// The verdict block shared by analyze output and records.
Json verdict_json(std::size_t dim_g, const RankVerdict& v, const std::optional<bool>& dual_pv,
                  const std::vector<std::size_t>& coordinate_invariants);

Json to_json(const PVConfig& cfg);

}  // namespace tripv
