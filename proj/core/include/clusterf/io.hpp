#pragma once

// JSON file formats. All directions and indices are 1-based on the wire.
//
//   matrix     {"n": 2, "b": [[0, 1], [-1, 0]]}        b[i][j] = b_{i+1,j+1}
//   monomial   {"path": [1, 2], "exponents": [0, 1]}
//   polynomial [{"exponents": [-1, 1], "coeff": "1"}, ...]   grlex ascending
//   g/F data   {"g": [-1, 0], "F": <polynomial>}
//   F-invariant {"value": 1, "left": 0, "right": 1, "vertex": [1]}

#include <nlohmann/json.hpp>

#include <string>

#include "clusterf/errors.hpp"
#include "clusterf/explorer.hpp"
#include "clusterf/invariant.hpp"
#include "clusterf/principal.hpp"
#include "clusterf/seed.hpp"

namespace clusterf::io {

using nlohmann::json;

// Malformed input; the message names the offending field.
class FormatError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j, std::size_t nvars);

json to_json(const ExchangeMatrix& b);
ExchangeMatrix matrix_from_json(const json& j);

json to_json(const MutationSequence& s);
json to_json(const ClusterMonomialRef& u);
ClusterMonomialRef monomial_from_json(const json& j, std::size_t n);

json to_json(const GFData& gf);
json to_json(const FInvariantResult& r);
json to_json(const SeparationReport& r);

// Adjacency list; nodes list their sorted 1-based variable indices.
json graph_export(const ExchangeGraph& g);

// "1,2,1" or "[1,2,1]" or "" -> sequence (validated against n).
MutationSequence parse_sequence(const std::string& text, std::size_t n);
// "1,2" -> positive integers.
IntVector parse_int_list(const std::string& text);

// Parses text as JSON, reporting line/column on syntax errors.
json parse_json_text(const std::string& text, const std::string& origin);
json read_json_file(const std::string& path);

}  // namespace clusterf::io
