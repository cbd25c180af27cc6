#include "clusterf/io.hpp"

#include <fstream>
#include <sstream>

namespace clusterf::io {

namespace {

std::int64_t as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw FormatError(field + ": expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

IntVector as_int_array(const json& j, const std::string& field) {
  if (!j.is_array()) throw FormatError(field + ": expected an array of integers");
  IntVector out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(where + ": missing field \"" + key + "\"");
  return *it;
}

// Splits "1,2, 3" (optionally bracketed) into integers.
IntVector split_ints(std::string text) {
  for (char& c : text)
    if (c == '[' || c == ']') c = ' ';
  IntVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) {
      if (out.empty() && ss.eof()) break;
      throw FormatError("empty entry in list \"" + text + "\"");
    }
    const auto e = item.find_last_not_of(" \t");
    const std::string tok = item.substr(b, e - b + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw FormatError("not an integer: \"" + tok + "\"");
    }
    if (used != tok.size()) throw FormatError("not an integer: \"" + tok + "\"");
    out.push_back(v);
  }
  return out;
}

}  // namespace

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponents", e}, {"coeff", c.get_str()}});
  return out;
}

LaurentPoly poly_from_json(const json& j, std::size_t nvars) {
  if (!j.is_array()) throw FormatError("polynomial: expected an array of terms");
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "polynomial[" + std::to_string(i) + "]";
    IntVector e = as_int_array(require(j[i], "exponents", where), where + ".exponents");
    if (e.size() != nvars) throw FormatError(where + ".exponents: expected " + std::to_string(nvars) + " entries");
    const json& c = require(j[i], "coeff", where);
    Coeff value;
    if (c.is_string()) {
      if (value.set_str(c.get<std::string>(), 10) != 0) throw FormatError(where + ".coeff: not a decimal integer");
    } else {
      value = Coeff(std::to_string(as_int(c, where + ".coeff")));
    }
    terms.emplace_back(std::move(e), std::move(value));
  }
  return LaurentPoly::from_terms(nvars, std::move(terms));
}

json to_json(const ExchangeMatrix& b) {
  json rows = json::array();
  for (std::size_t i = 0; i < b.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < b.rank(); ++j) row.push_back(b(i, j));
    rows.push_back(std::move(row));
  }
  return {{"n", b.rank()}, {"b", std::move(rows)}};
}

ExchangeMatrix matrix_from_json(const json& j) {
  const std::int64_t n = as_int(require(j, "n", "matrix"), "matrix.n");
  if (n < 1) throw FormatError("matrix.n: rank must be positive");
  const json& b = require(j, "b", "matrix");
  if (!b.is_array() || b.size() != static_cast<std::size_t>(n))
    throw FormatError("matrix.b: expected " + std::to_string(n) + " rows");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < b.size(); ++i) {
    IntVector row = as_int_array(b[i], "matrix.b[" + std::to_string(i) + "]");
    if (row.size() != static_cast<std::size_t>(n))
      throw FormatError("matrix.b[" + std::to_string(i) + "]: expected " + std::to_string(n) + " entries");
    rows.push_back(std::move(row));
  }
  return ExchangeMatrix::from_rows(rows);
}

json to_json(const MutationSequence& s) { return s.to_one_based(); }

json to_json(const ClusterMonomialRef& u) { return {{"path", to_json(u.path)}, {"exponents", u.exponents}}; }

ClusterMonomialRef monomial_from_json(const json& j, std::size_t n) {
  const IntVector path = as_int_array(require(j, "path", "monomial"), "monomial.path");
  IntVector exps = as_int_array(require(j, "exponents", "monomial"), "monomial.exponents");
  ClusterMonomialRef u{MutationSequence::from_one_based(path, n), std::move(exps)};
  u.validate(n);
  return u;
}

json to_json(const GFData& gf) { return {{"g", gf.g}, {"F", to_json(gf.F)}}; }

json to_json(const FInvariantResult& r) {
  return {{"value", r.value}, {"left", r.left}, {"right", r.right}, {"vertex", to_json(r.vertex)}};
}

json to_json(const SeparationReport& r) {
  auto pair_json = [](const SeparationPair& p) {
    return json{{"pair", {p.first + 1, p.second + 1}},
                {"compatible", p.compatible},
                {"sign_coherent", p.sign_coherent},
                {"f_invariant", p.f_invariant}};
  };
  json pairs = json::array(), bad = json::array();
  for (const auto& p : r.pairs) pairs.push_back(pair_json(p));
  for (const auto& p : r.counterexamples) bad.push_back(pair_json(p));
  return {{"variables", r.variables},
          {"clusters", r.clusters},
          {"pairs", std::move(pairs)},
          {"counterexamples", std::move(bad)},
          {"passed", r.passed()}};
}

json graph_export(const ExchangeGraph& g) {
  json vars = json::array();
  for (const auto& v : g.variables) vars.push_back(to_json(v));
  json nodes = json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    json cluster = json::array();
    for (std::size_t v : g.sorted_cluster(i)) cluster.push_back(v + 1);
    json adj = json::array();
    for (std::size_t nb : g.nodes[i].neighbors) adj.push_back(nb == ExchangeGraph::npos ? json(nullptr) : json(nb + 1));
    nodes.push_back({{"id", i + 1}, {"cluster", std::move(cluster)}, {"path", to_json(g.nodes[i].seed.path)},
                     {"neighbors", std::move(adj)}});
  }
  return {{"matrix", to_json(g.root)},
          {"complete", g.complete},
          {"variable_count", g.variable_count()},
          {"cluster_count", g.cluster_count()},
          {"variables", std::move(vars)},
          {"nodes", std::move(nodes)}};
}

MutationSequence parse_sequence(const std::string& text, std::size_t n) {
  return MutationSequence::from_one_based(split_ints(text), n);
}

IntVector parse_int_list(const std::string& text) { return split_ints(text); }

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line:column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormatError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

}  // namespace clusterf::io
