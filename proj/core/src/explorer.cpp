#include "clusterf/explorer.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "clusterf/errors.hpp"
#include "clusterf/principal.hpp"

namespace clusterf {

std::string canonical_key(const LaurentPoly& p) {
  std::string out = std::to_string(p.nvars()) + "|";
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      out += std::to_string(e[i]);
      out += i + 1 < e.size() ? ',' : ':';
    }
    out += c.get_str();
    out += ';';
  }
  return out;
}

CanonicalSeedKey CanonicalSeedKey::of(const Seed& s) {
  const std::size_t n = s.matrix.rank();
  std::vector<std::string> keys;
  keys.reserve(n);
  for (const auto& x : s.cluster) keys.push_back(canonical_key(x));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  CanonicalSeedKey key;
  key.cluster.reserve(n);
  key.matrix.reserve(n * n);
  for (std::size_t i : order) key.cluster.push_back(keys[i]);
  for (std::size_t i : order)
    for (std::size_t j : order) key.matrix.push_back(s.matrix(i, j));
  return key;
}

std::vector<MutationSequence> ExchangeGraph::vertex_paths() const {
  std::vector<MutationSequence> out;
  out.reserve(nodes.size());
  for (const auto& node : nodes) out.push_back(node.seed.path);
  return out;
}

std::optional<std::size_t> ExchangeGraph::find_variable(const LaurentPoly& expansion) const {
  auto it = variable_index.find(canonical_key(expansion));
  if (it == variable_index.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> ExchangeGraph::sorted_cluster(std::size_t i) const {
  auto v = nodes.at(i).variables;
  std::sort(v.begin(), v.end());
  return v;
}

ExchangeGraph explore(const ExchangeMatrix& b0, std::size_t cap) {
  if (cap == 0) throw InvalidArgument("explore cap must be at least 1");
  const std::size_t n = b0.rank();
  ExchangeGraph g{b0, {}, {}, {}, {}, false};
  std::map<CanonicalSeedKey, std::size_t> seen;

  auto add_node = [&](Seed seed) {
    const std::size_t idx = g.nodes.size();
    seen.emplace(CanonicalSeedKey::of(seed), idx);
    ExchangeGraphNode node{std::move(seed), std::vector<std::size_t>(n), std::vector<std::size_t>(n, ExchangeGraph::npos)};
    for (std::size_t p = 0; p < n; ++p) {
      std::string key = canonical_key(node.seed.cluster[p]);
      auto [it, inserted] = g.variable_index.try_emplace(std::move(key), g.variables.size());
      if (inserted) {
        g.variables.push_back(node.seed.cluster[p]);
        g.variable_refs.push_back(ClusterMonomialRef::variable(node.seed.path, n, p));
      }
      node.variables[p] = it->second;
    }
    g.nodes.push_back(std::move(node));
    return idx;
  };

  add_node(Seed::root(b0));
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < n; ++k) {
      Seed child = mutate_seed(g.nodes[i].seed, k);
      auto it = seen.find(CanonicalSeedKey::of(child));
      if (it != seen.end()) {
        g.nodes[i].neighbors[k] = it->second;
        continue;
      }
      if (g.nodes.size() >= cap) return g;
      const std::size_t j = add_node(std::move(child));
      g.nodes[i].neighbors[k] = j;
      queue.push_back(j);
    }
  }
  g.complete = true;
  return g;
}

namespace {

std::set<std::size_t> support_variables(const ExchangeGraph& graph, const ClusterMonomialRef& u) {
  const std::size_t n = graph.root.rank();
  u.validate(n);
  std::set<std::size_t> out;
  bool any = false;
  for (std::int64_t v : u.exponents) any = any || v > 0;
  if (!any) return out;
  auto seed = cluster_pattern(graph.root)->at(u.path);
  for (std::size_t k = 0; k < n; ++k) {
    if (u.exponents[k] == 0) continue;
    auto idx = graph.find_variable(seed->seed.cluster[k]);
    if (!idx) throw Error("cluster variable at " + to_string(u.path) + " missing from the exchange graph");
    out.insert(*idx);
  }
  return out;
}

}  // namespace

bool compatible(const ExchangeGraph& graph, const ClusterMonomialRef& u, const ClusterMonomialRef& u2) {
  if (!graph.complete) throw IncompleteGraph("compatibility needs a complete exchange graph");
  std::set<std::size_t> need = support_variables(graph, u);
  need.merge(support_variables(graph, u2));
  if (need.empty()) return true;
  for (const auto& node : graph.nodes) {
    const std::set<std::size_t> have(node.variables.begin(), node.variables.end());
    if (std::includes(have.begin(), have.end(), need.begin(), need.end())) return true;
  }
  return false;
}

SeparationReport check_separation_theorem(const ExchangeMatrix& b0, std::size_t cap,
                                          const std::optional<SkewSymmetrizer>& s) {
  // |b_ij b_ji| >= 4 rules out finite type, so no cap can be reached.
  for (std::size_t i = 0; i < b0.rank(); ++i)
    for (std::size_t j = i + 1; j < b0.rank(); ++j)
      if (b0(i, j) * b0(j, i) <= -4)
        throw IncompleteGraph("exchange graph is infinite: |b_" + std::to_string(i + 1) + std::to_string(j + 1) +
                              " b_" + std::to_string(j + 1) + std::to_string(i + 1) + "| >= 4");
  const ExchangeGraph graph = explore(b0, cap);
  if (!graph.complete)
    throw IncompleteGraph("exchange graph exceeded the cap of " + std::to_string(cap) + " clusters");
  const SkewSymmetrizer sym = resolve_symmetrizer(b0, s);
  const std::vector<MutationSequence> vertices = graph.vertex_paths();
  SeparationReport report;
  report.variables = graph.variable_count();
  report.clusters = graph.cluster_count();
  for (std::size_t i = 0; i < graph.variable_count(); ++i) {
    for (std::size_t j = i + 1; j < graph.variable_count(); ++j) {
      const auto& u = graph.variable_refs[i];
      const auto& u2 = graph.variable_refs[j];
      SeparationPair pair{i, j, compatible(graph, u, u2), sign_coherent_pair(b0, u, u2, vertices),
                          f_invariant(b0, u, u2, {}, sym).value};
      report.pairs.push_back(pair);
      if (!pair.consistent()) report.counterexamples.push_back(pair);
    }
  }
  return report;
}

}  // namespace clusterf
