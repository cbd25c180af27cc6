#pragma once

// Breadth-first enumeration of the exchange graph up to seed equivalence,
// and the compatibility oracle built on it.

#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterf/invariant.hpp"
#include "clusterf/seed.hpp"

namespace clusterf {

inline constexpr std::size_t kDefaultExploreCap = 10000;

// Unordered cluster (as sorted root expansions) together with the exchange
// matrix permuted by the same sort.
struct CanonicalSeedKey {
  std::vector<std::string> cluster;
  IntVector matrix;

  static CanonicalSeedKey of(const Seed& s);
  friend auto operator<=>(const CanonicalSeedKey&, const CanonicalSeedKey&) = default;
};

// Stable textual key of a polynomial, used for identity of cluster variables.
std::string canonical_key(const LaurentPoly& p);

struct ExchangeGraphNode {
  Seed seed;                          // representative; seed.path is its BFS path
  std::vector<std::size_t> variables;  // variable index per cluster position
  std::vector<std::size_t> neighbors;  // node index per direction, npos if unexplored
};

struct ExchangeGraph {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  ExchangeMatrix root;
  std::vector<ExchangeGraphNode> nodes;
  std::vector<LaurentPoly> variables;
  // First place each variable was seen, as a cluster monomial.
  std::vector<ClusterMonomialRef> variable_refs;
  std::map<std::string, std::size_t> variable_index;
  bool complete = false;

  std::size_t cluster_count() const { return nodes.size(); }
  std::size_t variable_count() const { return variables.size(); }
  std::vector<MutationSequence> vertex_paths() const;
  std::optional<std::size_t> find_variable(const LaurentPoly& expansion) const;
  // Sorted variable indices of node i.
  std::vector<std::size_t> sorted_cluster(std::size_t i) const;
};

// BFS from the root seed, children in direction order 1..n, deduplicated by
// CanonicalSeedKey. Stops with complete = false once `cap` nodes exist and
// more remain.
ExchangeGraph explore(const ExchangeMatrix& b0, std::size_t cap = kDefaultExploreCap);

// True iff one cluster of the graph contains the support of both monomials.
// Throws IncompleteGraph on a truncated graph.
bool compatible(const ExchangeGraph& graph, const ClusterMonomialRef& u, const ClusterMonomialRef& u2);

struct SeparationPair {
  std::size_t first;   // variable indices
  std::size_t second;
  bool compatible;
  bool sign_coherent;
  std::int64_t f_invariant;
  bool consistent() const { return compatible == sign_coherent && compatible == (f_invariant == 0); }
};

struct SeparationReport {
  std::size_t variables = 0;
  std::size_t clusters = 0;
  std::vector<SeparationPair> pairs;  // i < j, lexicographic
  std::vector<SeparationPair> counterexamples;
  bool passed() const { return counterexamples.empty(); }
};

// For every unordered pair of distinct cluster variables: compatible <=>
// sign-coherent over all graph vertices <=> F-invariant == 0.
SeparationReport check_separation_theorem(const ExchangeMatrix& b0, std::size_t cap = kDefaultExploreCap,
                                          const std::optional<SkewSymmetrizer>& s = std::nullopt);

}  // namespace clusterf
