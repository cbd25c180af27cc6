// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "clusterf/errors.hpp"
#include "clusterf/explorer.hpp"
#include "clusterf/principal.hpp"
#include "clusterf/verifier.hpp"
#include "oracles.hpp"

using namespace clusterf;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

ExchangeMatrix g(const char* name) { return *gallery_matrix(name); }

SuiteConfig cfg(const ExchangeMatrix& b, std::size_t depth, std::size_t trials = 200,
                std::optional<SkewSymmetrizer> s = std::nullopt) {
  SuiteConfig c{b, depth, trials, 1, std::move(s), kDefaultExploreCap};
  return c;
}

void suite(Outcome& o, const char* suite_name, const char* matrix, const SuiteConfig& c) {
  const auto r = run_suite(suite_name, c);
  o.require(r.passed, std::string(suite_name) + " on " + matrix + ": " + r.counterexample.dump());
}

// Longest BFS path in the exchange graph: every seed is reached within it.
std::size_t graph_depth(const ExchangeMatrix& b) {
  std::size_t d = 0;
  for (const auto& node : explore(b).nodes) d = std::max(d, node.seed.path.size());
  return d;
}

Outcome criterion1() {
  Outcome o;
  const auto f = LaurentPoly::from_terms(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}});
  const IntVector r{-2, 1};
  const auto t0 = std::chrono::steady_clock::now();
  const auto v = tropical_eval(f, r);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  o.require(v == 0, "F[r] = " + std::to_string(v));
  o.require(ms < 1.0, "took " + std::to_string(ms) + " ms");
  return o;
}

Outcome criterion2() {
  Outcome o;
  // The suite adds 200 random skew-symmetric matrices and B2, C3, G2.
  suite(o, "involution", "A2", cfg(g("A2"), 4, 200));
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const char* name : {"A2", "A3", "B2", "G2"}) {
    const auto b = g(name);
    const std::size_t d = graph_depth(b);
    suite(o, "laurent", name, cfg(b, d));
    suite(o, "ghkk", name, cfg(b, d));
  }
  suite(o, "laurent", "Markov", cfg(g("Markov"), 6));
  suite(o, "ghkk", "Markov", cfg(g("Markov"), 6));
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const char* name : {"A1", "A2", "A3", "B2", "C3", "G2", "Markov"}) suite(o, "g-recurrence", name, cfg(g(name), 5));
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (const char* name : {"A2", "B2", "A3"}) suite(o, "rho", name, cfg(g(name), 4));
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const char* name : {"A2", "A3", "B2", "C3", "G2"}) suite(o, "finv-recurrence", name, cfg(g(name), 4, 200));
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const char* name : {"A2", "B2", "G2"}) {
    o.require(reduced_sequences(2, 5).size() >= 10, "fewer than 10 vertices");
    o.require(distinct_variables(g(name), 5).size() == explore(g(name)).variable_count(),
              std::string("not every variable of ") + name + " reached");
    suite(o, "finv-invariance", name, cfg(g(name), 5));
  }
  return o;
}

// Adjacent (compatible) pairs give 0, the rest are positive, and each value
// agrees with brute-force maxima over oracle (g, F) data.
void table_check(Outcome& o, const ExchangeMatrix& b, const SkewSymmetrizer& s, std::size_t want_zero,
                 std::size_t want_positive) {
  const auto graph = explore(b);
  std::vector<IntVector> rows(b.rank(), IntVector(b.rank()));
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) rows[i][j] = b(i, j);
  std::vector<std::pair<IntVector, LaurentPoly>> data;
  for (const auto& u : graph.variable_refs) {
    const auto st = oracle::gf_along(rows, u.path.steps());
    std::size_t k = 0;
    while (u.exponents[k] == 0) ++k;
    data.emplace_back(s.apply(st.g[k]), st.f[k]);
  }
  std::size_t zero = 0, positive = 0;
  for (std::size_t i = 0; i < data.size(); ++i)
    for (std::size_t j = i + 1; j < data.size(); ++j) {
      const auto want = oracle::brute_tropical(data[i].second, data[j].first) +
                        oracle::brute_tropical(data[j].second, data[i].first);
      const auto got = f_invariant(b, graph.variable_refs[i], graph.variable_refs[j], {}, s).value;
      o.require(got == want, "pair " + std::to_string(i + 1) + "," + std::to_string(j + 1) + ": " +
                                 std::to_string(got) + " vs oracle " + std::to_string(want));
      const bool adj = compatible(graph, graph.variable_refs[i], graph.variable_refs[j]);
      o.require(adj == (got == 0), "adjacency disagrees with the F-invariant");
      (got == 0 ? zero : positive)++;
    }
  o.require(zero == want_zero && positive == want_positive,
            std::to_string(zero) + " zero / " + std::to_string(positive) + " positive");
}

Outcome criterion8() {
  Outcome o;
  const auto b = g("A2");
  o.require(explore(b).variable_count() == 5, "A2 does not have 5 variables");
  table_check(o, b, SkewSymmetrizer{{1, 1}}, 5, 5);
  const auto x1 = ClusterMonomialRef::variable({}, 2, 0);
  const auto minus10 = ClusterMonomialRef::variable(MutationSequence({0, 1}), 2, 1);
  o.require(gf_of_monomial(b, minus10).g == IntVector{-1, 0}, "wrong g for the reference variable");
  o.require(f_invariant(b, x1, minus10, {}, SkewSymmetrizer{{1, 1}}).value == 1, "(x1 || g=(-1,0))_F != 1");
  return o;
}

Outcome criterion9() {
  Outcome o;
  struct Size {
    const char* name;
    std::size_t vars, clusters;
  };
  for (const auto& sz : {Size{"A2", 5, 5}, Size{"B2", 6, 6}, Size{"G2", 8, 8}, Size{"A3", 9, 14}}) {
    const auto b = g(sz.name);
    const auto o_counts = oracle::bfs_oracle(b, 1000);
    const auto r = check_separation_theorem(b);
    o.require(r.passed(), std::string("separation fails on ") + sz.name);
    o.require(r.variables == sz.vars && r.clusters == sz.clusters, std::string("graph size of ") + sz.name);
    o.require(o_counts.variables == sz.vars && o_counts.clusters == sz.clusters,
              std::string("oracle graph size of ") + sz.name);
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (const char* name : {"A2", "B2"}) suite(o, "f-exchange", name, cfg(g(name), 4));
  return o;
}

Outcome criterion11() {
  Outcome o;
  const auto b = g("B2");
  const SkewSymmetrizer s{{1, 2}};
  for (const auto& w : reduced_sequences(2, 4))
    for (const auto& u : distinct_variables(b, 4)) {
      const auto deg = gf_with_respect_to(b, u, w).F.max_exponents();
      for (std::size_t k = 0; k < 2; ++k) {
        const auto v = f_inj(b, u, ClusterMonomialRef::variable(w, 2, k), w, s);
        o.require(v == s[k] * deg[k], "f_inj(u, x_{k;w}, w) = " + std::to_string(v) + " at w = " + to_string(w));
      }
    }
  suite(o, "finv-recurrence", "B2", cfg(b, 4, 200, s));
  suite(o, "finv-invariance", "B2", cfg(b, 5, 200, s));
  suite(o, "separation", "B2", cfg(b, 0, 1, s));
  table_check(o, b, s, 6, 9);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "tropical worked example F[(-2,1)] = 0", 1.0, criterion1},
      {2, "involution suite: 200 random + B2, C3, G2", 5.0, criterion2},
      {3, "Laurent + GHKK: A2, A3, B2, G2 full graphs, Markov depth 6", 60.0, criterion3},
      {4, "g-recurrence vs pattern, rank <= 3 gallery, depth 5", 60.0, criterion4},
      {5, "rho_eval = S g on A2, B2, A3, depth 4", 60.0, criterion5},
      {6, "F-invariant one-edge recurrence, 200 tuples per gallery matrix", 60.0, criterion6},
      {7, "F-invariant constant over >= 10 vertices on A2, B2, G2", 60.0, criterion7},
      {8, "A2 F-invariant table against brute-force oracle", 60.0, criterion8},
      {9, "separation: compatible <=> sign-coherent <=> F-invariant 0", 120.0, criterion9},
      {10, "F-polynomial exchange identity on A2, B2, depth 4", 60.0, criterion10},
      {11, "B2 with S = diag(1,2): max-degree identity and invariance", 60.0, criterion11},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    clear_pattern_caches();
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs >= c.limit_s) {
      o.ok = false;
      o.detail = "time limit " + std::to_string(c.limit_s) + " s exceeded";
    }
    failures += !o.ok;
    std::printf("[%s] criterion %2d: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                o.ok ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
