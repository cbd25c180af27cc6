#include "clusterf/verifier.hpp"

#include <functional>
#include <map>
#include <set>

#include "clusterf/errors.hpp"
#include "clusterf/io.hpp"
#include "clusterf/principal.hpp"

namespace clusterf {

using nlohmann::json;

void SuiteConfig::validate() const {
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  if (cap < 1) throw InvalidArgument("cap must be at least 1");
  if (symmetrizer) matrix.validate_symmetrizer(*symmetrizer);
}

const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> g = {
      {"A1", ExchangeMatrix::from_rows({{0}})},
      {"A2", ExchangeMatrix::from_rows({{0, 1}, {-1, 0}})},
      {"A3", ExchangeMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})},
      {"B2", ExchangeMatrix::from_rows({{0, 2}, {-1, 0}})},
      {"C3", ExchangeMatrix::from_rows({{0, 1, 0}, {-1, 0, 2}, {0, -1, 0}})},
      {"G2", ExchangeMatrix::from_rows({{0, 1}, {-3, 0}})},
      {"Markov", ExchangeMatrix::from_rows({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}})},
  };
  return g;
}

std::optional<ExchangeMatrix> gallery_matrix(const std::string& name) {
  for (const auto& e : gallery())
    if (e.name == name) return e.matrix;
  return std::nullopt;
}

ExchangeMatrix random_skew_symmetric(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> entry(-bound, bound);
  IntVector b(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      b[i * n + j] = entry(rng);
      b[j * n + i] = -b[i * n + j];
    }
  }
  return ExchangeMatrix(n, std::move(b));
}

std::vector<ClusterMonomialRef> distinct_variables(const ExchangeMatrix& b0, std::size_t depth) {
  const std::size_t n = b0.rank();
  auto pattern = cluster_pattern(b0);
  std::set<std::string> seen;
  std::vector<ClusterMonomialRef> out;
  for (const auto& path : reduced_sequences(n, depth)) {
    auto entry = pattern->at(path);
    for (std::size_t k = 0; k < n; ++k)
      if (seen.insert(canonical_key(entry->seed.cluster[k])).second)
        out.push_back(ClusterMonomialRef::variable(path, n, k));
  }
  return out;
}

FExchangeSides f_exchange_sides(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const MutationSequence& w,
                                std::size_t k) {
  const std::size_t n = b0.rank();
  check_direction(k, n);
  ExchangeMatrix bt = b0;
  for (std::size_t s : w.steps()) bt = mutate_matrix(bt, s);
  const GFData at_t = gf_with_respect_to(b0, u, w);
  const GFData at_t2 = gf_with_respect_to(b0, u, w.then(k));
  const std::int64_t a = pos_part(-at_t.g[k]);
  const std::int64_t a2 = pos_part(-at_t2.g[k]);

  // Each side is a sum of Laurent monomials in y_t times (1+y_k)^{-E};
  // bucket them by E.
  std::map<std::int64_t, LaurentPoly> lhs_parts, rhs_parts;
  auto bucket = [&](std::map<std::int64_t, LaurentPoly>& parts, std::int64_t e) -> LaurentPoly& {
    return parts.try_emplace(e, LaurentPoly(n)).first->second;
  };
  for (const auto& [v, c] : at_t2.F.terms()) {
    ExponentVector m(n, 0);
    std::int64_t e = a2;
    m[k] = checked_sub(a2, v[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const std::int64_t bki = bt(k, i);
      m[i] = checked_add(m[i], v[i]);
      m[k] = checked_add(m[k], checked_mul(v[i], pos_part(bki)));
      e = checked_add(e, checked_mul(v[i], bki));
    }
    bucket(lhs_parts, e) += LaurentPoly::monomial(std::move(m), c);
  }
  bucket(rhs_parts, a) += at_t.F;

  std::int64_t big_m = std::max(lhs_parts.rbegin()->first, rhs_parts.rbegin()->first);
  const LaurentPoly one_plus_yk = LaurentPoly::constant(n, 1) + LaurentPoly::variable(n, k);
  auto clear = [&](const std::map<std::int64_t, LaurentPoly>& parts) {
    LaurentPoly total(n);
    for (const auto& [e, p] : parts) total += p * one_plus_yk.pow(static_cast<std::uint64_t>(big_m - e));
    return total;
  };
  return {clear(lhs_parts), clear(rhs_parts), big_m};
}

bool verify_f_exchange(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const MutationSequence& w,
                       std::size_t k) {
  return f_exchange_sides(b0, u, w, k).holds();
}

namespace {

// Shared state of a running suite: counts assertions and records the
// first failure.
class Run {
 public:
  Run(std::string name, const SuiteConfig& cfg) : cfg_(cfg) { report_.name = std::move(name); }

  bool check(bool ok, const std::function<json()>& payload) {
    ++report_.assertions;
    if (!ok && report_.passed) record(payload());
    return ok;
  }

  void fail(json payload) {
    ++report_.assertions;
    if (report_.passed) record(std::move(payload));
  }

  bool failed() const { return !report_.passed; }
  SuiteReport take() { return std::move(report_); }

 private:
  void record(json payload) {
    report_.passed = false;
    json cmd = json::array({"clusterf", "verify", "<matrix.json>", "--suite", report_.name, "--depth",
                            std::to_string(cfg_.depth), "--trials", std::to_string(cfg_.trials), "--seed",
                            std::to_string(cfg_.seed), "--cap", std::to_string(cfg_.cap)});
    if (cfg_.symmetrizer) {
      std::string s;
      for (std::int64_t v : cfg_.symmetrizer->s) s += (s.empty() ? "" : ",") + std::to_string(v);
      cmd.push_back("--symmetrizer");
      cmd.push_back(s);
    }
    if (!payload.is_object()) payload = json{{"detail", std::move(payload)}};
    payload["matrix"] = io::to_json(cfg_.matrix);
    payload["replay"] = std::move(cmd);
    report_.counterexample = std::move(payload);
  }

  const SuiteConfig& cfg_;
  SuiteReport report_;
};

std::vector<MutationSequence> edge_sources(std::size_t n, std::size_t depth) {
  return reduced_sequences(n, depth == 0 ? 0 : depth - 1);
}

json seq_json(const MutationSequence& s) { return io::to_json(s); }

json inspect(const std::string& sub, std::initializer_list<std::string> args) {
  json r = json::array({"clusterf", sub, "<matrix.json>"});
  for (const auto& a : args) r.push_back(a);
  return r;
}

std::string seq_arg(const MutationSequence& s) {
  std::string out;
  for (std::int64_t v : s.to_one_based()) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

void check_involution_at(Run& run, const ExchangeMatrix& b, const MutationSequence& path) {
  const Seed seed = cluster_pattern(b)->at(path)->seed;
  const YSeed yseed = y_pattern(b)->at(path)->seed;
  for (std::size_t k = 0; k < b.rank(); ++k) {
    auto payload = [&](const char* what) {
      return [&, what] {
        return json{{"mutated_matrix", io::to_json(b)}, {"vertex", seq_json(path)}, {"direction", k + 1}, {"object", what},
                    {"inspect", inspect("mutate", {"--seq", seq_arg(path.then(k).then(k))})}};
      };
    };
    run.check(mutate_matrix(mutate_matrix(b, k), k) == b, payload("matrix"));
    const Seed twice = mutate_seed(mutate_seed(seed, k), k);
    run.check(twice.matrix == seed.matrix && twice.cluster == seed.cluster, payload("seed"));
    run.check(mutate_y_seed(mutate_y_seed(yseed, k), k) == yseed, payload("y-seed"));
    if (run.failed()) return;
  }
}

MutationSequence random_walk(std::mt19937_64& rng, std::size_t n, std::size_t length) {
  std::vector<std::size_t> steps;
  std::uniform_int_distribution<std::size_t> dir(0, n - 1);
  while (steps.size() < length) {
    const std::size_t k = dir(rng);
    if (n > 1 && !steps.empty() && steps.back() == k) continue;
    steps.push_back(k);
    if (n == 1) break;
  }
  return MutationSequence(std::move(steps));
}

SuiteReport suite_involution(const SuiteConfig& cfg) {
  Run run("involution", cfg);
  std::mt19937_64 rng(cfg.seed);
  // The configured matrix along every prefix of a full-depth walk; random
  // and gallery matrices along short walks, since wild types grow fast.
  std::vector<std::pair<ExchangeMatrix, std::size_t>> work{{cfg.matrix, cfg.depth}};
  std::uniform_int_distribution<std::size_t> rank(1, 4);
  for (std::size_t t = 0; t < cfg.trials; ++t) work.emplace_back(random_skew_symmetric(rng, rank(rng)), std::min<std::size_t>(cfg.depth, 2));
  for (const char* name : {"B2", "C3", "G2"}) work.emplace_back(*gallery_matrix(name), std::min<std::size_t>(cfg.depth, 4));
  for (const auto& [b, len] : work) {
    const MutationSequence walk = random_walk(rng, b.rank(), len);
    MutationSequence prefix;
    check_involution_at(run, b, prefix);
    for (std::size_t k : walk.steps()) {
      if (run.failed()) break;
      prefix = prefix.then(k);
      check_involution_at(run, b, prefix);
    }
    if (run.failed()) break;
  }
  return run.take();
}

SuiteReport suite_laurent(const SuiteConfig& cfg) {
  Run run("laurent", cfg);
  const std::size_t n = cfg.matrix.rank();
  auto trivial = cluster_pattern(cfg.matrix);
  auto principal = principal_pattern(cfg.matrix);
  for (const auto& path : reduced_sequences(n, cfg.depth)) {
    try {
      auto t = trivial->at(path);
      auto p = principal->at(path);
      bool ok = true;
      for (std::size_t k = 0; k < n; ++k) {
        // y = 1 in the principal variable must give the trivial one.
        std::vector<LaurentPoly::Term> terms;
        for (const auto& [e, c] : p->seed.cluster[k].terms())
          terms.emplace_back(ExponentVector(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n)), c);
        ok = ok && LaurentPoly::from_terms(n, std::move(terms)) == t->seed.cluster[k];
      }
      run.check(ok, [&] {
        return json{{"vertex", seq_json(path)}, {"error", "principal specialization differs from trivial expansion"}};
      });
    } catch (const Error& e) {
      run.fail({{"vertex", seq_json(path)}, {"error", e.what()}, {"inspect", inspect("expand", {"--monomial", "{\"path\":" + seq_json(path).dump() + ",\"exponents\":" + json(IntVector(n, 1)).dump() + "}"})}});
    }
    if (run.failed()) break;
  }
  return run.take();
}

SuiteReport suite_ghkk(const SuiteConfig& cfg) {
  Run run("ghkk", cfg);
  const std::size_t n = cfg.matrix.rank();
  auto principal = principal_pattern(cfg.matrix);
  for (const auto& path : reduced_sequences(n, cfg.depth)) {
    try {
      auto p = principal->at(path);
      std::vector<IntVector> gs;
      for (const auto& gf : p->gf) {
        // Re-assert the F-polynomial properties on the cached value.
        run.check(gf.F.constant_term() == 1 && gf.F.all_coefficients_positive() && gf.F.all_exponents_nonnegative(),
                  [&] { return json{{"vertex", seq_json(path)}, {"F", io::to_json(gf.F)}}; });
        gs.push_back(gf.g);
      }
      run.check(rows_sign_coherent(gs), [&] { return json{{"vertex", seq_json(path)}, {"g_vectors", gs}}; });
      const auto tracked = principal_g_vectors(cfg.matrix, path);
      run.check(tracked == gs, [&] {
        return json{{"vertex", seq_json(path)}, {"g_vectors", gs}, {"tracked", tracked}};
      });
    } catch (const Error& e) {
      run.fail({{"vertex", seq_json(path)}, {"error", e.what()}});
    }
    if (run.failed()) break;
  }
  return run.take();
}

SuiteReport suite_g_recurrence(const SuiteConfig& cfg) {
  Run run("g-recurrence", cfg);
  const std::size_t n = cfg.matrix.rank();
  const auto vars = distinct_variables(cfg.matrix, cfg.depth);
  for (const auto& w : edge_sources(n, cfg.depth)) {
    ExchangeMatrix bw = cfg.matrix;
    for (std::size_t s : w.steps()) bw = mutate_matrix(bw, s);
    for (const auto& u : vars) {
      const IntVector gw = g_vector_with_respect_to(cfg.matrix, u, w);
      for (std::size_t k = 0; k < n; ++k) {
        const IntVector stepped = g_recurrence_step(gw, bw, k);
        const IntVector direct = g_vector_with_respect_to(cfg.matrix, u, w.then(k));
        run.check(stepped == direct, [&] {
          return json{{"u", io::to_json(u)}, {"vertex", seq_json(w)}, {"direction", k + 1}, {"recurrence", stepped},
                      {"pattern", direct},
                      {"inspect", inspect("gf", {"--monomial", io::to_json(u).dump(), "--at", seq_arg(w.then(k))})}};
        });
        if (run.failed()) return run.take();
      }
    }
  }
  return run.take();
}

SuiteReport suite_rho(const SuiteConfig& cfg) {
  Run run("rho", cfg);
  const std::size_t n = cfg.matrix.rank();
  const SkewSymmetrizer sym = resolve_symmetrizer(cfg.matrix, cfg.symmetrizer);
  const auto vars = distinct_variables(cfg.matrix, cfg.depth);
  for (const auto& t : reduced_sequences(n, cfg.depth)) {
    for (const auto& u : vars) {
      const IntVector q = sym.apply(gf_with_respect_to(cfg.matrix, u, t).g);
      for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t rho = rho_eval(cfg.matrix, u, t, i, sym);
        run.check(rho == q[i], [&] {
          return json{{"u", io::to_json(u)}, {"target", seq_json(t)}, {"index", i + 1}, {"rho", rho}, {"s_g", q[i]}};
        });
        if (run.failed()) return run.take();
      }
    }
  }
  return run.take();
}

SuiteReport suite_f_exchange(const SuiteConfig& cfg) {
  Run run("f-exchange", cfg);
  const std::size_t n = cfg.matrix.rank();
  const auto vars = distinct_variables(cfg.matrix, cfg.depth);
  for (const auto& w : edge_sources(n, cfg.depth)) {
    for (const auto& u : vars) {
      for (std::size_t k = 0; k < n; ++k) {
        const FExchangeSides sides = f_exchange_sides(cfg.matrix, u, w, k);
        run.check(sides.holds(), [&] {
          return json{{"u", io::to_json(u)}, {"vertex", seq_json(w)}, {"direction", k + 1},
                      {"clearing_power", sides.clearing_power}, {"lhs", io::to_json(sides.lhs)},
                      {"rhs", io::to_json(sides.rhs)}};
        });
        if (run.failed()) return run.take();
      }
    }
  }
  return run.take();
}

ClusterMonomialRef random_monomial(std::mt19937_64& rng, const std::vector<MutationSequence>& vertices,
                                   std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, vertices.size() - 1);
  std::uniform_int_distribution<std::int64_t> power(0, 2);
  IntVector v(n);
  for (auto& x : v) x = power(rng);
  return {vertices[pick(rng)], std::move(v)};
}

SuiteReport suite_finv_recurrence(const SuiteConfig& cfg) {
  Run run("finv-recurrence", cfg);
  const std::size_t n = cfg.matrix.rank();
  const SkewSymmetrizer sym = resolve_symmetrizer(cfg.matrix, cfg.symmetrizer);
  std::mt19937_64 rng(cfg.seed);
  const auto vertices = reduced_sequences(n, cfg.depth);
  std::uniform_int_distribution<std::size_t> dir(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick(0, vertices.size() - 1);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const ClusterMonomialRef u = random_monomial(rng, vertices, n);
    const ClusterMonomialRef u2 = random_monomial(rng, vertices, n);
    const MutationSequence& w = vertices[pick(rng)];
    const std::size_t k = dir(rng);
    const FinvRecurrenceSides sides = finv_recurrence_sides(cfg.matrix, u, u2, w, k, sym);
    run.check(sides.holds(), [&] {
      return json{{"u", io::to_json(u)}, {"u2", io::to_json(u2)}, {"vertex", seq_json(w)}, {"direction", k + 1},
                  {"lhs", sides.lhs}, {"rhs", sides.rhs}, {"symmetrizer", sym.s}};
    });
    if (run.failed()) break;
  }
  return run.take();
}

SuiteReport suite_finv_invariance(const SuiteConfig& cfg) {
  Run run("finv-invariance", cfg);
  const std::size_t n = cfg.matrix.rank();
  const SkewSymmetrizer sym = resolve_symmetrizer(cfg.matrix, cfg.symmetrizer);
  const auto vars = distinct_variables(cfg.matrix, cfg.depth);
  const auto vertices = reduced_sequences(n, cfg.depth);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i; j < vars.size(); ++j) {
      const FInvariantResult base = f_invariant(cfg.matrix, vars[i], vars[j], {}, sym);
      run.check(base.value >= 0 && base.left >= 0 && base.right >= 0,
                [&] { return json{{"u", io::to_json(vars[i])}, {"u2", io::to_json(vars[j])}, {"result", io::to_json(base)}}; });
      if (i == j) run.check(base.value == 0, [&] { return json{{"u", io::to_json(vars[i])}, {"self_invariant", base.value}}; });
      for (const auto& w : vertices) {
        const FInvariantResult here = f_invariant(cfg.matrix, vars[i], vars[j], w, sym);
        const FInvariantResult swapped = f_invariant(cfg.matrix, vars[j], vars[i], w, sym);
        run.check(here.value == base.value && swapped.value == here.value, [&] {
          return json{{"u", io::to_json(vars[i])}, {"u2", io::to_json(vars[j])}, {"root_value", base.value},
                      {"vertex", seq_json(w)}, {"value", here.value}, {"swapped_value", swapped.value},
                      {"inspect", inspect("finv", {"--u", io::to_json(vars[i]).dump(), "--u2", io::to_json(vars[j]).dump(),
                                                 "--at", seq_arg(w)})}};
        });
        if (run.failed()) return run.take();
      }
    }
  }
  return run.take();
}

SuiteReport suite_separation(const SuiteConfig& cfg) {
  Run run("separation", cfg);
  try {
    const SeparationReport rep = check_separation_theorem(cfg.matrix, cfg.cap, cfg.symmetrizer);
    for (const auto& p : rep.pairs)
      run.check(p.consistent(), [&] { return io::to_json(rep); });
  } catch (const IncompleteGraph& e) {
    run.fail({{"error", e.what()}});
  }
  return run.take();
}

const std::map<std::string, SuiteReport (*)(const SuiteConfig&)>& suite_table() {
  static const std::map<std::string, SuiteReport (*)(const SuiteConfig&)> t = {
      {"involution", suite_involution},
      {"laurent", suite_laurent},
      {"ghkk", suite_ghkk},
      {"g-recurrence", suite_g_recurrence},
      {"rho", suite_rho},
      {"f-exchange", suite_f_exchange},
      {"finv-recurrence", suite_finv_recurrence},
      {"finv-invariance", suite_finv_invariance},
      {"separation", suite_separation},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"involution",   "laurent",         "ghkk",
                                                 "g-recurrence", "rho",             "f-exchange",
                                                 "finv-recurrence", "finv-invariance", "separation"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  const auto& table = suite_table();
  auto it = table.find(name);
  if (it == table.end()) throw InvalidArgument("unknown suite \"" + name + "\"");
  cfg.validate();
  return it->second(cfg);
}

json to_json(const SuiteConfig& cfg) {
  json j{{"matrix", io::to_json(cfg.matrix)}, {"depth", cfg.depth}, {"trials", cfg.trials},
         {"seed", cfg.seed}, {"cap", cfg.cap}};
  j["symmetrizer"] = cfg.symmetrizer ? json(cfg.symmetrizer->s) : json(nullptr);
  return j;
}

json to_json(const SuiteReport& r) {
  return {{"suite", r.name}, {"passed", r.passed}, {"assertions", r.assertions}, {"counterexample", r.counterexample}};
}

}  // namespace clusterf
