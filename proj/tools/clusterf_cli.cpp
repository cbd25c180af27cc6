// clusterf: command-line front end. All directions and indices are 1-based.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "clusterf/errors.hpp"
#include "clusterf/io.hpp"
#include "clusterf/principal.hpp"
#include "clusterf/verifier.hpp"

namespace {

using clusterf::io::json;
namespace io = clusterf::io;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Common {
  std::string matrix_file;
  std::string gallery;
  std::string output;
  bool json = false;
};

struct Outcome {
  std::string text;
  int code = kOk;
};

clusterf::ExchangeMatrix load_matrix(const Common& c) {
  if (!c.gallery.empty()) {
    auto m = clusterf::gallery_matrix(c.gallery);
    if (!m) throw io::FormatError("unknown gallery matrix \"" + c.gallery + "\"");
    return *m;
  }
  if (c.matrix_file.empty()) throw io::FormatError("a matrix file or --gallery is required");
  return io::matrix_from_json(io::read_json_file(c.matrix_file));
}

// Inline JSON when the argument looks like an object, a file path otherwise.
clusterf::ClusterMonomialRef load_monomial(const std::string& arg, std::size_t n) {
  const auto first = arg.find_first_not_of(" \t\n");
  const json j = first != std::string::npos && arg[first] == '{' ? io::parse_json_text(arg, "<inline>")
                                                                 : io::read_json_file(arg);
  return io::monomial_from_json(j, n);
}

std::optional<clusterf::SkewSymmetrizer> load_symmetrizer(const std::string& arg, const clusterf::ExchangeMatrix& b) {
  if (arg.empty()) return std::nullopt;
  clusterf::SkewSymmetrizer s{io::parse_int_list(arg)};
  b.validate_symmetrizer(s);
  return s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string matrix_text(const clusterf::ExchangeMatrix& b) { return clusterf::to_string(b) + "\n"; }

std::string join(const clusterf::IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ")";
}

std::string one_based_list(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i] + 1);
  return out + "}";
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("matrix", c.matrix_file, "Matrix JSON file {\"n\": n, \"b\": [[...]]}");
  sub->add_option("--gallery", c.gallery, "Use a built-in matrix instead of a file (A1 A2 A3 B2 C3 G2 Markov)");
  sub->add_option("-o,--output", c.output, "Write the result to a file instead of standard output");
  sub->add_flag("--json", c.json, "Machine-readable output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cluster-algebra mutation, g-vectors, F-polynomials and F-invariants.\n"
               "Directions and indices are 1-based throughout."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "clusterf 0.1.0");

  Common common;
  std::string seq, monomial, u_arg, u2_arg, at, sym_arg, suite = "all";
  std::size_t cap = clusterf::kDefaultExploreCap, depth = 4, trials = 200;
  std::uint64_t rng_seed = 1;

  auto* mutate = app.add_subcommand("mutate", "Mutate the matrix along a sequence");
  add_common(mutate, common);
  mutate->add_option("--seq", seq, "Directions, e.g. 1,2,1")->required();

  auto* expand = app.add_subcommand("expand", "Laurent expansion of a cluster monomial in the initial cluster");
  add_common(expand, common);
  expand->add_option("--monomial", monomial, "{\"path\": [...], \"exponents\": [...]} inline or as a file")->required();

  auto* gf = app.add_subcommand("gf", "g-vector and F-polynomial of a cluster monomial");
  add_common(gf, common);
  gf->add_option("--monomial", monomial, "{\"path\": [...], \"exponents\": [...]} inline or as a file")->required();
  gf->add_option("--at", at, "Re-root at the vertex reached by this sequence (default: initial vertex)");

  auto* finv = app.add_subcommand("finv", "F-invariant of two cluster monomials");
  add_common(finv, common);
  finv->add_option("--u", u_arg, "First monomial")->required();
  finv->add_option("--u2", u2_arg, "Second monomial")->required();
  finv->add_option("--at", at, "Vertex at which to evaluate (default: initial vertex)");
  finv->add_option("--symmetrizer", sym_arg, "Diagonal of S, e.g. 1,2 (default: minimal)");

  auto* explore = app.add_subcommand("explore", "Breadth-first enumeration of the exchange graph");
  add_common(explore, common);
  explore->add_option("--cap", cap, "Maximum number of clusters")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run theorem-check suites");
  add_common(verify, common);
  verify->add_option("--suite", suite, "Suite name or \"all\"");
  verify->add_option("--depth", depth, "Maximum mutation-walk length");
  verify->add_option("--trials", trials, "Randomized sample count")->check(CLI::PositiveNumber);
  verify->add_option("--seed", rng_seed, "RNG seed");
  verify->add_option("--symmetrizer", sym_arg, "Diagonal of S, e.g. 1,2 (default: minimal)");
  verify->add_option("--cap", cap, "Cluster cap for the separation suite")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Outcome out;
  try {
    const clusterf::ExchangeMatrix b = load_matrix(common);
    const std::size_t n = b.rank();

    if (mutate->parsed()) {
      const auto path = io::parse_sequence(seq, n);
      clusterf::ExchangeMatrix m = b;
      for (std::size_t k : path.steps()) m = clusterf::mutate_matrix(m, k);
      out.text = common.json ? dump(io::to_json(m)) : matrix_text(m);
    } else if (expand->parsed()) {
      const auto u = load_monomial(monomial, n);
      const auto p = clusterf::expand_monomial(b, u);
      out.text = common.json ? dump(io::to_json(p)) : clusterf::to_string(p) + "\n";
    } else if (gf->parsed()) {
      const auto u = load_monomial(monomial, n);
      const auto w = io::parse_sequence(at, n);
      const auto data = clusterf::gf_with_respect_to(b, u, w);
      if (common.json) {
        out.text = dump(io::to_json(data));
      } else {
        const auto ys = clusterf::variable_names("y", n);
        out.text = "g = " + join(data.g) + "\nF = " + clusterf::to_string(data.F, ys) + "\n";
      }
    } else if (finv->parsed()) {
      const auto u = load_monomial(u_arg, n);
      const auto u2 = load_monomial(u2_arg, n);
      const auto w = io::parse_sequence(at, n);
      const auto sym = load_symmetrizer(sym_arg, b);
      const auto r = clusterf::f_invariant(b, u, u2, w, sym);
      out.text = common.json ? dump(io::to_json(r))
                             : "(u || u')_F = " + std::to_string(r.value) + " = " + std::to_string(r.left) + " + " +
                                   std::to_string(r.right) + " at vertex " + clusterf::to_string(r.vertex) + "\n";
    } else if (explore->parsed()) {
      const auto g = clusterf::explore(b, cap);
      if (common.json) {
        out.text = dump(io::graph_export(g));
      } else {
        std::ostringstream s;
        s << "variables: " << g.variable_count() << "\nclusters: " << g.cluster_count()
          << "\ncomplete: " << (g.complete ? "yes" : "no (cap reached)") << "\n";
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
          s << "  " << i + 1 << ": " << one_based_list(g.sorted_cluster(i)) << " via "
            << clusterf::to_string(g.nodes[i].seed.path) << "\n";
        out.text = s.str();
      }
    } else if (verify->parsed()) {
      clusterf::SuiteConfig cfg{b, depth, trials, rng_seed, load_symmetrizer(sym_arg, b), cap};
      cfg.validate();
      std::vector<std::string> names;
      if (suite == "all") {
        names = clusterf::suite_names();
      } else {
        const auto& known = clusterf::suite_names();
        if (std::find(known.begin(), known.end(), suite) == known.end())
          throw clusterf::InvalidArgument("unknown suite \"" + suite + "\"");
        names.push_back(suite);
      }
      bool all = true;
      json reports = json::array();
      std::ostringstream s;
      for (const auto& name : names) {
        const auto r = clusterf::run_suite(name, cfg);
        all = all && r.passed;
        reports.push_back(clusterf::to_json(r));
        s << (r.passed ? "PASS " : "FAIL ") << name << " (" << r.assertions << " assertions)\n";
        if (!r.passed) s << "  counterexample: " << r.counterexample.dump() << "\n";
      }
      out.text = common.json ? dump({{"config", clusterf::to_json(cfg)}, {"reports", reports}, {"passed", all}})
                             : s.str();
      out.code = all ? kOk : kVerifyFailed;
    }
  } catch (const clusterf::InvalidArgument& e) {
    std::cerr << "clusterf: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "clusterf: " << e.what() << "\n";
    return kVerifyFailed;
  }

  if (common.output.empty()) {
    std::cout << out.text;
  } else {
    std::ofstream f(common.output);
    if (!(f << out.text)) {
      std::cerr << "clusterf: cannot write " << common.output << "\n";
      return kUsage;
    }
  }
  return out.code;
}
