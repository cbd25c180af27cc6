#pragma once

// Named, seeded theorem-check suites over the other modules.
//
//   involution       mu_k^2 = id on matrices, seeds and Y-seeds
//   laurent          every exchange division along all walks is exact
//   ghkk             F has constant term 1 and nonnegative coefficients;
//                    g-matrices are row sign-coherent
//   g-recurrence     one-step g-vector recurrence matches the re-rooted pattern
//   rho              tropicalized y-variables equal S g_u^t
//   f-exchange       the F-polynomial exchange identity, as exact polynomials
//   finv-recurrence  one-edge change of F_u[S g_u'] matches the g-formula
//   finv-invariance  (u || u')_F is constant over vertices, symmetric, >= 0
//   separation       compatible <=> sign-coherent <=> (u || u')_F == 0

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clusterf/explorer.hpp"
#include "clusterf/invariant.hpp"
#include "clusterf/seed.hpp"

namespace clusterf {

struct SuiteConfig {
  ExchangeMatrix matrix;
  std::size_t depth = 4;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::optional<SkewSymmetrizer> symmetrizer;
  std::size_t cap = kDefaultExploreCap;

  void validate() const;
};

struct SuiteReport {
  std::string name;
  bool passed = true;
  std::size_t assertions = 0;
  // Inputs and both sides of the first violated equality; null on success.
  nlohmann::json counterexample;
};

const std::vector<std::string>& suite_names();
// Throws InvalidArgument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

nlohmann::json to_json(const SuiteConfig& cfg);
nlohmann::json to_json(const SuiteReport& r);

// Both sides of
//   (1+y_{k;t'})^{-[-g_{k;u}^{t'}]_+} F_u^{t'}(y_{t'}) = (1+y_{k;t})^{-[-g_{k;u}^t]_+} F_u^t(y_t)
// with y_{t'} rewritten in y_t and both sides multiplied by (1+y_k)^M.
struct FExchangeSides {
  LaurentPoly lhs;
  LaurentPoly rhs;
  std::int64_t clearing_power;  // M
  bool holds() const { return lhs == rhs; }
};

FExchangeSides f_exchange_sides(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const MutationSequence& w,
                                std::size_t k);
bool verify_f_exchange(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const MutationSequence& w,
                       std::size_t k);

// Curated skew-symmetrizable matrices used alongside random skew-symmetric ones.
struct GalleryEntry {
  std::string name;
  ExchangeMatrix matrix;
};
const std::vector<GalleryEntry>& gallery();
std::optional<ExchangeMatrix> gallery_matrix(const std::string& name);

// Skew-symmetric n x n with off-diagonal entries uniform in [-bound, bound].
ExchangeMatrix random_skew_symmetric(std::mt19937_64& rng, std::size_t n, std::int64_t bound = 3);

// One representative per distinct cluster variable found at vertices of
// depth <= depth, identified by root expansion, in discovery order.
std::vector<ClusterMonomialRef> distinct_variables(const ExchangeMatrix& b0, std::size_t depth);

}  // namespace clusterf
