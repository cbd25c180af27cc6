#pragma once

// g-vectors and F-polynomials of cluster monomials, read off the pattern
// with principal coefficients at a chosen root, and the separation formula
// that reassembles trivial-coefficient expansions from them.
//
// Convention: deg(x_i) = e_i and deg(y_j) = -B0 e_j (columns of B0);
// hat-y_k = x^{B e_k} likewise uses column k. There is no transposed mode.

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "clusterf/exact.hpp"
#include "clusterf/pattern_cache.hpp"
#include "clusterf/seed.hpp"

namespace clusterf {

// 2n x n matrix: the exchange matrix on top, coefficient rows below
// (identity at the root).
struct ExtendedMatrix {
  ExchangeMatrix exchange;
  IntVector coefficients;  // n x n, row-major

  static ExtendedMatrix principal(const ExchangeMatrix& b);
  std::int64_t operator()(std::size_t i, std::size_t j) const;
  friend bool operator==(const ExtendedMatrix&, const ExtendedMatrix&) = default;
};

ExtendedMatrix mutate_extended_matrix(const ExtendedMatrix& m, std::size_t k);

// Seed of the principal-coefficient pattern rooted at `root`. Cluster
// entries live in 2n variables ordered x_1..x_n, y_1..y_n.
struct PrincipalSeed {
  ExchangeMatrix root;
  ExtendedMatrix ext;
  std::vector<LaurentPoly> cluster;
  MutationSequence path;

  static PrincipalSeed make_root(const ExchangeMatrix& b);
};

PrincipalSeed mutate_principal(const PrincipalSeed& s, std::size_t k);

// Multidegree of cluster entry k; throws NotHomogeneous if terms disagree.
IntVector g_vector_of(const PrincipalSeed& s, std::size_t k);
// Cluster entry k at x = 1. Throws GhkkViolation unless it is a polynomial
// with nonnegative coefficients and constant term 1.
LaurentPoly f_polynomial_of(const PrincipalSeed& s, std::size_t k);

struct GFData {
  IntVector g;
  LaurentPoly F;
  friend bool operator==(const GFData&, const GFData&) = default;
};

// Cached principal pattern entry: the seed plus (g, F) of its entries.
struct PrincipalEntry {
  PrincipalSeed seed;
  std::vector<GFData> gf;

  static PrincipalEntry make_root(const ExchangeMatrix& b);
  PrincipalEntry mutated(std::size_t k) const;
};

// Trivial-coefficient pattern entry.
struct ClusterEntry {
  Seed seed;

  static ClusterEntry make_root(const ExchangeMatrix& b) { return {Seed::root(b)}; }
  ClusterEntry mutated(std::size_t k) const { return {mutate_seed(seed, k)}; }
};

// Y-pattern entry with root y-variables y_1..y_n.
struct YEntry {
  YSeed seed;

  static YEntry make_root(const ExchangeMatrix& b) { return {YSeed::root(b)}; }
  YEntry mutated(std::size_t k) const { return {mutate_y_seed(seed, k)}; }
};

using PrincipalPattern = PatternCache<PrincipalEntry>;
using ClusterPattern = PatternCache<ClusterEntry>;
using YPattern = PatternCache<YEntry>;

std::shared_ptr<const PrincipalPattern> principal_pattern(const ExchangeMatrix& root);
std::shared_ptr<const ClusterPattern> cluster_pattern(const ExchangeMatrix& root);
std::shared_ptr<const YPattern> y_pattern(const ExchangeMatrix& root);
void clear_pattern_caches();

// g = sum v_k g_k, F = prod F_k^{v_k}, with respect to the root of B0.
GFData gf_of_monomial(const ExchangeMatrix& b0, const ClusterMonomialRef& u);
// Same monomial, with respect to the vertex w (pattern rooted at mu_w(B0)).
GFData gf_with_respect_to(const ExchangeMatrix& b0, const ClusterMonomialRef& u,
                          const MutationSequence& w);

// g-vectors at `path` of the pattern rooted at `root`, tracked through the
// coefficient block without expanding any polynomial.
std::vector<IntVector> principal_g_vectors(const ExchangeMatrix& root, const MutationSequence& path);
// g-vector of u with respect to w, by the same tracking.
IntVector g_vector_with_respect_to(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const MutationSequence& w);

// Trivial-coefficient expansion of u in the root cluster of B0.
LaurentPoly expand_monomial(const ExchangeMatrix& b0, const ClusterMonomialRef& u);

// hat-y_k = prod_j x_{j;t}^{b_jk} evaluated in the seed's cluster values.
// Negative powers need monomial entries (always the case at the root);
// otherwise InvalidArgument.
LaurentPoly hat_y(const Seed& s, std::size_t k);

// F(values) for F with nonnegative exponents; values must share nvars.
LaurentPoly substitute(const LaurentPoly& f, std::span<const LaurentPoly> values);

// Expansion of u equals x^g F(hat-y_1, ..., hat-y_n) at the root of B0.
bool separation_check(const ExchangeMatrix& b0, const ClusterMonomialRef& u);

// True if every row of the matrix with columns gs is sign-coherent.
bool rows_sign_coherent(std::span<const IntVector> gs);

}  // namespace clusterf
