#include "clusterf/principal.hpp"

#include <algorithm>
#include <optional>

#include "clusterf/errors.hpp"

namespace clusterf {

ExtendedMatrix ExtendedMatrix::principal(const ExchangeMatrix& b) {
  const std::size_t n = b.rank();
  IntVector c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) c[i * n + i] = 1;
  return {b, std::move(c)};
}

std::int64_t ExtendedMatrix::operator()(std::size_t i, std::size_t j) const {
  const std::size_t n = exchange.rank();
  return i < n ? exchange(i, j) : coefficients[(i - n) * n + j];
}

ExtendedMatrix mutate_extended_matrix(const ExtendedMatrix& m, std::size_t k) {
  const std::size_t n = m.exchange.rank();
  IntVector full = m.exchange.entries();
  full.insert(full.end(), m.coefficients.begin(), m.coefficients.end());
  IntVector mutated = mutate_extended(2 * n, n, full, k);
  return {mutate_matrix(m.exchange, k), IntVector(mutated.begin() + static_cast<std::ptrdiff_t>(n * n), mutated.end())};
}

PrincipalSeed PrincipalSeed::make_root(const ExchangeMatrix& b) {
  const std::size_t n = b.rank();
  std::vector<LaurentPoly> cluster;
  cluster.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cluster.push_back(LaurentPoly::variable(2 * n, i));
  return {b, ExtendedMatrix::principal(b), std::move(cluster), {}};
}

PrincipalSeed mutate_principal(const PrincipalSeed& s, std::size_t k) {
  const std::size_t n = s.root.rank();
  check_direction(k, n);
  LaurentPoly plus = LaurentPoly::constant(2 * n, 1);
  LaurentPoly minus = LaurentPoly::constant(2 * n, 1);
  ExponentVector ymono_plus(2 * n, 0), ymono_minus(2 * n, 0);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    const std::int64_t bik = s.ext(i, k);
    if (i < n) {
      if (bik > 0) plus *= s.cluster[i].pow(static_cast<std::uint64_t>(bik));
      if (bik < 0) minus *= s.cluster[i].pow(static_cast<std::uint64_t>(-bik));
    } else {
      ymono_plus[i] = pos_part(bik);
      ymono_minus[i] = pos_part(-bik);
    }
  }
  plus = plus.shifted(ymono_plus);
  minus = minus.shifted(ymono_minus);
  PrincipalSeed out{s.root, mutate_extended_matrix(s.ext, k), s.cluster, s.path.then(k)};
  out.cluster[k] = poly_divide_exact(plus + minus, s.cluster[k]);
  return out;
}

IntVector g_vector_of(const PrincipalSeed& s, std::size_t k) {
  const std::size_t n = s.root.rank();
  check_direction(k, n);
  const LaurentPoly& x = s.cluster[k];
  if (x.is_zero()) throw ZeroPolynomial("g-vector of a zero cluster entry");
  std::optional<IntVector> degree;
  for (const auto& [e, c] : x.terms()) {
    IntVector d(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t yj = e[n + j];
      if (yj < 0) throw Error("principal cluster variable has a negative y-exponent");
      if (yj == 0) continue;
      for (std::size_t i = 0; i < n; ++i) d[i] = checked_sub(d[i], checked_mul(s.root(i, j), yj));
    }
    if (!degree) {
      degree = std::move(d);
    } else if (*degree != d) {
      throw NotHomogeneous("cluster entry " + std::to_string(k + 1) + " at " + to_string(s.path) +
                           " is not homogeneous");
    }
  }
  return *degree;
}

LaurentPoly f_polynomial_of(const PrincipalSeed& s, std::size_t k) {
  const std::size_t n = s.root.rank();
  check_direction(k, n);
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(s.cluster[k].size());
  for (const auto& [e, c] : s.cluster[k].terms())
    terms.emplace_back(ExponentVector(e.begin() + static_cast<std::ptrdiff_t>(n), e.end()), c);
  LaurentPoly f = LaurentPoly::from_terms(n, std::move(terms));
  const std::string where = "F-polynomial of entry " + std::to_string(k + 1) + " at " + to_string(s.path);
  if (f.constant_term() != 1) throw GhkkViolation(where + " has constant term " + f.constant_term().get_str());
  if (!f.all_coefficients_positive()) throw GhkkViolation(where + " has a negative coefficient");
  if (!f.all_exponents_nonnegative()) throw GhkkViolation(where + " is not a polynomial");
  return f;
}

PrincipalEntry PrincipalEntry::make_root(const ExchangeMatrix& b) {
  PrincipalEntry e{PrincipalSeed::make_root(b), {}};
  for (std::size_t k = 0; k < b.rank(); ++k) e.gf.push_back({g_vector_of(e.seed, k), f_polynomial_of(e.seed, k)});
  return e;
}

PrincipalEntry PrincipalEntry::mutated(std::size_t k) const {
  PrincipalEntry e{mutate_principal(seed, k), gf};
  e.gf[k] = {g_vector_of(e.seed, k), f_polynomial_of(e.seed, k)};
  return e;
}

std::shared_ptr<const PrincipalPattern> principal_pattern(const ExchangeMatrix& root) {
  return PatternRegistry<PrincipalEntry>::get(root);
}

std::shared_ptr<const ClusterPattern> cluster_pattern(const ExchangeMatrix& root) {
  return PatternRegistry<ClusterEntry>::get(root);
}

std::shared_ptr<const YPattern> y_pattern(const ExchangeMatrix& root) {
  return PatternRegistry<YEntry>::get(root);
}

void clear_pattern_caches() {
  PatternRegistry<PrincipalEntry>::clear();
  PatternRegistry<ClusterEntry>::clear();
  PatternRegistry<YEntry>::clear();
}

GFData gf_of_monomial(const ExchangeMatrix& b0, const ClusterMonomialRef& u) {
  const std::size_t n = b0.rank();
  u.validate(n);
  auto entry = principal_pattern(b0)->at(u.path);
  GFData out{IntVector(n, 0), LaurentPoly::constant(n, 1)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t v = u.exponents[k];
    if (v == 0) continue;
    const GFData& gk = entry->gf[k];
    for (std::size_t i = 0; i < n; ++i) out.g[i] = checked_add(out.g[i], checked_mul(v, gk.g[i]));
    out.F *= gk.F.pow(static_cast<std::uint64_t>(v));
  }
  return out;
}

GFData gf_with_respect_to(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const MutationSequence& w) {
  const std::size_t n = b0.rank();
  u.validate(n);
  w.validate(n);
  ExchangeMatrix bw = b0;
  for (std::size_t k : w.steps()) bw = mutate_matrix(bw, k);
  return gf_of_monomial(bw, {w.reversed().then(u.path).reduced(), u.exponents});
}

std::vector<IntVector> principal_g_vectors(const ExchangeMatrix& root, const MutationSequence& path) {
  const std::size_t n = root.rank();
  path.validate(n);
  ExtendedMatrix ext = ExtendedMatrix::principal(root);
  std::vector<IntVector> g(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
  for (std::size_t k : path.steps()) {
    // deg y_j = -(column j of the root matrix)
    IntVector next(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      std::int64_t v = -g[k][r];
      for (std::size_t i = 0; i < n; ++i) {
        v = checked_add(v, checked_mul(pos_part(ext(i, k)), g[i][r]));
        v = checked_sub(v, checked_mul(pos_part(ext(n + i, k)), root(r, i)));
      }
      next[r] = v;
    }
    g[k] = std::move(next);
    ext = mutate_extended_matrix(ext, k);
  }
  return g;
}

IntVector g_vector_with_respect_to(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const MutationSequence& w) {
  const std::size_t n = b0.rank();
  u.validate(n);
  w.validate(n);
  ExchangeMatrix bw = b0;
  for (std::size_t k : w.steps()) bw = mutate_matrix(bw, k);
  const auto gs = principal_g_vectors(bw, w.reversed().then(u.path).reduced());
  IntVector g(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r) g[r] = checked_add(g[r], checked_mul(u.exponents[k], gs[k][r]));
  return g;
}

LaurentPoly expand_monomial(const ExchangeMatrix& b0, const ClusterMonomialRef& u) {
  u.validate(b0.rank());
  return cluster_monomial(cluster_pattern(b0)->at(u.path)->seed, u.exponents);
}

LaurentPoly hat_y(const Seed& s, std::size_t k) {
  const std::size_t n = s.matrix.rank();
  check_direction(k, n);
  LaurentPoly r = LaurentPoly::constant(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t bjk = s.matrix(j, k);
    if (bjk > 0) r *= s.cluster[j].pow(static_cast<std::uint64_t>(bjk));
    if (bjk < 0) {
      if (!s.cluster[j].is_monomial())
        throw InvalidArgument("hat_y needs a negative power of a non-monomial cluster entry");
      r *= s.cluster[j].monomial_inverse().pow(static_cast<std::uint64_t>(-bjk));
    }
  }
  return r;
}

LaurentPoly substitute(const LaurentPoly& f, std::span<const LaurentPoly> values) {
  if (values.size() != f.nvars()) throw DimensionMismatch("substitute: need one value per variable");
  if (values.empty()) throw InvalidArgument("substitute: no variables");
  const std::size_t m = values.front().nvars();
  for (const auto& v : values)
    if (v.nvars() != m) throw DimensionMismatch("substitute: values live in different rings");
  if (!f.all_exponents_nonnegative()) throw InvalidArgument("substitute: polynomial has negative exponents");
  LaurentPoly out(m);
  for (const auto& [e, c] : f.terms()) {
    LaurentPoly term = LaurentPoly::constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term *= values[i].pow(static_cast<std::uint64_t>(e[i]));
    out += term;
  }
  return out;
}

bool separation_check(const ExchangeMatrix& b0, const ClusterMonomialRef& u) {
  const std::size_t n = b0.rank();
  const LaurentPoly lhs = expand_monomial(b0, u);
  const GFData gf = gf_of_monomial(b0, u);
  const Seed root = Seed::root(b0);
  std::vector<LaurentPoly> hats;
  hats.reserve(n);
  for (std::size_t k = 0; k < n; ++k) hats.push_back(hat_y(root, k));
  const LaurentPoly rhs = substitute(gf.F, hats).shifted(gf.g);
  return lhs == rhs;
}

bool rows_sign_coherent(std::span<const IntVector> gs) {
  if (gs.empty()) return true;
  const std::size_t n = gs.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    bool pos = false, neg = false;
    for (const auto& g : gs) {
      pos = pos || g[i] > 0;
      neg = neg || g[i] < 0;
    }
    if (pos && neg) return false;
  }
  return true;
}

}  // namespace clusterf
