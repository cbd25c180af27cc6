#include "clusterf/invariant.hpp"

#include "clusterf/errors.hpp"

namespace clusterf {

namespace {

void check_length(std::span<const std::int64_t> v, const ExchangeMatrix& b) {
  if (v.size() != b.rank()) throw DimensionMismatch("vector length differs from rank");
}

}  // namespace

IntVector g_recurrence_step(std::span<const std::int64_t> g, const ExchangeMatrix& bt, std::size_t k) {
  check_length(g, bt);
  check_direction(k, bt.rank());
  IntVector out(g.begin(), g.end());
  const std::int64_t gk = g[k];
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i == k) {
      out[i] = checked_sub(0, gk);
    } else {
      const std::int64_t bik = bt(i, k);
      out[i] = checked_add(checked_add(g[i], checked_mul(pos_part(-bik), gk)), checked_mul(bik, pos_part(gk)));
    }
  }
  return out;
}

IntVector q_recurrence_step(std::span<const std::int64_t> q, const ExchangeMatrix& bt, std::size_t k) {
  check_length(q, bt);
  check_direction(k, bt.rank());
  IntVector out(q.begin(), q.end());
  const std::int64_t qk = q[k];
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i == k) {
      out[i] = checked_sub(0, qk);
    } else {
      const std::int64_t bki = bt(k, i);
      out[i] = checked_sub(checked_add(q[i], checked_mul(pos_part(bki), qk)), checked_mul(bki, pos_part(qk)));
    }
  }
  return out;
}

SkewSymmetrizer resolve_symmetrizer(const ExchangeMatrix& b0, const std::optional<SkewSymmetrizer>& override) {
  if (!override) return b0.symmetrizer();
  b0.validate_symmetrizer(*override);
  return *override;
}

std::int64_t rho_eval(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const MutationSequence& target,
                      std::size_t i, const std::optional<SkewSymmetrizer>& s) {
  const std::size_t n = b0.rank();
  u.validate(n);
  target.validate(n);
  check_direction(i, n);
  const SkewSymmetrizer sym = resolve_symmetrizer(b0, s);
  const IntVector r = sym.apply(gf_of_monomial(b0, u).g);
  auto ys = y_pattern(b0)->at(target);
  return sff_eval_tropical(ys->seed.y[i], r);
}

std::int64_t f_inj(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const ClusterMonomialRef& u2,
                   const MutationSequence& w, const std::optional<SkewSymmetrizer>& s) {
  const SkewSymmetrizer sym = resolve_symmetrizer(b0, s);
  const GFData gu = gf_with_respect_to(b0, u, w);
  const GFData gu2 = gf_with_respect_to(b0, u2, w);
  return tropical_eval(gu.F, sym.apply(gu2.g));
}

FInvariantResult f_invariant(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const ClusterMonomialRef& u2,
                             const MutationSequence& w, const std::optional<SkewSymmetrizer>& s) {
  const SkewSymmetrizer sym = resolve_symmetrizer(b0, s);
  const GFData gu = gf_with_respect_to(b0, u, w);
  const GFData gu2 = gf_with_respect_to(b0, u2, w);
  const std::int64_t left = tropical_eval(gu.F, sym.apply(gu2.g));
  const std::int64_t right = tropical_eval(gu2.F, sym.apply(gu.g));
  return {checked_add(left, right), left, right, w};
}

FinvRecurrenceSides finv_recurrence_sides(const ExchangeMatrix& b0, const ClusterMonomialRef& u,
                                          const ClusterMonomialRef& u2, const MutationSequence& w, std::size_t k,
                                          const std::optional<SkewSymmetrizer>& s) {
  check_direction(k, b0.rank());
  const SkewSymmetrizer sym = resolve_symmetrizer(b0, s);
  const MutationSequence w2 = w.then(k);
  const GFData u_t = gf_with_respect_to(b0, u, w);
  const GFData u_t2 = gf_with_respect_to(b0, u, w2);
  const GFData v_t = gf_with_respect_to(b0, u2, w);
  const GFData v_t2 = gf_with_respect_to(b0, u2, w2);
  const std::int64_t lhs =
      checked_sub(tropical_eval(u_t2.F, sym.apply(v_t2.g)), tropical_eval(u_t.F, sym.apply(v_t.g)));
  const std::int64_t rhs =
      checked_mul(sym[k], checked_sub(checked_mul(pos_part(-u_t2.g[k]), pos_part(-v_t.g[k])),
                                      checked_mul(pos_part(-u_t.g[k]), pos_part(-v_t2.g[k]))));
  return {lhs, rhs};
}

bool check_finv_recurrence(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const ClusterMonomialRef& u2,
                           const MutationSequence& w, std::size_t k, const std::optional<SkewSymmetrizer>& s) {
  return finv_recurrence_sides(b0, u, u2, w, k, s).holds();
}

bool sign_coherent_pair(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const ClusterMonomialRef& u2,
                        std::span<const MutationSequence> vertices) {
  for (const auto& t : vertices) {
    const IntVector g1 = gf_with_respect_to(b0, u, t).g;
    const IntVector g2 = gf_with_respect_to(b0, u2, t).g;
    for (std::size_t k = 0; k < g1.size(); ++k)
      if ((g1[k] > 0 && g2[k] < 0) || (g1[k] < 0 && g2[k] > 0)) return false;
  }
  return true;
}

}  // namespace clusterf
