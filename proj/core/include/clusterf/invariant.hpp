#pragma once

// g- and q-vector recurrences under a change of root, the tropical
// homomorphism rho_u on the Y-pattern, and the F-invariant
//   (u || u')_F = F_u^t[S g_{u'}^t] + F_{u'}^t[S g_u^t].

#include <optional>
#include <span>
#include <vector>

#include "clusterf/principal.hpp"
#include "clusterf/seed.hpp"

namespace clusterf {

// g-vector of the same monomial with respect to mu_k(t), given g^t and B_t.
IntVector g_recurrence_step(std::span<const std::int64_t> g, const ExchangeMatrix& bt, std::size_t k);
// Same step for q = S g.
IntVector q_recurrence_step(std::span<const std::int64_t> q, const ExchangeMatrix& bt, std::size_t k);

// The symmetrizer to use: `override` after validation against b0, or the
// minimal one of b0.
SkewSymmetrizer resolve_symmetrizer(const ExchangeMatrix& b0, const std::optional<SkewSymmetrizer>& override);

// y_{i;target} as a fraction in the root y-variables, tropicalized at
// S g_u^{t0}.
std::int64_t rho_eval(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const MutationSequence& target,
                      std::size_t i, const std::optional<SkewSymmetrizer>& s = std::nullopt);

// F_u^w[S g_{u2}^w].
std::int64_t f_inj(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const ClusterMonomialRef& u2,
                   const MutationSequence& w, const std::optional<SkewSymmetrizer>& s = std::nullopt);

struct FInvariantResult {
  std::int64_t value;
  std::int64_t left;   // F_u^w[S g_{u2}^w]
  std::int64_t right;  // F_{u2}^w[S g_u^w]
  MutationSequence vertex;
  friend bool operator==(const FInvariantResult&, const FInvariantResult&) = default;
};

FInvariantResult f_invariant(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const ClusterMonomialRef& u2,
                             const MutationSequence& w, const std::optional<SkewSymmetrizer>& s = std::nullopt);

// Both sides of the one-edge change of F_u[S g_{u2}] along t = w -- k -- t'.
struct FinvRecurrenceSides {
  std::int64_t lhs;  // F_u^{t'}[S g_{u2}^{t'}] - F_u^t[S g_{u2}^t]
  std::int64_t rhs;  // s_k([-g_{k;u}^{t'}]_+[-g_{k;u2}^t]_+ - [-g_{k;u}^t]_+[-g_{k;u2}^{t'}]_+)
  bool holds() const { return lhs == rhs; }
};

FinvRecurrenceSides finv_recurrence_sides(const ExchangeMatrix& b0, const ClusterMonomialRef& u,
                                          const ClusterMonomialRef& u2, const MutationSequence& w, std::size_t k,
                                          const std::optional<SkewSymmetrizer>& s = std::nullopt);

bool check_finv_recurrence(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const ClusterMonomialRef& u2,
                           const MutationSequence& w, std::size_t k,
                           const std::optional<SkewSymmetrizer>& s = std::nullopt);

// g_{k;u}^t g_{k;u2}^t >= 0 for every t in vertices and every k. A bounded
// stand-in for sign-coherence over the whole tree.
bool sign_coherent_pair(const ExchangeMatrix& b0, const ClusterMonomialRef& u, const ClusterMonomialRef& u2,
                        std::span<const MutationSequence> vertices);

}  // namespace clusterf
