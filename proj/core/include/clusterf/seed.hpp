#pragma once

// Exchange matrices, skew-symmetrizers, cluster seeds and Y-seeds, and
// mutation along the labeled edges of the n-regular tree.
//
// Directions are 0-based throughout the C++ API. Text and JSON I/O use
// 1-based directions; convert with MutationSequence::from_one_based /
// to_one_based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "clusterf/exact.hpp"

namespace clusterf {

// Diagonal of a positive integer matrix S with S*B skew-symmetric.
struct SkewSymmetrizer {
  IntVector s;

  std::size_t size() const { return s.size(); }
  std::int64_t operator[](std::size_t i) const { return s[i]; }
  IntVector apply(std::span<const std::int64_t> v) const;  // S*v
  friend bool operator==(const SkewSymmetrizer&, const SkewSymmetrizer&) = default;
};

// Smallest positive symmetrizer, per connected component of the graph with
// an edge {i,j} whenever b_ij != 0; isolated indices get 1. Entries are
// given row-major. Throws NotSkewSymmetrizable.
SkewSymmetrizer find_skew_symmetrizer(std::size_t n, std::span<const std::int64_t> rows);

class ExchangeMatrix {
 public:
  // Validates skew-symmetrizability; throws NotSkewSymmetrizable.
  ExchangeMatrix(std::size_t n, IntVector row_major);
  static ExchangeMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rank() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return b_[i * n_ + j]; }
  const IntVector& entries() const { return b_; }
  IntVector column(std::size_t k) const;
  const SkewSymmetrizer& symmetrizer() const { return sym_; }
  bool is_symmetrizer(const SkewSymmetrizer& s) const;
  // Throws InvalidArgument when s is not a positive symmetrizer of this matrix.
  void validate_symmetrizer(const SkewSymmetrizer& s) const;

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.n_ == b.n_ && a.b_ == b.b_;
  }
  friend auto operator<=>(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.b_ <=> b.b_;
  }

 private:
  struct Trusted {};
  ExchangeMatrix(Trusted, std::size_t n, IntVector b, SkewSymmetrizer s)
      : n_(n), b_(std::move(b)), sym_(std::move(s)) {}
  friend ExchangeMatrix mutate_matrix(const ExchangeMatrix&, std::size_t);

  std::size_t n_;
  IntVector b_;
  SkewSymmetrizer sym_;
};

std::string to_string(const ExchangeMatrix& b);

void check_direction(std::size_t k, std::size_t n);

// mu_k(B). The result shares the skew-symmetrizers of B.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);

// Row-major mutation of an m x n matrix whose top n x n block is the
// exchange matrix (rows below it are coefficient rows).
IntVector mutate_extended(std::size_t rows, std::size_t n, std::span<const std::int64_t> m,
                          std::size_t k);

// A vertex of the n-regular tree addressed from the root by directions.
class MutationSequence {
 public:
  MutationSequence() = default;
  explicit MutationSequence(std::vector<std::size_t> steps) : steps_(std::move(steps)) {}
  static MutationSequence from_one_based(std::span<const std::int64_t> steps, std::size_t n);

  const std::vector<std::size_t>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  std::vector<std::int64_t> to_one_based() const;

  MutationSequence reversed() const;
  MutationSequence then(std::size_t k) const;
  MutationSequence then(const MutationSequence& tail) const;
  // Cancels adjacent repeated steps; names the same tree vertex.
  MutationSequence reduced() const;
  void validate(std::size_t n) const;

  friend auto operator<=>(const MutationSequence&, const MutationSequence&) = default;
  friend bool operator==(const MutationSequence&, const MutationSequence&) = default;

 private:
  std::vector<std::size_t> steps_;
};

std::string to_string(const MutationSequence& s);

// The monomial prod x_{i;t}^{v_i} at the vertex t addressed by path.
struct ClusterMonomialRef {
  MutationSequence path;
  IntVector exponents;

  static ClusterMonomialRef variable(MutationSequence path, std::size_t n, std::size_t i);
  void validate(std::size_t n) const;
  friend bool operator==(const ClusterMonomialRef&, const ClusterMonomialRef&) = default;
};

// Seed with trivial coefficients. Cluster entries are expansions in the
// root cluster x_1..x_n.
struct Seed {
  ExchangeMatrix matrix;
  std::vector<LaurentPoly> cluster;
  MutationSequence path;

  static Seed root(const ExchangeMatrix& b);
};

// Y-seed whose entries are subtraction-free fractions in the root
// y-variables y_1..y_n.
struct YSeed {
  ExchangeMatrix matrix;
  std::vector<SubtractionFreeFraction> y;

  static YSeed root(const ExchangeMatrix& b);
  friend bool operator==(const YSeed& a, const YSeed& b) {
    return a.matrix == b.matrix && a.y == b.y;
  }
};

Seed mutate_seed(const Seed& s, std::size_t k);
YSeed mutate_y_seed(const YSeed& s, std::size_t k);
Seed apply_sequence(Seed s, const MutationSequence& seq);
YSeed apply_sequence(YSeed s, const MutationSequence& seq);

// Product of the cluster entries raised to v.
LaurentPoly cluster_monomial(const Seed& s, std::span<const std::int64_t> v);

// All reduced sequences (no immediate repeats) of length <= depth, in
// breadth-first order with directions increasing.
std::vector<MutationSequence> reduced_sequences(std::size_t n, std::size_t depth);

}  // namespace clusterf
