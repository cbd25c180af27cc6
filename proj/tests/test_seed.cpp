#include <gtest/gtest.h>

#include <random>

#include "clusterf/errors.hpp"
#include "clusterf/seed.hpp"
#include "oracles.hpp"

using namespace clusterf;

namespace {

const ExchangeMatrix kA2 = ExchangeMatrix::from_rows({{0, 1}, {-1, 0}});
const ExchangeMatrix kA3 = ExchangeMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
const ExchangeMatrix kB2 = ExchangeMatrix::from_rows({{0, 2}, {-1, 0}});

LaurentPoly x(std::size_t n, IntVector e, long c = 1) { return LaurentPoly::monomial(std::move(e), Coeff(c)); }

std::vector<IntVector> rows_of(const ExchangeMatrix& b) {
  std::vector<IntVector> r(b.rank(), IntVector(b.rank()));
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) r[i][j] = b(i, j);
  return r;
}

}  // namespace

TEST(ExchangeMatrix, Validation) {
  EXPECT_THROW(ExchangeMatrix::from_rows({{1, 0}, {0, 0}}), NotSkewSymmetrizable);
  EXPECT_THROW(ExchangeMatrix::from_rows({{0, 1}, {1, 0}}), NotSkewSymmetrizable);
  EXPECT_THROW(ExchangeMatrix::from_rows({{0, 1}, {0, 0}}), NotSkewSymmetrizable);
  // Sign-skew but cyclically inconsistent ratios.
  EXPECT_THROW(ExchangeMatrix::from_rows({{0, 1, 1}, {-2, 0, 1}, {-1, -1, 0}}), NotSkewSymmetrizable);
  EXPECT_THROW(ExchangeMatrix::from_rows({{0, 1}}), DimensionMismatch);
  EXPECT_NO_THROW(ExchangeMatrix::from_rows({{0}}));
  EXPECT_NO_THROW(ExchangeMatrix::from_rows({{0, 0}, {0, 0}}));
}

TEST(ExchangeMatrix, MutationRank3) {
  EXPECT_EQ(mutate_matrix(kA3, 1), ExchangeMatrix::from_rows({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
  EXPECT_EQ(mutate_matrix(kA2, 0), ExchangeMatrix::from_rows({{0, -1}, {1, 0}}));
  EXPECT_THROW(mutate_matrix(kA2, 2), InvalidDirection);
}

TEST(ExchangeMatrix, MutationAgainstOracleAndInvolution) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> e(-3, 3), rank(1, 4);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = rank(rng);
    std::vector<IntVector> rows(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        rows[i][j] = e(rng);
        rows[j][i] = -rows[i][j];
      }
    const auto b = ExchangeMatrix::from_rows(rows);
    for (std::size_t k = 0; k < n; ++k) {
      const auto m = mutate_matrix(b, k);
      ASSERT_EQ(rows_of(m), oracle::mutate_rows(rows, k));
      ASSERT_EQ(mutate_matrix(m, k), b);
      ASSERT_TRUE(m.is_symmetrizer(b.symmetrizer()));
    }
  }
}

TEST(Symmetrizer, Examples) {
  EXPECT_EQ(kB2.symmetrizer().s, (IntVector{1, 2}));
  EXPECT_EQ(ExchangeMatrix::from_rows({{0, 1}, {-3, 0}}).symmetrizer().s, (IntVector{3, 1}));
  EXPECT_EQ(ExchangeMatrix::from_rows({{0, 1, 0}, {-1, 0, 2}, {0, -1, 0}}).symmetrizer().s, (IntVector{1, 1, 2}));
  EXPECT_EQ(ExchangeMatrix::from_rows({{0, 0}, {0, 0}}).symmetrizer().s, (IntVector{1, 1}));
  // Two components are scaled independently.
  EXPECT_EQ(ExchangeMatrix::from_rows({{0, 2, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 3}, {0, 0, -1, 0}}).symmetrizer().s,
            (IntVector{1, 2, 1, 3}));
}

TEST(Symmetrizer, MinimalAgainstExhaustiveSearch) {
  // Build skew-symmetrizable matrices from random S and skew-symmetric-ish
  // data: b_ij = c_ij * d / s_i with d = lcm-friendly scale.
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> sdist(1, 3), cdist(-2, 2), rank(2, 3);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 120; ++t) {
    const std::size_t n = rank(rng);
    IntVector s(n);
    for (auto& v : s) v = sdist(rng);
    std::vector<IntVector> rows(n, IntVector(n, 0));
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        // s_i b_ij = -s_j b_ji = c * s_i * s_j
        const int c = cdist(rng);
        rows[i][j] = c * s[j];
        rows[j][i] = -c * s[i];
      }
    const auto b = ExchangeMatrix::from_rows(rows);
    const auto expect = oracle::exhaustive_symmetrizer(rows, 6);
    ASSERT_FALSE(expect.empty());
    ASSERT_EQ(b.symmetrizer().s, expect) << to_string(b);
    ++checked;
  }
}

TEST(Symmetrizer, Validation) {
  EXPECT_NO_THROW(kB2.validate_symmetrizer({{2, 4}}));
  EXPECT_THROW(kB2.validate_symmetrizer({{1, 1}}), InvalidArgument);
  EXPECT_THROW(kB2.validate_symmetrizer({{0, 0}}), InvalidArgument);
  EXPECT_THROW(kB2.validate_symmetrizer({{1}}), InvalidArgument);
  EXPECT_EQ(kB2.symmetrizer().apply(IntVector{3, -1}), (IntVector{3, -2}));
}

TEST(Seed, A2Mutation) {
  const auto s = mutate_seed(Seed::root(kA2), 0);
  EXPECT_EQ(s.cluster[0], x(2, {-1, 0}) + x(2, {-1, 1}));
  EXPECT_EQ(s.cluster[1], x(2, {0, 1}));
  EXPECT_EQ(s.path, MutationSequence({0}));
}

TEST(Seed, RankOne) {
  const auto b = ExchangeMatrix::from_rows({{0}});
  const auto s = mutate_seed(Seed::root(b), 0);
  EXPECT_EQ(s.cluster[0], x(1, {-1}, 2));
  EXPECT_EQ(mutate_seed(s, 0).cluster, Seed::root(b).cluster);
  const auto y = mutate_y_seed(YSeed::root(b), 0);
  EXPECT_EQ(y.y[0], SubtractionFreeFraction::variable(1, 0).inverse());
}

TEST(Seed, PentagonPeriodicity) {
  const auto s = apply_sequence(Seed::root(kA2), MutationSequence({0, 1, 0, 1, 0}));
  EXPECT_EQ(s.cluster[0], x(2, {0, 1}));
  EXPECT_EQ(s.cluster[1], x(2, {1, 0}));
  EXPECT_EQ(apply_sequence(Seed::root(kA2), MutationSequence{}).cluster, Seed::root(kA2).cluster);
  EXPECT_EQ(apply_sequence(Seed::root(kA2), MutationSequence({1, 1})).cluster, Seed::root(kA2).cluster);
}

TEST(YSeed, A2Mutation) {
  const auto y = mutate_y_seed(YSeed::root(kA2), 0);
  const auto y1 = SubtractionFreeFraction::variable(2, 0);
  const auto y2 = SubtractionFreeFraction::variable(2, 1);
  EXPECT_EQ(y.y[0], y1.inverse());
  EXPECT_EQ(y.y[1], y2 * y1 * (SubtractionFreeFraction::one(2) + y1).inverse());
  EXPECT_EQ(y.matrix, mutate_matrix(kA2, 0));
}

TEST(YSeed, PentagonAndInvolution) {
  auto y = YSeed::root(kA2);
  for (std::size_t k : {0, 1, 0, 1, 0}) y = mutate_y_seed(y, k);
  EXPECT_EQ(y.y[0], SubtractionFreeFraction::variable(2, 1));
  EXPECT_EQ(y.y[1], SubtractionFreeFraction::variable(2, 0));
  auto z = YSeed::root(kB2);
  for (std::size_t k : {0, 1, 0}) z = mutate_y_seed(z, k);
  for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(mutate_y_seed(mutate_y_seed(z, k), k), z);
}

TEST(Seed, RandomWalksStayLaurentAndInvolutive) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> e(-2, 2), rank(1, 4);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = rank(rng);
    std::vector<IntVector> rows(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        rows[i][j] = e(rng);
        rows[j][i] = -rows[i][j];
      }
    auto s = Seed::root(ExchangeMatrix::from_rows(rows));
    std::uniform_int_distribution<std::size_t> dir(0, n - 1);
    // Wild matrices grow fast; the walk stops early once the seed is large.
    for (int d = 0; d < 8; ++d) {
      Seed next = s;
      ASSERT_NO_THROW(next = mutate_seed(s, dir(rng)));
      std::size_t total = 0;
      for (const auto& v : next.cluster) total += v.size();
      if (total > 150) break;
      s = std::move(next);
    }
    for (std::size_t k = 0; k < n; ++k) {
      const auto back = mutate_seed(mutate_seed(s, k), k);
      ASSERT_EQ(back.cluster, s.cluster);
      ASSERT_EQ(back.matrix, s.matrix);
    }
  }
}

TEST(MutationSequence, Conversions) {
  const auto seq = MutationSequence::from_one_based(IntVector{1, 2, 2, 1}, 2);
  EXPECT_EQ(seq.to_one_based(), (IntVector{1, 2, 2, 1}));
  EXPECT_TRUE(seq.reduced().empty());
  EXPECT_EQ(MutationSequence({0, 1}).reversed(), MutationSequence({1, 0}));
  EXPECT_EQ(MutationSequence({0}).then(1), MutationSequence({0, 1}));
  EXPECT_EQ(to_string(MutationSequence({0, 1})), "[1,2]");
  EXPECT_THROW(MutationSequence::from_one_based(IntVector{0}, 2), InvalidDirection);
  EXPECT_THROW(MutationSequence::from_one_based(IntVector{3}, 2), InvalidDirection);
  EXPECT_THROW(MutationSequence({5}).validate(2), InvalidDirection);
}

TEST(MutationSequence, ReducedSequencesCount) {
  // 1 + n + n(n-1) + ... + n(n-1)^{d-1}
  EXPECT_EQ(reduced_sequences(2, 4).size(), 9u);
  EXPECT_EQ(reduced_sequences(3, 3).size(), 1u + 3 + 6 + 12);
  EXPECT_EQ(reduced_sequences(1, 5).size(), 2u);
  for (const auto& s : reduced_sequences(3, 4)) EXPECT_EQ(s.reduced(), s);
}

TEST(ClusterMonomial, ProductAndValidation) {
  const auto s = mutate_seed(Seed::root(kA2), 0);
  EXPECT_EQ(cluster_monomial(s, IntVector{1, 1}), s.cluster[0] * s.cluster[1]);
  EXPECT_THROW(cluster_monomial(s, IntVector{1}), DimensionMismatch);
  EXPECT_THROW(cluster_monomial(s, IntVector{-1, 0}), InvalidArgument);
  EXPECT_THROW(ClusterMonomialRef({MutationSequence{}, IntVector{1, -1}}).validate(2), InvalidArgument);
  EXPECT_THROW(ClusterMonomialRef::variable(MutationSequence{}, 2, 2), InvalidDirection);
}
