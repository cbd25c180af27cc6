#include "clusterf/seed.hpp"

#include <deque>
#include <sstream>

#include "clusterf/errors.hpp"

namespace clusterf {

IntVector SkewSymmetrizer::apply(std::span<const std::int64_t> v) const {
  if (v.size() != s.size()) throw DimensionMismatch("symmetrizer and vector lengths differ");
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = checked_mul(s[i], v[i]);
  return r;
}

SkewSymmetrizer find_skew_symmetrizer(std::size_t n, std::span<const std::int64_t> b) {
  if (n == 0) throw NotSkewSymmetrizable("exchange matrix must have positive rank");
  if (b.size() != n * n) throw DimensionMismatch("matrix is not square");
  auto at = [&](std::size_t i, std::size_t j) { return b[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) != 0)
      throw NotSkewSymmetrizable("diagonal entry b_" + std::to_string(i + 1) + std::to_string(i + 1) +
                                 " is nonzero");
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool ok = (at(i, j) == 0 && at(j, i) == 0) || (at(i, j) > 0 && at(j, i) < 0) ||
                      (at(i, j) < 0 && at(j, i) > 0);
      if (!ok) {
        std::ostringstream msg;
        msg << "sign pattern violated at (" << i + 1 << "," << j + 1 << "): b_ij=" << at(i, j)
            << ", b_ji=" << at(j, i);
        throw NotSkewSymmetrizable(msg.str());
      }
    }
  }

  // Propagate s_j = s_i |b_ij| / |b_ji| over a spanning forest, then check
  // every edge and scale each component to its least integer solution.
  std::vector<mpq_class> ratio(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<std::int64_t> result(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> component{start};
    seen[start] = true;
    ratio[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (at(i, j) == 0 || seen[j]) continue;
        seen[j] = true;
        ratio[j] = ratio[i] * mpq_class(std::abs(at(i, j)), std::abs(at(j, i)));
        ratio[j].canonicalize();
        component.push_back(j);
        queue.push_back(j);
      }
    }
    for (std::size_t i : component) {
      for (std::size_t j = 0; j < n; ++j) {
        if (ratio[i] * at(i, j) != -ratio[j] * at(j, i)) {
          std::ostringstream msg;
          msg << "ratio constraints inconsistent around (" << i + 1 << "," << j + 1 << ")";
          throw NotSkewSymmetrizable(msg.str());
        }
      }
    }
    mpz_class den_lcm = 1;
    for (std::size_t i : component) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), ratio[i].get_den_mpz_t());
    mpz_class num_gcd = 0;
    for (std::size_t i : component) {
      mpz_class scaled = ratio[i].get_num() * (den_lcm / ratio[i].get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    for (std::size_t i : component) {
      mpz_class v = ratio[i].get_num() * (den_lcm / ratio[i].get_den()) / num_gcd;
      if (!v.fits_slong_p()) throw ArithmeticOverflow("skew-symmetrizer entry exceeds 64 bits");
      result[i] = v.get_si();
    }
  }
  return SkewSymmetrizer{std::move(result)};
}

ExchangeMatrix::ExchangeMatrix(std::size_t n, IntVector row_major)
    : n_(n), b_(std::move(row_major)), sym_(find_skew_symmetrizer(n_, b_)) {}

ExchangeMatrix ExchangeMatrix::from_rows(const std::vector<IntVector>& rows) {
  const std::size_t n = rows.size();
  IntVector flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw DimensionMismatch("matrix is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return ExchangeMatrix(n, std::move(flat));
}

IntVector ExchangeMatrix::column(std::size_t k) const {
  check_direction(k, n_);
  IntVector c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, k);
  return c;
}

bool ExchangeMatrix::is_symmetrizer(const SkewSymmetrizer& s) const {
  if (s.size() != n_) return false;
  for (std::size_t i = 0; i < n_; ++i) {
    if (s[i] <= 0) return false;
    for (std::size_t j = 0; j < n_; ++j)
      if (checked_mul(s[i], (*this)(i, j)) != -checked_mul(s[j], (*this)(j, i))) return false;
  }
  return true;
}

void ExchangeMatrix::validate_symmetrizer(const SkewSymmetrizer& s) const {
  if (!is_symmetrizer(s)) throw InvalidArgument("supplied diagonal is not a skew-symmetrizer of the matrix");
}

std::string to_string(const ExchangeMatrix& b) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < b.rank(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < b.rank(); ++j) out << (j ? ", " : "") << b(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

void check_direction(std::size_t k, std::size_t n) {
  if (k >= n)
    throw InvalidDirection("direction " + std::to_string(k + 1) + " outside [1," + std::to_string(n) + "]");
}

IntVector mutate_extended(std::size_t rows, std::size_t n, std::span<const std::int64_t> m,
                          std::size_t k) {
  check_direction(k, n);
  if (m.size() != rows * n || rows < n) throw DimensionMismatch("extended matrix has wrong shape");
  IntVector out(m.size());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t bij = m[i * n + j];
      if (i == k || j == k) {
        out[i * n + j] = checked_sub(0, bij);
      } else {
        const std::int64_t bik = m[i * n + k];
        const std::int64_t bkj = m[k * n + j];
        out[i * n + j] = checked_sub(checked_add(bij, checked_mul(pos_part(bik), pos_part(bkj))),
                                     checked_mul(pos_part(-bik), pos_part(-bkj)));
      }
    }
  }
  return out;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  return ExchangeMatrix(ExchangeMatrix::Trusted{}, b.rank(), mutate_extended(b.rank(), b.rank(), b.entries(), k),
                        b.symmetrizer());
}

MutationSequence MutationSequence::from_one_based(std::span<const std::int64_t> steps, std::size_t n) {
  std::vector<std::size_t> out;
  out.reserve(steps.size());
  for (std::int64_t s : steps) {
    if (s < 1 || static_cast<std::size_t>(s) > n)
      throw InvalidDirection("direction " + std::to_string(s) + " outside [1," + std::to_string(n) + "]");
    out.push_back(static_cast<std::size_t>(s - 1));
  }
  return MutationSequence(std::move(out));
}

std::vector<std::int64_t> MutationSequence::to_one_based() const {
  std::vector<std::int64_t> out;
  out.reserve(steps_.size());
  for (std::size_t s : steps_) out.push_back(static_cast<std::int64_t>(s) + 1);
  return out;
}

MutationSequence MutationSequence::reversed() const {
  return MutationSequence(std::vector<std::size_t>(steps_.rbegin(), steps_.rend()));
}

MutationSequence MutationSequence::then(std::size_t k) const {
  auto s = steps_;
  s.push_back(k);
  return MutationSequence(std::move(s));
}

MutationSequence MutationSequence::then(const MutationSequence& tail) const {
  auto s = steps_;
  s.insert(s.end(), tail.steps_.begin(), tail.steps_.end());
  return MutationSequence(std::move(s));
}

MutationSequence MutationSequence::reduced() const {
  std::vector<std::size_t> out;
  for (std::size_t s : steps_) {
    if (!out.empty() && out.back() == s) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return MutationSequence(std::move(out));
}

void MutationSequence::validate(std::size_t n) const {
  for (std::size_t s : steps_) check_direction(s, n);
}

std::string to_string(const MutationSequence& s) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s.steps()[i] + 1;
  out << ']';
  return out.str();
}

ClusterMonomialRef ClusterMonomialRef::variable(MutationSequence path, std::size_t n, std::size_t i) {
  check_direction(i, n);
  IntVector v(n, 0);
  v[i] = 1;
  return {std::move(path), std::move(v)};
}

void ClusterMonomialRef::validate(std::size_t n) const {
  path.validate(n);
  if (exponents.size() != n)
    throw DimensionMismatch("monomial has " + std::to_string(exponents.size()) + " exponents, rank is " +
                            std::to_string(n));
  for (std::int64_t v : exponents)
    if (v < 0) throw InvalidArgument("cluster monomial exponents must be nonnegative");
}

Seed Seed::root(const ExchangeMatrix& b) {
  std::vector<LaurentPoly> cluster;
  cluster.reserve(b.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) cluster.push_back(LaurentPoly::variable(b.rank(), i));
  return {b, std::move(cluster), {}};
}

YSeed YSeed::root(const ExchangeMatrix& b) {
  std::vector<SubtractionFreeFraction> y;
  y.reserve(b.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) y.push_back(SubtractionFreeFraction::variable(b.rank(), i));
  return {b, std::move(y)};
}

Seed mutate_seed(const Seed& s, std::size_t k) {
  const std::size_t n = s.matrix.rank();
  check_direction(k, n);
  LaurentPoly plus = LaurentPoly::constant(n, 1);
  LaurentPoly minus = LaurentPoly::constant(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t bjk = s.matrix(j, k);
    if (bjk > 0) plus *= s.cluster[j].pow(static_cast<std::uint64_t>(bjk));
    if (bjk < 0) minus *= s.cluster[j].pow(static_cast<std::uint64_t>(-bjk));
  }
  Seed out{mutate_matrix(s.matrix, k), s.cluster, s.path.then(k)};
  out.cluster[k] = poly_divide_exact(plus + minus, s.cluster[k]);
  return out;
}

YSeed mutate_y_seed(const YSeed& s, std::size_t k) {
  const std::size_t n = s.matrix.rank();
  check_direction(k, n);
  const SubtractionFreeFraction& yk = s.y[k];
  const SubtractionFreeFraction one_plus = SubtractionFreeFraction::one(n) + yk;
  YSeed out{mutate_matrix(s.matrix, k), s.y};
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) {
      out.y[i] = yk.inverse();
      continue;
    }
    const std::int64_t bki = s.matrix(k, i);
    if (bki == 0) continue;
    out.y[i] = s.y[i] * yk.pow(pos_part(bki)) * one_plus.pow(-bki);
  }
  return out;
}

Seed apply_sequence(Seed s, const MutationSequence& seq) {
  for (std::size_t k : seq.steps()) s = mutate_seed(s, k);
  return s;
}

YSeed apply_sequence(YSeed s, const MutationSequence& seq) {
  for (std::size_t k : seq.steps()) s = mutate_y_seed(s, k);
  return s;
}

LaurentPoly cluster_monomial(const Seed& s, std::span<const std::int64_t> v) {
  const std::size_t n = s.matrix.rank();
  if (v.size() != n) throw DimensionMismatch("exponent vector length differs from rank");
  LaurentPoly r = LaurentPoly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] < 0) throw InvalidArgument("cluster monomial exponents must be nonnegative");
    if (v[i] > 0) r *= s.cluster[i].pow(static_cast<std::uint64_t>(v[i]));
  }
  return r;
}

std::vector<MutationSequence> reduced_sequences(std::size_t n, std::size_t depth) {
  std::vector<MutationSequence> out{MutationSequence{}};
  std::size_t begin = 0;
  for (std::size_t d = 0; d < depth; ++d) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!out[i].empty() && out[i].steps().back() == k) continue;
        out.push_back(out[i].then(k));
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace clusterf
