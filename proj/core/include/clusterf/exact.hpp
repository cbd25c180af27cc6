#pragma once

// Exact arithmetic substrate: GMP integers, integer vectors, sparse
// multivariate Laurent polynomials, subtraction-free fractions and
// max-plus (tropical) evaluation.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace clusterf {

using Coeff = mpz_class;
using Exponent = std::int64_t;
using ExponentVector = std::vector<Exponent>;
using IntVector = std::vector<std::int64_t>;
using TropicalValue = std::int64_t;

// Overflow-checked machine arithmetic; throws ArithmeticOverflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// [a]_+ = max(a, 0).
constexpr std::int64_t pos_part(std::int64_t a) { return a > 0 ? a : 0; }

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

// Graded lexicographic order: total degree first, then lexicographic.
// Compatible with translation, so LT(p*q) = LT(p)*LT(q).
struct GrlexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

// Laurent polynomial with integer coefficients in a fixed number of
// variables. Terms are kept sorted ascending in grlex order with no zero
// coefficients, so structural equality is mathematical equality.
class LaurentPoly {
 public:
  using Term = std::pair<ExponentVector, Coeff>;

  explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Coeff& c);
  static LaurentPoly monomial(ExponentVector exponents, const Coeff& c = 1);
  // x_i (0-based).
  static LaurentPoly variable(std::size_t nvars, std::size_t i);
  // Accepts unsorted terms with repeats and zeros.
  static LaurentPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Coeff coefficient(const ExponentVector& e) const;
  Coeff constant_term() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool all_coefficients_positive() const;
  bool all_exponents_nonnegative() const;
  // Per-variable min/max exponent over the support; requires nonzero.
  ExponentVector min_exponents() const;
  ExponentVector max_exponents() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly pow(std::uint64_t e) const;
  // Multiplies by x^shift.
  LaurentPoly shifted(std::span<const Exponent> shift) const;
  // Inverse of a monomial with coefficient +-1. Throws InexactDivision otherwise.
  LaurentPoly monomial_inverse() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);
// Returns q with q*b == a; throws InexactDivision when no such Laurent
// polynomial exists, ZeroPolynomial when b is zero.
LaurentPoly poly_divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// F[r] = max{ v.r : c_v != 0 }. Defined for nonzero F; the same formula is
// used for Laurent supports, which is what tropicalizing fractions needs.
TropicalValue tropical_eval(const LaurentPoly& f, std::span<const std::int64_t> r);

// Nonzero element of the universal semifield, kept as
//   y^m * prod_i p_i^{e_i}
// where each p_i is a polynomial with strictly positive coefficients and no
// monomial factor. Products, inverses and powers only touch exponents;
// addition expands the parts that are not shared. Positivity is never lost.
class SubtractionFreeFraction {
 public:
  struct FactorLess {
    bool operator()(const LaurentPoly& a, const LaurentPoly& b) const;
  };
  using Factors = std::map<LaurentPoly, std::int64_t, FactorLess>;

  SubtractionFreeFraction(LaurentPoly numerator, LaurentPoly denominator);
  static SubtractionFreeFraction from_poly(LaurentPoly p);
  static SubtractionFreeFraction variable(std::size_t nvars, std::size_t i);
  static SubtractionFreeFraction one(std::size_t nvars);

  // Expanded parts; not reduced.
  LaurentPoly numerator() const;
  LaurentPoly denominator() const;
  std::size_t nvars() const { return monomial_.size(); }
  const ExponentVector& monomial_part() const { return monomial_; }
  const Factors& factors() const { return factors_; }

  SubtractionFreeFraction inverse() const;
  // Negative exponents invert.
  SubtractionFreeFraction pow(std::int64_t e) const;

  friend SubtractionFreeFraction operator*(const SubtractionFreeFraction& a,
                                           const SubtractionFreeFraction& b);
  friend SubtractionFreeFraction operator+(const SubtractionFreeFraction& a,
                                           const SubtractionFreeFraction& b);
  // Equality of rational functions.
  friend bool operator==(const SubtractionFreeFraction& a, const SubtractionFreeFraction& b);

 private:
  explicit SubtractionFreeFraction(std::size_t nvars) : monomial_(nvars, 0) {}
  void multiply_by(const LaurentPoly& p, std::int64_t e);
  LaurentPoly expand(bool positive) const;

  ExponentVector monomial_;
  Factors factors_;
};

// Image under the semifield map Q_sf(y) -> (Z, +, max) with y_i -> r_i.
TropicalValue sff_eval_tropical(const SubtractionFreeFraction& f,
                                std::span<const std::int64_t> r);

// Human-readable form, e.g. "1 + 2*y1 + y1*y2^-1". Names default to x1..xn.
std::string to_string(const LaurentPoly& p, std::span<const std::string> names = {});
std::vector<std::string> variable_names(const std::string& stem, std::size_t n);

}  // namespace clusterf
