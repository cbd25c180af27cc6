#include "clusterf/exact.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "clusterf/errors.hpp"

namespace clusterf {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
  return r;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors with different lengths");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

namespace {

Exponent total_degree(const ExponentVector& e) {
  Exponent d = 0;
  for (Exponent x : e) d += x;
  return d;
}

void require_same_nvars(const LaurentPoly& a, const LaurentPoly& b, const char* op) {
  if (a.nvars() != b.nvars()) {
    throw DimensionMismatch(std::string(op) + ": variable counts differ (" +
                            std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + ")");
  }
}

ExponentVector add_exponents(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

using TermMap = std::map<ExponentVector, Coeff, GrlexLess>;

}  // namespace

bool GrlexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const Exponent da = total_degree(a);
  const Exponent db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Coeff& c) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.emplace_back(ExponentVector(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(ExponentVector exponents, const Coeff& c) {
  LaurentPoly p(exponents.size());
  if (c != 0) p.terms_.emplace_back(std::move(exponents), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw InvalidArgument("variable index out of range");
  ExponentVector e(nvars, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

LaurentPoly LaurentPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.first.size() != nvars) throw DimensionMismatch("term exponent length differs from nvars");
  }
  GrlexLess less;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return less(a.first, b.first); });
  LaurentPoly p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

Coeff LaurentPoly::coefficient(const ExponentVector& e) const {
  GrlexLess less;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [&](const Term& t, const ExponentVector& k) { return less(t.first, k); });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

Coeff LaurentPoly::constant_term() const { return coefficient(ExponentVector(nvars_, 0)); }

bool LaurentPoly::all_coefficients_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

bool LaurentPoly::all_exponents_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return std::all_of(t.first.begin(), t.first.end(), [](Exponent e) { return e >= 0; });
  });
}

ExponentVector LaurentPoly::min_exponents() const {
  if (is_zero()) throw ZeroPolynomial("min_exponents of the zero polynomial");
  ExponentVector m = terms_.front().first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

ExponentVector LaurentPoly::max_exponents() const {
  if (is_zero()) throw ZeroPolynomial("max_exponents of the zero polynomial");
  ExponentVector m = terms_.front().first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_nvars(*this, o, "poly_add");
  if (o.is_zero()) return *this;
  GrlexLess less;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && less(a->first, b->first))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || less(b->first, a->first)) {
      merged.push_back(*b++);
    } else {
      Coeff c = a->second + b->second;
      if (c != 0) merged.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_nvars(a, b, "poly_mul");
  LaurentPoly r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.is_monomial()) {
    const auto& [be, bc] = b.terms_.front();
    r.terms_.reserve(a.terms_.size());
    for (const auto& [e, c] : a.terms_) r.terms_.emplace_back(add_exponents(e, be), c * bc);
    return r;  // translation preserves the grlex order
  }
  if (a.is_monomial()) return b * a;
  TermMap acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto [it, inserted] = acc.try_emplace(add_exponents(ea, eb));
      mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::pow(std::uint64_t e) const {
  LaurentPoly result = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(std::span<const Exponent> shift) const {
  if (shift.size() != nvars_) throw DimensionMismatch("shift length differs from nvars");
  return *this * monomial(ExponentVector(shift.begin(), shift.end()));
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (!is_monomial()) throw InexactDivision("only monomials are invertible Laurent polynomials");
  const auto& [e, c] = terms_.front();
  if (c != 1 && c != -1) throw InexactDivision("monomial coefficient is not a unit");
  ExponentVector neg(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) neg[i] = checked_sub(0, e[i]);
  return monomial(std::move(neg), c);
}

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly poly_divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_nvars(a, b, "poly_divide_exact");
  if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly(a.nvars());
  if (b.is_monomial()) {
    const Coeff& bc = b.terms().front().second;
    if (bc == 1 || bc == -1) return a * b.monomial_inverse();
  }
  const std::size_t n = a.nvars();
  // In each variable the extreme degrees of a product add, so every
  // quotient exponent lies in [amin - bmin, amax - bmax].
  const ExponentVector amin = a.min_exponents(), amax = a.max_exponents();
  const ExponentVector bmin = b.min_exponents(), bmax = b.max_exponents();
  ExponentVector lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = checked_sub(amin[i], bmin[i]);
    hi[i] = checked_sub(amax[i], bmax[i]);
    if (lo[i] > hi[i]) throw InexactDivision("degree bounds rule out an exact quotient");
  }
  TermMap rem(a.terms().begin(), a.terms().end());
  const auto& [blead_e, blead_c] = b.terms().back();
  std::vector<LaurentPoly::Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    ExponentVector qe(n);
    for (std::size_t i = 0; i < n; ++i) {
      qe[i] = top->first[i] - blead_e[i];
      if (qe[i] < lo[i] || qe[i] > hi[i]) throw InexactDivision("nonzero remainder in exact division");
    }
    if (!mpz_divisible_p(top->second.get_mpz_t(), blead_c.get_mpz_t()))
      throw InexactDivision("coefficient not divisible in exact division");
    Coeff qc;
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), blead_c.get_mpz_t());
    for (const auto& [be, bc] : b.terms()) {
      auto [it, inserted] = rem.try_emplace(add_exponents(qe, be));
      mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), bc.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quotient.emplace_back(std::move(qe), std::move(qc));
  }
  std::reverse(quotient.begin(), quotient.end());
  return LaurentPoly::from_terms(n, std::move(quotient));
}

TropicalValue tropical_eval(const LaurentPoly& f, std::span<const std::int64_t> r) {
  if (f.is_zero()) throw ZeroPolynomial("tropical evaluation of the zero polynomial");
  if (r.size() != f.nvars())
    throw DimensionMismatch("tropical point has length " + std::to_string(r.size()) +
                            ", polynomial has " + std::to_string(f.nvars()) + " variables");
  TropicalValue best = std::numeric_limits<TropicalValue>::min();
  for (const auto& [e, c] : f.terms()) best = std::max(best, dot(e, r));
  return best;
}

bool SubtractionFreeFraction::FactorLess::operator()(const LaurentPoly& a, const LaurentPoly& b) const {
  if (a.nvars() != b.nvars()) return a.nvars() < b.nvars();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.size() != tb.size()) return ta.size() < tb.size();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].first != tb[i].first) return ta[i].first < tb[i].first;
    const int c = cmp(ta[i].second, tb[i].second);
    if (c != 0) return c < 0;
  }
  return false;
}

void SubtractionFreeFraction::multiply_by(const LaurentPoly& p, std::int64_t e) {
  if (p.is_zero()) throw ZeroPolynomial("subtraction-free fraction with a zero part");
  if (!p.all_coefficients_positive())
    throw InvalidArgument("subtraction-free fraction requires strictly positive coefficients");
  if (p.nvars() != nvars()) throw DimensionMismatch("SubtractionFreeFraction: variable count mismatch");
  if (e == 0) return;
  ExponentVector shift = p.min_exponents();
  for (std::size_t i = 0; i < shift.size(); ++i) {
    monomial_[i] = checked_add(monomial_[i], checked_mul(e, shift[i]));
    shift[i] = -shift[i];
  }
  LaurentPoly q = p.shifted(shift);
  if (q.is_monomial() && q.terms().front().second == 1) return;
  auto [it, inserted] = factors_.try_emplace(std::move(q), 0);
  it->second = checked_add(it->second, e);
  if (it->second == 0) factors_.erase(it);
}

SubtractionFreeFraction::SubtractionFreeFraction(LaurentPoly numerator, LaurentPoly denominator)
    : monomial_(numerator.nvars(), 0) {
  require_same_nvars(numerator, denominator, "SubtractionFreeFraction");
  multiply_by(numerator, 1);
  multiply_by(denominator, -1);
}

SubtractionFreeFraction SubtractionFreeFraction::from_poly(LaurentPoly p) {
  SubtractionFreeFraction f(p.nvars());
  f.multiply_by(p, 1);
  return f;
}

SubtractionFreeFraction SubtractionFreeFraction::variable(std::size_t nvars, std::size_t i) {
  return from_poly(LaurentPoly::variable(nvars, i));
}

SubtractionFreeFraction SubtractionFreeFraction::one(std::size_t nvars) { return SubtractionFreeFraction(nvars); }

LaurentPoly SubtractionFreeFraction::expand(bool positive) const {
  const int sign = positive ? 1 : -1;
  ExponentVector m(nvars(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = pos_part(sign * monomial_[i]);
  LaurentPoly r = LaurentPoly::monomial(std::move(m), 1);
  for (const auto& [p, e] : factors_)
    if (sign * e > 0) r *= p.pow(static_cast<std::uint64_t>(sign * e));
  return r;
}

LaurentPoly SubtractionFreeFraction::numerator() const { return expand(true); }
LaurentPoly SubtractionFreeFraction::denominator() const { return expand(false); }

SubtractionFreeFraction SubtractionFreeFraction::inverse() const { return pow(-1); }

SubtractionFreeFraction SubtractionFreeFraction::pow(std::int64_t e) const {
  SubtractionFreeFraction out(nvars());
  if (e == 0) return out;
  for (std::size_t i = 0; i < monomial_.size(); ++i) out.monomial_[i] = checked_mul(monomial_[i], e);
  for (const auto& [p, x] : factors_) out.factors_.emplace(p, checked_mul(x, e));
  return out;
}

SubtractionFreeFraction operator*(const SubtractionFreeFraction& a, const SubtractionFreeFraction& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("SubtractionFreeFraction: variable count mismatch");
  SubtractionFreeFraction out = a;
  for (std::size_t i = 0; i < out.monomial_.size(); ++i)
    out.monomial_[i] = checked_add(out.monomial_[i], b.monomial_[i]);
  for (const auto& [p, e] : b.factors_) {
    auto [it, inserted] = out.factors_.try_emplace(p, 0);
    it->second = checked_add(it->second, e);
    if (it->second == 0) out.factors_.erase(it);
  }
  return out;
}

SubtractionFreeFraction operator+(const SubtractionFreeFraction& a, const SubtractionFreeFraction& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("SubtractionFreeFraction: variable count mismatch");
  // Pull out the largest common factor h, then a + b = h (a/h + b/h)
  // with both quotients polynomial.
  SubtractionFreeFraction h(a.nvars());
  for (std::size_t i = 0; i < h.monomial_.size(); ++i) h.monomial_[i] = std::min(a.monomial_[i], b.monomial_[i]);
  auto exponent_in = [](const SubtractionFreeFraction& f, const LaurentPoly& p) -> std::int64_t {
    auto it = f.factors_.find(p);
    return it == f.factors_.end() ? 0 : it->second;
  };
  for (const auto* f : {&a, &b})
    for (const auto& [p, e] : f->factors_) {
      const std::int64_t m = std::min(exponent_in(a, p), exponent_in(b, p));
      if (m != 0) h.factors_[p] = m;
    }
  const SubtractionFreeFraction hinv = h.inverse();
  SubtractionFreeFraction out = h;
  out.multiply_by((a * hinv).numerator() + (b * hinv).numerator(), 1);
  return out;
}

bool operator==(const SubtractionFreeFraction& a, const SubtractionFreeFraction& b) {
  if (a.nvars() != b.nvars()) return false;
  if (a.monomial_ == b.monomial_ && a.factors_ == b.factors_) return true;
  const SubtractionFreeFraction q = a * b.inverse();
  return q.numerator() == q.denominator();
}

TropicalValue sff_eval_tropical(const SubtractionFreeFraction& f, std::span<const std::int64_t> r) {
  if (r.size() != f.nvars()) throw DimensionMismatch("tropical point has the wrong length");
  TropicalValue v = dot(f.monomial_part(), r);
  for (const auto& [p, e] : f.factors()) v = checked_add(v, checked_mul(e, tropical_eval(p, r)));
  return v;
}

std::vector<std::string> variable_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

std::string to_string(const LaurentPoly& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::vector<std::string> fallback;
  if (names.size() < p.nvars()) {
    fallback = variable_names("x", p.nvars());
    names = fallback;
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Coeff mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << '*';
      out << names[i];
      if (e[i] != 1) out << '^' << e[i];
      wrote = true;
    }
    if (!wrote) out << '1';
  }
  return out.str();
}

}  // namespace clusterf
