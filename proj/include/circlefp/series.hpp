#pragma once

// Exact polynomial and truncated power-series arithmetic in one indeterminate t,
// and the localization form of the signature:
//
//   sign(M) = sum_p eps(p) * prod_i (1 + t^{w_pi}) / (1 - t^{w_pi}).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace circlefp {

/// Sparse polynomial: exponent -> nonzero coefficient.
template <class Coeff>
class SparsePolynomial {
 public:
  using Terms = std::map<Integer, Coeff>;

  SparsePolynomial() = default;

  static SparsePolynomial constant(const Coeff& c) { return monomial(c, Integer(0)); }

  static SparsePolynomial monomial(const Coeff& c, const Integer& exponent) {
    if (exponent < 0) throw InvalidInputError("negative exponent");
    SparsePolynomial p;
    if (c != 0) p.terms_.emplace(exponent, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::optional<Integer> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  /// Smallest exponent with a nonzero coefficient.
  std::optional<Integer> low_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  Coeff coefficient(const Integer& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Integer& exponent, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePolynomial& operator+=(const SparsePolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  SparsePolynomial& operator-=(const SparsePolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, Coeff(-c));
    return *this;
  }

  SparsePolynomial& operator*=(const Coeff& scalar) {
    if (scalar == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= scalar;
    }
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(SparsePolynomial a, const Coeff& s) { return a *= s; }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Integer e = ea + eb;
        Coeff c = ca * cb;
        out.add_term(e, c);
      }
    }
    return out;
  }

  /// this * (1 + sign * t^w), the only product the signature needs in its inner loop.
  SparsePolynomial times_binomial(int sign, const Integer& w) const {
    SparsePolynomial out = *this;
    for (const auto& [e, c] : terms_) {
      Integer shifted = e + w;
      out.add_term(shifted, sign > 0 ? c : Coeff(-c));
    }
    return out;
  }

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

 private:
  Terms terms_;
};

using RationalPolynomial = SparsePolynomial<Rational>;
using IntegerPolynomial = SparsePolynomial<Integer>;

inline RationalPolynomial to_rational(const IntegerPolynomial& p) {
  RationalPolynomial out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, Rational(c));
  return out;
}

template <class Coeff>
std::string to_string(const SparsePolynomial<Coeff>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string cs = c.get_str();
    if (!out.empty()) {
      if (cs.front() == '-') {
        out += " - ";
        cs.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    out += cs;
    if (e != 0) out += "*t^" + e.get_str();
  }
  return out;
}

/// Power series in t truncated after t^order. Arithmetic is closed at a fixed order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
  }

  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  Rational& operator[](std::size_t k) { return coeffs_.at(k); }

  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) throw InvalidInputError("cannot extend a truncated series");
    return {order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1)};
  }

  TruncatedSeries& operator+=(const TruncatedSeries& other) {
    require_same_order(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& other) {
    require_same_order(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
  }

  TruncatedSeries& operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    const std::size_t n = a.order();
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (sgn(b.coeffs_[j]) == 0) continue;
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_same_order(const TruncatedSeries& other) const {
    if (order() != other.order()) throw DimensionMismatchError("series orders differ");
  }

  std::vector<Rational> coeffs_;
};

inline std::string to_string(const TruncatedSeries& s) {
  std::string out;
  for (std::size_t k = 0; k <= s.order(); ++k) {
    if (sgn(s[k]) == 0) continue;
    std::string cs = s[k].get_str();
    if (!out.empty()) {
      out += cs.front() == '-' ? " - " : " + ";
      if (cs.front() == '-') cs.erase(0, 1);
    }
    out += cs;
    if (k) out += "*t^" + std::to_string(k);
  }
  return (out.empty() ? "0" : out) + " + O(t^" + std::to_string(s.order() + 1) + ")";
}

/// Order-N truncation of a polynomial.
inline TruncatedSeries truncate(const RationalPolynomial& p, std::size_t order) {
  TruncatedSeries s(order);
  for (const auto& [e, c] : p.terms()) {
    if (e > static_cast<unsigned long>(order)) break;
    s[e.get_ui()] = c;
  }
  return s;
}

/// Order-N expansion of numerator/denominator at t = 0. The denominator must
/// have a nonzero constant term.
inline TruncatedSeries expand_quotient(const RationalPolynomial& numerator, const RationalPolynomial& denominator,
                                       std::size_t order) {
  const Rational d0 = denominator.coefficient(Integer(0));
  if (sgn(d0) == 0) throw InvalidInputError("denominator vanishes at t = 0");
  TruncatedSeries num = truncate(numerator, order);
  TruncatedSeries den = truncate(denominator, order);
  TruncatedSeries q(order);
  for (std::size_t k = 0; k <= order; ++k) {
    Rational acc = num[k];
    for (std::size_t j = 1; j <= k; ++j) {
      if (sgn(den[j]) != 0) acc -= den[j] * q[k - j];
    }
    q[k] = acc / d0;
  }
  return q;
}

/// Order-N expansion of (1 + t^w) / (1 - t^w) = 1 + 2 * sum_{j >= 1} t^{jw}.
inline TruncatedSeries factor_series(const Integer& w, std::size_t order) {
  if (w < 1) throw InvalidWeightError("factor_series needs a positive weight");
  TruncatedSeries s = TruncatedSeries::one(order);
  if (w > static_cast<unsigned long>(order)) return s;
  const std::size_t step = w.get_ui();
  for (std::size_t k = step; k <= order; k += step) s[k] = 2;
  return s;
}

/// sum_p eps(p) * prod_i factor_series(w_pi, N).
inline TruncatedSeries signature_series(const FixedPointData& d, std::size_t order) {
  TruncatedSeries total(order);
  for (const auto& p : d) {
    TruncatedSeries term = TruncatedSeries::one(order);
    for (const auto& w : p.weights()) term = term * factor_series(w, order);
    if (p.sign().is_plus()) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Default truncation order: 2 * (sum of the two largest weights) + 1.
inline std::size_t default_order(const FixedPointData& d) {
  std::vector<Integer> all;
  for (const auto& p : d) all.insert(all.end(), p.weights().begin(), p.weights().end());
  if (all.empty()) return 1;
  std::sort(all.begin(), all.end());
  Integer top = all.back();
  if (all.size() > 1) top += all[all.size() - 2];
  return to_size(2 * top + 1);
}

/// The localization sum as one fraction over the common denominator
/// prod_p prod_i (1 - t^{w_pi}).
struct RationalFunction {
  RationalPolynomial numerator;
  RationalPolynomial denominator;

  TruncatedSeries expand(std::size_t order) const { return expand_quotient(numerator, denominator, order); }
};

namespace detail {

struct IntegerFraction {
  IntegerPolynomial numerator;
  IntegerPolynomial denominator;
};

inline IntegerFraction signature_fraction(const FixedPointData& d) {
  const std::size_t k = d.size();
  // per-point denominators, then prefix/suffix products so each numerator term
  // is (1 + t^w) factors times every other point's denominator
  std::vector<IntegerPolynomial> den(k);
  for (std::size_t i = 0; i < k; ++i) {
    IntegerPolynomial q = IntegerPolynomial::constant(1);
    for (const auto& w : d[i].weights()) q = q.times_binomial(-1, w);
    den[i] = std::move(q);
  }
  std::vector<IntegerPolynomial> prefix(k + 1), suffix(k + 1);
  prefix[0] = IntegerPolynomial::constant(1);
  suffix[k] = IntegerPolynomial::constant(1);
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * den[i];
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * den[i];

  IntegerFraction out;
  out.denominator = prefix[k];
  for (std::size_t i = 0; i < k; ++i) {
    IntegerPolynomial term = IntegerPolynomial::constant(d[i].sign().value());
    for (const auto& w : d[i].weights()) term = term.times_binomial(+1, w);
    out.numerator += term * (prefix[i] * suffix[i + 1]);
  }
  return out;
}

}  // namespace detail

inline RationalFunction signature_function(const FixedPointData& d) {
  auto f = detail::signature_fraction(d);
  return {to_rational(f.numerator), to_rational(f.denominator)};
}

/// Outcome of the exact constancy test.
struct SignatureExact {
  bool is_constant = true;
  /// The constant value; meaningful when is_constant.
  Rational value;
  /// Least degree where numerator and value * denominator differ; set when not constant.
  std::optional<Integer> witness_degree;
};

inline SignatureExact signature_exact(const FixedPointData& d) {
  auto f = detail::signature_fraction(d);
  // the denominator has constant term 1, so the only candidate constant is the
  // numerator's constant term
  Integer c = f.numerator.coefficient(Integer(0));
  IntegerPolynomial diff = f.numerator - f.denominator * c;
  SignatureExact out;
  if (diff.is_zero()) {
    out.value = Rational(c);
  } else {
    out.is_constant = false;
    out.witness_degree = diff.low_degree();
  }
  return out;
}

/// The signature read at t = 0: sum_p eps(p).
inline Rational signature_value(const FixedPointData& d) {
  long total = 0;
  for (const auto& p : d) total += p.sign().value();
  return Rational(total);
}

}  // namespace circlefp
