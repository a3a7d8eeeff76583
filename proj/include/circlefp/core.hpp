#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace circlefp {

/// Orientation sign of a fixed point, restricted to {-1, +1}.
class Sign {
 public:
  constexpr Sign() = default;
  explicit Sign(int value) : value_(value) {
    if (value != 1 && value != -1) throw InvalidInputError("sign must be +1 or -1");
  }

  static constexpr Sign plus() { return Sign(Tag{}, 1); }
  static constexpr Sign minus() { return Sign(Tag{}, -1); }

  constexpr int value() const { return value_; }
  constexpr bool is_plus() const { return value_ == 1; }
  constexpr char symbol() const { return value_ == 1 ? '+' : '-'; }

  constexpr Sign operator-() const { return Sign(Tag{}, -value_); }
  constexpr Sign operator*(Sign other) const { return Sign(Tag{}, value_ * other.value_); }

  constexpr auto operator<=>(const Sign&) const = default;

 private:
  struct Tag {};
  constexpr Sign(Tag, int value) : value_(value) {}

  int value_ = 1;
};

namespace detail {

inline std::strong_ordering compare(const Integer& a, const Integer& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline std::strong_ordering compare(std::span<const Integer> a, std::span<const Integer> b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (auto c = compare(a[i], b[i]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

}  // namespace detail

/// One isolated fixed point: a sign and a multiset of positive weights.
///
/// Weights are kept sorted ascending, so equality is multiset equality.
class FixedPointDatum {
 public:
  FixedPointDatum(Sign sign, std::vector<Integer> weights) : sign_(sign), weights_(std::move(weights)) {
    if (weights_.empty()) throw InvalidInputError("a fixed point needs at least one weight");
    for (const auto& w : weights_) {
      if (w <= 0) throw InvalidWeightError("weights must be positive, got " + w.get_str());
    }
    std::sort(weights_.begin(), weights_.end());
  }

  FixedPointDatum(Sign sign, std::initializer_list<long> weights)
      : FixedPointDatum(sign, std::vector<Integer>(weights.begin(), weights.end())) {}

  Sign sign() const { return sign_; }
  const std::vector<Integer>& weights() const { return weights_; }
  std::size_t arity() const { return weights_.size(); }

  FixedPointDatum with_sign(Sign sign) const { return {sign, weights_}; }

  friend bool operator==(const FixedPointDatum& a, const FixedPointDatum& b) {
    return a.sign_ == b.sign_ && a.weights_ == b.weights_;
  }
  friend std::strong_ordering operator<=>(const FixedPointDatum& a, const FixedPointDatum& b) {
    if (auto c = detail::compare(a.weights_, b.weights_); c != 0) return c;
    return a.sign_ <=> b.sign_;
  }

 private:
  Sign sign_;
  std::vector<Integer> weights_;
};

/// The fixed point data of a whole manifold. List order is presentation only;
/// the index of a point is its stable identifier.
class FixedPointData {
 public:
  FixedPointData() = default;
  explicit FixedPointData(std::vector<FixedPointDatum> points) : points_(std::move(points)) {
    for (const auto& p : points_) {
      if (p.arity() != points_.front().arity()) {
        throw DimensionMismatchError("all fixed points must have the same number of weights");
      }
    }
  }
  FixedPointData(std::initializer_list<FixedPointDatum> points)
      : FixedPointData(std::vector<FixedPointDatum>(points)) {}

  const std::vector<FixedPointDatum>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  /// Number of weights per point; 0 for empty data.
  std::size_t arity() const { return points_.empty() ? 0 : points_.front().arity(); }
  std::size_t dimension() const { return 2 * arity(); }

  const FixedPointDatum& operator[](std::size_t id) const { return points_.at(id); }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Copy with points sorted; two data are multiset-equal iff their sorted copies are equal.
  FixedPointData sorted() const {
    auto pts = points_;
    std::sort(pts.begin(), pts.end());
    FixedPointData out;
    out.points_ = std::move(pts);
    return out;
  }

  /// Presentation-order equality. Use multiset_equal for the semantic comparison.
  friend bool operator==(const FixedPointData&, const FixedPointData&) = default;

 private:
  std::vector<FixedPointDatum> points_;
};

inline bool multiset_equal(const FixedPointData& a, const FixedPointData& b) {
  return a.sorted() == b.sorted();
}

/// Signed weight tuple modulo negating one weight together with the sign.
class SignedDatumClass {
 public:
  SignedDatumClass(Sign sign, std::vector<Integer> weights) : sign_(sign), weights_(std::move(weights)) {
    if (weights_.empty()) throw InvalidInputError("a datum class needs at least one weight");
    for (const auto& w : weights_) {
      if (w == 0) throw InvalidWeightError("weights must be nonzero");
    }
  }
  SignedDatumClass(Sign sign, std::initializer_list<long> weights)
      : SignedDatumClass(sign, std::vector<Integer>(weights.begin(), weights.end())) {}
  explicit SignedDatumClass(const FixedPointDatum& datum) : SignedDatumClass(datum.sign(), datum.weights()) {}

  Sign sign() const { return sign_; }
  const std::vector<Integer>& weights() const { return weights_; }
  std::size_t arity() const { return weights_.size(); }

  /// True iff every weight is positive and the weights are sorted ascending.
  bool is_canonical() const {
    return std::all_of(weights_.begin(), weights_.end(), [](const Integer& w) { return w > 0; }) &&
           std::is_sorted(weights_.begin(), weights_.end());
  }

  friend bool operator==(const SignedDatumClass&, const SignedDatumClass&) = default;
  friend std::strong_ordering operator<=>(const SignedDatumClass& a, const SignedDatumClass& b) {
    if (auto c = detail::compare(a.weights_, b.weights_); c != 0) return c;
    return a.sign_ <=> b.sign_;
  }

 private:
  Sign sign_;
  std::vector<Integer> weights_;
};

/// Canonical representative: all weights positive and sorted, the sign flipped
/// once for every negative input weight.
inline SignedDatumClass canonicalize(const SignedDatumClass& cls) {
  Sign sign = cls.sign();
  std::vector<Integer> weights;
  weights.reserve(cls.arity());
  for (const auto& w : cls.weights()) {
    if (w < 0) {
      sign = -sign;
      weights.push_back(-w);
    } else {
      weights.push_back(w);
    }
  }
  std::sort(weights.begin(), weights.end());
  return {sign, std::move(weights)};
}

inline FixedPointDatum to_datum(const SignedDatumClass& cls) {
  auto c = canonicalize(cls);
  return {c.sign(), c.weights()};
}

/// Real fixed point datum of a point with the given complex weights.
inline FixedPointDatum from_complex_weights(std::span<const Integer> weights) {
  return to_datum(SignedDatumClass(Sign::plus(), std::vector<Integer>(weights.begin(), weights.end())));
}

inline FixedPointDatum from_complex_weights(std::initializer_list<long> weights) {
  std::vector<Integer> w(weights.begin(), weights.end());
  return from_complex_weights(w);
}

inline FixedPointData disjoint_union(const FixedPointData& a, const FixedPointData& b) {
  if (!a.empty() && !b.empty() && a.arity() != b.arity()) {
    throw DimensionMismatchError("cannot take the union of data of arity " + std::to_string(a.arity()) +
                                 " and " + std::to_string(b.arity()));
  }
  std::vector<FixedPointDatum> points = a.points();
  points.insert(points.end(), b.begin(), b.end());
  return FixedPointData(std::move(points));
}

inline FixedPointData reverse_orientation(const FixedPointData& d) {
  std::vector<FixedPointDatum> points;
  points.reserve(d.size());
  for (const auto& p : d) points.push_back(p.with_sign(-p.sign()));
  return FixedPointData(std::move(points));
}

/// Multiset of all weights at points of the given sign, sorted ascending.
inline std::vector<Integer> weights_with_sign(const FixedPointData& d, Sign sign) {
  std::vector<Integer> out;
  for (const auto& p : d) {
    if (p.sign() == sign) out.insert(out.end(), p.weights().begin(), p.weights().end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Occurrence count of every weight value over all points, with multiplicity.
inline std::map<Integer, std::size_t> weight_counts(const FixedPointData& d) {
  std::map<Integer, std::size_t> counts;
  for (const auto& p : d) {
    for (const auto& w : p.weights()) ++counts[w];
  }
  return counts;
}

inline Integer gcd_of_weights(const FixedPointData& d) {
  Integer g = 0;
  for (const auto& p : d) {
    for (const auto& w : p.weights()) g = gcd(g, w);
  }
  return g;
}

inline std::string to_string(const FixedPointDatum& p) {
  std::string out = "{";
  out += p.sign().symbol();
  for (const auto& w : p.weights()) out += "," + w.get_str();
  return out + "}";
}

inline std::string to_string(const SignedDatumClass& c) {
  std::string out = "[";
  out += c.sign().symbol();
  for (const auto& w : c.weights()) out += "," + w.get_str();
  return out + "]";
}

inline std::string to_string(const FixedPointData& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ", ";
    out += to_string(d[i]);
  }
  return out;
}

}  // namespace circlefp
