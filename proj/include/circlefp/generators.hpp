#pragma once

// Fixed point data of the standard example actions.

#include <array>
#include <initializer_list>
#include <vector>

#include "core.hpp"

namespace circlefp::examples {

namespace detail {

inline void require_positive(std::initializer_list<Integer> params) {
  for (const auto& p : params) {
    if (p < 1) throw InvalidInputError("generator parameters must be positive, got " + p.get_str());
  }
}

}  // namespace detail

/// Rotation of S^6 with weights a, b, c: {+,a,b,c}, {-,a,b,c}.
inline FixedPointData gen_s6(const Integer& a, const Integer& b, const Integer& c) {
  detail::require_positive({a, b, c});
  return FixedPointData{{Sign::plus(), {a, b, c}}, {Sign::minus(), {a, b, c}}};
}

/// Disjoint union (or equivariant connected sum) of two rotated 6-spheres.
inline FixedPointData gen_s6_pair(const Integer& a, const Integer& b, const Integer& c, const Integer& d,
                                  const Integer& e, const Integer& f) {
  return disjoint_union(gen_s6(a, b, c), gen_s6(d, e, f));
}

/// Complex weights of the linear action on CP^3 with exponents 0, a, a+b, a+b+c.
inline std::array<std::vector<Integer>, 4> cp3_complex_weights(const Integer& a, const Integer& b,
                                                               const Integer& c) {
  return {{{a, a + b, a + b + c}, {-a, b, b + c}, {-a - b, -b, c}, {-a - b - c, -b - c, -c}}};
}

/// {+,a,a+b,a+b+c}, {-,a,b,b+c}, {+,b,c,a+b}, {-,c,b+c,a+b+c}.
inline FixedPointData gen_cp3(const Integer& a, const Integer& b, const Integer& c) {
  detail::require_positive({a, b, c});
  return FixedPointData{{Sign::plus(), {a, a + b, a + b + c}},
                        {Sign::minus(), {a, b, b + c}},
                        {Sign::plus(), {b, c, a + b}},
                        {Sign::minus(), {c, b + c, a + b + c}}};
}

/// Complex weights at the three points created by blowing up the south pole
/// of S^6 rotated with weights c, b, a+b.
inline std::array<std::vector<Integer>, 3> blowup_complex_weights(const Integer& a, const Integer& b,
                                                                  const Integer& c) {
  return {{{-c, b + c, a + b + c}, {-b - c, a, b}, {-a - b - c, -a, a + b}}};
}

/// The blown-up 6-sphere: the surviving pole {+,b,c,a+b} and the three new points.
inline FixedPointData gen_blowup(const Integer& a, const Integer& b, const Integer& c) {
  detail::require_positive({a, b, c});
  return FixedPointData{{Sign::plus(), {b, c, a + b}},
                        {Sign::minus(), {c, b + c, a + b + c}},
                        {Sign::minus(), {a, b, b + c}},
                        {Sign::plus(), {a, a + b, a + b + c}}};
}

/// Linear action on CP^2: {+,a,a+b}, {-,a,b}, {+,b,a+b}.
inline FixedPointData gen_cp2(const Integer& a, const Integer& b) {
  detail::require_positive({a, b});
  return FixedPointData{{Sign::plus(), {a, a + b}}, {Sign::minus(), {a, b}}, {Sign::plus(), {b, a + b}}};
}

/// Petrie's exotic action on a homotopy CP^3.
inline FixedPointData petrie() { return gen_s6_pair(7, 2, 3, 5, 2, 3); }

}  // namespace circlefp::examples
