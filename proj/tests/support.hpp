#pragma once

// Reference implementations used as oracles. They deliberately avoid the
// library's polynomial, series and enumeration code.

#include <circlefp/circlefp.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

namespace testing_support {

using circlefp::FixedPointData;
using circlefp::FixedPointDatum;
using circlefp::Integer;
using circlefp::Sign;

inline long as_long(const Integer& x) { return x.get_si(); }

/// Exact fraction over 64-bit integers, enough for small weights.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac& operator+=(const Frac& o) {
    std::int64_t n = num * o.den + o.num * den;
    std::int64_t d = den * o.den;
    std::int64_t g = std::gcd(n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return *this;
  }

  friend bool operator==(const Frac&, const Frac&) = default;
};

inline Frac abbv_reference(const FixedPointData& d) {
  Frac total;
  for (const auto& p : d) {
    std::int64_t prod = 1;
    for (const auto& w : p.weights()) prod *= as_long(w);
    total += Frac{p.sign().value(), prod};
  }
  return total;
}

/// Dense signature series coefficients 0..order, by direct convolution.
inline std::vector<std::int64_t> dense_signature(const FixedPointData& d, std::size_t order) {
  std::vector<std::int64_t> total(order + 1, 0);
  for (const auto& p : d) {
    std::vector<std::int64_t> acc(order + 1, 0);
    acc[0] = p.sign().value();
    for (const auto& wz : p.weights()) {
      const auto w = static_cast<std::size_t>(as_long(wz));
      std::vector<std::int64_t> next(order + 1, 0);
      for (std::size_t i = 0; i <= order; ++i) {
        if (acc[i] == 0) continue;
        next[i] += acc[i];
        for (std::size_t j = w; i + j <= order; j += w) next[i + j] += 2 * acc[i];
      }
      acc = std::move(next);
    }
    for (std::size_t i = 0; i <= order; ++i) total[i] += acc[i];
  }
  return total;
}

/// Sum of all weights, a bound on the degrees of numerator and denominator.
inline std::size_t total_weight(const FixedPointData& d) {
  std::size_t s = 0;
  for (const auto& p : d) {
    for (const auto& w : p.weights()) s += static_cast<std::size_t>(as_long(w));
  }
  return s;
}

/// Lowest degree k >= 1 where the series is nonzero, searched up to the degree
/// bound; 0 when the signature is constant.
inline std::size_t reference_witness(const FixedPointData& d) {
  const auto s = dense_signature(d, total_weight(d) + 1);
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] != 0) return k;
  }
  return 0;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20261017);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline FixedPointData random_fixed_points(std::size_t points, std::size_t arity, long max_weight) {
  std::vector<FixedPointDatum> pts;
  for (std::size_t i = 0; i < points; ++i) {
    std::vector<Integer> w;
    for (std::size_t k = 0; k < arity; ++k) w.emplace_back(uniform(1, max_weight));
    pts.emplace_back(uniform(0, 1) ? Sign::plus() : Sign::minus(), std::move(w));
  }
  return FixedPointData(std::move(pts));
}

inline FixedPointData shuffled(const FixedPointData& d) {
  auto pts = d.points();
  std::shuffle(pts.begin(), pts.end(), rng());
  return FixedPointData(std::move(pts));
}

/// Every 4-point, 3-weight generator output over [1, hi] grids.
inline std::vector<FixedPointData> generator_outputs(long hi) {
  namespace ex = circlefp::examples;
  std::vector<FixedPointData> out;
  for (long a = 1; a <= hi; ++a) {
    for (long b = 1; b <= hi; ++b) {
      for (long c = 1; c <= hi; ++c) {
        out.push_back(ex::gen_cp3(a, b, c));
        out.push_back(ex::gen_blowup(a, b, c));
        for (long d = 1; d <= hi; ++d) {
          for (long e = d; e <= hi; ++e) {
            for (long f = e; f <= hi; ++f) {
              if (a <= b && b <= c) out.push_back(ex::gen_s6_pair(a, b, c, d, e, f));
            }
          }
        }
      }
    }
  }
  return out;
}

/// Admissible graphs by pairing weight stubs one at a time, as sorted edge
/// lists (u, v, label) with u < v.
using EdgeList = std::vector<std::tuple<std::size_t, std::size_t, long>>;

inline void pair_stubs(const std::vector<std::pair<std::size_t, long>>& stubs, std::vector<bool>& used,
                       EdgeList& current, std::set<EdgeList>& out) {
  std::size_t i = 0;
  while (i < stubs.size() && used[i]) ++i;
  if (i == stubs.size()) {
    auto e = current;
    std::sort(e.begin(), e.end());
    out.insert(e);
    return;
  }
  used[i] = true;
  for (std::size_t j = i + 1; j < stubs.size(); ++j) {
    if (used[j] || stubs[j].second != stubs[i].second || stubs[j].first == stubs[i].first) continue;
    used[j] = true;
    current.emplace_back(std::min(stubs[i].first, stubs[j].first), std::max(stubs[i].first, stubs[j].first),
                         stubs[i].second);
    pair_stubs(stubs, used, current, out);
    current.pop_back();
    used[j] = false;
  }
  used[i] = false;
}

inline std::set<EdgeList> reference_graphs(const FixedPointData& d) {
  std::vector<std::pair<std::size_t, long>> stubs;
  std::vector<long> plus_weights;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (const auto& w : d[i].weights()) {
      stubs.emplace_back(i, as_long(w));
      if (d[i].sign().is_plus()) plus_weights.push_back(as_long(w));
    }
  }
  std::sort(plus_weights.begin(), plus_weights.end());
  std::set<EdgeList> all;
  std::vector<bool> used(stubs.size(), false);
  EdgeList current;
  pair_stubs(stubs, used, current, all);

  std::set<long> restricted;
  for (std::size_t k = 0; k < 2 && k < plus_weights.size(); ++k) restricted.insert(plus_weights[k]);
  std::set<EdgeList> out;
  for (const auto& g : all) {
    bool ok = true;
    for (const auto& [u, v, l] : g) {
      if (restricted.count(l) && d[u].sign() == d[v].sign()) ok = false;
    }
    if (ok) out.insert(g);
  }
  return out;
}

inline EdgeList edge_list(const circlefp::LabeledMultigraph& g) {
  EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, as_long(e.label));
  std::sort(out.begin(), out.end());
  return out;
}

/// Case 2 parameters by looping over a + b + c <= largest weight.
inline std::vector<std::tuple<long, long, long>> reference_case2(const FixedPointData& d) {
  long m = 0;
  for (const auto& p : d) m = std::max(m, as_long(p.weights().back()));
  std::vector<std::tuple<long, long, long>> out;
  for (long a = 1; a <= m; ++a) {
    for (long b = 1; a + b <= m; ++b) {
      for (long c = 1; a + b + c <= m; ++c) {
        if (circlefp::multiset_equal(circlefp::case2_data(a, b, c), d)) out.emplace_back(a, b, c);
      }
    }
  }
  return out;
}

/// Whether the four points split into two (+, -) pairs with equal weights.
inline bool reference_case1(const FixedPointData& d) {
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& p : pairings) {
    bool ok = true;
    for (int k = 0; k < 4; k += 2) {
      const auto& x = d[p[k]];
      const auto& y = d[p[k + 1]];
      if (x.weights() != y.weights() || x.sign() == y.sign()) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

/// All sorted arity-2 collections reachable from the empty one by forward
/// grammar steps, with total weight at most `bound`.
inline std::set<std::vector<FixedPointDatum>> reachable_4d(long bound) {
  using State = std::vector<FixedPointDatum>;
  auto weight = [](const State& s) {
    long t = 0;
    for (const auto& p : s) t += as_long(p.weights()[0]) + as_long(p.weights()[1]);
    return t;
  };
  std::set<State> seen{State{}};
  std::vector<State> frontier{State{}};
  while (!frontier.empty()) {
    std::vector<State> next;
    auto push = [&](State s) {
      std::sort(s.begin(), s.end());
      if (weight(s) <= bound && seen.insert(s).second) next.push_back(s);
    };
    for (const auto& s : frontier) {
      for (long a = 1; 2 * (2 * a) <= bound; ++a) {
        for (long b = a; 2 * (a + b) <= bound; ++b) {
          if (std::gcd(a, b) != 1) continue;
          State t = s;
          t.push_back(FixedPointDatum(Sign::plus(), {a, b}));
          t.push_back(FixedPointDatum(Sign::minus(), {a, b}));
          push(t);
        }
      }
      for (std::size_t i = 0; i < s.size(); ++i) {
        const long c = as_long(s[i].weights()[0]);
        const long e = as_long(s[i].weights()[1]);
        State t = s;
        t.erase(t.begin() + static_cast<long>(i));
        t.push_back(FixedPointDatum(s[i].sign(), {c, c + e}));
        t.push_back(FixedPointDatum(s[i].sign(), {e, c + e}));
        push(t);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace testing_support

namespace circlefp {

inline void PrintTo(const FixedPointDatum& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const FixedPointData& d, std::ostream* os) { *os << to_string(d); }
inline void PrintTo(const RewriteMove& m, std::ostream* os) { *os << to_string(m); }
inline void PrintTo(const SignedDatumClass& c, std::ostream* os) { *os << to_string(c); }

}  // namespace circlefp
