#pragma once

// Decision procedures for the known classifications of fixed point data:
// two fixed points, dimension 4 (generation grammar), and dimension 6 with
// four fixed points.

#include <algorithm>
#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "constraints.hpp"
#include "core.hpp"
#include "io.hpp"

namespace circlefp {

/// {+,a,b,c},{-,a,b,c},{+,d,e,f},{-,d,e,f}; first/second are (a,b,c) and (d,e,f).
struct Case1 {
  std::vector<Integer> first;
  std::vector<Integer> second;
  friend bool operator==(const Case1&, const Case1&) = default;
};

/// {+,a,a+b,a+b+c},{-,a,b,b+c},{+,b,c,a+b},{-,c,b+c,a+b+c}.
struct Case2 {
  Integer a, b, c;
  friend bool operator==(const Case2&, const Case2&) = default;
};

/// Two points with equal weights and opposite signs, as for a rotation of a sphere.
struct TwoPointRotation {
  std::vector<Integer> weights;
  friend bool operator==(const TwoPointRotation&, const TwoPointRotation&) = default;
};

/// One forward step of the dimension-4 grammar:
///   1: add {+,a,b} and {-,a,b} with gcd(a,b) = 1
///   2: replace {+,c,d} by {+,c,c+d} and {+,d,c+d}
///   3: replace {-,e,f} by {-,e,e+f} and {-,f,e+f}
struct GenerationStep {
  int step = 1;
  Integer first, second;
  friend bool operator==(const GenerationStep&, const GenerationStep&) = default;
};

struct FourDimReachable {
  /// Forward steps from the empty collection to the (normalized) data.
  std::vector<GenerationStep> trace;
  /// Common divisor the weights were divided by before the search (1 if none).
  Integer normalization = 1;
  friend bool operator==(const FourDimReachable&, const FourDimReachable&) = default;
};

struct NotInClassification {
  std::string reason;
  std::vector<CheckReport> failed_checks;
};

using Match = std::variant<Case1, Case2, TwoPointRotation, FourDimReachable, NotInClassification>;

/// All matching verdicts; a single NotInClassification when nothing matches.
struct Classification {
  std::vector<Match> matches;

  bool classified() const {
    return !matches.empty() && !std::holds_alternative<NotInClassification>(matches.front());
  }
  template <class T>
  bool has() const {
    return std::any_of(matches.begin(), matches.end(), [](const Match& m) { return std::holds_alternative<T>(m); });
  }
  template <class T>
  std::vector<T> all() const {
    std::vector<T> out;
    for (const auto& m : matches) {
      if (auto* p = std::get_if<T>(&m)) out.push_back(*p);
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Templates
// ---------------------------------------------------------------------------

inline FixedPointData case1_data(const Case1& m) {
  return FixedPointData{{Sign::plus(), m.first},
                        {Sign::minus(), m.first},
                        {Sign::plus(), m.second},
                        {Sign::minus(), m.second}};
}

inline FixedPointData case2_data(const Integer& a, const Integer& b, const Integer& c) {
  const Integer ab = a + b, bc = b + c, abc = a + b + c;
  return FixedPointData{{Sign::plus(), {a, ab, abc}},
                        {Sign::minus(), {a, b, bc}},
                        {Sign::plus(), {b, c, ab}},
                        {Sign::minus(), {c, bc, abc}}};
}

inline FixedPointData case2_data(const Case2& m) { return case2_data(m.a, m.b, m.c); }

inline FixedPointData two_point_data(const TwoPointRotation& m) {
  return FixedPointData{{Sign::plus(), m.weights}, {Sign::minus(), m.weights}};
}

/// Replays a dimension-4 generation trace from the empty collection. Throws
/// InvalidInputError if a replace step finds nothing to replace.
inline FixedPointData replay_generation(const std::vector<GenerationStep>& trace) {
  std::vector<FixedPointDatum> points;
  for (const auto& s : trace) {
    if (s.step == 1) {
      points.emplace_back(Sign::plus(), std::vector<Integer>{s.first, s.second});
      points.emplace_back(Sign::minus(), std::vector<Integer>{s.first, s.second});
      continue;
    }
    if (s.step != 2 && s.step != 3) throw InvalidInputError("unknown generation step");
    const Sign sign = s.step == 2 ? Sign::plus() : Sign::minus();
    const FixedPointDatum target(sign, {s.first, s.second});
    auto it = std::find(points.begin(), points.end(), target);
    if (it == points.end()) throw InvalidInputError("generation step replaces a point that is not present");
    points.erase(it);
    const Integer sum = s.first + s.second;
    points.emplace_back(sign, std::vector<Integer>{s.first, sum});
    points.emplace_back(sign, std::vector<Integer>{s.second, sum});
  }
  return FixedPointData(std::move(points));
}

namespace detail {

inline void assert_reproduces(const FixedPointData& replayed, const FixedPointData& d, const char* what) {
  if (!multiset_equal(replayed, d)) {
    throw std::logic_error(std::string("classification parameters do not reproduce the data: ") + what);
  }
}

inline NotInClassification rejection(const FixedPointData& d, std::string reason) {
  NotInClassification out{std::move(reason), run_all(d).failures()};
  if (!out.failed_checks.empty()) out.reason += "; failing check: " + out.failed_checks.front().witness;
  return out;
}

}  // namespace detail

inline Classification classify_two_fixed_points(const FixedPointData& d) {
  if (d.size() != 2) throw InvalidInputError("expected exactly 2 fixed points, got " + std::to_string(d.size()));
  Classification out;
  if (d[0].weights() == d[1].weights() && d[0].sign() == -d[1].sign()) {
    TwoPointRotation m{d[0].weights()};
    detail::assert_reproduces(two_point_data(m), d, "two-point rotation");
    out.matches.emplace_back(std::move(m));
  } else if (d[0].weights() != d[1].weights()) {
    out.matches.emplace_back(detail::rejection(d, "the two fixed points have different weights"));
  } else {
    out.matches.emplace_back(detail::rejection(d, "the two fixed points have the same sign"));
  }
  return out;
}

/// All Case1 parameter sets: pairings of the four points into opposite-sign
/// pairs with equal weights.
inline std::vector<Case1> find_case1(const FixedPointData& d) {
  static constexpr std::array<std::array<int, 4>, 3> kPairings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  std::vector<Case1> out;
  if (d.size() != 4) return out;
  for (const auto& pr : kPairings) {
    const auto& p = d[pr[0]];
    const auto& q = d[pr[1]];
    const auto& r = d[pr[2]];
    const auto& s = d[pr[3]];
    if (p.weights() != q.weights() || p.sign() == q.sign()) continue;
    if (r.weights() != s.weights() || r.sign() == s.sign()) continue;
    Case1 m{p.weights(), r.weights()};
    if (detail::compare(m.second, m.first) < 0) std::swap(m.first, m.second);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  return out;
}

/// All Case2 parameters. The positive point {a, a+b, a+b+c} has three distinct
/// weights, so each positive point with x < y < z proposes (x, y-x, z-y).
inline std::vector<Case2> find_case2(const FixedPointData& d) {
  std::vector<Case2> out;
  if (d.size() != 4 || d.arity() != 3) return out;
  for (const auto& p : d) {
    if (!p.sign().is_plus()) continue;
    const auto& w = p.weights();
    if (!(w[0] < w[1] && w[1] < w[2])) continue;
    Case2 m{w[0], w[1] - w[0], w[2] - w[1]};
    if (!multiset_equal(case2_data(m), d)) continue;
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  return out;
}

/// Dimension 6 with four fixed points. Case1 matches are listed before Case2.
inline Classification classify_6d4fp(const FixedPointData& d) {
  if (d.size() != 4 || d.arity() != 3) {
    throw InvalidInputError("expected 4 fixed points with 3 weights each");
  }
  Classification out;
  for (auto& m : find_case1(d)) {
    detail::assert_reproduces(case1_data(m), d, "Case1");
    out.matches.emplace_back(std::move(m));
  }
  for (auto& m : find_case2(d)) {
    detail::assert_reproduces(case2_data(m), d, "Case2");
    out.matches.emplace_back(std::move(m));
  }
  if (out.matches.empty()) {
    out.matches.emplace_back(detail::rejection(d, "no Case1 pairing and no Case2 parameters reproduce the data"));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dimension 4: reverse search over the generation grammar
// ---------------------------------------------------------------------------

namespace detail {

struct ReverseMove {
  GenerationStep step;
  std::vector<FixedPointDatum> next;
};

inline std::vector<ReverseMove> reverse_moves(const std::vector<FixedPointDatum>& state) {
  std::vector<ReverseMove> out;
  auto without = [&](std::size_t i, std::size_t j) {
    std::vector<FixedPointDatum> rest;
    for (std::size_t k = 0; k < state.size(); ++k) {
      if (k != i && k != j) rest.push_back(state[k]);
    }
    return rest;
  };

  // undo step 1: a {+,a,b},{-,a,b} pair with coprime weights
  std::set<std::vector<Integer>> seen;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (!state[i].sign().is_plus()) continue;
    const auto& w = state[i].weights();
    if (gcd(w[0], w[1]) != 1 || !seen.insert(w).second) continue;
    for (std::size_t j = 0; j < state.size(); ++j) {
      if (!state[j].sign().is_plus() && state[j].weights() == w) {
        out.push_back({{1, w[0], w[1]}, without(i, j)});
        break;
      }
    }
  }

  // undo steps 2/3: {s,c,c+d},{s,d,c+d} -> {s,c,d}
  std::vector<ReverseMove> merges;
  std::set<std::pair<FixedPointDatum, FixedPointDatum>> seen_pairs;
  for (std::size_t i = 0; i < state.size(); ++i) {
    for (std::size_t j = i + 1; j < state.size(); ++j) {
      const auto& p = state[i];
      const auto& q = state[j];
      if (p.sign() != q.sign()) continue;
      const Integer& top = p.weights()[1];
      if (q.weights()[1] != top || p.weights()[0] + q.weights()[0] != top) continue;
      if (!seen_pairs.insert({p, q}).second) continue;
      auto rest = without(i, j);
      Integer c = p.weights()[0], dd = q.weights()[0];
      if (dd < c) std::swap(c, dd);
      rest.emplace_back(p.sign(), std::vector<Integer>{c, dd});
      std::sort(rest.begin(), rest.end());
      merges.push_back({{p.sign().is_plus() ? 2 : 3, c, dd}, std::move(rest)});
    }
  }
  std::stable_sort(merges.begin(), merges.end(), [](const ReverseMove& a, const ReverseMove& b) {
    return a.step.first + a.step.second > b.step.first + b.step.second;
  });
  out.insert(out.end(), merges.begin(), merges.end());
  return out;
}

inline bool reverse_search(const std::vector<FixedPointDatum>& state, std::set<std::vector<FixedPointDatum>>& dead,
                           std::vector<GenerationStep>& path) {
  if (state.empty()) return true;
  if (dead.count(state)) return false;
  for (auto& move : reverse_moves(state)) {
    path.push_back(move.step);
    if (reverse_search(move.next, dead, path)) return true;
    path.pop_back();
  }
  dead.insert(state);
  return false;
}

}  // namespace detail

/// Whether arity-2 data is generated from the empty collection by the
/// dimension-4 grammar. With effective = false the weights are first divided
/// by their common divisor.
inline Classification membership_4d(const FixedPointData& d, bool effective) {
  if (!d.empty() && d.arity() != 2) throw InvalidInputError("expected 2 weights per fixed point");
  Integer g = gcd_of_weights(d);
  if (g == 0) g = 1;
  if (effective && g != 1) {
    throw InvalidInputError("weights have common divisor " + g.get_str() + "; the action is not effective");
  }
  std::vector<FixedPointDatum> state;
  for (const auto& p : d) {
    std::vector<Integer> w;
    for (const auto& x : p.weights()) w.push_back(x / g);
    state.emplace_back(p.sign(), std::move(w));
  }
  std::sort(state.begin(), state.end());

  Classification out;
  std::set<std::vector<FixedPointDatum>> dead;
  std::vector<GenerationStep> reverse_path;
  if (detail::reverse_search(state, dead, reverse_path)) {
    FourDimReachable m{{reverse_path.rbegin(), reverse_path.rend()}, g};
    detail::assert_reproduces(replay_generation(m.trace), FixedPointData(state), "generation trace");
    out.matches.emplace_back(std::move(m));
  } else {
    out.matches.emplace_back(detail::rejection(d, "no sequence of generation steps produces the data"));
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const GenerationStep& s) {
  return {{"step", s.step}, {"params", {integer_to_json(s.first), integer_to_json(s.second)}}};
}

inline nlohmann::json to_json(const Match& m) {
  auto ints = [](const std::vector<Integer>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(integer_to_json(x));
    return a;
  };
  return std::visit(
      [&](const auto& x) -> nlohmann::json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Case1>) {
          nlohmann::json params;
          static constexpr const char* kNames[] = {"a", "b", "c", "d", "e", "f"};
          for (std::size_t i = 0; i < 3; ++i) {
            params[kNames[i]] = integer_to_json(x.first[i]);
            params[kNames[i + 3]] = integer_to_json(x.second[i]);
          }
          return {{"verdict", "Case1"}, {"params", params}};
        } else if constexpr (std::is_same_v<T, Case2>) {
          return {{"verdict", "Case2"},
                  {"params", {{"a", integer_to_json(x.a)}, {"b", integer_to_json(x.b)}, {"c", integer_to_json(x.c)}}}};
        } else if constexpr (std::is_same_v<T, TwoPointRotation>) {
          return {{"verdict", "TwoPointRotation"}, {"params", {{"weights", ints(x.weights)}}}};
        } else if constexpr (std::is_same_v<T, FourDimReachable>) {
          nlohmann::json trace = nlohmann::json::array();
          for (const auto& s : x.trace) trace.push_back(to_json(s));
          return {{"verdict", "FourDimReachable"},
                  {"params", {{"normalization", integer_to_json(x.normalization)}}},
                  {"trace", trace}};
        } else {
          nlohmann::json failed = nlohmann::json::array();
          for (const auto& r : x.failed_checks) failed.push_back(to_json(r));
          return {{"verdict", "NotInClassification"}, {"reason", x.reason}, {"failed_checks", failed}};
        }
      },
      m);
}

/// {"verdict":..., "params":..., "matches":[...]}: the first match at top level,
/// every match in "matches".
inline nlohmann::json to_json(const Classification& c) {
  nlohmann::json out = c.matches.empty() ? nlohmann::json::object() : to_json(c.matches.front());
  nlohmann::json all = nlohmann::json::array();
  for (const auto& m : c.matches) all.push_back(to_json(m));
  out["matches"] = all;
  return out;
}

inline std::string verdict_name(const Match& m) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Case1>) return "Case1";
        if constexpr (std::is_same_v<T, Case2>) return "Case2";
        if constexpr (std::is_same_v<T, TwoPointRotation>) return "TwoPointRotation";
        if constexpr (std::is_same_v<T, FourDimReachable>) return "FourDimReachable";
        return "NotInClassification";
      },
      m);
}

}  // namespace circlefp
