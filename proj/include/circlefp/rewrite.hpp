#pragma once

// Rewriting of 6-dimensional fixed point data, as collections of signed datum
// classes [eps, w1, w2, w3], towards the empty collection.
//
// Operations (s = +1 or -1 selects the upper/lower sign of each pattern):
//   (1) remove [+,A,B,C], [-,A,B,C]
//   (2) remove [s,A,B,C], [-s,C-A,C-B,C]; add [s,A,B-A,C-A], [-s,B,B-A,C-B];  0<A<B<C
//   (3) remove [s,A,B,C], [s,A,C-B,C]; add [s,C-B,C-A,A], [s,C-B,B,A],
//       [s,C-B,A-B,A], [-s,C-A,A-B,A];                                        0<A,B<C, A!=B
//   (4) remove [s,A,A,C], [s,A,C-A,C]; add [s,C-A,C-2A,A], [s,C-A,A,A] twice,
//       [-s,C-2A,A,A];                                                        0<A<C
//   (5) remove [s,C,A,A], [-s,C,C-A,C-A]; add [s,C-A,C-2A,A], [s,C-A,A,A] twice,
//       [-s,C-2A,A,A], [s,A,C-2A,C-A], [-s,A,C-A,C-A] twice, [-s,C-2A,C-A,C-A]; 0<A<C
//
// Instantiations that would produce a zero weight (C = 2A in (4) and (5)) are
// rejected.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "classify.hpp"
#include "core.hpp"
#include "io.hpp"

namespace circlefp {

/// Multiset of canonical classes, kept sorted.
using Collection = std::vector<SignedDatumClass>;

inline Collection to_collection(const FixedPointData& d) {
  Collection out;
  for (const auto& p : d) out.emplace_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

inline FixedPointData to_data(const Collection& c) {
  std::vector<FixedPointDatum> points;
  for (const auto& x : c) points.push_back(to_datum(x));
  return FixedPointData(std::move(points));
}

struct RewriteMove {
  int op = 1;
  Sign orientation;
  /// Pattern parameters; B is unused (0) for operations 4 and 5.
  Integer A, B, C;
  Collection removed;
  Collection added;

  friend bool operator==(const RewriteMove&, const RewriteMove&) = default;
};

inline std::string to_string(const RewriteMove& m) {
  std::string out = "op(" + std::to_string(m.op) + ")";
  if (m.op != 1) out += std::string(" ") + m.orientation.symbol();
  out += " A=" + m.A.get_str();
  if (m.op <= 3) out += " B=" + m.B.get_str();
  out += " C=" + m.C.get_str() + ": remove";
  for (const auto& c : m.removed) out += " " + to_string(c);
  if (!m.added.empty()) out += ", add";
  for (const auto& c : m.added) out += " " + to_string(c);
  return out;
}

namespace detail {

inline SignedDatumClass cls(Sign s, const Integer& x, const Integer& y, const Integer& z) {
  return canonicalize(SignedDatumClass(s, std::vector<Integer>{x, y, z}));
}

}  // namespace detail

/// Builds a move from its parameters, or nullopt when the side conditions fail.
inline std::optional<RewriteMove> instantiate_move(int op, Sign s, const Integer& A, const Integer& B,
                                                   const Integer& C) {
  using detail::cls;
  RewriteMove m{op, s, A, B, C, {}, {}};
  switch (op) {
    case 1:
      if (A <= 0 || B <= 0 || C <= 0) return std::nullopt;
      m.orientation = Sign::plus();
      m.removed = {cls(Sign::plus(), A, B, C), cls(Sign::minus(), A, B, C)};
      break;
    case 2:
      if (!(0 < A && A < B && B < C)) return std::nullopt;
      m.removed = {cls(s, A, B, C), cls(-s, C - A, C - B, C)};
      m.added = {cls(s, A, B - A, C - A), cls(-s, B, B - A, C - B)};
      break;
    case 3:
      if (!(0 < A && A < C && 0 < B && B < C && A != B)) return std::nullopt;
      m.removed = {cls(s, A, B, C), cls(s, A, C - B, C)};
      m.added = {cls(s, C - B, C - A, A), cls(s, C - B, B, A), cls(s, C - B, A - B, A), cls(-s, C - A, A - B, A)};
      break;
    case 4:
    case 5: {
      m.B = 0;
      if (!(0 < A && A < C) || C == 2 * A) return std::nullopt;
      const Integer ca = C - A, c2a = C - 2 * A;
      m.added = {cls(s, ca, c2a, A), cls(s, ca, A, A), cls(s, ca, A, A), cls(-s, c2a, A, A)};
      if (op == 4) {
        m.removed = {cls(s, A, A, C), cls(s, A, ca, C)};
      } else {
        m.removed = {cls(s, C, A, A), cls(-s, C, ca, ca)};
        m.added.push_back(cls(s, A, c2a, ca));
        m.added.push_back(cls(-s, A, ca, ca));
        m.added.push_back(cls(-s, A, ca, ca));
        m.added.push_back(cls(-s, c2a, ca, ca));
      }
      break;
    }
    default:
      throw InvalidInputError("unknown rewrite operation " + std::to_string(op));
  }
  std::sort(m.removed.begin(), m.removed.end());
  std::sort(m.added.begin(), m.added.end());
  return m;
}

namespace detail {

inline bool contains_all(const Collection& coll, const Collection& needed) {
  // both sorted
  return std::includes(coll.begin(), coll.end(), needed.begin(), needed.end());
}

inline void require_arity3(const Collection& coll) {
  for (const auto& c : coll) {
    if (c.arity() != 3) throw InvalidInputError("rewriting needs classes with exactly 3 weights");
  }
}

inline void require_canonical(const Collection& coll) {
  require_arity3(coll);
  for (const auto& c : coll) {
    if (!c.is_canonical()) throw InvalidInputError("class " + to_string(c) + " is not canonical");
  }
}

}  // namespace detail

/// Every instantiation of operations 1-5 whose removed classes are present,
/// ordered by operation number.
inline std::vector<RewriteMove> applicable_moves(const Collection& input) {
  detail::require_arity3(input);
  Collection coll;
  for (const auto& c : input) coll.push_back(canonicalize(c));
  std::sort(coll.begin(), coll.end());

  std::vector<RewriteMove> out;
  auto offer = [&](int op, Sign s, const Integer& A, const Integer& B, const Integer& C) {
    auto m = instantiate_move(op, s, A, B, C);
    if (!m || !detail::contains_all(coll, m->removed)) return;
    if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(std::move(*m));
  };

  for (int op = 1; op <= 5; ++op) {
    for (const auto& x : coll) {
      const Sign s = x.sign();
      const auto& w = x.weights();
      switch (op) {
        case 1:
          if (s.is_plus()) offer(1, s, w[0], w[1], w[2]);
          break;
        case 2:
          offer(2, s, w[0], w[1], w[2]);
          break;
        case 3:
          offer(3, s, w[0], w[1], w[2]);
          offer(3, s, w[1], w[0], w[2]);
          break;
        default:
          // [s,A,A,C] for (4) and [s,C,A,A] for (5) are the same shape
          if (w[0] == w[1]) offer(op, s, w[0], Integer(0), w[2]);
          break;
      }
    }
  }
  return out;
}

namespace detail {

// coll sorted canonical, move drawn from applicable_moves(coll)
inline Collection apply_unchecked(Collection coll, const RewriteMove& move) {
  for (const auto& r : move.removed) coll.erase(std::find(coll.begin(), coll.end(), r));
  coll.insert(coll.end(), move.added.begin(), move.added.end());
  std::sort(coll.begin(), coll.end());
  return coll;
}

}  // namespace detail

inline Collection apply_move(const Collection& input, const RewriteMove& move) {
  auto moves = applicable_moves(input);
  if (std::find(moves.begin(), moves.end(), move) == moves.end()) {
    throw StaleMoveError("move " + to_string(move) + " is not applicable");
  }
  Collection coll;
  for (const auto& c : input) coll.push_back(canonicalize(c));
  std::sort(coll.begin(), coll.end());
  return detail::apply_unchecked(std::move(coll), move);
}

struct RewriteTrace {
  Collection initial;
  std::vector<RewriteMove> moves;
  Collection final_state;

  /// Replays every move from the initial collection; true iff each applies and
  /// the result is final_state.
  bool replays() const {
    try {
      Collection state = initial;
      for (const auto& m : moves) state = apply_move(state, m);
      return state == final_state;
    } catch (const StaleMoveError&) {
      return false;
    }
  }
};

enum class Strategy {
  /// Case1/Case2 four-point data use the fixed scripts; anything else is searched.
  scripted,
  /// Always iterative deepening search.
  search,
};

inline constexpr std::size_t kDefaultMaxDepth = 12;
inline constexpr std::size_t kDefaultNodeBudget = 2'000'000;

struct ReduceFailure {
  std::string reason;
  std::size_t depth_reached = 0;
  std::size_t nodes_expanded = 0;
  std::size_t states_seen = 0;
  std::size_t largest_collection = 0;
};

struct ReduceResult {
  std::optional<RewriteTrace> trace;
  ReduceFailure failure;

  bool succeeded() const { return trace.has_value(); }
};

namespace detail {

inline RewriteTrace run_script(const Collection& coll, const std::vector<RewriteMove>& script) {
  RewriteTrace t{coll, {}, coll};
  for (const auto& m : script) {
    t.final_state = apply_move(t.final_state, m);
    t.moves.push_back(m);
  }
  return t;
}

inline std::optional<RewriteTrace> scripted_reduction(const Collection& coll) {
  if (coll.size() != 4) return std::nullopt;
  const auto d = to_data(coll);
  if (auto case2 = find_case2(d); !case2.empty()) {
    const auto& m = case2.front();
    auto op2 = instantiate_move(2, Sign::plus(), m.a, m.a + m.b, m.a + m.b + m.c);
    Collection state = apply_move(coll, *op2);
    std::vector<RewriteMove> script{*op2};
    for (int k = 0; k < 2; ++k) {
      auto moves = applicable_moves(state);
      auto it = std::find_if(moves.begin(), moves.end(), [](const RewriteMove& x) { return x.op == 1; });
      if (it == moves.end()) return std::nullopt;
      script.push_back(*it);
      state = apply_move(state, *it);
    }
    return run_script(coll, script);
  }
  if (auto case1 = find_case1(d); !case1.empty()) {
    const auto& m = case1.front();
    auto first = instantiate_move(1, Sign::plus(), m.first[0], m.first[1], m.first[2]);
    auto second = instantiate_move(1, Sign::plus(), m.second[0], m.second[1], m.second[2]);
    return run_script(coll, {*first, *second});
  }
  return std::nullopt;
}

struct Search {
  std::size_t node_budget;
  ReduceFailure stats;
  // state -> largest remaining depth already shown insufficient
  std::map<Collection, std::size_t> failed;
  std::vector<RewriteMove> path;

  bool dfs(const Collection& state, std::size_t remaining) {
    stats.largest_collection = std::max(stats.largest_collection, state.size());
    if (state.empty()) return true;
    // every operation removes at most two classes
    if (state.size() > 2 * remaining) return false;
    if (auto it = failed.find(state); it != failed.end() && it->second >= remaining) return false;
    if (++stats.nodes_expanded > node_budget) throw LimitExceededError("node budget exhausted");
    for (const auto& m : applicable_moves(state)) {
      path.push_back(m);
      if (dfs(apply_unchecked(state, m), remaining - 1)) return true;
      path.pop_back();
    }
    auto& f = failed[state];
    f = std::max(f, remaining);
    stats.states_seen = failed.size();
    return false;
  }
};

inline bool weight_parity_even(const Collection& coll) {
  std::map<Integer, std::size_t> counts;
  for (const auto& c : coll) {
    for (const auto& w : c.weights()) ++counts[abs(w)];
  }
  return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

}  // namespace detail

/// Reduces a canonical arity-3 collection to the empty collection.
inline ReduceResult reduce_to_empty(const Collection& input, std::size_t max_depth = kDefaultMaxDepth,
                                    Strategy strategy = Strategy::scripted,
                                    std::size_t node_budget = kDefaultNodeBudget) {
  detail::require_canonical(input);
  Collection coll = input;
  std::sort(coll.begin(), coll.end());
  ReduceResult out;

  if (strategy == Strategy::scripted) {
    if (auto t = detail::scripted_reduction(coll)) {
      out.trace = std::move(*t);
      return out;
    }
  }
  if (!detail::weight_parity_even(coll)) {
    // every operation preserves per-value weight parity, and the empty collection is even
    out.failure.reason = "some weight occurs an odd number of times; no sequence of moves can empty the collection";
    out.failure.largest_collection = coll.size();
    return out;
  }

  detail::Search search{node_budget, {}, {}, {}};
  try {
    for (std::size_t depth = 0; depth <= max_depth; ++depth) {
      search.stats.depth_reached = depth;
      search.path.clear();
      if (search.dfs(coll, depth)) {
        out.trace = detail::run_script(coll, search.path);
        return out;
      }
    }
    out.failure = search.stats;
    out.failure.reason = "no reduction within depth " + std::to_string(max_depth);
  } catch (const LimitExceededError&) {
    out.failure = search.stats;
    out.failure.reason = "node budget of " + std::to_string(node_budget) + " exhausted at depth " +
                         std::to_string(search.stats.depth_reached);
  }
  return out;
}

inline ReduceResult reduce_to_empty(const FixedPointData& d, std::size_t max_depth = kDefaultMaxDepth,
                                    Strategy strategy = Strategy::scripted,
                                    std::size_t node_budget = kDefaultNodeBudget) {
  if (!d.empty() && d.arity() != 3) throw InvalidInputError("rewriting needs 3 weights per fixed point");
  return reduce_to_empty(to_collection(d), max_depth, strategy, node_budget);
}

inline nlohmann::json to_json(const RewriteMove& m) {
  nlohmann::json params{{"A", integer_to_json(m.A)}, {"C", integer_to_json(m.C)}};
  if (m.op <= 3) params["B"] = integer_to_json(m.B);
  nlohmann::json removed = nlohmann::json::array(), added = nlohmann::json::array();
  for (const auto& c : m.removed) removed.push_back(to_json(c));
  for (const auto& c : m.added) added.push_back(to_json(c));
  return {{"op", m.op},
          {"orientation", std::string(1, m.orientation.symbol())},
          {"params", params},
          {"removed", removed},
          {"added", added}};
}

/// One JSON object per line, one line per move.
inline std::string trace_to_json_lines(const RewriteTrace& t) {
  std::string out;
  for (const auto& m : t.moves) out += to_json(m).dump() + "\n";
  return out;
}

inline RewriteMove move_from_json(const nlohmann::json& j) {
  try {
    const int op = j.at("op").get<int>();
    const Sign s = j.at("orientation").get<std::string>() == "-" ? Sign::minus() : Sign::plus();
    const auto& p = j.at("params");
    Integer B = p.contains("B") ? integer_from_json(p["B"]) : Integer(0);
    auto m = instantiate_move(op, s, integer_from_json(p.at("A")), B, integer_from_json(p.at("C")));
    if (!m) throw ParseError(0, "move parameters violate the operation's side conditions");
    return *m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace circlefp
