#pragma once

// Signed labeled multigraphs describing fixed point data, enumeration of the
// admissible ones, and recognition of the five 4-vertex 3-regular shapes
// (cases A-E) that can describe a 6-manifold with 4 fixed points.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "core.hpp"
#include "io.hpp"

namespace circlefp {

struct Vertex {
  std::size_t id = 0;
  Sign sign;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Integer label;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend std::strong_ordering operator<=>(const Edge& a, const Edge& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    if (auto c = a.v <=> b.v; c != 0) return c;
    return detail::compare(a.label, b.label);
  }
};

/// Vertices are fixed points (by identifier) with signs; edges are unordered
/// vertex pairs with positive labels. Edges are stored normalized (u <= v) and
/// sorted, so equality is multigraph equality.
class LabeledMultigraph {
 public:
  LabeledMultigraph() = default;
  LabeledMultigraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::set<std::size_t> ids;
    for (const auto& v : vertices_) {
      if (!ids.insert(v.id).second) throw InvalidInputError("duplicate vertex " + std::to_string(v.id));
    }
    for (auto& e : edges_) {
      if (e.label < 1) throw InvalidWeightError("edge labels must be positive");
      if (!ids.count(e.u) || !ids.count(e.v)) throw InvalidInputError("edge references an unknown vertex");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(vertices_.begin(), vertices_.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    std::sort(edges_.begin(), edges_.end());
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  Sign sign_of(std::size_t id) const {
    for (const auto& v : vertices_) {
      if (v.id == id) return v.sign;
    }
    throw InvalidInputError("unknown vertex " + std::to_string(id));
  }

  bool has_self_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
  }

  /// Labels at a vertex; a self-loop contributes its label twice.
  std::vector<Integer> labels_at(std::size_t id) const {
    std::vector<Integer> out;
    for (const auto& e : edges_) {
      if (e.u == id) out.push_back(e.label);
      if (e.v == id) out.push_back(e.label);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t edge_count(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.u == a && e.v == b; }));
  }

  /// Sorted labels of the edges joining a and b.
  std::vector<Integer> labels_between(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    std::vector<Integer> out;
    for (const auto& e : edges_) {
      if (e.u == a && e.v == b) out.push_back(e.label);
    }
    return out;
  }

  friend bool operator==(const LabeledMultigraph&, const LabeledMultigraph&) = default;
  friend bool operator<(const LabeledMultigraph& a, const LabeledMultigraph& b) { return a.edges_ < b.edges_; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// Whether g describes d: vertex signs match point signs and the edge labels
/// at every vertex are exactly the point's weights.
inline bool describes(const LabeledMultigraph& g, const FixedPointData& d) {
  if (g.vertices().size() != d.size()) throw InvalidInputError("vertex set does not match the fixed points");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (g.vertices()[i].id != i) throw InvalidInputError("vertex set does not match the fixed points");
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (g.vertices()[i].sign != d[i].sign()) return false;
    if (g.labels_at(i) != d[i].weights()) return false;
  }
  return true;
}

/// Default bound on the number of enumerated graphs.
inline constexpr std::size_t kDefaultGraphCap = 1'000'000;

namespace detail {

/// Edge multiplicities for one label: (u, v, count) with u < v.
using LabelMatching = std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>;

// Every loopless multigraph on `points` whose degrees equal `degree`. Each
// point's remaining endpoints go to strictly later points, so every
// multiplicity matrix is produced exactly once.
inline void enumerate_label_matchings(const std::vector<std::size_t>& points, std::vector<std::size_t>& degree,
                                      const std::vector<Sign>& signs, bool opposite_only, std::size_t from,
                                      LabelMatching& current, std::vector<LabelMatching>& out) {
  while (from < points.size() && degree[from] == 0) ++from;
  if (from == points.size()) {
    out.push_back(current);
    return;
  }
  // distribute degree[from] endpoints among later points
  std::size_t remaining_later = 0;
  for (std::size_t j = from + 1; j < points.size(); ++j) {
    if (!opposite_only || signs[j] != signs[from]) remaining_later += degree[j];
  }
  if (remaining_later < degree[from]) return;

  auto distribute = [&](auto&& self, std::size_t j, std::size_t left) -> void {
    if (left == 0) {
      std::size_t saved = degree[from];
      degree[from] = 0;
      enumerate_label_matchings(points, degree, signs, opposite_only, from + 1, current, out);
      degree[from] = saved;
      return;
    }
    if (j >= points.size()) return;
    const bool allowed = !opposite_only || signs[j] != signs[from];
    const std::size_t max_here = allowed ? std::min(left, degree[j]) : 0;
    for (std::size_t k = max_here + 1; k-- > 0;) {
      if (k > 0) {
        degree[j] -= k;
        current.emplace_back(points[from], points[j], k);
      }
      self(self, j + 1, left - k);
      if (k > 0) {
        current.pop_back();
        degree[j] += k;
      }
    }
  };
  distribute(distribute, from + 1, degree[from]);
}

}  // namespace detail

/// The two smallest entries of W+; fewer when W+ is short.
inline std::vector<Integer> smallest_positive_weights(const FixedPointData& d) {
  auto plus = weights_with_sign(d, Sign::plus());
  if (plus.size() > 2) plus.resize(2);
  return plus;
}

/// Every loopless multigraph describing d whose edges join equal weights and
/// whose edges labeled a1 or a2 join opposite-sign vertices. Sorted.
inline std::vector<LabeledMultigraph> enumerate_admissible(const FixedPointData& d,
                                                           std::size_t cap = kDefaultGraphCap) {
  for (const auto& [w, n] : weight_counts(d)) {
    if (n % 2 != 0) throw NoMatchingError("weight " + w.get_str() + " occurs an odd number of times");
  }
  const auto small = smallest_positive_weights(d);

  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < d.size(); ++i) vertices.push_back({i, d[i].sign()});

  // per label value, all multiplicity matrices
  std::vector<std::pair<Integer, std::vector<detail::LabelMatching>>> per_label;
  for (const auto& [w, n] : weight_counts(d)) {
    std::vector<std::size_t> points, degree;
    std::vector<Sign> signs;
    for (std::size_t i = 0; i < d.size(); ++i) {
      auto k = static_cast<std::size_t>(std::count(d[i].weights().begin(), d[i].weights().end(), w));
      if (k) {
        points.push_back(i);
        degree.push_back(k);
        signs.push_back(d[i].sign());
      }
    }
    const bool opposite_only = std::find(small.begin(), small.end(), w) != small.end();
    std::vector<detail::LabelMatching> matchings;
    detail::LabelMatching current;
    detail::enumerate_label_matchings(points, degree, signs, opposite_only, 0, current, matchings);
    if (matchings.empty()) return {};
    per_label.emplace_back(w, std::move(matchings));
  }

  std::size_t total = 1;
  for (const auto& [w, ms] : per_label) {
    if (ms.size() > cap || total > cap / ms.size()) {
      throw LimitExceededError("more than " + std::to_string(cap) + " admissible graphs");
    }
    total *= ms.size();
  }

  std::vector<LabeledMultigraph> out;
  out.reserve(total);
  std::vector<std::size_t> index(per_label.size(), 0);
  while (true) {
    std::vector<Edge> edges;
    for (std::size_t l = 0; l < per_label.size(); ++l) {
      for (const auto& [u, v, k] : per_label[l].second[index[l]]) {
        for (std::size_t r = 0; r < k; ++r) edges.push_back({u, v, per_label[l].first});
      }
    }
    out.emplace_back(vertices, std::move(edges));
    std::size_t l = 0;
    while (l < index.size() && ++index[l] == per_label[l].second.size()) index[l++] = 0;
    if (l == index.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Cases A-E
// ---------------------------------------------------------------------------

enum class FigureCase { A, B, C, D, E };

inline char to_char(FigureCase c) { return static_cast<char>('A' + static_cast<int>(c)); }

/// A graph recognized as one of the cases: vertices[0..3] are p1..p4 (p1, p2
/// positive; p3, p4 negative) and labels[0..5] are a..f.
struct Figure1Case {
  FigureCase tag = FigureCase::A;
  std::array<std::size_t, 4> vertices{};
  std::array<Integer, 6> labels;
};

namespace detail {

/// Template edges per case as (p_i, p_j, label index), 0-based p and a..f = 0..5.
inline const std::vector<std::array<int, 3>>& figure_template(FigureCase c) {
  static const std::vector<std::array<int, 3>> a{{0, 2, 0}, {0, 2, 1}, {0, 2, 2}, {1, 3, 3}, {1, 3, 4}, {1, 3, 5}};
  static const std::vector<std::array<int, 3>> b{{0, 1, 0}, {0, 2, 1}, {0, 2, 2}, {1, 3, 3}, {1, 3, 4}, {2, 3, 5}};
  static const std::vector<std::array<int, 3>> cc{{0, 2, 0}, {0, 2, 1}, {0, 3, 2}, {1, 2, 3}, {1, 3, 4}, {1, 3, 5}};
  static const std::vector<std::array<int, 3>> dd{{0, 1, 0}, {0, 1, 1}, {0, 2, 2}, {1, 3, 3}, {2, 3, 4}, {2, 3, 5}};
  static const std::vector<std::array<int, 3>> e{{0, 1, 0}, {0, 2, 1}, {0, 3, 2}, {1, 2, 3}, {1, 3, 4}, {2, 3, 5}};
  switch (c) {
    case FigureCase::A: return a;
    case FigureCase::B: return b;
    case FigureCase::C: return cc;
    case FigureCase::D: return dd;
    case FigureCase::E: return e;
  }
  return a;
}

inline std::optional<FigureCase> case_for_pattern(std::size_t m2, std::size_t m3, std::size_t m4) {
  using T = std::tuple<std::size_t, std::size_t, std::size_t>;
  const T t{m2, m3, m4};
  if (t == T{0, 3, 0}) return FigureCase::A;
  if (t == T{1, 2, 0}) return FigureCase::B;
  if (t == T{0, 2, 1}) return FigureCase::C;
  if (t == T{2, 1, 0}) return FigureCase::D;
  if (t == T{1, 1, 1}) return FigureCase::E;
  return std::nullopt;
}

}  // namespace detail

/// The graph obtained by substituting a case's labels into its template.
inline LabeledMultigraph template_graph(const Figure1Case& fc) {
  std::vector<Vertex> vertices;
  for (int i = 0; i < 4; ++i) vertices.push_back({fc.vertices[i], i < 2 ? Sign::plus() : Sign::minus()});
  std::vector<Edge> edges;
  for (const auto& [i, j, l] : detail::figure_template(fc.tag)) {
    edges.push_back({fc.vertices[i], fc.vertices[j], fc.labels[l]});
  }
  return {std::move(vertices), std::move(edges)};
}

/// The fixed point data a case describes, in p1..p4 order.
inline FixedPointData template_data(const Figure1Case& fc) {
  auto g = template_graph(fc);
  std::vector<FixedPointDatum> points;
  for (int i = 0; i < 4; ++i) points.emplace_back(i < 2 ? Sign::plus() : Sign::minus(), g.labels_at(fc.vertices[i]));
  return FixedPointData(std::move(points));
}

/// Recognizes a 4-vertex, 3-regular, loopless graph with two vertices of each
/// sign as one of cases A-E, or nullopt when no p1<->p2 / p3<->p4
/// normalization gives a template edge pattern.
inline std::optional<Figure1Case> match_figure1(const LabeledMultigraph& g) {
  if (g.vertices().size() != 4) throw InvalidInputError("case matching needs exactly 4 vertices");
  std::vector<std::size_t> plus, minus;
  for (const auto& v : g.vertices()) (v.sign.is_plus() ? plus : minus).push_back(v.id);
  if (plus.size() != 2 || minus.size() != 2) {
    throw InvalidInputError("case matching needs two vertices of each sign");
  }
  if (g.has_self_loops()) throw InvalidInputError("case matching needs a graph without self-loops");
  for (const auto& v : g.vertices()) {
    if (g.labels_at(v.id).size() != 3) throw InvalidInputError("case matching needs a 3-regular graph");
  }

  for (int s12 = 0; s12 < 2; ++s12) {
    for (int s34 = 0; s34 < 2; ++s34) {
      const std::array<std::size_t, 4> p{plus[s12], plus[1 - s12], minus[s34], minus[1 - s34]};
      const std::size_t m2 = g.edge_count(p[0], p[1]);
      const std::size_t m3 = g.edge_count(p[0], p[2]);
      const std::size_t m4 = g.edge_count(p[0], p[3]);
      if (m3 < 1 || m3 < m4) continue;
      auto tag = detail::case_for_pattern(m2, m3, m4);
      if (!tag) continue;

      Figure1Case fc{*tag, p, {}};
      // labels on each vertex pair, assigned to template letters in ascending order
      std::map<std::pair<int, int>, std::vector<Integer>> pool;
      for (const auto& [i, j, l] : detail::figure_template(*tag)) {
        auto key = std::make_pair(i, j);
        if (!pool.count(key)) pool[key] = g.labels_between(p[i], p[j]);
      }
      std::map<std::pair<int, int>, std::size_t> used;
      bool complete = true;
      for (const auto& [i, j, l] : detail::figure_template(*tag)) {
        auto key = std::make_pair(i, j);
        auto& k = used[key];
        if (k >= pool[key].size()) {
          complete = false;
          break;
        }
        fc.labels[l] = pool[key][k++];
      }
      if (complete && template_graph(fc) == g) return fc;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text format: "vertex <id> <sign>" header lines, then "<u> <v> <label>" edges.
// ---------------------------------------------------------------------------

inline std::string serialize_graph(const LabeledMultigraph& g) {
  std::string out;
  for (const auto& v : g.vertices()) out += "vertex " + std::to_string(v.id) + " " + v.sign.symbol() + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + e.label.get_str() + "\n";
  }
  return out;
}

inline LabeledMultigraph parse_graph(std::string_view text) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto to_index = [&](std::string_view s) {
    if (!detail::all_digits(s)) throw ParseError(line_no, "bad vertex id '" + std::string(s) + "'");
    return static_cast<std::size_t>(std::stoull(std::string(s)));
  };
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto tokens = detail::split_whitespace(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens[0] == "vertex") {
      if (tokens.size() != 3 || (tokens[2] != "+" && tokens[2] != "-")) {
        throw ParseError(line_no, "expected 'vertex <id> <+|->'");
      }
      vertices.push_back({to_index(tokens[1]), tokens[2] == "+" ? Sign::plus() : Sign::minus()});
    } else {
      if (tokens.size() != 3 || !detail::all_digits(tokens[2])) throw ParseError(line_no, "expected '<u> <v> <label>'");
      edges.push_back({to_index(tokens[0]), to_index(tokens[1]), Integer(std::string(tokens[2]))});
    }
  }
  try {
    return {std::move(vertices), std::move(edges)};
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace circlefp
