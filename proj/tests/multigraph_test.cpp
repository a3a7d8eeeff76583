#include "support.hpp"

#include <gtest/gtest.h>

using namespace circlefp;
using namespace testing_support;

namespace {

LabeledMultigraph graph(std::vector<int> signs, std::vector<std::array<long, 3>> edges) {
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < signs.size(); ++i) vs.push_back({i, Sign(signs[i])});
  std::vector<Edge> es;
  for (const auto& [u, v, l] : edges) es.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), l});
  return {vs, es};
}

// Same graph with vertex i renamed perm[i].
LabeledMultigraph relabel(const LabeledMultigraph& g, const std::vector<std::size_t>& perm) {
  std::vector<Vertex> vs;
  for (const auto& v : g.vertices()) vs.push_back({perm[v.id], v.sign});
  std::vector<Edge> es;
  for (const auto& e : g.edges()) es.push_back({perm[e.u], perm[e.v], e.label});
  return {vs, es};
}

std::set<EdgeList> edge_sets(const std::vector<LabeledMultigraph>& gs) {
  std::set<EdgeList> out;
  for (const auto& g : gs) out.insert(edge_list(g));
  return out;
}

std::set<char> tags_of(const FixedPointData& d) {
  std::set<char> out;
  for (const auto& g : enumerate_admissible(d)) {
    if (auto fc = match_figure1(g)) out.insert(to_char(fc->tag));
  }
  return out;
}

}  // namespace

TEST(LabeledMultigraph, NormalizesEdges) {
  auto g = graph({1, -1}, {{1, 0, 2}, {0, 1, 1}});
  EXPECT_EQ(g.edges().front().u, 0u);
  EXPECT_EQ(g.labels_at(0), (std::vector<Integer>{1, 2}));
  EXPECT_EQ(g.edge_count(1, 0), 2u);
  EXPECT_FALSE(g.has_self_loops());
  EXPECT_TRUE(graph({1}, {{0, 0, 3}}).has_self_loops());
  EXPECT_EQ(graph({1}, {{0, 0, 3}}).labels_at(0), (std::vector<Integer>{3, 3}));
  EXPECT_THROW(graph({1}, {{0, 1, 3}}), InvalidInputError);
  EXPECT_THROW(graph({1, 1}, {{0, 1, 0}}), InvalidWeightError);
}

TEST(Describes, Examples) {
  auto d = examples::gen_s6_pair(1, 2, 3, 4, 5, 6);
  // p1 = {+,1,2,3}, p2 = {-,1,2,3}, p3 = {+,4,5,6}, p4 = {-,4,5,6}
  auto g = graph({1, -1, 1, -1}, {{0, 1, 1}, {0, 1, 2}, {0, 1, 3}, {2, 3, 4}, {2, 3, 5}, {2, 3, 6}});
  EXPECT_TRUE(describes(g, d));
  auto missing = graph({1, -1, 1, -1}, {{0, 1, 1}, {0, 1, 2}, {0, 1, 3}, {2, 3, 4}, {2, 3, 5}});
  EXPECT_FALSE(describes(missing, d));
  auto wrong_sign = graph({-1, 1, 1, -1}, {{0, 1, 1}, {0, 1, 2}, {0, 1, 3}, {2, 3, 4}, {2, 3, 5}, {2, 3, 6}});
  EXPECT_FALSE(describes(wrong_sign, d));
  EXPECT_TRUE(describes(LabeledMultigraph{}, FixedPointData{}));
  EXPECT_THROW(describes(graph({1, -1}, {}), d), InvalidInputError);
}

TEST(EnumerateAdmissible, Cp3Graph) {
  auto d = examples::gen_cp3(1, 2, 3);
  auto gs = enumerate_admissible(d);
  auto expected = graph({1, -1, 1, -1}, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}, {2, 3, 3}, {1, 3, 5}, {0, 3, 6}});
  EXPECT_NE(std::find(gs.begin(), gs.end(), expected), gs.end());
  EXPECT_EQ(tags_of(d), std::set<char>{'E'});
}

TEST(EnumerateAdmissible, SharedLabelsGiveCrossPairings) {
  auto d = examples::gen_s6_pair(1, 2, 3, 1, 2, 3);
  auto gs = enumerate_admissible(d);
  auto two_components = graph({1, -1, 1, -1}, {{0, 1, 1}, {0, 1, 2}, {0, 1, 3}, {2, 3, 1}, {2, 3, 2}, {2, 3, 3}});
  EXPECT_NE(std::find(gs.begin(), gs.end(), two_components), gs.end());
  bool cross = false;
  for (const auto& g : gs) cross = cross || g.edge_count(0, 3) > 0 || g.edge_count(0, 2) > 0;
  EXPECT_TRUE(cross);
  EXPECT_GT(gs.size(), 1u);
  for (char t : tags_of(d)) EXPECT_TRUE(t >= 'A' && t <= 'E');
}

TEST(EnumerateAdmissible, TwoVertexGraph) {
  FixedPointData d{{Sign::plus(), {1, 1, 2}}, {Sign::minus(), {1, 1, 2}}};
  auto gs = enumerate_admissible(d);
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(gs[0], graph({1, -1}, {{0, 1, 1}, {0, 1, 1}, {0, 1, 2}}));
}

TEST(EnumerateAdmissible, OppositeSignConstraint) {
  // a1 = a2 = 1; no edge labeled 1 may join the two positive points
  FixedPointData d{{Sign::plus(), {1, 1}}, {Sign::plus(), {1, 1}}, {Sign::minus(), {1, 1}}, {Sign::minus(), {1, 1}}};
  for (const auto& g : enumerate_admissible(d)) {
    for (const auto& e : g.edges()) EXPECT_NE(g.sign_of(e.u), g.sign_of(e.v));
  }
  FixedPointData same{{Sign::plus(), {1, 2}}, {Sign::plus(), {1, 2}}};
  EXPECT_TRUE(enumerate_admissible(same).empty());
}

TEST(EnumerateAdmissible, ParityFailureThrows) {
  EXPECT_THROW(enumerate_admissible(FixedPointData{{Sign::plus(), {1, 2, 3}}, {Sign::minus(), {1, 2, 4}}}),
               NoMatchingError);
}

TEST(EnumerateAdmissible, CapIsEnforced) {
  auto d = examples::gen_s6_pair(1, 1, 1, 1, 1, 1);
  auto all = enumerate_admissible(d);
  EXPECT_THROW(enumerate_admissible(d, all.size() - 1), LimitExceededError);
  EXPECT_EQ(enumerate_admissible(d, all.size()).size(), all.size());
}

TEST(EnumerateAdmissible, MatchesStubPairingOracle) {
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto d = random_fixed_points(static_cast<std::size_t>(uniform(2, 5)), static_cast<std::size_t>(uniform(1, 3)), 3);
    if (!check_weight_parity(d).passed()) continue;
    auto gs = enumerate_admissible(d);
    EXPECT_TRUE(std::is_sorted(gs.begin(), gs.end()));
    EXPECT_EQ(std::adjacent_find(gs.begin(), gs.end()), gs.end()) << "duplicate graph";
    EXPECT_EQ(edge_sets(gs), reference_graphs(d)) << to_string(d);
    for (const auto& g : gs) {
      EXPECT_TRUE(describes(g, d));
      EXPECT_FALSE(g.has_self_loops());
    }
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(EnumerateAdmissible, PermutationInvariant) {
  for (int trial = 0; trial < 200; ++trial) {
    auto d = random_fixed_points(4, 3, 3);
    if (!check_weight_parity(d).passed()) continue;
    std::vector<std::size_t> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng());
    std::vector<FixedPointDatum> pts(4, d[0]);
    for (std::size_t i = 0; i < 4; ++i) pts[perm[i]] = d[i];
    FixedPointData permuted(pts);
    std::set<EdgeList> relabeled;
    for (const auto& g : enumerate_admissible(d)) relabeled.insert(edge_list(relabel(g, perm)));
    EXPECT_EQ(relabeled, edge_sets(enumerate_admissible(permuted)));
  }
}

TEST(CaseTemplates, CaseAForDisjointSpheres) {
  auto d = examples::gen_s6_pair(1, 2, 3, 4, 5, 6);
  auto gs = enumerate_admissible(d);
  bool found = false;
  for (const auto& g : gs) {
    auto fc = match_figure1(g);
    if (fc && fc->tag == FigureCase::A) {
      found = true;
      EXPECT_EQ(template_graph(*fc), g);
      EXPECT_TRUE(multiset_equal(template_data(*fc), d));
    }
  }
  EXPECT_TRUE(found);
}

TEST(CaseTemplates, Cp3IsCaseE) {
  auto g = graph({1, -1, 1, -1}, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}, {2, 3, 3}, {1, 3, 5}, {0, 3, 6}});
  auto fc = match_figure1(g);
  ASSERT_TRUE(fc.has_value());
  EXPECT_EQ(fc->tag, FigureCase::E);
  EXPECT_EQ(template_graph(*fc), g);
  // p1, p2 positive; p3, p4 negative
  EXPECT_TRUE(g.sign_of(fc->vertices[0]).is_plus());
  EXPECT_TRUE(g.sign_of(fc->vertices[1]).is_plus());
  EXPECT_FALSE(g.sign_of(fc->vertices[2]).is_plus());
  EXPECT_FALSE(g.sign_of(fc->vertices[3]).is_plus());
  std::multiset<Integer> labels(fc->labels.begin(), fc->labels.end());
  EXPECT_EQ(labels, (std::multiset<Integer>{1, 2, 3, 3, 5, 6}));
}

TEST(CaseTemplates, NoTemplatePattern) {
  // triple edges p1p2 and p3p4: pattern (3,0,0)
  auto g = graph({1, 1, -1, -1}, {{0, 1, 1}, {0, 1, 2}, {0, 1, 3}, {2, 3, 1}, {2, 3, 2}, {2, 3, 3}});
  EXPECT_FALSE(match_figure1(g).has_value());
}

TEST(CaseTemplates, RejectsWrongShape) {
  EXPECT_THROW(match_figure1(graph({1, -1}, {{0, 1, 1}})), InvalidInputError);
  EXPECT_THROW(match_figure1(graph({1, 1, 1, -1}, {{0, 3, 1}, {1, 3, 1}, {2, 3, 1}})), InvalidInputError);
  EXPECT_THROW(match_figure1(graph({1, 1, -1, -1}, {{0, 2, 1}})), InvalidInputError);
  EXPECT_THROW(match_figure1(graph({1, 1, -1, -1}, {{0, 0, 1}, {0, 2, 1}, {1, 2, 1}, {1, 3, 1}, {1, 3, 1},
                                                    {2, 3, 1}, {3, 2, 1}})),
               InvalidInputError);
}

TEST(CaseTemplates, EveryTemplateIsRecognized) {
  for (auto tag : {FigureCase::A, FigureCase::B, FigureCase::C, FigureCase::D, FigureCase::E}) {
    for (int trial = 0; trial < 50; ++trial) {
      Figure1Case fc{tag, {0, 1, 2, 3}, {}};
      for (auto& l : fc.labels) l = uniform(1, 9);
      auto g = template_graph(fc);
      auto got = match_figure1(g);
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(got->tag, tag);
      EXPECT_EQ(template_graph(*got), g);
    }
  }
}

TEST(CaseTemplates, InvariantUnderSwaps) {
  for (auto tag : {FigureCase::A, FigureCase::B, FigureCase::C, FigureCase::D, FigureCase::E}) {
    for (int trial = 0; trial < 30; ++trial) {
      Figure1Case fc{tag, {0, 1, 2, 3}, {}};
      for (auto& l : fc.labels) l = uniform(1, 9);
      auto g = template_graph(fc);
      for (const auto& perm : std::vector<std::vector<std::size_t>>{{1, 0, 2, 3}, {0, 1, 3, 2}, {1, 0, 3, 2}}) {
        auto h = relabel(g, perm);
        auto got = match_figure1(h);
        ASSERT_TRUE(got.has_value());
        EXPECT_EQ(got->tag, tag);
        EXPECT_EQ(template_graph(*got), h);
      }
    }
  }
}

TEST(GraphFormat, RoundTrip) {
  auto d = examples::gen_s6_pair(1, 2, 3, 1, 2, 3);
  for (const auto& g : enumerate_admissible(d)) EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  auto g = graph({1, -1}, {{0, 1, 4}});
  EXPECT_EQ(serialize_graph(g), "vertex 0 +\nvertex 1 -\n0 1 4\n");
  EXPECT_THROW(parse_graph("vertex 0 *\n"), ParseError);
  EXPECT_THROW(parse_graph("vertex 0 +\n0 1 4\n"), ParseError);
  EXPECT_THROW(parse_graph("vertex 0 +\n0 0\n"), ParseError);
}
