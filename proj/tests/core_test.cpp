#include "support.hpp"

#include <gtest/gtest.h>

using namespace circlefp;
using namespace testing_support;

namespace {

FixedPointData petrie_data() {
  return {{Sign::plus(), {7, 2, 3}}, {Sign::minus(), {7, 2, 3}}, {Sign::plus(), {5, 2, 3}}, {Sign::minus(), {5, 2, 3}}};
}

SignedDatumClass random_class(std::size_t arity) {
  std::vector<Integer> w;
  for (std::size_t i = 0; i < arity; ++i) {
    long x = uniform(1, 9);
    w.emplace_back(uniform(0, 1) ? x : -x);
  }
  return {uniform(0, 1) ? Sign::plus() : Sign::minus(), w};
}

}  // namespace

TEST(Sign, OnlyPlusMinusOne) {
  EXPECT_EQ(Sign(1), Sign::plus());
  EXPECT_EQ(Sign(-1), Sign::minus());
  EXPECT_THROW(Sign(0), InvalidInputError);
  EXPECT_THROW(Sign(2), InvalidInputError);
  EXPECT_EQ(-Sign::plus(), Sign::minus());
  EXPECT_EQ(Sign::minus() * Sign::minus(), Sign::plus());
}

TEST(FixedPointDatum, SortsAndRejectsNonPositive) {
  FixedPointDatum p(Sign::plus(), {7, 2, 3});
  EXPECT_EQ(p.weights(), (std::vector<Integer>{2, 3, 7}));
  EXPECT_EQ(p, FixedPointDatum(Sign::plus(), {3, 7, 2}));
  EXPECT_NE(p, FixedPointDatum(Sign::minus(), {3, 7, 2}));
  EXPECT_THROW(FixedPointDatum(Sign::plus(), {1, 0, 2}), InvalidWeightError);
  EXPECT_THROW(FixedPointDatum(Sign::plus(), {-1, 2}), InvalidWeightError);
  EXPECT_THROW(FixedPointDatum(Sign::plus(), std::vector<Integer>{}), InvalidInputError);
}

TEST(FixedPointData, UniformArity) {
  EXPECT_THROW((FixedPointData{{Sign::plus(), {1, 2}}, {Sign::minus(), {1, 2, 3}}}), DimensionMismatchError);
  FixedPointData empty;
  EXPECT_EQ(empty.arity(), 0u);
  EXPECT_EQ(petrie_data().dimension(), 6u);
}

TEST(FixedPointData, MultisetEquality) {
  auto d = petrie_data();
  EXPECT_TRUE(multiset_equal(d, shuffled(d)));
  EXPECT_TRUE(multiset_equal(d, reverse_orientation(d)));
  FixedPointData other{{Sign::plus(), {7, 2, 3}}, {Sign::plus(), {7, 2, 3}}, {Sign::minus(), {5, 2, 3}},
                       {Sign::minus(), {5, 2, 3}}};
  EXPECT_FALSE(multiset_equal(d, other));
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize({Sign::plus(), {-1, 2, 3}}), SignedDatumClass(Sign::minus(), {1, 2, 3}));
  EXPECT_EQ(canonicalize({Sign::plus(), {1, 2, 3}}), SignedDatumClass(Sign::plus(), {1, 2, 3}));
  EXPECT_EQ(canonicalize({Sign::minus(), {-7, -2, 3}}), SignedDatumClass(Sign::minus(), {2, 3, 7}));
  EXPECT_THROW(SignedDatumClass(Sign::plus(), {1, 0, 2}), InvalidWeightError);
}

TEST(Canonicalize, IdempotentAndSignRule) {
  for (int trial = 0; trial < 500; ++trial) {
    auto c = random_class(static_cast<std::size_t>(uniform(1, 4)));
    auto once = canonicalize(c);
    EXPECT_TRUE(once.is_canonical());
    EXPECT_EQ(canonicalize(once), once);
    long negatives = std::count_if(c.weights().begin(), c.weights().end(), [](const Integer& w) { return w < 0; });
    EXPECT_EQ(once.sign().value(), c.sign().value() * (negatives % 2 ? -1 : 1));
  }
}

TEST(Canonicalize, EquivalentClassesAgree) {
  // negating one weight together with the sign stays in the class
  for (int trial = 0; trial < 300; ++trial) {
    auto c = random_class(3);
    auto w = c.weights();
    auto i = static_cast<std::size_t>(uniform(0, 2));
    w[i] = -w[i];
    EXPECT_EQ(canonicalize(c), canonicalize(SignedDatumClass(-c.sign(), w)));
  }
}

TEST(FromComplexWeights, Examples) {
  EXPECT_EQ(from_complex_weights({7, 2, 3}), FixedPointDatum(Sign::plus(), {7, 2, 3}));
  EXPECT_EQ(from_complex_weights({-1, 1, 2}), FixedPointDatum(Sign::minus(), {1, 1, 2}));
  EXPECT_EQ(from_complex_weights({-1, -2, -3}), FixedPointDatum(Sign::minus(), {1, 2, 3}));
  EXPECT_THROW(from_complex_weights({1, 0}), InvalidWeightError);
}

TEST(FromComplexWeights, MatchesCanonicalize) {
  for (int trial = 0; trial < 300; ++trial) {
    auto c = random_class(static_cast<std::size_t>(uniform(1, 4)));
    SignedDatumClass plus(Sign::plus(), c.weights());
    EXPECT_EQ(SignedDatumClass(from_complex_weights(c.weights())), canonicalize(plus));
  }
}

TEST(DisjointUnion, Examples) {
  FixedPointData s1{{Sign::plus(), {1, 2, 3}}, {Sign::minus(), {1, 2, 3}}};
  FixedPointData s2{{Sign::plus(), {4, 5, 6}}, {Sign::minus(), {4, 5, 6}}};
  FixedPointData expected{{Sign::plus(), {1, 2, 3}}, {Sign::minus(), {1, 2, 3}}, {Sign::plus(), {4, 5, 6}},
                          {Sign::minus(), {4, 5, 6}}};
  EXPECT_EQ(disjoint_union(s1, s2), expected);
  EXPECT_EQ(disjoint_union(s1, FixedPointData{}), s1);
  EXPECT_EQ(disjoint_union(FixedPointData{}, FixedPointData{}), FixedPointData{});
  EXPECT_THROW(disjoint_union(s1, FixedPointData{{Sign::plus(), {1, 2}}}), DimensionMismatchError);
}

TEST(DisjointUnion, AssociativeAndCommutative) {
  for (int trial = 0; trial < 200; ++trial) {
    auto x = random_fixed_points(static_cast<std::size_t>(uniform(0, 3)), 3, 6);
    auto y = random_fixed_points(static_cast<std::size_t>(uniform(0, 3)), 3, 6);
    auto z = random_fixed_points(static_cast<std::size_t>(uniform(0, 3)), 3, 6);
    EXPECT_TRUE(multiset_equal(disjoint_union(x, y), disjoint_union(y, x)));
    EXPECT_TRUE(multiset_equal(disjoint_union(disjoint_union(x, y), z), disjoint_union(x, disjoint_union(y, z))));
  }
}

TEST(ReverseOrientation, FlipsSignsAndIsInvolutive) {
  FixedPointData s{{Sign::plus(), {1, 2, 3}}, {Sign::minus(), {1, 2, 3}}};
  EXPECT_EQ(reverse_orientation(s), (FixedPointData{{Sign::minus(), {1, 2, 3}}, {Sign::plus(), {1, 2, 3}}}));
  auto p = reverse_orientation(petrie_data());
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(p[i].sign(), -petrie_data()[i].sign());
    EXPECT_EQ(p[i].weights(), petrie_data()[i].weights());
  }
  for (int trial = 0; trial < 100; ++trial) {
    auto d = random_fixed_points(static_cast<std::size_t>(uniform(0, 5)), 3, 9);
    EXPECT_EQ(reverse_orientation(reverse_orientation(d)), d);
  }
}

TEST(Helpers, WeightsAndGcd) {
  auto d = petrie_data();
  EXPECT_EQ(weights_with_sign(d, Sign::plus()), (std::vector<Integer>{2, 2, 3, 3, 5, 7}));
  auto counts = weight_counts(d);
  EXPECT_EQ(counts[Integer(2)], 4u);
  EXPECT_EQ(counts[Integer(7)], 2u);
  EXPECT_EQ(gcd_of_weights(d), 1);
  EXPECT_EQ(gcd_of_weights(FixedPointData{{Sign::plus(), {4, 6}}, {Sign::minus(), {4, 6}}}), 2);
}

TEST(Helpers, ToString) {
  EXPECT_EQ(to_string(FixedPointDatum(Sign::minus(), {3, 1, 2})), "{-,1,2,3}");
  EXPECT_EQ(to_string(SignedDatumClass(Sign::plus(), {1, -2, 3})), "[+,1,-2,3]");
}

TEST(Integers, ArbitraryPrecision) {
  Integer big("123456789012345678901234567890");
  FixedPointData d{{Sign::plus(), {big, big}}, {Sign::minus(), {big, big}}};
  EXPECT_EQ(d[0].weights()[0], big);
  EXPECT_EQ(parse_integer("123456789012345678901234567890"), big);
  EXPECT_THROW(parse_integer("12a"), std::invalid_argument);
}
