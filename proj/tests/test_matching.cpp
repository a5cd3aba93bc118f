#include <gtest/gtest.h>

#include "matchgroup/catalog.hpp"
#include "matchgroup/matching.hpp"
#include "matchgroup/random.hpp"
#include "oracles.hpp"

namespace mg = matchgroup;
using mg::Element;
using mg::GroupSubset;
using mg::GroupTable;
using Pairs = std::vector<std::pair<Element, Element>>;

TEST(BuildGraph, Examples) {
  const auto c4 = mg::make_cyclic(4);
  const auto g = mg::build_graph(GroupSubset(c4, {0, 2}), GroupSubset(c4, {1, 2}));
  // right = {1, 2}; both rows admit only 1
  EXPECT_EQ(g.adjacency, (std::vector<std::vector<std::size_t>>{{0}, {0}}));

  const auto single = mg::build_graph(GroupSubset(c4, {1}), GroupSubset(c4, {2}));
  EXPECT_EQ(single.adjacency, (std::vector<std::vector<std::size_t>>{{0}}));

  // C5, A = B = {1,2,3,4}: row of 1 is {x : 1 + x not in A} = {4}, computed by oracle below
  const auto c5 = mg::make_cyclic(5);
  const GroupSubset a(c5, {1, 2, 3, 4});
  const auto graph = mg::build_graph(a, a);
  for (std::size_t i = 0; i < graph.left.size(); ++i) {
    std::vector<std::size_t> expected;
    for (std::size_t j = 0; j < graph.right.size(); ++j)
      if (!a.contains((graph.left[i] + graph.right[j]) % 5)) expected.push_back(j);
    EXPECT_EQ(graph.adjacency[i], expected);
  }
  EXPECT_EQ(graph.adjacency[0], (std::vector<std::size_t>{3}));
  EXPECT_THROW(mg::build_graph(GroupSubset(c5), a), mg::Error);
}

TEST(FindMatching, C4ConstructionGivesViolator) {
  const auto c4 = mg::make_cyclic(4);
  const auto out = mg::find_matching(GroupSubset(c4, {0, 2}), GroupSubset(c4, {1, 2}));
  const auto* v = std::get_if<mg::HallViolator<GroupTable>>(&out);
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->s, (GroupSubset(c4, {0, 2})));
  EXPECT_EQ(v->neighborhood, (GroupSubset(c4, {1})));
  EXPECT_EQ(v->deficiency, 1u);
}

TEST(FindMatching, InverseMatchingInC5) {
  const auto c5 = mg::make_cyclic(5);
  const GroupSubset a(c5, {1, 2, 3, 4});
  const auto out = mg::find_matching(a, a);
  const auto* m = std::get_if<mg::Matching<GroupTable>>(&out);
  ASSERT_NE(m, nullptr);
  EXPECT_EQ(m->pairs, (Pairs{{1, 4}, {2, 3}, {3, 2}, {4, 1}}));
  EXPECT_TRUE(mg::verify_matching(a, a, *m));
}

TEST(FindMatching, SingletonSelfMatching) {
  for (const auto& g : mg::catalog(8))
    for (Element x = 1; x < g.order(); ++x) {
      const GroupSubset a(g, {x});
      const auto out = mg::find_matching(a, a);
      ASSERT_TRUE(std::holds_alternative<mg::Matching<GroupTable>>(out));
      EXPECT_EQ(std::get<mg::Matching<GroupTable>>(out).pairs, (Pairs{{x, x}}));
    }
}

TEST(FindMatching, Errors) {
  const auto c4 = mg::make_cyclic(4);
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const mg::Error& e) {
      return e.kind();
    }
    return mg::ErrorKind::Parse;  // sentinel: nothing thrown
  };
  EXPECT_EQ(kind_of([&] { mg::find_matching(GroupSubset(c4, {0, 2}), GroupSubset(c4, {0, 2})); }),
            mg::ErrorKind::IdentityInB);
  EXPECT_EQ(kind_of([&] { mg::find_matching(GroupSubset(c4, {0}), GroupSubset(c4, {1, 2})); }),
            mg::ErrorKind::SizeMismatch);
  EXPECT_EQ(kind_of([&] { mg::find_matching(GroupSubset(c4), GroupSubset(c4)); }), mg::ErrorKind::EmptyInput);
}

TEST(VerifyMatching, Examples) {
  const auto c4 = mg::make_cyclic(4);
  const GroupSubset a(c4, {0, 2}), b(c4, {1, 2});
  const auto bad = mg::verify_matching(a, b, mg::Matching<GroupTable>{{{0, 2}, {2, 1}}});
  EXPECT_FALSE(bad);
  EXPECT_EQ(bad.reason, "0*2 = 2 lies in A");
  const auto repeated = mg::verify_matching(a, b, mg::Matching<GroupTable>{{{0, 1}, {2, 1}}});
  EXPECT_FALSE(repeated);
  EXPECT_NE(repeated.reason.find("not bijective"), std::string::npos);
  const auto short_map = mg::verify_matching(a, b, mg::Matching<GroupTable>{{{0, 1}}});
  EXPECT_NE(short_map.reason.find("not bijective"), std::string::npos);
}

TEST(BruteForce, Examples) {
  const auto c4 = mg::make_cyclic(4);
  EXPECT_FALSE(mg::brute_force_matching(GroupSubset(c4, {0, 2}), GroupSubset(c4, {1, 2})));
  const auto single = mg::brute_force_matching(GroupSubset(c4, {1}), GroupSubset(c4, {3}));
  ASSERT_TRUE(single);
  EXPECT_EQ(single->pairs, (Pairs{{1, 3}}));
  const auto c6 = mg::make_cyclic(6);
  EXPECT_FALSE(mg::brute_force_matching(GroupSubset(c6, {0, 2, 4}), GroupSubset(c6, {1, 2, 4})));
  const auto c10 = mg::make_cyclic(10);
  EXPECT_THROW(mg::brute_force_matching(GroupSubset::from(c10, std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8}),
                                        GroupSubset::from(c10, std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8})),
               mg::Error);
}

// Engine agrees with the recursive oracle; every returned matching verifies;
// every violator's deficiency is confirmed by recomputing its neighborhood.
TEST(FindMatching, OracleAgreementAndCertificates) {
  mg::Rng rng(2024);
  std::size_t negatives = 0, positives = 0;
  for (const auto& g : mg::catalog(12)) {
    if (g.order() < 2) continue;
    std::vector<Element> all, nonid;
    for (Element e = 0; e < g.order(); ++e) {
      all.push_back(e);
      if (e) nonid.push_back(e);
    }
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t k = rng.uniform(1, std::min<std::size_t>(5, g.order() - 1));
      const auto a = GroupSubset::from(g, rng.sample(all, k));
      const auto b = GroupSubset::from(g, rng.sample(nonid, k));
      const auto out = mg::find_matching(a, b);
      const bool expected = oracle::matching_exists(g, a.elements(), b.elements());
      ASSERT_EQ(std::holds_alternative<mg::Matching<GroupTable>>(out), expected)
          << g.label() << " A=" << a.to_string() << " B=" << b.to_string();
      ASSERT_EQ(mg::brute_force_matching(a, b).has_value(), expected);
      if (const auto* m = std::get_if<mg::Matching<GroupTable>>(&out)) {
        ++positives;
        EXPECT_TRUE(mg::verify_matching(a, b, *m));
      } else {
        ++negatives;
        const auto& v = std::get<mg::HallViolator<GroupTable>>(out);
        EXPECT_TRUE(v.s.is_subset_of(a));
        GroupSubset neighborhood(g);
        for (Element s : v.s.elements()) neighborhood |= mg::candidate_set(a, b, s);
        EXPECT_EQ(neighborhood, v.neighborhood);
        EXPECT_LT(neighborhood.size(), v.s.size());
        EXPECT_EQ(v.deficiency, v.s.size() - neighborhood.size());
      }
    }
  }
  EXPECT_GT(negatives, 0u);
  EXPECT_GT(positives, 0u);
}

TEST(FindMatching, ExhaustiveOracleAgreementSmallGroups) {
  for (const auto& g : mg::catalog(6)) {
    const std::uint64_t full = std::uint64_t{1} << g.order();
    for (std::uint64_t am = 1; am < full; ++am)
      for (std::uint64_t bm = 2; bm < full; bm += 2) {  // bit 0 clear: identity not in B
        const auto a = GroupSubset::from_mask(g, am);
        const auto b = GroupSubset::from_mask(g, bm);
        if (a.size() != b.size()) continue;
        ASSERT_EQ(mg::has_matching(a, b), mg::brute_force_matching(a, b).has_value())
            << g.label() << " " << a.to_string() << " " << b.to_string();
      }
  }
}

TEST(FindMatching, Deterministic) {
  const auto g = mg::make_dihedral(5);
  const auto a = GroupSubset::from(g, std::vector<int>{1, 3, 5, 6, 8});
  const auto b = GroupSubset::from(g, std::vector<int>{2, 4, 5, 7, 9});
  const auto first = mg::find_matching(a, b);
  for (int i = 0; i < 5; ++i) {
    const auto again = mg::find_matching(a, b);
    ASSERT_EQ(first.index(), again.index());
    if (first.index() == 0) {
      EXPECT_EQ(std::get<0>(first).pairs, std::get<0>(again).pairs);
    }
  }
}

TEST(FindMatching, LatticeInstances) {
  const mg::LatticeGroup z(1);
  const mg::LatticeSubset a(z, {{0}, {1}, {2}});
  const mg::LatticeSubset b(z, {{1}, {2}, {-1}});
  const auto out = mg::find_matching(a, b);
  const auto* m = std::get_if<mg::Matching<mg::LatticeGroup>>(&out);
  ASSERT_NE(m, nullptr);
  EXPECT_TRUE(mg::verify_matching(a, b, *m));
  EXPECT_TRUE(mg::brute_force_matching(a, b).has_value());
  EXPECT_THROW(mg::find_matching(a, mg::LatticeSubset(z, {{0}, {1}, {2}})), mg::Error);
}
