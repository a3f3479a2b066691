#include <gtest/gtest.h>

#include <map>

#include "clusteraut/error.hpp"
#include "clusteraut/root_system.hpp"

using namespace clusteraut;

namespace {

RootSystem rs_of(const std::string& label) { return RootSystem(DynkinType::parse(label)); }

const std::vector<std::string> kTypes = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4",
                                         "D4", "D5", "D6", "G2", "F4", "E6", "E7"};

}  // namespace

TEST(RootSystem, PositiveRootCountIsNhOverTwo) {
  const std::map<std::string, std::size_t> expected = {{"A3", 6}, {"B3", 9}, {"C3", 9}, {"D4", 12},
                                                       {"G2", 6}, {"F4", 24}, {"E6", 36}, {"E7", 63}};
  for (const auto& [label, count] : expected) {
    const auto rs = rs_of(label);
    EXPECT_EQ(rs.positives().size(), count) << label;
    EXPECT_EQ(rs.positives().size() * 2, rs.rank() * static_cast<std::size_t>(rs.coxeter_number())) << label;
  }
}

TEST(RootSystem, HighestRoots) {
  EXPECT_EQ(rs_of("G2").positives().back(), (RootVector{3, 2}));
  EXPECT_EQ(rs_of("B3").positives().back(), (RootVector{1, 2, 2}));
  EXPECT_EQ(rs_of("C3").positives().back(), (RootVector{2, 2, 1}));
  EXPECT_EQ(rs_of("D4").positives().back(), (RootVector{1, 2, 1, 1}));
}

TEST(RootSystem, DualSwapsBAndC) {
  EXPECT_EQ(rs_of("B3").dual().type().to_string(), "C3");
  EXPECT_EQ(rs_of("G2").dual().cartan(), CartanMatrix(rs_of("G2").cartan().entries().transposed()));
  // Long simple root of B2 has the short coroot.
  const auto b2 = rs_of("B2");
  EXPECT_EQ(b2.coroot({1, 0}), (RootVector{1, 0}));
  EXPECT_EQ(b2.coroot({1, 1}), (RootVector{2, 1}));
  EXPECT_EQ(b2.coroot({1, 2}), (RootVector{1, 1}));
}

TEST(Tau, ExplicitA2) {
  const auto rs = rs_of("A2");
  const auto eps = rs.canonical_sign();
  EXPECT_EQ(tau(rs, eps, 1, {-1, 0}), (RootVector{1, 0}));
  EXPECT_EQ(tau(rs, eps, 1, {0, -1}), (RootVector{0, -1}));
  EXPECT_EQ(tau(rs, eps, 1, {0, 1}), (RootVector{1, 1}));
  EXPECT_EQ(tau(rs, eps, -1, {1, 0}), (RootVector{1, 1}));
}

TEST(Tau, GroupOrders) {
  const std::map<std::string, std::size_t> rotation = {{"A2", 5}, {"A3", 6}, {"A4", 7}, {"B2", 3},
                                                       {"B3", 4}, {"C3", 4}, {"D4", 4}, {"D5", 10},
                                                       {"G2", 4}, {"F4", 7}, {"E6", 14}};
  for (const auto& [label, rot] : rotation) {
    const auto rs = rs_of(label);
    const auto t = tau_group(rs, rs.canonical_sign());
    EXPECT_EQ(t.rotation_order, rot) << label;
    EXPECT_EQ(t.order, 2 * rot) << label;
  }
}

TEST(Tau, InvolutionsPreservingAlmostPositive) {
  for (const auto& label : kTypes) {
    const auto rs = rs_of(label);
    for (const auto& eps : {rs.canonical_sign(), rs.canonical_sign().negated()})
      for (int sign : {1, -1})
        for (const auto& a : rs.almost_positive()) {
          const auto t = tau(rs, eps, sign, a);
          ASSERT_TRUE(rs.is_almost_positive(t)) << label;
          ASSERT_EQ(tau(rs, eps, sign, t), a) << label;
        }
  }
}

TEST(Weyl, LongestInvolution) {
  const auto check = [](const std::string& label, std::vector<std::size_t> expected) {
    const auto rs = rs_of(label);
    EXPECT_EQ(longest_involution(rs, rs.canonical_sign()), expected) << label;
    EXPECT_EQ(rs.w0_involution(), expected) << label;
  };
  check("A2", {1, 0});
  check("A3", {2, 1, 0});
  check("B3", {0, 1, 2});
  check("D4", {0, 1, 2, 3});
  check("D5", {0, 1, 2, 4, 3});
  check("E6", {4, 3, 2, 1, 0, 5});
  EXPECT_TRUE(rs_of("E7").w0_is_minus_identity());
}

TEST(DVector, WalkBasics) {
  const auto rs = rs_of("A2");
  const auto eps = rs.canonical_sign();
  EXPECT_EQ(d_vector_walk(rs, eps, 0, 0), (RootVector{-1, 0}));
  EXPECT_EQ(d_vector_walk(rs, eps, 1, -1), (RootVector{0, -1}));
  EXPECT_THROW(d_vector_walk(rs, eps, 1, 0), InvalidArgument);
}

TEST(DVector, WindowIsDisjointCover) {
  for (const auto& label : kTypes) {
    const auto rs = rs_of(label);
    const auto eps = rs.canonical_sign();
    std::vector<int> hits(rs.almost_positive().size(), 0);
    for (const auto& [i, r] : d_vector_window(rs, eps)) {
      const auto idx = rs.index_of(d_vector_walk(rs, eps, i, r));
      ASSERT_TRUE(idx) << label;
      ++hits[*idx];
    }
    for (int h : hits) EXPECT_EQ(h, 1) << label;
  }
}

TEST(RootSystem, Render) {
  const auto rs = rs_of("B2");
  EXPECT_EQ(rs.render({1, 2}), "alpha1 + 2*alpha2");
  EXPECT_EQ(rs.render({-1, 0}), "-alpha1");
}
