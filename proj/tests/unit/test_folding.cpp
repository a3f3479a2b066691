#include <gtest/gtest.h>

#include "clusteraut/error.hpp"
#include "clusteraut/folding.hpp"

using namespace clusteraut;

TEST(Folding, A3ToB2) {
  const auto b = bipartite_matrix(DynkinType::parse("A3"));
  const auto g = quiver_aut_group(b);
  EXPECT_EQ(g.order(), 2u);
  ASSERT_EQ(g.orbits.size(), 2u);
  EXPECT_EQ(g.orbits[0], (std::vector<std::size_t>{0, 2}));
  const auto folded = fold_matrix(b, g);
  EXPECT_EQ(folded.entries(), IntMatrix::from_rows({{0, 2}, {-1, 0}}));
  EXPECT_EQ(project_root({1, 1, 1}, g), (RootVector{2, 1}));
  EXPECT_EQ(project_root({0, -1, 0}, g), (RootVector{0, -1}));
}

TEST(Folding, Reports) {
  const auto a3 = fold_report(DynkinType::parse("A3"));
  EXPECT_EQ(a3.computed_type->to_string(), "B2");
  EXPECT_TRUE(a3.matches_listed);
  EXPECT_EQ(a3.invariant_seed_count, 6u);
  EXPECT_TRUE(a3.seed_bijection);
  EXPECT_TRUE(a3.variables_onto);
  EXPECT_TRUE(a3.pi_commutes_with_tau);
  ASSERT_TRUE(a3.quotient);
  EXPECT_TRUE(a3.quotient->order_law);
  EXPECT_TRUE(a3.quotient->tau_compatible);

  const auto d4 = fold_report(DynkinType::parse("D4"));
  EXPECT_EQ(d4.group_order, 6u);
  EXPECT_EQ(d4.computed_type->to_string(), "G2");
  EXPECT_EQ(d4.invariant_seed_count, 8u);
  EXPECT_EQ(d4.quotient->unfolded_order, 48u);
  EXPECT_EQ(d4.quotient->folded_order, 8u);
}

TEST(Folding, DualLabels) {
  const auto a5 = fold_report(DynkinType::parse("A5"), false);
  EXPECT_EQ(a5.computed_type->to_string(), "C3");
  EXPECT_EQ(a5.listed_type->to_string(), "B3");
  EXPECT_TRUE(a5.matches_listed_up_to_duality);
  EXPECT_EQ(a5.invariant_seed_count, 20u);
  EXPECT_TRUE(a5.seed_bijection);

  const auto d5 = fold_report(DynkinType::parse("D5"), false);
  EXPECT_EQ(d5.computed_type->to_string(), "B4");
  EXPECT_TRUE(d5.matches_listed_up_to_duality);
  EXPECT_EQ(d5.invariant_seed_count, 70u);
}

TEST(Folding, TrivialGroupRejected) {
  EXPECT_THROW(fold_report(DynkinType::parse("A2")), InvalidArgument);
  EXPECT_EQ(langlands_dual(DynkinType::parse("B3")).to_string(), "C3");
  EXPECT_EQ(langlands_dual(DynkinType::parse("F4")).to_string(), "F4");
}

TEST(Folding, SubgroupOfD4) {
  const auto b = bipartite_matrix(DynkinType::parse("D4"));
  const auto full = quiver_aut_group(b);
  ASSERT_EQ(full.order(), 6u);
  // A single transposition of two leaves folds D4 to B3 or C3.
  for (const auto& s : full.elements) {
    std::size_t moved = 0;
    for (std::size_t i = 0; i < s.size(); ++i) moved += s[i] != i;
    if (moved != 2) continue;
    const auto sub = quiver_aut_subgroup(b, {s});
    EXPECT_EQ(sub.order(), 2u);
    const auto t = cartan_counterpart(fold_matrix(b, sub)).dynkin_type();
    ASSERT_TRUE(t);
    EXPECT_TRUE(t->to_string() == "B3" || t->to_string() == "C3");
  }
}
