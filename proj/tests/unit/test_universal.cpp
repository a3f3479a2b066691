#include <gtest/gtest.h>

#include "clusteraut/universal.hpp"

using namespace clusteraut;

namespace {

struct Univ {
  DynkinType type;
  RootSystem rs;
  SignFunction eps;
  ExchangeMatrix b;
  ExchangeMatrix u;
};

Univ make(const std::string& label) {
  const auto t = DynkinType::parse(label);
  RootSystem rs(t);
  auto eps = rs.canonical_sign();
  auto b = bipartite_matrix(t);
  auto u = universal_matrix(b, rs, eps);
  return {t, std::move(rs), std::move(eps), std::move(b), std::move(u)};
}

}  // namespace

TEST(Universal, A2Rows) {
  const auto x = make("A2");
  EXPECT_EQ(x.u.entries(), IntMatrix::from_rows({{0, 1}, {-1, 0}, {-1, 0}, {0, 1}, {1, 0}, {0, -1}, {1, -1}}));
  EXPECT_EQ(x.u.row_labels()[2], "coroot:(-1,0)");
  EXPECT_EQ(x.u.row_labels()[6], "coroot:(1,1)");
}

TEST(Universal, FrozenRowCountsAndGluing) {
  for (const std::string label : {"A2", "A3", "B2", "C3", "G2", "D4"}) {
    const auto x = make(label);
    EXPECT_EQ(x.u.frozen_count(), x.rs.almost_positive().size()) << label;
    EXPECT_TRUE(is_gluing_free(x.u));
  }
}

TEST(Universal, TauSymmetry) {
  for (const std::string label : {"A2", "A3", "B2", "B3", "G2"}) {
    const auto x = make(label);
    const auto minus = frozen_tau_symmetry(x.u, x.rs, x.eps, -1);
    const auto plus = frozen_tau_symmetry(x.u, x.rs, x.eps, 1);
    const auto dual = x.rs.dual();
    const auto tg = tau_group(dual, x.eps);
    EXPECT_EQ(minus, tg.tau_plus) << label;
    EXPECT_EQ(plus, tg.tau_minus) << label;
  }
}

TEST(Universal, SignChoice) {
  const auto x = make("B3");
  const auto flipped = universal_matrix(x.b.negated(), x.rs, x.eps.negated());
  EXPECT_EQ(flipped.entries(), x.u.entries().negated());
  ExchangeMatrix m = x.u;
  for (std::size_t k = 0; k < x.u.n(); ++k)
    if (x.eps(k) == -1) m = mutate_matrix(m, k);
  bool found = false;
  for (const auto& r : matrix_isomorphisms(m, flipped, 1))
    found = found || r.exchangeable == std::vector<std::size_t>{0, 1, 2};
  EXPECT_TRUE(found);
}

TEST(Specialize, Basics) {
  const auto x = make("A2");
  const auto plain = initial_seed(x.b);
  EXPECT_EQ(specialize(plain), plain);
  EXPECT_EQ(specialize(initial_seed(x.u)), plain);
  for (std::size_t k = 0; k < 2; ++k)
    EXPECT_EQ(specialize(mutate_seed(initial_seed(x.u), k)), mutate_seed(plain, k));
}

TEST(AutUniv, Orders) {
  for (const auto& [label, order] : std::vector<std::pair<std::string, std::size_t>>{
           {"A2", 10}, {"B2", 6}, {"A3", 12}, {"G2", 8}, {"D4", 48}}) {
    const auto x = make(label);
    const auto r = aut_univ(x.u, default_cap(x.type));
    EXPECT_EQ(r.group.order(), order) << label;
    EXPECT_EQ(r.principal_order, order) << label;
    EXPECT_TRUE(r.gluing_free_everywhere) << label;
    EXPECT_TRUE(r.restriction_bijective) << label;
  }
}

TEST(AutUniv, D4ForkSwapExtends) {
  const auto x = make("D4");
  const auto r = aut_univ(x.u, default_cap(x.type));
  bool found = false;
  for (const auto& f : r.group.elements)
    found = found || (f.direct && f.perm[0] == 0 && f.perm[1] == 1 && f.perm[2] == 3 && f.perm[3] == 2);
  EXPECT_TRUE(found);
}
