#include <gtest/gtest.h>

#include <map>
#include <set>

#include "clusteraut/automorphism.hpp"

using namespace clusteraut;

namespace {

struct Built {
  DynkinType type;
  RootSystem rs;
  ExchangeGraph g;
};

Built build(const std::string& label) {
  const auto t = DynkinType::parse(label);
  return {t, RootSystem(t), exchange_graph(initial_seed(bipartite_matrix(t)), default_cap(t))};
}

}  // namespace

TEST(AutGroup, OrdersAndStructure) {
  const std::map<std::string, std::pair<std::size_t, std::string>> expected = {
      {"A2", {10, "D5"}}, {"A3", {12, "D6"}}, {"A4", {14, "D7"}}, {"B2", {6, "D3"}},       {"B3", {8, "D4"}},
      {"C3", {8, "D4"}},  {"G2", {8, "D4"}},  {"D4", {48, "D4 x S3"}}, {"D5", {20, "D10"}}, {"D6", {24, "D6 x Z2"}}};
  for (const auto& [label, e] : expected) {
    const auto b = build(label);
    const auto a = aut_group(b.g);
    EXPECT_EQ(a.order(), e.first) << label;
    EXPECT_EQ(a.structure, e.second) << label;
    EXPECT_EQ(a.direct_count * 2, a.order()) << label;
  }
}

TEST(AutGroup, GroupAxiomsAndGraphAction) {
  for (const std::string label : {"A3", "B3", "D4"}) {
    const auto b = build(label);
    const auto a = aut_group(b.g);
    const std::set<ClusterAutomorphism> set(a.elements.begin(), a.elements.end());
    EXPECT_EQ(generated_subgroup(a.generators, b.g.variables().size()), a.elements);
    for (const auto& f : a.elements) {
      EXPECT_TRUE(set.count(f.inverse()));
      EXPECT_TRUE(compose(f, f.inverse()).is_identity());
      EXPECT_TRUE(induces_graph_automorphism(b.g, f));
      EXPECT_TRUE(power(f, f.order()).is_identity());
      for (const auto& h : a.elements) ASSERT_TRUE(set.count(compose(f, h)));
    }
  }
}

TEST(AutGroup, LaurentSubstitutionAgrees) {
  for (const std::string label : {"A3", "B2", "G2"}) {
    const auto b = build(label);
    const auto a = aut_group(b.g);
    for (const auto& f : a.elements) {
      std::vector<LaurentPoly> images;
      for (std::size_t i = 0; i < b.g.n(); ++i) images.push_back(b.g.variable(f.perm[i]));
      for (VarId v = 0; v < b.g.variables().size(); ++v)
        ASSERT_EQ(substitute(b.g.variable(v), images), b.g.variable(f.perm[v])) << label;
    }
  }
}

TEST(AutGroup, TransportAgreesWithSubstitution) {
  const auto b = build("A4");
  for (SeedId s = 0; s < b.g.size(); ++s)
    for (int sign : {1, -1}) {
      const auto& cluster = b.g.seed(s).cluster;
      const auto sub = extend_seed_map(b.g, cluster, sign);
      if (!sub) continue;
      auto tr = transport_seed_map(b.g, cluster);
      ASSERT_TRUE(tr);
      tr->direct = sign == 1;
      EXPECT_EQ(*sub, *tr);
    }
}

TEST(TauAutomorphisms, FollowTau) {
  for (const std::string label : {"A3", "B3", "D4", "G2"}) {
    const auto b = build(label);
    const auto eps = b.rs.canonical_sign();
    const auto bij = root_variable_bijection(b.g, b.rs);
    const auto fs = tau_automorphisms(b.g, b.rs, eps);
    EXPECT_FALSE(fs.f_plus.direct);
    EXPECT_FALSE(fs.f_minus.direct);
    const auto& ap = b.rs.almost_positive();
    for (VarId v = 0; v < b.g.variables().size(); ++v) {
      EXPECT_EQ(ap[bij.root_of[fs.f_plus.perm[v]]], tau(b.rs, eps, 1, ap[bij.root_of[v]])) << label;
      EXPECT_EQ(ap[bij.root_of[fs.f_minus.perm[v]]], tau(b.rs, eps, -1, ap[bij.root_of[v]])) << label;
    }
    EXPECT_EQ(compose(fs.f_minus, fs.f_plus).order(), tau_group(b.rs, eps).rotation_order) << label;
  }
}

TEST(F0, LongestElementAction) {
  const auto a2 = build("A2");
  const auto f_a2 = f0_automorphism(a2.g, a2.rs, a2.rs.canonical_sign());
  EXPECT_FALSE(f_a2.direct);
  EXPECT_EQ(f_a2.perm[0], 1u);
  EXPECT_EQ(f_a2.perm[1], 0u);

  const auto a3 = build("A3");
  const auto f_a3 = f0_automorphism(a3.g, a3.rs, a3.rs.canonical_sign());
  EXPECT_TRUE(f_a3.direct);
  EXPECT_FALSE(f_a3.is_identity());

  const auto b3 = build("B3");
  EXPECT_TRUE(f0_automorphism(b3.g, b3.rs, b3.rs.canonical_sign()).is_identity());
}

TEST(Exceptional, ForkSwaps) {
  const auto d4 = build("D4");
  const auto ex = exceptional_automorphisms(d4.g);
  ASSERT_EQ(ex.size(), 2u);
  const auto a = aut_group(d4.g);
  for (const auto& f : ex) {
    EXPECT_TRUE(f.direct);
    EXPECT_EQ(f.order(), 2u);
    EXPECT_TRUE(std::binary_search(a.elements.begin(), a.elements.end(), f));
  }
  EXPECT_EQ(exceptional_automorphisms(build("D5").g).size(), 0u);
  EXPECT_EQ(exceptional_automorphisms(build("D6").g).size(), 1u);
  EXPECT_TRUE(exceptional_automorphisms(build("A3").g).empty());
}
