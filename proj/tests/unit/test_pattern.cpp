#include <gtest/gtest.h>

#include <random>

#include "clusteraut/error.hpp"
#include "clusteraut/pattern.hpp"

using namespace clusteraut;

namespace {

ExchangeGraph graph_of(const std::string& label) {
  const auto t = DynkinType::parse(label);
  return exchange_graph(initial_seed(bipartite_matrix(t)), default_cap(t));
}

// prod (e + h + 1) / (e + 1) from hand-written exponent lists.
std::int64_t catalan(const std::vector<int>& e) {
  const int h = e.back() + 1;
  std::int64_t num = 1, den = 1;
  for (int x : e) {
    num *= x + h + 1;
    den *= x + 1;
  }
  return num / den;
}

}  // namespace

TEST(Pattern, A2Variables) {
  const auto g = graph_of("A2");
  ASSERT_EQ(g.size(), 5u);
  ASSERT_EQ(g.variables().size(), 5u);
  const auto& ring = g.ring();
  const auto one = LaurentPoly::constant(ring, 1);
  const auto x1 = LaurentPoly::variable(ring, 0), x2 = LaurentPoly::variable(ring, 1);
  EXPECT_TRUE(g.find_variable(exact_divide(one + x2, x1)));
  EXPECT_TRUE(g.find_variable(exact_divide(one + x1, x2)));
  EXPECT_TRUE(g.find_variable(exact_divide(one + x1 + x2, x1 * x2)));
}

TEST(Pattern, SeedCountsMatchOracle) {
  const std::vector<std::pair<std::string, std::vector<int>>> cases = {
      {"A2", {1, 2}},       {"A3", {1, 2, 3}},    {"A4", {1, 2, 3, 4}}, {"B2", {1, 3}},
      {"B3", {1, 3, 5}},    {"C3", {1, 3, 5}},    {"D4", {1, 3, 3, 5}}, {"G2", {1, 5}},
      {"D5", {1, 3, 4, 5, 7}}, {"B4", {1, 3, 5, 7}}};
  for (const auto& [label, e] : cases) {
    const auto g = graph_of(label);
    EXPECT_EQ(static_cast<std::int64_t>(g.size()), catalan(e)) << label;
    EXPECT_EQ(g.edges().size() * 2, g.size() * g.n()) << label;
  }
}

TEST(Pattern, VariableCountsAreAlmostPositiveRoots) {
  EXPECT_EQ(graph_of("A3").variables().size(), 9u);
  EXPECT_EQ(graph_of("B3").variables().size(), 12u);
  EXPECT_EQ(graph_of("D4").variables().size(), 16u);
}

TEST(Pattern, CapExceeded) {
  EXPECT_THROW(exchange_graph(initial_seed(ExchangeMatrix(IntMatrix::from_rows({{0, 2}, {-2, 0}}))), 50),
               CapExceeded);
  EXPECT_THROW(exchange_graph(initial_seed(bipartite_matrix(DynkinType::parse("D4"))), 10), CapExceeded);
}

TEST(Pattern, SeedMutationIsInvolution) {
  std::mt19937 rng(5);
  auto s = initial_seed(bipartite_matrix(DynkinType::parse("D4")));
  for (int step = 0; step < 40; ++step) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    const auto t = mutate_seed(s, k);
    ASSERT_EQ(mutate_seed(t, k), s);
    s = t;
  }
}

TEST(Pattern, PositivityAndDenominators) {
  for (const std::string label : {"A4", "B3", "C3", "D4", "G2"}) {
    const auto g = graph_of(label);
    for (const auto& v : g.variables()) {
      for (const auto& t : v.terms()) ASSERT_GT(t.coeff, 0) << label << ' ' << to_string(v);
      EXPECT_NO_THROW(denominator_vector(v, g.n()));
    }
  }
}

TEST(Belt, Periods) {
  const auto check = [](const std::string& label, std::size_t period) {
    const auto t = DynkinType::parse(label);
    const auto belt = bipartite_belt(initial_seed(bipartite_matrix(t)));
    EXPECT_EQ(belt.period(), period) << label;
    EXPECT_EQ(belt.seed(static_cast<long>(period)), belt.seed(0));
    EXPECT_EQ(belt.seed(-1), belt.seed(static_cast<long>(period) - 1));
  };
  check("A2", 10);
  check("A3", 12);
  check("B3", 8);
  check("D4", 8);
}

TEST(Belt, NonBipartiteRejected) {
  const ExchangeMatrix cyc(IntMatrix::from_rows({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}));
  EXPECT_THROW(bipartite_belt(initial_seed(cyc)), InvalidArgument);
}

TEST(Belt, ContainsEveryBipartiteSeed) {
  for (const std::string label : {"A3", "A4", "B3", "D4", "G2"}) {
    const auto t = DynkinType::parse(label);
    const auto g = exchange_graph(initial_seed(bipartite_matrix(t)), default_cap(t));
    const auto ids = belt_seed_ids(g, bipartite_belt(initial_seed(bipartite_matrix(t))));
    auto bip = enumerate_bipartite_seeds(g);
    auto sorted_ids = ids;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    std::sort(bip.begin(), bip.end());
    EXPECT_EQ(sorted_ids, bip) << label;
  }
}

TEST(FiniteType, Detects) {
  const ExchangeMatrix cyc(IntMatrix::from_rows({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}));
  ASSERT_TRUE(is_finite_type(cyc));
  EXPECT_EQ(is_finite_type(cyc)->to_string(), "A3");
  EXPECT_FALSE(is_finite_type(ExchangeMatrix(IntMatrix::from_rows({{0, 2}, {-2, 0}}))));
  EXPECT_FALSE(is_finite_type(ExchangeMatrix(IntMatrix::from_rows({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}))));
  EXPECT_EQ(is_finite_type(bipartite_matrix(DynkinType::parse("G2")))->to_string(), "G2");
}

TEST(RootBijection, DenominatorsAreRoots) {
  for (const std::string label : {"A3", "B3", "C3", "D4", "G2"}) {
    const auto t = DynkinType::parse(label);
    RootSystem rs(t);
    const auto g = exchange_graph(initial_seed(bipartite_matrix(t)), default_cap(t));
    const auto bij = root_variable_bijection(g, rs);
    for (VarId v = 0; v < g.variables().size(); ++v) {
      const auto d = denominator_vector(g.variable(v), g.n());
      EXPECT_EQ(RootVector(d.begin(), d.end()), rs.almost_positive()[bij.root_of[v]]) << label;
      EXPECT_EQ(bij.variable_of[bij.root_of[v]], v);
    }
  }
}

TEST(Dot, GraphExport) {
  const auto dot = exchange_graph_dot(graph_of("A2"), {0});
  EXPECT_NE(dot.find("graph E"), std::string::npos);
  EXPECT_NE(dot.find("filled"), std::string::npos);
}
