#include <gtest/gtest.h>

#include "clusteraut/error.hpp"
#include "clusteraut/serialize.hpp"

using namespace clusteraut;

TEST(Serialize, MatrixRoundTrip) {
  const ExchangeMatrix b(IntMatrix::from_rows({{0, 1}, {-2, 0}, {1, 1}}), 2, {"a", "b", "c"});
  const auto j = to_json(b);
  EXPECT_EQ(j["frozen"], Json::parse("[[1,1]]"));
  const auto back = matrix_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back, b);
  EXPECT_EQ(back.row_labels(), b.row_labels());
  EXPECT_THROW(matrix_from_json(Json::parse("{\"rows\": 1}")), InvalidArgument);
}

TEST(Serialize, Laurent) {
  const auto ring = make_ring(2);
  const auto p = LaurentPoly::constant(ring, 3) + LaurentPoly::monomial(ring, {-1, 2}, 2);
  EXPECT_EQ(to_json(p), Json::parse("[[2,[-1,2]],[3,[0,0]]]"));
}

TEST(Serialize, GroupAndGraph) {
  const auto t = DynkinType::parse("A3");
  const auto g = exchange_graph(initial_seed(bipartite_matrix(t)), default_cap(t));
  const auto j = to_json(aut_group(g));
  EXPECT_EQ(j["order"], 12);
  EXPECT_EQ(j["structure"], "D6");
  EXPECT_EQ(j.begin().key(), "order");
  const auto gj = to_json(g);
  EXPECT_EQ(gj["seeds"].size(), 14u);
  EXPECT_EQ(gj["edges"].size(), 21u);
  EXPECT_EQ(gj.dump(), to_json(exchange_graph(initial_seed(bipartite_matrix(t)), 1000)).dump());
}
