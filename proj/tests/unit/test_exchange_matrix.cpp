#include <gtest/gtest.h>

#include <random>

#include "clusteraut/error.hpp"
#include "clusteraut/exchange_matrix.hpp"

using namespace clusteraut;

namespace {

ExchangeMatrix sq(std::vector<std::vector<Int>> rows) { return ExchangeMatrix(IntMatrix::from_rows(rows)); }

ExchangeMatrix ext(std::vector<std::vector<Int>> rows, std::size_t n) {
  return ExchangeMatrix(IntMatrix::from_rows(rows), n);
}

// d_i b_ij = -d_j b_ji by construction, path 0-1-...-(n-1) nonzero.
ExchangeMatrix random_matrix(std::mt19937& rng, std::vector<Int>* d_out = nullptr) {
  std::uniform_int_distribution<int> size(2, 6), frozen(0, 3), d(1, 3), c(-2, 2), y(-3, 3);
  const std::size_t n = size(rng), f = frozen(rng);
  std::vector<Int> dd(n);
  for (auto& x : dd) x = d(rng);
  IntMatrix m(n + f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Int v = c(rng);
      if (j == i + 1 && v == 0) v = 1;
      m(i, j) = v * dd[j];
      m(j, i) = -v * dd[i];
    }
  for (std::size_t r = n; r < n + f; ++r) {
    for (std::size_t i = 0; i < n; ++i) m(r, i) = y(rng);
    if (m(r, 0) == 0) m(r, 0) = 2;
  }
  if (d_out) *d_out = dd;
  return ExchangeMatrix(std::move(m), n);
}

}  // namespace

TEST(Mutation, RankTwo) {
  EXPECT_EQ(mutate_matrix(sq({{0, 1}, {-1, 0}}), 0), sq({{0, -1}, {1, 0}}));
  EXPECT_EQ(mutate_matrix(sq({{0, 1}, {-2, 0}}), 1), sq({{0, -1}, {2, 0}}));
}

TEST(Mutation, LinearA3AtMiddleGivesCycle) {
  const auto b = sq({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
  EXPECT_EQ(mutate_matrix(b, 1), sq({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
}

TEST(Mutation, FrozenRow) {
  const auto b = ext({{0, 1}, {-1, 0}, {1, 0}}, 2);
  EXPECT_EQ(mutate_matrix(b, 0), ext({{0, -1}, {1, 0}, {-1, 1}}, 2));
}

TEST(Mutation, IndexOutOfRangeThrows) {
  EXPECT_THROW(mutate_matrix(sq({{0, 1}, {-1, 0}}), 2), InvalidArgument);
}

TEST(Validation, RejectsBadMatrices) {
  EXPECT_THROW(sq({{0, 1}, {1, 0}}), InvalidArgument);             // not skew-symmetrizable
  EXPECT_THROW(sq({{0, 0}, {0, 0}}), InvalidArgument);             // decomposable
  EXPECT_THROW(sq({{0}}), InvalidArgument);                        // n < 2
  EXPECT_THROW(ext({{0, 1}, {-1, 0}, {0, 0}}, 2), InvalidArgument);  // isolated frozen row
  EXPECT_THROW(sq({{1, 1}, {-1, 0}}), InvalidArgument);            // nonzero diagonal
}

TEST(Symmetrizer, KnownValues) {
  EXPECT_EQ(find_symmetrizer(sq({{0, 1}, {-2, 0}}))->diagonal, (std::vector<Int>{2, 1}));
  EXPECT_EQ(find_symmetrizer(sq({{0, 3}, {-1, 0}}))->diagonal, (std::vector<Int>{1, 3}));
  EXPECT_EQ(find_symmetrizer(sq({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}))->diagonal, (std::vector<Int>{1, 1, 1}));
}

TEST(Cartan, CounterpartAndType) {
  const auto a = cartan_counterpart(sq({{0, 1}, {-2, 0}}));
  EXPECT_EQ(a.entries(), IntMatrix::from_rows({{2, -1}, {-2, 2}}));
  ASSERT_TRUE(a.dynkin_type());
  EXPECT_EQ(a.dynkin_type()->to_string(), "B2");
  EXPECT_FALSE(cartan_counterpart(sq({{0, 2}, {-2, 0}})).dynkin_type());
}

TEST(Bipartite, SignAndMatrix) {
  const auto b = bipartite_matrix(DynkinType::parse("A3"));
  EXPECT_EQ(b, sq({{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}}));
  EXPECT_EQ(bipartite_sign(b)->signs, (std::vector<int>{1, -1, 1}));
  EXPECT_FALSE(bipartite_sign(sq({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})));
}

TEST(Gluing, DetectsEqualFrozenRows) {
  EXPECT_TRUE(is_gluing_free(ext({{0, 1}, {-1, 0}, {1, 0}, {0, 1}}, 2)));
  EXPECT_FALSE(is_gluing_free(ext({{0, 1}, {-1, 0}, {1, 0}, {1, 0}}, 2)));
}

TEST(Relabel, SwapsRowsAndColumns) {
  const auto b = sq({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
  const auto r = relabel(b, {{2, 1, 0}, {}});
  EXPECT_EQ(r, sq({{0, -1, 0}, {1, 0, -1}, {0, 1, 0}}));
}

TEST(Isomorphisms, BipartiteA3) {
  const auto b = bipartite_matrix(DynkinType::parse("A3"));
  EXPECT_EQ(matrix_isomorphisms(b, b, 1).size(), 2u);   // identity and the end swap
  EXPECT_EQ(matrix_isomorphisms(b, b, -1).size(), 0u);  // center would have to become a source
  for (const auto& r : matrix_isomorphisms(b, b, 1)) EXPECT_EQ(relabel(b, r), b);
}

TEST(TextFormat, RoundTrip) {
  const auto b = ext({{0, 1}, {-1, 0}, {1, -1}}, 2);
  const auto text = to_matrix_text(b);
  EXPECT_EQ(parse_matrix_text(text), b);
  const auto parsed = parse_matrix_text("0 1\n-1 0\n---\n2 0 # y\n");
  EXPECT_EQ(parsed.frozen_count(), 1u);
  EXPECT_EQ(parsed.row_labels().back(), "y");
  EXPECT_THROW(parse_matrix_text("0 1\n-1\n"), InvalidArgument);
}

TEST(Dot, QuiverHasArrows) {
  const auto dot = quiver_dot(ext({{0, 1}, {-2, 0}, {1, 0}}, 2));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("box"), std::string::npos);
}

TEST(MutationProperty, InvolutionAndSymmetrizer) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> d;
    const auto b = random_matrix(rng, &d);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, b.n() - 1)(rng);
    const auto mb = mutate_matrix(b, k);
    ASSERT_EQ(mutate_matrix(mb, k), b) << to_matrix_text(b);
    const auto s = find_symmetrizer(mb);
    ASSERT_TRUE(s);
    EXPECT_EQ(s, find_symmetrizer(b));
    for (std::size_t i = 0; i < b.n(); ++i)
      for (std::size_t j = 0; j < b.n(); ++j) EXPECT_EQ(d[i] * mb(i, j), -d[j] * mb(j, i));
  }
}

TEST(MutationProperty, GluingFreePreserved) {
  std::mt19937 rng(99);
  int walks = 0;
  for (int trial = 0; trial < 200 && walks < 100; ++trial) {
    auto b = random_matrix(rng);
    if (b.frozen_count() < 2 || !is_gluing_free(b)) continue;
    ++walks;
    for (int step = 0; step < 3; ++step) {
      b = mutate_matrix(b, std::uniform_int_distribution<std::size_t>(0, b.n() - 1)(rng));
      ASSERT_TRUE(is_gluing_free(b));
    }
  }
  EXPECT_GT(walks, 20);
}
