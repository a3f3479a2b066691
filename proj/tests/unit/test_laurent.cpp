#include <gtest/gtest.h>

#include <random>

#include "clusteraut/error.hpp"
#include "clusteraut/laurent.hpp"

using namespace clusteraut;

namespace {

struct Vars {
  RingPtr ring = make_ring(3);
  LaurentPoly one = LaurentPoly::constant(ring, 1);
  LaurentPoly x1 = LaurentPoly::variable(ring, 0);
  LaurentPoly x2 = LaurentPoly::variable(ring, 1);
  LaurentPoly x3 = LaurentPoly::variable(ring, 2);
};

LaurentPoly random_poly(std::mt19937& rng, const RingPtr& ring) {
  std::uniform_int_distribution<int> terms(1, 4), e(-2, 2), c(-5, 5);
  std::vector<Term> ts;
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) {
    Term t{std::vector<int>(ring->size()), c(rng)};
    for (auto& x : t.exps) x = e(rng);
    ts.push_back(std::move(t));
  }
  auto p = LaurentPoly::from_terms(ring, ts);
  return p.is_zero() ? LaurentPoly::constant(ring, 1) : p;
}

}  // namespace

TEST(Laurent, Arithmetic) {
  Vars v;
  const auto p = (v.x1 + v.one) * (v.x1 - v.one);
  EXPECT_EQ(p, v.x1 * v.x1 - v.one);
  EXPECT_EQ(v.x1.pow(-2) * v.x1.pow(3), v.x1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_THROW((v.x1 + v.one).pow(-1), InvalidArgument);
}

TEST(Laurent, ExactDivision) {
  Vars v;
  EXPECT_EQ(exact_divide(v.x1 * v.x1 - v.one, v.x1 - v.one), v.x1 + v.one);
  EXPECT_EQ(exact_divide(v.x1 + v.x2, v.x1 * v.x2), v.x2.pow(-1) + v.x1.pow(-1));
  EXPECT_THROW(exact_divide(v.x1 + v.one, v.x2 + v.one), InvariantViolation);
}

TEST(Laurent, ToString) {
  Vars v;
  EXPECT_EQ(to_string(exact_divide(v.one + v.x1 + v.x2, v.x1 * v.x2)), "(1 + x1 + x2) / (x1*x2)");
  EXPECT_EQ(to_string(LaurentPoly(v.ring)), "0");
}

TEST(Laurent, Exchange) {
  Vars v;
  EXPECT_EQ(lp_exchange(v.one, v.x2, v.x1) * v.x1, v.one + v.x2);
}

TEST(Laurent, Substitute) {
  Vars v;
  const auto p = v.x1 * v.x2.pow(-1) + v.x3;
  EXPECT_EQ(substitute(p, {v.x2, v.x1, v.one}), v.x2 * v.x1.pow(-1) + v.one);
  const auto q = exact_divide(v.one + v.x2, v.x1);
  // (1 + x2)/x1 with x1 -> (1 + x2)/x1 gives x1.
  EXPECT_EQ(substitute(q, {q, v.x2, v.x3}), v.x1);
}

TEST(Laurent, DenominatorVector) {
  Vars v;
  EXPECT_EQ(denominator_vector(exact_divide(v.one + v.x1 + v.x2, v.x1 * v.x2), 2), (std::vector<int>{1, 1}));
  EXPECT_EQ(denominator_vector(v.x1, 2), (std::vector<int>{-1, 0}));
}

TEST(LaurentProperty, RingLaws) {
  std::mt19937 rng(7);
  Vars v;
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_poly(rng, v.ring), b = random_poly(rng, v.ring), c = random_poly(rng, v.ring);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) * c, a * c + b * c);
    ASSERT_EQ((a + b) - b, a);
    ASSERT_EQ(exact_divide(a * b, b), a);
    ASSERT_EQ(a.hash(), (a + b - b).hash());
    ASSERT_EQ(substitute(a, {v.x1, v.x2, v.x3}), a);
  }
}
