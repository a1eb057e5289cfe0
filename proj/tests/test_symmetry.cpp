#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "lpsum/symmetry.hpp"

using namespace lpsum;
using lpsum::testing::Gen;

namespace {

SumSpace euclid_sum(double p, std::size_t n, std::size_t d = 2) {
  return SumSpace(p, std::vector<ComponentSpace>(n, ComponentSpace::euclidean(d)));
}

void expect_confirmed(const SumSpace& X, const SumVector& x, const SymmetryWitness& w, Side side) {
  const SumVector& a = side == Side::left ? x : w.witness;
  const SumVector& b = side == Side::left ? w.witness : x;
  EXPECT_TRUE(bj_orthogonal(X, a, b));
  EXPECT_FALSE(bj_orthogonal(X, b, a));
  EXPECT_TRUE(bj_orthogonal_oracle(X, a, b, 1e-7));
  EXPECT_FALSE(bj_orthogonal_oracle(X, b, a, 1e-7));
}

}  // namespace

TEST(SymmetricPoint, L1LeftIsDenied) {
  const SumSpace X = euclid_sum(1, 2);
  const SumVector x{{1, {1, 0}}};
  EXPECT_EQ(symmetric_point(X, x, Side::left), TriBool::no);
  const auto w = falsify_symmetry(X, x, Side::left);
  ASSERT_TRUE(w.has_value());
  expect_confirmed(X, x, *w, Side::left);
  EXPECT_EQ(w->scheme, "l1-zero-coordinate");
  // Mass outside the support of x exceeds ||x||_1.
  EXPECT_GT(norm(X.component(2), *w->witness.find(2)), 1.0);
}

TEST(SymmetricPoint, L1LeftSplitConstruction) {
  const SumSpace X = euclid_sum(1, 3);
  const SumVector x{{1, {1, 0}}, {2, {0, 2}}, {3, {1, 1}}};
  const auto w = falsify_symmetry(X, x, Side::left);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->scheme, "l1-split");
  expect_confirmed(X, x, *w, Side::left);
}

TEST(SymmetricPoint, L1Right) {
  const SumSpace X = euclid_sum(1, 3);
  EXPECT_EQ(symmetric_point(X, SumVector{{2, {0.3, -1}}}, Side::right), TriBool::yes);
  const SumVector x{{1, {1, 0}}, {3, {0, 0.5}}};
  EXPECT_EQ(symmetric_point(X, x, Side::right), TriBool::no);
  const auto w = falsify_symmetry(X, x, Side::right);
  ASSERT_TRUE(w.has_value());
  expect_confirmed(X, x, *w, Side::right);
}

TEST(SymmetricPoint, C0RightIsDenied) {
  const SumSpace X = euclid_sum(0, 2);
  const SumVector x{{1, {1, 0}}, {2, {0.5, 0}}};
  EXPECT_EQ(symmetric_point(X, x, Side::right), TriBool::no);
  const auto w = falsify_symmetry(X, x, Side::right);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->scheme, "c0-sign-flip");
  expect_confirmed(X, x, *w, Side::right);
}

TEST(SymmetricPoint, C0Left) {
  const SumSpace X = euclid_sum(0, 3);
  EXPECT_EQ(symmetric_point(X, SumVector{{3, {2, 1}}}, Side::left), TriBool::yes);
  const SumVector x{{1, {1, 0}}, {2, {0.5, 0}}};
  EXPECT_EQ(symmetric_point(X, x, Side::left), TriBool::no);
  const auto w = falsify_symmetry(X, x, Side::left);
  ASSERT_TRUE(w.has_value());
  expect_confirmed(X, x, *w, Side::left);
}

TEST(SymmetricPoint, GeneralPUnequalNorms) {
  const SumSpace X = euclid_sum(3, 2);
  const SumVector x{{1, {1, 0}}, {2, {2, 0}}};
  for (Side side : {Side::left, Side::right}) {
    EXPECT_EQ(symmetric_point(X, x, side), TriBool::no);
    const auto w = falsify_symmetry(X, x, side);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->scheme, "unequal-norms");
    expect_confirmed(X, x, *w, side);
  }
  // alpha ||x_small||^3 = ||x_big||^3 for the left construction.
  const auto w = falsify_symmetry(X, x, Side::left);
  EXPECT_NEAR(w->witness.find(1)->coords[0], -8.0, 1e-12);
  EXPECT_NEAR(w->witness.find(2)->coords[0], 2.0, 1e-12);
}

TEST(SymmetricPoint, GeneralPThreeEntries) {
  const SumSpace X = euclid_sum(1.5, 3);
  const SumVector x{{1, {1, 0}}, {2, {0, 1}}, {3, {-0.6, 0.8}}};
  for (Side side : {Side::left, Side::right}) {
    EXPECT_EQ(symmetric_point(X, x, side), TriBool::no);
    const auto w = falsify_symmetry(X, x, side);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->scheme, "three-entries");
    expect_confirmed(X, x, *w, side);
  }
}

TEST(SymmetricPoint, GeneralPTwoEqualEntries) {
  // Euclidean components of dimension >= 2 are not p-s.i.p. symmetric for
  // p != 2, so two equal entries still fail.
  const SumSpace X = euclid_sum(3, 2);
  const SumVector x{{1, {1, 0}}, {2, {0, 1}}};
  for (Side side : {Side::left, Side::right}) {
    EXPECT_EQ(symmetric_point(X, x, side), TriBool::no);
    const auto w = falsify_symmetry(X, x, side);
    ASSERT_TRUE(w.has_value());
    expect_confirmed(X, x, *w, side);
  }
  // One-dimensional components: l_p^2 at (1, 1) with p != 2.
  const SumSpace R = euclid_sum(3, 2, 1);
  EXPECT_EQ(symmetric_point(R, SumVector{{1, {1}}, {2, {1}}}, Side::left), TriBool::yes);
}

TEST(SymmetricPoint, HilbertSumIsSymmetric) {
  const SumSpace X = euclid_sum(2, 3);
  const SumVector x{{1, {1, 0}}, {2, {0.5, 2}}};
  EXPECT_EQ(symmetric_point(X, x, Side::left), TriBool::yes);
  EXPECT_EQ(symmetric_point(X, x, Side::right), TriBool::yes);
  EXPECT_FALSE(falsify_symmetry(X, x, Side::left).has_value());
}

TEST(SymmetricPoint, L2SumWithSquareEntry) {
  const SumSpace X(2, {ComponentSpace::linf(2), ComponentSpace::euclidean(2)});
  const SumVector x{{1, {1, 1}}, {2, {1, 0}}};
  // The square vertex is not left s.i.p. symmetric ([x, (1,0)] can be 0 while
  // [(1,0), x] = 1), so x is not left-symmetric.
  EXPECT_EQ(symmetric_point(X, x, Side::left), TriBool::no);
  const auto w = falsify_symmetry(X, x, Side::left);
  ASSERT_TRUE(w.has_value());
  expect_confirmed(X, x, *w, Side::left);
  // It is right s.i.p. symmetric: [y, x] always lies in the range of [x, y].
  // Polyhedral entries are never certified, so the answer stays open.
  EXPECT_EQ(symmetric_point(X, x, Side::right), TriBool::unknown);
  EXPECT_FALSE(falsify_symmetry(X, x, Side::right).has_value());
}

TEST(SymmetricPoint, SingleEntryPolyhedralComponent) {
  // x = (1, 0) in l1(2) inside a 2-sum.
  const SumSpace X(2, {ComponentSpace::l1(2), ComponentSpace::euclidean(2)});
  const SumVector x{{1, {1, 0}}};
  const auto w = falsify_symmetry(X, x, Side::left);
  ASSERT_TRUE(w.has_value());
  expect_confirmed(X, x, *w, Side::left);
  EXPECT_EQ(symmetric_point(X, x, Side::left), TriBool::no);
}

TEST(SymmetricPoint, ZeroIsDegenerate) {
  EXPECT_THROW(symmetric_point(euclid_sum(2, 1), SumVector{}, Side::left), DegenerateInputError);
  EXPECT_THROW(falsify_symmetry(euclid_sum(1, 1), SumVector{{1, {0, 0}}}, Side::left), DegenerateInputError);
}

TEST(SymmetricPoint, WitnessesAlwaysConfirmed) {
  Gen g(51);
  SymmetryConfig cfg;
  cfg.oracle.grid_directions = 64;
  int found = 0;
  for (double p : {0.0, 1.0, 1.5, 2.0, 3.0}) {
    for (int i = 0; i < 60; ++i) {
      const SumSpace X = g.space(p, 4, 3);
      const SumVector x = g.nonzero_sum_vector(X);
      for (Side side : {Side::left, Side::right}) {
        const TriBool verdict = symmetric_point(X, x, side, cfg);
        const auto w = falsify_symmetry(X, x, side, cfg);
        if (w) {
          ++found;
          expect_confirmed(X, x, *w, side);
          EXPECT_NE(verdict, TriBool::yes);
        }
      }
    }
  }
  EXPECT_GT(found, 300);
}

TEST(ComponentPredicates, ClosedForms) {
  const ComponentSpace e = ComponentSpace::euclidean(3);
  EXPECT_EQ(component_symmetric(e, {1, 2, 3}, Side::left), TriBool::yes);
  EXPECT_EQ(component_p_sip_symmetric(e, {1, 2, 3}, 2.0, Side::left), TriBool::yes);
  EXPECT_EQ(component_p_sip_symmetric(e, {1, 2, 3}, 3.0, Side::right), TriBool::no);
  EXPECT_EQ(component_p_sip_symmetric(ComponentSpace::l1(1), {2}, 3.0, Side::left), TriBool::yes);
  EXPECT_EQ(component_symmetric(ComponentSpace::linf(2), {1, 1}, Side::left), TriBool::no);
}
