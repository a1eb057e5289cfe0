#include <cmath>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "lpsum/oracles.hpp"

using namespace lpsum;
using lpsum::testing::Gen;

namespace {

SumSpace two_euclid(double p) { return SumSpace(p, {ComponentSpace::euclidean(2), ComponentSpace::euclidean(2)}); }

}  // namespace

TEST(OracleMinNorm, SpecExamples) {
  const SumSpace X = two_euclid(2);
  const MinNormResult a = oracle_min_norm(X, SumVector{}, SumVector{{1, {1, 0}}});
  EXPECT_EQ(a.min, 0.0);
  EXPECT_EQ(a.argmin, 0.0);
  const SumVector x{{1, {1, 2}}, {2, {0, 1}}};
  const MinNormResult b = oracle_min_norm(X, x, x);
  EXPECT_NEAR(b.min, 0.0, 1e-10);
  EXPECT_NEAR(b.argmin, -1.0, 1e-10);
  const MinNormResult c = oracle_min_norm(two_euclid(1), SumVector{{1, {1, 0}}}, SumVector{{1, {1, 0}}, {2, {0, 0.5}}});
  EXPECT_NEAR(c.min, 0.5, 1e-10);
  EXPECT_NEAR(c.argmin, -1.0, 1e-9);
  EXPECT_THROW(oracle_min_norm(X, x, SumVector{}), DegenerateInputError);
}

TEST(OracleMinNorm, NeverAboveNormAndRefinementStable) {
  Gen g(61);
  OracleConfig fine;
  fine.golden_section_width = 0.5e-12;
  for (double p : {0.0, 1.0, 1.5, 2.0, 3.0}) {
    for (int i = 0; i < 300; ++i) {
      const SumSpace X = g.space(p);
      const SumVector x = g.sum_vector(X), y = g.nonzero_sum_vector(X);
      const MinNormResult m = oracle_min_norm(X, x, y);
      EXPECT_LE(m.min, sum_norm(X, x));
      EXPECT_LE(oracle_min_norm(X, x, y, fine).min, m.min + 1e-10);
    }
  }
}

TEST(OracleConfig, RejectsNonPositive) {
  OracleConfig c;
  c.grid_directions = 0;
  EXPECT_THROW(c.validate(), ValidationError);
  OracleConfig d;
  d.golden_section_width = 0.0;
  EXPECT_THROW(oracle_min_norm(two_euclid(2), SumVector{}, SumVector{{1, {1, 0}}}, d), ValidationError);
}

TEST(OracleDiameter, SpecExamples) {
  EXPECT_EQ(oracle_diameter(two_euclid(2), SumVector{{1, {1, 0}}, {2, {0, 1}}}), 0.0);
  const SumSpace X(2, {ComponentSpace::linf(2), ComponentSpace::euclidean(2)});
  EXPECT_NEAR(oracle_diameter(X, SumVector{{1, {1, 1}}, {2, {1, 0}}}), std::sqrt(2.0), 1e-12);
  EXPECT_EQ(oracle_diameter(two_euclid(1), SumVector{{1, {1, 0}}}), 2.0);
}

TEST(OracleDiameter, ScanLimit) {
  const SumSpace X(1, std::vector<ComponentSpace>(4, ComponentSpace::l1(4)));
  OracleConfig cfg;
  cfg.pair_scan_limit = 16;
  EXPECT_THROW(oracle_diameter(X, SumVector{{1, {1, 0, 0, 0}}}, cfg), NotEnumerableError);
}

TEST(OracleDualNorm, SpecExamples) {
  EXPECT_NEAR(oracle_dual_norm(two_euclid(3), SumFunctional{{1, {3, 4}}}, 16), 5.0, 1e-12);
  EXPECT_NEAR(oracle_dual_norm(two_euclid(2), SumFunctional{{1, {1, 0}}, {2, {1, 0}}}, 16), std::sqrt(2.0), 1e-12);
  EXPECT_EQ(oracle_dual_norm(two_euclid(2), SumFunctional{}, 4), 0.0);
  EXPECT_THROW(oracle_dual_norm(two_euclid(2), SumFunctional{{1, {1, 0}}}, 0), ValidationError);
}

TEST(OracleDualNorm, LowerBoundAndPolyhedralAttainment) {
  Gen g(62);
  for (double p : {0.0, 1.0, 1.5, 2.0, 3.0}) {
    for (int i = 0; i < 200; ++i) {
      std::vector<ComponentSpace> comps;
      const std::size_t n = 1 + g.index(4);
      for (std::size_t k = 0; k < n; ++k) comps.push_back(g.enumerable_component());
      const SumSpace X(p, comps);
      const SumFunctional f = g.sum_functional(X);
      const double bound = oracle_dual_norm(X, f, 64);
      const double exact = dual_sum_norm(X, f);
      EXPECT_LE(bound, exact * (1 + 1e-12));
      EXPECT_NEAR(bound, exact, 1e-7);
    }
  }
}
