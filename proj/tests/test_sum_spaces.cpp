#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "lpsum/oracles.hpp"
#include "lpsum/sum_spaces.hpp"

using namespace lpsum;
using lpsum::testing::Gen;

namespace {

SumSpace two_euclid(double p) { return SumSpace(p, {ComponentSpace::euclidean(2), ComponentSpace::euclidean(2)}); }
SumSpace square_and_disc(double p) { return SumSpace(p, {ComponentSpace::linf(2), ComponentSpace::euclidean(2)}); }

const SumVector kThreeFour{{1, {3, 0}}, {2, {4, 0}}};

}  // namespace

TEST(SumNorm, SpecValues) {
  EXPECT_DOUBLE_EQ(sum_norm(two_euclid(2), kThreeFour), 5.0);
  EXPECT_DOUBLE_EQ(sum_norm(two_euclid(1), kThreeFour), 7.0);
  EXPECT_DOUBLE_EQ(sum_norm(two_euclid(0), kThreeFour), 4.0);
  EXPECT_EQ(sum_norm(two_euclid(0), SumVector{}), 0.0);
}

TEST(SumNorm, ShapeErrors) {
  EXPECT_THROW(sum_norm(two_euclid(2), SumVector{{3, {1, 0}}}), ValidationError);
  EXPECT_THROW(sum_norm(two_euclid(2), SumVector{{1, {1, 0, 0}}}), ValidationError);
  EXPECT_THROW(sum_norm(two_euclid(2), SumVector{{2, {1, 0}}, {1, {1, 0}}}), ValidationError);
  EXPECT_THROW(SumSpace(0.5, {ComponentSpace::euclidean(1)}), ValidationError);
  EXPECT_THROW(SumSpace(2, {}), ValidationError);
}

TEST(SumNorm, Axioms) {
  Gen g(21);
  for (double p : {0.0, 1.0, 1.5, 2.0, 3.0}) {
    for (int i = 0; i < 1000; ++i) {
      const SumSpace X = g.space(p);
      const SumVector x = g.sum_vector(X), y = g.sum_vector(X);
      const double lambda = g.uniform(-3, 3);
      EXPECT_LE(sum_norm(X, x + y), sum_norm(X, x) + sum_norm(X, y) + 1e-12);
      EXPECT_NEAR(sum_norm(X, lambda * x), std::abs(lambda) * sum_norm(X, x), 1e-12 * (1 + sum_norm(X, x)));
    }
  }
}

TEST(DualSumSpace, Exponents) {
  const SumSpace d3 = dual_sum_space(two_euclid(3));
  EXPECT_NEAR(d3.p(), 1.5, 1e-15);
  EXPECT_EQ(d3.component(1).kind(), Kind::euclidean);
  const SumSpace d1 = dual_sum_space(SumSpace(1, {ComponentSpace::linf(2), ComponentSpace::linf(2)}));
  EXPECT_TRUE(d1.is_sup());
  EXPECT_EQ(d1.component(2).kind(), Kind::l1);
  EXPECT_EQ(dual_sum_space(two_euclid(0)).p(), 1.0);
  EXPECT_EQ(two_euclid(0).q(), 1.0);
}

TEST(Apply, SpecValues) {
  EXPECT_DOUBLE_EQ(apply(SumFunctional{{1, {1, 0}}}, SumVector{{1, {2, 0}}}), 2.0);
  EXPECT_DOUBLE_EQ(apply(SumFunctional{{1, {1, 0}}}, SumVector{{2, {2, 0}}}), 0.0);
  EXPECT_DOUBLE_EQ(apply(SumFunctional{{1, {1, 0}}, {2, {0, 1}}}, SumVector{{1, {1, 0}}, {2, {0, 1}}}), 2.0);
}

TEST(NormingElement, SpecValues) {
  const SumVector y = norming_element(two_euclid(2), SumFunctional{{1, {1, 0}}, {2, {1, 0}}}, 1e-8);
  EXPECT_NEAR(y.find(1)->coords[0], 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(y.find(2)->coords[0], 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(apply(SumFunctional{{1, {1, 0}}, {2, {1, 0}}}, y), std::sqrt(2.0), 1e-15);

  const SumVector z = norming_element(two_euclid(3), SumFunctional{{1, {1, 0}}}, 1e-8);
  EXPECT_NEAR(apply(SumFunctional{{1, {1, 0}}}, z), 1.0, 1e-15);
  EXPECT_THROW(norming_element(two_euclid(2), SumFunctional{}, 1e-8), DegenerateInputError);
}

TEST(NormingElement, DualityIsometry) {
  Gen g(22);
  for (double p : {0.0, 1.0, 1.5, 2.0, 3.0}) {
    for (int i = 0; i < 300; ++i) {
      const SumSpace X = g.space(p);
      const SumFunctional f = g.sum_functional(X);
      if (f.is_zero()) continue;
      const double nf = dual_sum_norm(X, f);
      const SumVector y = norming_element(X, f, 1e-8);
      EXPECT_NEAR(sum_norm(X, y), 1.0, 1e-12);
      EXPECT_GE(apply(f, y), nf - 1e-8);
      EXPECT_LE(apply(f, y), nf + 1e-12 * (1 + nf));
      for (int k = 0; k < 5; ++k) {
        const SumVector x = g.sum_vector(X);
        EXPECT_LE(std::abs(apply(f, x)), nf * sum_norm(X, x) + 1e-12 * (1 + nf * sum_norm(X, x)));
      }
    }
  }
}

TEST(SupportFunctionals, PowerWeightExample) {
  const SumSpace X = two_euclid(3);
  const SumVector x{{1, {2, 0}}, {2, {1, 0}}};
  const SumFunctional f = canonical_support(X, x);
  EXPECT_NEAR(f.find(1)->coords[0], 4 / std::pow(9.0, 2.0 / 3.0), 1e-12);
  EXPECT_NEAR(f.find(2)->coords[0], 1 / std::pow(9.0, 2.0 / 3.0), 1e-12);
  EXPECT_NEAR(apply(f, x), std::cbrt(9.0), 1e-10);
  EXPECT_NEAR(dual_sum_norm(X, f), 1.0, 1e-10);
  EXPECT_TRUE(is_support(X, x, f));
  EXPECT_FALSE(is_support(X, x, 0.5 * f));
}

TEST(SupportFunctionals, L1FreeBall) {
  const SumSpace X = two_euclid(1);
  const SumVector x{{1, {1, 0}}};
  const SumJDescription j = support_functionals(X, x);
  ASSERT_EQ(j.supported.size(), 1u);
  ASSERT_EQ(j.free_ball, std::vector<std::size_t>{2});
  EXPECT_TRUE(is_support(X, x, SumFunctional{{1, {1, 0}}, {2, {0, 0.5}}}));
  EXPECT_TRUE(is_support(X, x, SumFunctional{{1, {1, 0}}, {2, {0.6, -0.8}}}));
  EXPECT_FALSE(is_support(X, x, SumFunctional{{1, {1, 0}}, {2, {0, 1.5}}}));
}

TEST(SupportFunctionals, C0ConvexWeights) {
  const SumSpace X = two_euclid(0);
  const SumVector x{{1, {1, 0}}, {2, {1, 0}}};
  for (double lambda : {0.0, 0.25, 1.0}) {
    const SumFunctional f{{1, {lambda, 0}}, {2, {1 - lambda, 0}}};
    EXPECT_TRUE(is_support(X, x, f));
    EXPECT_TRUE(satisfies_support_characterization(X, x, f));
  }
  EXPECT_FALSE(satisfies_support_characterization(X, x, SumFunctional{{1, {0.5, 0}}, {2, {0.6, 0}}}));
}

TEST(SupportFunctionals, ZeroIsDegenerate) {
  EXPECT_THROW(support_functionals(two_euclid(2), SumVector{}), DegenerateInputError);
  EXPECT_THROW(is_support(two_euclid(2), SumVector{{1, {0, 0}}}, SumFunctional{}), DegenerateInputError);
  EXPECT_THROW(diameter(two_euclid(1), SumVector{}), DegenerateInputError);
}

// is_support (definition) and the coordinatewise description agree on
// functionals built both inside and outside J(x).
TEST(SupportFunctionals, DefinitionMatchesCharacterisation) {
  Gen g(23);
  int checked = 0;
  for (double p : {0.0, 1.0, 1.5, 2.0, 3.0}) {
    for (int i = 0; i < 300; ++i) {
      const SumSpace X = g.space(p, 4, 3);
      const SumVector x = g.nonzero_sum_vector(X);
      const SumFunctional inside = canonical_support(X, x);
      EXPECT_TRUE(is_support(X, x, inside));
      EXPECT_TRUE(satisfies_support_characterization(X, x, inside));
      // Perturbations: random functionals normalised to unit dual norm.
      SumFunctional f = g.sum_functional(X);
      if (f.is_zero()) continue;
      f = (1.0 / dual_sum_norm(X, f)) * f;
      EXPECT_EQ(is_support(X, x, f), satisfies_support_characterization(X, x, f, 1e-9));
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(SupportExt, SpecExamples) {
  const SumSpace X = square_and_disc(2);
  const SumVector x{{1, {1, 1}}, {2, {1, 0}}};
  const auto ext = support_ext(X, x);
  ASSERT_EQ(ext.size(), 2u);
  const double r = 1 / std::sqrt(2.0);
  for (const SumFunctional& f : ext) {
    EXPECT_NEAR(f.find(2)->coords[0], r, 1e-15);
    EXPECT_NEAR(std::abs(f.find(1)->coords[0]) + std::abs(f.find(1)->coords[1]), r, 1e-15);
    EXPECT_TRUE(is_support(X, x, f));
  }

  const auto c0 = support_ext(two_euclid(0), SumVector{{1, {1, 0}}, {2, {1, 0}}});
  ASSERT_EQ(c0.size(), 2u);
  EXPECT_EQ(c0[0], (SumFunctional{{1, {1, 0}}}));
  EXPECT_EQ(c0[1], (SumFunctional{{2, {1, 0}}}));

  EXPECT_EQ(support_ext(two_euclid(3), SumVector{{1, {1, 2}}, {2, {0, 1}}}).size(), 1u);
  EXPECT_THROW(support_ext(two_euclid(1), SumVector{{1, {1, 0}}}), NotEnumerableError);
}

TEST(Diameter, SpecExamples) {
  EXPECT_NEAR(diameter(square_and_disc(2), SumVector{{1, {1, 1}}, {2, {1, 0}}}), std::sqrt(2.0), 1e-12);
  EXPECT_EQ(diameter(two_euclid(1), SumVector{{1, {1, 0}}}), 2.0);
  EXPECT_EQ(diameter(two_euclid(0), SumVector{{1, {1, 0}}, {2, {0.5, 0}}}), 0.0);
  EXPECT_EQ(diameter(square_and_disc(2), SumVector{{1, {1, 0}}, {2, {1, 0}}}), 0.0);
}

TEST(Diameter, MatchesOracleForInteriorExponents) {
  Gen g(24);
  int checked = 0;
  for (double p : {1.5, 2.0, 3.0}) {
    for (int i = 0; i < 200; ++i) {
      std::vector<ComponentSpace> comps;
      const std::size_t n = 1 + g.index(3);
      for (std::size_t k = 0; k < n; ++k) comps.push_back(g.enumerable_component());
      const SumSpace X(p, comps);
      const SumVector x = g.nonzero_sum_vector(X);
      const double d = diameter(X, x);
      EXPECT_NEAR(d, oracle_diameter(X, x), 1e-9 * std::max(1.0, d));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 600);
}

TEST(Diameter, ScaleInvariant) {
  Gen g(25);
  for (double p : {0.0, 1.0, 1.5, 3.0}) {
    for (int i = 0; i < 300; ++i) {
      const SumSpace X = g.space(p);
      const SumVector x = g.nonzero_sum_vector(X);
      const double lambda = g.uniform(0.1, 10);
      EXPECT_NEAR(diameter(X, lambda * x), diameter(X, x), 1e-9);
    }
  }
}

TEST(Diameter, ZeroCoordinateLawForL1) {
  Gen g(26);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const SumSpace X = g.space(1.0);
    if (X.size() < 2) continue;
    const std::size_t skip = 1 + g.index(X.size());
    SumVector x;
    for (const auto& e : g.nonzero_sum_vector(X).entries)
      if (e.index != skip) x.set(e.index, e.value);
    if (x.is_zero()) continue;
    EXPECT_EQ(diameter(X, x), 2.0);
    ++checked;
  }
  EXPECT_GT(checked, 200);
}

TEST(Diameter, MultiplicityLawForC0) {
  Gen g(27);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const SumSpace X = g.space(0.0);
    const SumVector x = g.tie_max(X, g.nonzero_sum_vector(X), 2);
    if (support_functionals(X, x).supported.size() < 2) continue;
    EXPECT_EQ(diameter(X, x), 2.0);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(CalDSum, SpecExamples) {
  EXPECT_EQ(cal_d(two_euclid(2)), 0.0);
  EXPECT_EQ(cal_d(square_and_disc(2)), 2.0);
  EXPECT_EQ(cal_d(two_euclid(1)), 2.0);
  EXPECT_EQ(cal_d(two_euclid(0)), 2.0);
  EXPECT_NEAR(cal_d(SumSpace(2, {polygon_family(3), polygon_family(5)})), 1.8, 1e-6);
}

TEST(Smoothness, SpecExamples) {
  const SmoothnessReport a = smoothness_report(two_euclid(2), SumVector{{1, {1, 0}}, {2, {1, 0}}}, 0.0);
  EXPECT_TRUE(a.smooth);
  EXPECT_EQ(a.D, 0.0);
  for (double eps : {0.0, 1.0, 1.999}) {
    const SmoothnessReport b = smoothness_report(two_euclid(1), SumVector{{1, {1, 0}}}, eps);
    EXPECT_FALSE(b.smooth);
    EXPECT_FALSE(b.eps_smooth);
    EXPECT_EQ(b.D, 2.0);
  }
  const SmoothnessReport c = smoothness_report(square_and_disc(2), SumVector{{1, {1, 1}}, {2, {1, 0}}}, 1.5);
  EXPECT_TRUE(c.eps_smooth);
  EXPECT_FALSE(c.smooth);
  EXPECT_THROW(smoothness_report(two_euclid(2), kThreeFour, 2.0), ValidationError);
}

TEST(Smoothness, DiameterAgreesWithStructure) {
  Gen g(28);
  for (double p : {0.0, 1.0, 1.5, 2.0, 3.0}) {
    for (int i = 0; i < 500; ++i) {
      const SumSpace X = g.space(p);
      const SumVector x = g.nonzero_sum_vector(X);
      EXPECT_EQ(smoothness_report(X, x, 0.0).smooth, smooth_by_structure(X, x));
    }
  }
}
