#include <gtest/gtest.h>

#include <set>

#include "opflow/opflow.hpp"
#include "oracles.hpp"

using namespace opflow;

namespace {

Operation scal(int degree, long v) { return make_operation(1, degree, {Scalar(v)}); }

}  // namespace

TEST(Operation, ConstructionValidatesShape) {
  EXPECT_NO_THROW(make_operation(1, 2, {1}));
  EXPECT_THROW(make_operation(2, 2, std::vector<Scalar>(7)), DimensionError);
  EXPECT_THROW(make_operation(0, 2, {}), DomainError);
  EXPECT_THROW(make_operation(2, -1, {}), DomainError);
  const Operation v = make_operation(3, 0, {1, 2, 3});
  EXPECT_EQ(v.size(), 3u);
  EXPECT_EQ(v.reduced_degree(), -1);
}

TEST(Operation, CoefficientsAreCanonicalized) {
  const Operation f = make_operation(1, 1, {Scalar(2, 4)});
  EXPECT_EQ(f[0].get_num(), 1);
  EXPECT_EQ(f[0].get_den(), 2);
}

TEST(Operation, DualNumbersLayout) {
  const Operation mu = dual_numbers().mu;
  EXPECT_EQ(mu.size(), 8u);
  EXPECT_EQ(mu.at({0, 0}, 0), 1);
  EXPECT_EQ(mu.at({0, 1}, 1), 1);
  EXPECT_EQ(mu.at({1, 0}, 1), 1);
  EXPECT_TRUE(mu.at({1, 1}, 0) == 0 && mu.at({1, 1}, 1) == 0);
}

TEST(Operation, UnitLayout) {
  EXPECT_EQ(unit(1), make_operation(1, 1, {1}));
  EXPECT_EQ(unit(2), make_operation(2, 1, {1, 0, 0, 1}));
}

TEST(Operation, ArithmeticIsCoefficientwise) {
  const Operation f = random_operation(2, 2, 1, 5), g = random_operation(2, 2, 2, 5);
  const Operation s = f + g, t = f - g, u = Scalar(3) * f;
  for (std::size_t k = 0; k < f.size(); ++k) {
    EXPECT_EQ(s[k], f[k] + g[k]);
    EXPECT_EQ(t[k], f[k] - g[k]);
    EXPECT_EQ(u[k], 3 * f[k]);
  }
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_THROW(f + random_operation(2, 1, 3, 5), DimensionError);
}

TEST(Compose, ScalarModelSigns) {
  // (-1)^{i|g|} with |g| = 1 for degree-2 g.
  EXPECT_EQ(partial_compose(scal(2, 2), scal(2, 3), 0), scal(3, 6));
  EXPECT_EQ(partial_compose(scal(2, 2), scal(2, 3), 1), scal(3, -6));
  EXPECT_EQ(partial_compose(scal(3, 1), scal(3, 1), 2), scal(5, 1));
  EXPECT_EQ(partial_compose(scal(2, 5), scal(0, 7), 1), scal(1, -35));  // |g| = -1
}

TEST(Compose, DegreeBookkeeping) {
  const Operation f = random_operation(2, 3, 4, 2), g = random_operation(2, 2, 5, 2);
  for (int i = 0; i <= f.reduced_degree(); ++i) {
    const Operation c = partial_compose(f, g, i);
    EXPECT_EQ(c.degree(), f.degree() + g.degree() - 1);
    EXPECT_EQ(c.reduced_degree(), f.reduced_degree() + g.reduced_degree());
  }
}

TEST(Compose, Errors) {
  const Operation f = random_operation(2, 2, 1, 3);
  EXPECT_THROW(partial_compose(f, f, 2), CompositionRangeError);
  EXPECT_THROW(partial_compose(f, f, -1), CompositionRangeError);
  EXPECT_THROW(partial_compose(f, random_operation(3, 2, 1, 3), 0), DimensionError);
  EXPECT_THROW(partial_compose(make_operation(2, 0, {1, 0}), f, 0), CompositionRangeError);
}

TEST(Compose, MatchesBruteForceEvaluation) {
  Lcg rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(rng.uniform(1, 2));
    const int df = static_cast<int>(rng.uniform(1, 3)), dg = static_cast<int>(rng.uniform(0, 2));
    const Operation f = random_operation(d, df, rng, 4), g = random_operation(d, dg, rng, 4);
    for (int i = 0; i < df; ++i) EXPECT_EQ(partial_compose(f, g, i), oracle::compose(f, g, i));
  }
}

TEST(Compose, UnitAxiom) {
  Lcg rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
    const Operation f = random_operation(d, static_cast<int>(rng.uniform(0, 3)), rng, 5);
    if (f.degree() >= 1) {
      EXPECT_EQ(partial_compose(unit(d), f, 0), f);
      for (int i = 0; i < f.degree(); ++i) EXPECT_EQ(partial_compose(f, unit(d), i), f);
    }
    for (const auto& r : identities::unit_residuals(f)) EXPECT_TRUE(r.is_zero());
  }
}

TEST(Apply, DualNumbers) {
  const Operation mu = dual_numbers().mu;
  const std::vector<std::vector<Scalar>> ee{{0, 1}, {0, 1}}, one_e{{1, 0}, {0, 1}};
  EXPECT_EQ(opflow::apply(mu, ee), (std::vector<Scalar>{0, 0}));
  EXPECT_EQ(opflow::apply(mu, one_e), (std::vector<Scalar>{0, 1}));
  const std::vector<std::vector<Scalar>> none;
  EXPECT_EQ(opflow::apply(make_operation(2, 0, {3, 4}), none), (std::vector<Scalar>{3, 4}));
  EXPECT_THROW(opflow::apply(mu, none), DimensionError);
}

TEST(Apply, MatchesOracleAndIntertwinesComposition) {
  Lcg rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2;
    const Operation f = random_operation(d, 2, rng, 3), g = random_operation(d, 2, rng, 3);
    std::vector<std::vector<Scalar>> x(3, std::vector<Scalar>(d));
    for (auto& v : x)
      for (auto& c : v) c = rational(rng.uniform(-4, 4), rng.uniform(1, 3));
    const std::vector<std::vector<Scalar>> fx(x.begin(), x.begin() + 2);
    EXPECT_EQ(opflow::apply(f, fx), oracle::eval(f, fx));
    // (f ∘_1 g)(x0, x1, x2) = (-1)^{|g|} f(x0, g(x1, x2)).
    const std::vector<std::vector<Scalar>> gx(x.begin() + 1, x.end());
    std::vector<std::vector<Scalar>> outer{x[0]};
    outer.push_back(opflow::apply(g, gx));
    auto expect = opflow::apply(f, outer);
    for (auto& c : expect) c = -c;
    EXPECT_EQ(opflow::apply(partial_compose(f, g, 1), x), expect);
  }
}

TEST(Random, PinnedStream) {
  // Reference values from an independent implementation of the LCG.
  EXPECT_EQ(random_operation(2, 1, 42, 5), make_operation(2, 1, {0, -2, 2, 3}));
  EXPECT_EQ(random_operation(2, 2, 7, 3), make_operation(2, 2, {3, -1, 1, -1, -1, -2, -3, -3}));
  Lcg rng(0);
  EXPECT_EQ(rng.uniform(0, 1LL << 31), 335903614);
  EXPECT_EQ(rng.uniform(0, 1LL << 31), 436792849);
}

TEST(Random, BoundsAndDeterminism) {
  const Operation a = random_operation(3, 2, 99, 2), b = random_operation(3, 2, 99, 2);
  EXPECT_EQ(a, b);
  for (const auto& c : a.coeffs()) EXPECT_TRUE(c >= -2 && c <= 2);
  EXPECT_THROW(random_operation(2, 2, 1, 0), DomainError);
}

TEST(Regions, Examples) {
  using P = std::vector<std::pair<int, int>>;
  EXPECT_EQ(region(RegionKind::B, 3, 2).pairs, (P{{1, 0}, {2, 0}, {2, 1}}));
  EXPECT_EQ(region(RegionKind::G, 2, 2).pairs, (P{{0, 2}}));
  EXPECT_EQ(region(RegionKind::A, 1, 1).pairs, (P{{0, 0}}));
  EXPECT_THROW(region(RegionKind::A, 0, 1), DomainError);
}

TEST(Regions, PartitionTheRectangle) {
  for (int dh = 1; dh <= 5; ++dh) {
    for (int df = 1; df <= 4; ++df) {
      std::set<std::pair<int, int>> seen;
      std::size_t total = 0;
      for (auto k : {RegionKind::B, RegionKind::A, RegionKind::G}) {
        for (const auto& p : region(k, dh, df).pairs) {
          seen.insert(p);
          ++total;
          EXPECT_GE(p.first, 0);
          EXPECT_LE(p.first, dh - 1);
          EXPECT_GE(p.second, 0);
          EXPECT_LE(p.second, dh + df - 2);
        }
      }
      EXPECT_EQ(total, seen.size()) << "regions overlap at " << dh << "," << df;
      EXPECT_EQ(seen.size(), static_cast<std::size_t>(dh * (dh + df - 1)));
    }
  }
}

TEST(Regions, CompositionRelationsHold) {
  Lcg rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 2));
    auto deg = [&] { return static_cast<int>(rng.uniform(1, 3)); };
    const Operation h = random_operation(d, deg(), rng, 3), f = random_operation(d, deg(), rng, 3),
                    g = random_operation(d, deg(), rng, 3);
    const auto rel = composition_relation_residuals(h, f, g);
    EXPECT_FALSE(rel.empty());
    for (const auto& [key, r] : rel) EXPECT_TRUE(r.is_zero()) << to_string(key.kind) << " " << key.i << "," << key.j;
  }
  EXPECT_THROW(composition_relation_residuals(scal(0, 1), scal(1, 1), scal(1, 1)), DomainError);
}

TEST(Algebras, BundledModels) {
  EXPECT_EQ(scalar_model().mu, scal(2, 1));
  EXPECT_EQ(matrix_algebra(2).dim, 4u);
  EXPECT_TRUE(is_associative(matrix_algebra(2).mu));
  EXPECT_TRUE(is_associative(dual_numbers().mu));
  EXPECT_FALSE(is_associative(random_operation(2, 2, 7, 3)));
  EXPECT_THROW(AlgebraSpec(unit(2)), DomainError);
  // E_01 E_10 = E_00 in the r·n + c basis.
  const Operation m = matrix_algebra(2).mu;
  EXPECT_EQ(m.at({1, 2}, 0), 1);
  EXPECT_EQ(m.at({2, 1}, 3), 1);
  EXPECT_EQ(m.at({1, 1}, 0), 0);
}
