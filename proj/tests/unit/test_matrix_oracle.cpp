#include <gtest/gtest.h>

#include <cmath>

#include "berezin/closed_form.hpp"
#include "berezin/matrix_oracle.hpp"
#include "generators.hpp"

namespace berezin {
namespace {

using testing::for_all;
using testing::Gen;

TEST(CompositionMatrix, IdentityAndZeroSymbol) {
  const OperatorMatrix id = composition_matrix(SpaceSpec::hardy(), Symbol::elliptic(1.0), 16);
  EXPECT_LE((id.entries - CMatrix::Identity(16, 16)).norm(), 1e-15);
  // Constant symbol 0: C_phi f = f(0), first row is e_0.
  const OperatorMatrix z = composition_matrix(SpaceSpec::hardy(), Symbol::elliptic(0.0), 8);
  EXPECT_EQ(z.entries(0, 0), Complex(1.0));
  EXPECT_EQ(z.entries.cwiseAbs().sum(), 1.0);
}

TEST(CompositionMatrix, EllipticIsDiagonal) {
  const Complex a(0.3, 0.4);
  for (const auto space : {SpaceSpec::hardy(), SpaceSpec::bergman()}) {
    const OperatorMatrix m = composition_matrix(space, Symbol::elliptic(a), 12);
    for (int j = 0; j < 12; ++j) {
      for (int k = 0; k < 12; ++k) {
        const Complex expect = j == k ? std::pow(a, k) : Complex{};
        EXPECT_LE(std::abs(m.entries(j, k) - expect), 1e-15);
      }
    }
  }
}

TEST(CompositionMatrix, BergmanWeights) {
  const Symbol s = Symbol::blaschke(0.4);
  const OperatorMatrix h = composition_matrix(SpaceSpec::hardy(), s, 10);
  const OperatorMatrix b = composition_matrix(SpaceSpec::bergman(), s, 10);
  for (int j = 0; j < 10; ++j) {
    for (int k = 0; k < 10; ++k) {
      EXPECT_LE(std::abs(b.entries(j, k) - h.entries(j, k) * std::sqrt((k + 1.0) / (j + 1.0))), 1e-14);
    }
  }
  EXPECT_EQ(b.basis, Basis::BergmanMonomial);
  EXPECT_EQ(h.basis, Basis::HardyMonomial);
}

TEST(CompositionMatrix, Rejections) {
  EXPECT_THROW(composition_matrix(SpaceSpec::model(2), Symbol::elliptic(0.5), 8), std::invalid_argument);
  EXPECT_THROW(composition_matrix(SpaceSpec::hardy(), Symbol::elliptic(0.5), 0), std::invalid_argument);
  const OperatorMatrix h = composition_matrix(SpaceSpec::hardy(), Symbol::elliptic(0.5), 8);
  EXPECT_THROW(berezin_from_matrix(h, SpaceSpec::bergman(), DiskPoint::polar(0.1, 0)),
               std::invalid_argument);
}

TEST(MatrixOracleProperty, AgreesWithClosedForm) {
  for_all(51, 30, [](Gen& g) {
    const Symbol s = g.symbol();
    for (const auto space : {SpaceSpec::hardy(), SpaceSpec::bergman()}) {
      const OperatorMatrix m = composition_matrix(space, s, 256);
      for (int i = 0; i < 5; ++i) {
        const DiskPoint w = g.disk_point(0.8);
        EXPECT_LE(std::abs(berezin_from_matrix(m, space, w) - closed_form_transform(space, s, w)), 1e-9);
      }
    }
  });
}

TEST(MatrixOracle, ErrorShrinksWithTruncation) {
  const Symbol s = Symbol::blaschke({0.3, -0.4});
  const DiskPoint w = DiskPoint::polar(0.8, 1.0);
  const Complex exact = bergman_transform(s, w);
  double prev = 1.0;
  for (const int n : {16, 32, 64, 128}) {
    const OperatorMatrix m = composition_matrix(SpaceSpec::bergman(), s, n);
    const double err = std::abs(berezin_from_matrix(m, SpaceSpec::bergman(), w) - exact);
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_LT(prev, 1e-9);
}

TEST(NumericalRange, DiagonalMatrix) {
  CMatrix a = CMatrix::Zero(2, 2);
  a(0, 0) = 1;
  a(1, 1) = 2;
  for (const auto& p : numerical_range_boundary(a, 64)) {
    EXPECT_NEAR(p.y, 0.0, 1e-12);
    EXPECT_GE(p.x, 1 - 1e-12);
    EXPECT_LE(p.x, 2 + 1e-12);
  }
}

TEST(NumericalRange, JordanBlockIsADiskOfRadiusOneHalf) {
  CMatrix a = CMatrix::Zero(2, 2);
  a(0, 1) = 1;
  for (const auto& p : numerical_range_boundary(a, 90)) {
    EXPECT_NEAR(std::hypot(p.x, p.y), 0.5, 1e-10);
  }
}

TEST(NumericalRange, ZeroAndRejections) {
  for (const auto& p : numerical_range_boundary(CMatrix::Zero(3, 3), 8)) {
    EXPECT_EQ(p.x, 0.0);
    EXPECT_EQ(p.y, 0.0);
  }
  EXPECT_THROW(numerical_range_boundary(CMatrix::Zero(3, 3), 2), std::invalid_argument);
  EXPECT_THROW(numerical_range_boundary(CMatrix::Zero(3, 2), 8), std::invalid_argument);
}

TEST(NumericalRangeProperty, TruncatedBerezinLiesInside) {
  for_all(52, 6, [](Gen& g) {
    const Symbol s = g.symbol();
    const SpaceSpec space = g.coin() ? SpaceSpec::hardy() : SpaceSpec::bergman();
    const OperatorMatrix m = composition_matrix(space, s, 48);
    const auto hull = convex_hull(numerical_range_boundary(m, 120));
    for (int i = 0; i < 50; ++i) {
      const Complex v = truncated_berezin(m, space, g.disk_point(0.95));
      EXPECT_TRUE(hull_contains(hull, {v.real(), v.imag()}, 1e-6)) << v;
    }
  });
}

TEST(ModelOperator, MatrixAndRange) {
  const OperatorMatrix m = model_operator_matrix(3);
  EXPECT_EQ(m.entries(1, 0), Complex(1.0));
  EXPECT_EQ(m.entries(2, 1), Complex(1.0));
  EXPECT_EQ(m.entries.cwiseAbs().sum(), 2.0);
  EXPECT_THROW(model_operator_matrix(0), std::invalid_argument);
  const RangeSample one = model_berezin_range(1, PolarGrid::uniform_r2(10, 8, 0.9));
  EXPECT_EQ(one.values.cwiseAbs().maxCoeff(), 0.0);
}

TEST(ModelOperatorProperty, TwoDimensionalFormula) {
  // |value| = |lambda| / (1 + |lambda|^2) for n = 2.
  const RangeSample r = model_berezin_range(2, PolarGrid::uniform_r2(20, 16, 0.99));
  for (std::size_t i = 0; i < r.grid.r_values.size(); ++i) {
    for (std::size_t j = 0; j < r.grid.theta_values.size(); ++j) {
      const Complex l = r.point_at(i, j).z();
      EXPECT_LE(std::abs(std::abs(r.values(i, j)) - std::abs(l) / (1 + std::norm(l))), 1e-14);
    }
  }
}

TEST(ModelOperator, SupremumMatchesEigenvalueBound) {
  // The sampled range moduli approach cos(pi/(n+1)) from below.
  for (const int n : {2, 3, 5}) {
    const RangeSample r = model_berezin_range(n, PolarGrid::uniform_r2(400, 16, 0.9999));
    EXPECT_LE(r.max_modulus(), std::cos(kPi / (n + 1)) + 1e-12);
  }
  const RangeSample two = model_berezin_range(2, PolarGrid::uniform_r2(400, 16, 0.9999));
  EXPECT_NEAR(two.max_modulus(), 0.5, 1e-6);
}

TEST(L2BerezinSet, DistinctInOrder) {
  const std::vector<Complex> d{1.0, Complex(0, 1), 1.0, 3.0, Complex(0, 1)};
  const auto s = l2_berezin_set(d);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], Complex(1.0));
  EXPECT_EQ(s[1], Complex(0, 1));
  EXPECT_EQ(s[2], Complex(3.0));
  EXPECT_THROW(l2_berezin_set(std::vector<Complex>{}), std::invalid_argument);
}

}  // namespace
}  // namespace berezin
