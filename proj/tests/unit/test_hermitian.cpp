#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "berezin/hermitian.hpp"
#include "generators.hpp"

namespace berezin {
namespace {

using testing::for_all;
using testing::Gen;

TEST(Jacobi, DiagonalInputIsAlreadyConverged) {
  CMatrix h = CMatrix::Zero(3, 3);
  h(0, 0) = 3;
  h(1, 1) = -1;
  h(2, 2) = 2;
  const EigenDecomposition e = jacobi_eigensolver(h);
  EXPECT_EQ(e.sweeps, 0);
  EXPECT_DOUBLE_EQ(e.values(0), -1);
  EXPECT_DOUBLE_EQ(e.values(1), 2);
  EXPECT_DOUBLE_EQ(e.values(2), 3);
}

TEST(Jacobi, TwoByTwoComplex) {
  CMatrix h(2, 2);
  h << 2.0, Complex(0, 1), Complex(0, -1), 2.0;
  const EigenDecomposition e = jacobi_eigensolver(h);
  EXPECT_NEAR(e.values(0), 1.0, 1e-14);
  EXPECT_NEAR(e.values(1), 3.0, 1e-14);
}

TEST(Jacobi, ZeroMatrix) {
  const EigenDecomposition e = jacobi_eigensolver(CMatrix::Zero(4, 4));
  EXPECT_EQ(e.values, RVector::Zero(4));
}

TEST(Jacobi, RejectsNonSquare) {
  EXPECT_THROW(jacobi_eigensolver(CMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST(Jacobi, ReportsNonConvergence) {
  Gen g(7);
  const CMatrix h = g.hermitian(12);
  try {
    jacobi_eigensolver(h, 1e-13, 1);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.sweeps(), 1);
  }
}

TEST(JacobiProperty, MatchesEigenAndReconstructs) {
  for_all(41, 60, [](Gen& g) {
    const int d = g.integer(1, 16);
    const CMatrix h = g.hermitian(d);
    const EigenDecomposition e = jacobi_eigensolver(h);
    const Eigen::SelfAdjointEigenSolver<CMatrix> ref(h);
    EXPECT_LE((e.values - ref.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10 * (1 + h.norm()));
    const CMatrix rebuilt = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    EXPECT_LE((rebuilt - h).norm(), 1e-10 * (1 + h.norm()));
    EXPECT_LE((e.vectors.adjoint() * e.vectors - CMatrix::Identity(d, d)).norm(), 1e-10);
    for (int i = 1; i < d; ++i) EXPECT_LE(e.values(i - 1), e.values(i));
    EXPECT_LE(e.sweeps, kJacobiMaxSweeps);
  });
}

TEST(HermitianOperator, Validation) {
  CMatrix m(2, 2);
  m << 1.0, Complex(0, 1), Complex(0, 1), 1.0;
  EXPECT_THROW(HermitianOperator{m}, std::invalid_argument);
  EXPECT_THROW(HermitianOperator{CMatrix(0, 0)}, std::invalid_argument);
  CMatrix nan = CMatrix::Identity(2, 2);
  nan(0, 0) = std::nan("");
  EXPECT_THROW(HermitianOperator{nan}, std::invalid_argument);
  CMatrix near = CMatrix::Identity(2, 2);
  near(0, 1) = 1e-13;
  const HermitianOperator op(near);
  EXPECT_EQ(op.matrix()(0, 1), op.matrix()(1, 0));
}

TEST(HermitianOperator, ApplyAndShift) {
  const std::vector<double> d{1.0, 4.0};
  const HermitianOperator a = HermitianOperator::diagonal(d);
  const HermitianOperator sq = a.apply([](double t) { return std::sqrt(t); });
  EXPECT_NEAR(sq.matrix()(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(sq.matrix()(1, 1).real(), 2.0, 1e-15);
  const HermitianOperator s = a.shifted(2.5);
  EXPECT_NEAR(s.min_eigenvalue(), -1.5, 1e-15);
  EXPECT_NEAR(s.abs().max_eigenvalue(), 1.5, 1e-15);
  EXPECT_FALSE(s.is_psd());
  EXPECT_TRUE(a.is_psd());
}

TEST(HermitianOperatorProperty, ArithmeticAndCaching) {
  for_all(42, 40, [](Gen& g) {
    const int d = g.integer(1, 8);
    const HermitianOperator a(g.hermitian(d)), b(g.hermitian(d));
    const HermitianOperator sum = a + b;
    EXPECT_LE((sum.matrix() - a.matrix() - b.matrix()).norm(), 1e-14);
    EXPECT_LE(((a - b).matrix() - a.matrix() + b.matrix()).norm(), 1e-14);
    EXPECT_LE(((2.0 * a).matrix() - 2.0 * a.matrix()).norm(), 1e-14);
    const EigenDecomposition* first = &a.eigen();
    EXPECT_EQ(first, &a.eigen());
    const HermitianOperator copy = a;
    EXPECT_EQ(first, &copy.eigen());
    const double s = g.real(-3, 3);
    EXPECT_LE((a.shifted(s).eigenvalues() - (a.eigenvalues().array() - s).matrix()).cwiseAbs().maxCoeff(),
              1e-12);
    const HermitianOperator sq = a.apply([](double t) { return t * t; });
    EXPECT_LE((sq.matrix() - a.matrix() * a.matrix()).norm(), 1e-10 * (1 + a.matrix().squaredNorm()));
  });
}

TEST(HermitianOperator, DimensionMismatch) {
  EXPECT_THROW(HermitianOperator::identity(2) + HermitianOperator::identity(3), std::invalid_argument);
}

}  // namespace
}  // namespace berezin
