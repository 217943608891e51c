#include <gtest/gtest.h>

#include <cmath>

#include "berezin/kernels.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace berezin {
namespace {

using testing::for_all;
using testing::Gen;

TEST(DiskPoint, PolarAndCartesianAgree) {
  for_all(11, 200, [](Gen& g) {
    const DiskPoint p = DiskPoint::polar(g.real(0.0, 0.999), g.real(-10.0, 10.0));
    EXPECT_GE(p.theta(), 0.0);
    EXPECT_LT(p.theta(), kTwoPi);
    EXPECT_LE(std::abs(std::polar(p.r(), p.theta()) - p.z()), 1e-15);
    const DiskPoint q = DiskPoint::cartesian(p.z());
    EXPECT_NEAR(q.r(), p.r(), 1e-15);
    EXPECT_LE(std::abs(q.z() - p.z()), 1e-15);
  });
}

TEST(DiskPoint, RejectsBoundaryAndOutside) {
  EXPECT_THROW(DiskPoint::polar(1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(DiskPoint::polar(-0.1, 0.0), std::invalid_argument);
  EXPECT_THROW(DiskPoint::cartesian({0.8, 0.8}), std::invalid_argument);
  EXPECT_THROW(DiskPoint::polar(NAN, 0.0), std::invalid_argument);
}

TEST(KernelEval, Examples) {
  const DiskPoint zero = DiskPoint::polar(0.0, 0.0);
  const DiskPoint half = DiskPoint::polar(0.5, 0.0);
  EXPECT_EQ(kernel_eval(SpaceSpec::hardy(), zero, DiskPoint::polar(0.7, 2.0)), Complex(1.0));
  EXPECT_NEAR(kernel_eval(SpaceSpec::bergman(), half, half).real(), 16.0 / 9.0, 1e-15);
  EXPECT_NEAR(kernel_eval(SpaceSpec::model(2), DiskPoint::polar(0.3, 0), DiskPoint::polar(0.4, 0)).real(),
              1.12, 1e-15);
}

TEST(KernelEval, L2HasNoPointwiseKernel) {
  const DiskPoint z = DiskPoint::polar(0.1, 0.0);
  try {
    kernel_eval(SpaceSpec::l2(), z, z);
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("use basis index"), std::string::npos);
  }
  EXPECT_THROW(kernel_norm_sq(SpaceSpec::l2(), z), std::invalid_argument);
  EXPECT_THROW(SpaceSpec::model(0), std::invalid_argument);
}

TEST(KernelNorm, Examples) {
  EXPECT_EQ(kernel_norm_sq(SpaceSpec::hardy(), DiskPoint::polar(0, 0)), 1.0);
  EXPECT_NEAR(kernel_norm_sq(SpaceSpec::bergman(), DiskPoint::polar(std::sqrt(0.5), 1.0)), 4.0, 1e-14);
  EXPECT_EQ(kernel_norm_sq(SpaceSpec::model(2), DiskPoint::polar(0, 0)), 1.0);
}

TEST(KernelProperty, DiagonalEqualsNormSquared) {
  for_all(12, 200, [](Gen& g) {
    const DiskPoint w = g.disk_point(0.95);
    for (const SpaceSpec s : {SpaceSpec::hardy(), SpaceSpec::bergman(), SpaceSpec::model(g.integer(1, 9))}) {
      const double n = kernel_norm_sq(s, w);
      EXPECT_GT(n, 0.0);
      EXPECT_LE(std::abs(kernel_eval(s, w, w) - n), 1e-14 * std::max(1.0, n));
    }
  });
}

TEST(KernelProperty, ModelKernelMatchesClosedForm) {
  for_all(13, 100, [](Gen& g) {
    const int n = g.integer(1, 12);
    const DiskPoint w = g.disk_point(0.9), z = g.disk_point(0.9);
    const Complex p = std::conj(w.z()) * z.z();
    const Complex closed = (1.0 - std::pow(p, n)) / (1.0 - p);
    EXPECT_LE(std::abs(kernel_eval(SpaceSpec::model(n), w, z) - closed), 1e-13);
  });
}

TEST(NormalizedKernel, Examples) {
  const CVector h = normalized_kernel_coeffs(SpaceSpec::hardy(), DiskPoint::polar(0, 0), 4);
  EXPECT_EQ(h, (CVector(4) << 1, 0, 0, 0).finished());

  const CVector m = normalized_kernel_coeffs(SpaceSpec::model(2), DiskPoint::polar(0.6, 0), 2);
  EXPECT_NEAR(m[0].real(), 1 / std::sqrt(1.36), 1e-15);
  EXPECT_NEAR(m[1].real(), 0.6 / std::sqrt(1.36), 1e-15);

  const CVector b = normalized_kernel_coeffs(SpaceSpec::bergman(), DiskPoint::polar(0.5, 0), 2);
  EXPECT_NEAR(b[0].real(), 0.75, 1e-15);
  EXPECT_NEAR(b[1].real(), 0.75 * std::sqrt(2.0) * 0.5, 1e-15);

  EXPECT_THROW(normalized_kernel_coeffs(SpaceSpec::model(3), DiskPoint::polar(0.1, 0), 4),
               std::invalid_argument);
  EXPECT_THROW(normalized_kernel_coeffs(SpaceSpec::hardy(), DiskPoint::polar(0.1, 0), 0),
               std::invalid_argument);
}

TEST(NormalizedKernelProperty, NormBelowOneWithGeometricDeficit) {
  for_all(14, 200, [](Gen& g) {
    const DiskPoint w = g.disk_point(0.9);
    const int n = g.integer(1, 64);
    const double t = std::norm(w.z());
    const double h = normalized_kernel_coeffs(SpaceSpec::hardy(), w, n).squaredNorm();
    EXPECT_LE(h, 1.0 + 1e-14);
    // Hardy deficit is exactly |w|^{2N}.
    EXPECT_NEAR(1.0 - h, std::pow(t, n), 1e-14);
    const double b = normalized_kernel_coeffs(SpaceSpec::bergman(), w, n).squaredNorm();
    EXPECT_LE(b, 1.0 + 1e-14);
    // Bergman deficit: t^N (1 + N (1 - t)).
    EXPECT_NEAR(1.0 - b, std::pow(t, n) * (1.0 + n * (1.0 - t)), 1e-13);
    const int m = g.integer(1, 10);
    EXPECT_NEAR(normalized_kernel_coeffs(SpaceSpec::model(m), w, m).squaredNorm(), 1.0, 1e-14);
  });
}

TEST(NormalizedKernelProperty, ReproducesPolynomials) {
  for_all(15, 100, [](Gen& g) {
    const int n = g.integer(1, 16);
    const DiskPoint w = g.disk_point(0.9);
    CVector p(n);
    for (int k = 0; k < n; ++k) p[k] = g.in_disk(1.0);
    // <p, k_w> = p(w) with k_w = k^_w * ||k_w||.
    const CVector kw = normalized_kernel_coeffs(SpaceSpec::hardy(), w, n) *
                       std::sqrt(kernel_norm_sq(SpaceSpec::hardy(), w));
    Complex horner = 0.0;
    for (int k = n - 1; k >= 0; --k) horner = horner * w.z() + p[k];
    EXPECT_LE(std::abs(kw.dot(p) - horner), 1e-13);
  });
}

TEST(NormalizedKernelProperty, MatchesQuadratureInnerProducts) {
  // Coefficient vectors reproduce the space's inner product: <k_w, k_v>.
  Gen g(16);
  for (int k = 0; k < 5; ++k) {
    const DiskPoint w = g.disk_point(0.6), v = g.disk_point(0.6);
    const auto kw = [w](Complex u) { return 1.0 / (1.0 - std::conj(w.z()) * u); };
    const auto kv = [v](Complex u) { return 1.0 / (1.0 - std::conj(v.z()) * u); };
    const Complex quad = testing::hardy_inner(kv, kw);
    const CVector a = normalized_kernel_coeffs(SpaceSpec::hardy(), w, 256) *
                      std::sqrt(kernel_norm_sq(SpaceSpec::hardy(), w));
    const CVector b = normalized_kernel_coeffs(SpaceSpec::hardy(), v, 256) *
                      std::sqrt(kernel_norm_sq(SpaceSpec::hardy(), v));
    EXPECT_LE(std::abs(a.dot(b) - quad), 1e-12);

    const auto bw = [w](Complex u) { return std::pow(1.0 - std::conj(w.z()) * u, -2); };
    const auto bv = [v](Complex u) { return std::pow(1.0 - std::conj(v.z()) * u, -2); };
    const Complex bquad = testing::bergman_inner(bv, bw);
    const CVector c = normalized_kernel_coeffs(SpaceSpec::bergman(), w, 256) *
                      std::sqrt(kernel_norm_sq(SpaceSpec::bergman(), w));
    const CVector d = normalized_kernel_coeffs(SpaceSpec::bergman(), v, 256) *
                      std::sqrt(kernel_norm_sq(SpaceSpec::bergman(), v));
    EXPECT_LE(std::abs(c.dot(d) - bquad), 1e-10);
  }
}

}  // namespace
}  // namespace berezin
