#include "berezin/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace berezin {

namespace {

[[noreturn]] void reject_l2() {
  throw std::invalid_argument(
      "pointwise kernel not defined for l2 abstraction; use basis index");
}

}  // namespace

double reduce_angle(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("non-finite angle");
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

DiskPoint DiskPoint::polar(double r, double theta) {
  if (!std::isfinite(r) || r < 0.0 || r >= 1.0) {
    throw std::invalid_argument("disk point radius must lie in [0, 1)");
  }
  const double t = reduce_angle(theta);
  return DiskPoint(r, t, std::polar(r, t));
}

DiskPoint DiskPoint::cartesian(Complex z) {
  const double r = std::abs(z);
  if (!std::isfinite(r) || r >= 1.0) {
    throw std::invalid_argument("point is not in the open unit disk");
  }
  return DiskPoint(r, r == 0.0 ? 0.0 : reduce_angle(std::arg(z)), z);
}

SpaceSpec SpaceSpec::model(int n) {
  if (n < 1) throw std::invalid_argument("model space requires n >= 1");
  return {Kind::Model, n};
}

std::string SpaceSpec::name() const {
  switch (kind) {
    case Kind::Hardy: return "hardy";
    case Kind::Bergman: return "bergman";
    case Kind::Model: return "model(" + std::to_string(model_n) + ")";
    case Kind::L2: return "l2";
  }
  return "?";
}

Complex kernel_eval(const SpaceSpec& space, const DiskPoint& w, const DiskPoint& z) {
  const Complex u = std::conj(w.z()) * z.z();
  switch (space.kind) {
    case SpaceSpec::Kind::Hardy:
      return 1.0 / (1.0 - u);
    case SpaceSpec::Kind::Bergman: {
      const Complex h = 1.0 / (1.0 - u);
      return h * h;
    }
    case SpaceSpec::Kind::Model: {
      // (1 - u^n) / (1 - u) summed directly: 1 + u + ... + u^{n-1}
      Complex sum{0.0, 0.0};
      Complex term{1.0, 0.0};
      for (int k = 0; k < space.model_n; ++k) {
        sum += term;
        term *= u;
      }
      return sum;
    }
    case SpaceSpec::Kind::L2:
      break;
  }
  reject_l2();
}

double kernel_norm_sq(const SpaceSpec& space, const DiskPoint& w) {
  const double d = w.one_minus_r2();
  switch (space.kind) {
    case SpaceSpec::Kind::Hardy:
      return 1.0 / d;
    case SpaceSpec::Kind::Bergman:
      return 1.0 / (d * d);
    case SpaceSpec::Kind::Model: {
      const double t = w.r() * w.r();
      double sum = 0.0;
      double term = 1.0;
      for (int k = 0; k < space.model_n; ++k) {
        sum += term;
        term *= t;
      }
      return sum;
    }
    case SpaceSpec::Kind::L2:
      break;
  }
  reject_l2();
}

CVector normalized_kernel_coeffs(const SpaceSpec& space, const DiskPoint& w,
                                 int truncation) {
  if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
  if (space.kind == SpaceSpec::Kind::L2) reject_l2();
  if (space.kind == SpaceSpec::Kind::Model && truncation != space.model_n) {
    throw std::invalid_argument("model space coefficients require N == n");
  }
  const Complex wbar = std::conj(w.z());
  double lead = 0.0;
  switch (space.kind) {
    case SpaceSpec::Kind::Hardy: lead = std::sqrt(w.one_minus_r2()); break;
    case SpaceSpec::Kind::Bergman: lead = w.one_minus_r2(); break;
    default: lead = 1.0 / std::sqrt(kernel_norm_sq(space, w)); break;
  }
  CVector v(truncation);
  Complex power{1.0, 0.0};
  for (int k = 0; k < truncation; ++k) {
    const double weight =
        space.kind == SpaceSpec::Kind::Bergman ? std::sqrt(k + 1.0) : 1.0;
    v[k] = lead * weight * power;
    power *= wbar;
  }
  return v;
}

}  // namespace berezin
