#pragma once

// Reproducing kernels of the Hardy space, the Bergman space and the model
// space K_{z^n}, and coordinates of normalized kernels in orthonormal
// monomial bases.

#include <string>

#include "berezin/types.hpp"

namespace berezin {

/// A point of the open unit disk kept in polar and Cartesian form.
class DiskPoint {
 public:
  DiskPoint() = default;

  /// r in [0, 1); theta is reduced into [0, 2*pi).
  static DiskPoint polar(double r, double theta);
  static DiskPoint cartesian(Complex z);

  double r() const { return r_; }
  double theta() const { return theta_; }
  Complex z() const { return z_; }
  double re() const { return z_.real(); }
  double im() const { return z_.imag(); }
  // 1 - |z|^2 evaluated as (1 - r)(1 + r).
  double one_minus_r2() const { return (1.0 - r_) * (1.0 + r_); }

 private:
  DiskPoint(double r, double theta, Complex z) : r_(r), theta_(theta), z_(z) {}

  double r_ = 0.0;
  double theta_ = 0.0;
  Complex z_{0.0, 0.0};
};

double reduce_angle(double theta);

struct SpaceSpec {
  enum class Kind { Hardy, Bergman, Model, L2 };

  Kind kind = Kind::Hardy;
  int model_n = 0;

  static SpaceSpec hardy() { return {Kind::Hardy, 0}; }
  static SpaceSpec bergman() { return {Kind::Bergman, 0}; }
  static SpaceSpec model(int n);
  static SpaceSpec l2() { return {Kind::L2, 0}; }

  std::string name() const;

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

inline constexpr int kDefaultTruncation = 256;

/// k_w(z). Throws std::invalid_argument for the L2 abstraction.
Complex kernel_eval(const SpaceSpec& space, const DiskPoint& w, const DiskPoint& z);

/// ||k_w||^2 = k_w(w).
double kernel_norm_sq(const SpaceSpec& space, const DiskPoint& w);

/// Coordinates of k_w / ||k_w|| in the orthonormal basis {z^k} (Hardy),
/// {sqrt(k+1) z^k} (Bergman) or {1, ..., z^{n-1}} (model space; N must
/// equal n).
CVector normalized_kernel_coeffs(const SpaceSpec& space, const DiskPoint& w,
                                 int truncation = kDefaultTruncation);

}  // namespace berezin
