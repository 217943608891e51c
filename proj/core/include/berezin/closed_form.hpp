#pragma once

// Closed-form Berezin transforms of composition operators on the Hardy and
// Bergman spaces, and sampling of their ranges over polar grids.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "berezin/geometry.hpp"
#include "berezin/kernels.hpp"
#include "berezin/symbols.hpp"
#include "berezin/types.hpp"

namespace berezin {

struct PolarGrid {
  std::vector<double> r_values;      // increasing, in [0, r_max], r_max < 1
  std::vector<double> theta_values;  // increasing, in [0, 2*pi)

  /// r_steps radii uniform in r^2 on [0, r_max^2] and theta_steps angles
  /// 2*pi*j/theta_steps.
  static PolarGrid uniform_r2(std::size_t r_steps, std::size_t theta_steps,
                              double r_max);
  /// Radii uniform in r on [0, r_max].
  static PolarGrid uniform_r(std::size_t r_steps, std::size_t theta_steps,
                             double r_max);
  /// 200 radii uniform in r^2 up to 0.998, 256 angles.
  static PolarGrid default_grid();

  void validate() const;
  std::size_t size() const { return r_values.size() * theta_values.size(); }
  double r_max() const { return r_values.back(); }
  // Angles are the uniform full-circle lattice, so the last column wraps
  // onto the first.
  bool wraps() const;
};

inline constexpr std::size_t kDefaultRadii = 200;
inline constexpr std::size_t kDefaultAngles = 256;
inline constexpr double kDefaultRMax = 0.998;

struct RangeSample {
  SpaceSpec space;
  std::optional<Symbol> symbol;  // empty for the model operator
  PolarGrid grid;
  CMatrix values;                // rows: radii, columns: angles

  /// Values as planar points, r-major then theta.
  std::vector<PlanarPoint> points() const;
  /// Two triangles per grid cell, indexing into points().
  std::vector<Triangle> mesh() const;
  double max_modulus() const { return values.cwiseAbs().maxCoeff(); }
  DiskPoint point_at(std::size_t ri, std::size_t ti) const {
    return DiskPoint::polar(grid.r_values[ri], grid.theta_values[ti]);
  }
};

/// (1 - |z|^2) / (1 - conj(z) phi(z)).
Complex hardy_transform(const Symbol& symbol, const DiskPoint& z);

/// (1 - |z|^2)^2 / (1 - conj(z) phi(z))^2.
Complex bergman_transform(const Symbol& symbol, const DiskPoint& z);

/// Dispatch on space; only Hardy and Bergman have closed forms.
Complex closed_form_transform(const SpaceSpec& space, const Symbol& symbol,
                              const DiskPoint& z);

/// Real and imaginary parts of the Bergman transform of the Blaschke factor
/// phi_alpha, assembled from the explicit real decomposition
///   C(z) = k^2 [P + iQ]^2,  P = (1-|z|^2)(1-Re(conj(a) z)) + 2 Im(conj(a) z)^2,
///                           Q = Im(conj(a) z) (1 + |z|^2 - 2 Re(conj(a) z)),
/// where k = (1-|z|^2) / |1 - |z|^2 + 2i Im(a conj(z))|^2 is real.
std::pair<double, double> blaschke_real_imag(Complex alpha, const DiskPoint& z);

/// Reflection r e^{i(2 psi - theta)} of z = r e^{i theta} across the line
/// through alpha = rho e^{i psi}. Transform values at z and at the partner
/// are complex conjugates. Returns z when alpha == 0. Blaschke symbols only.
DiskPoint conjugation_partner(const Symbol& symbol, const DiskPoint& z);

struct BoundaryLimit {
  double value = 0.0;
  bool converged = false;
  double spread = 0.0;
  std::vector<double> radii;
  std::vector<double> moduli;
};

/// Extrapolated limit of |transform(r e^{i theta})| as r -> 1 using the
/// radii 1 - 10^-k, k = 2..6.
BoundaryLimit boundary_limit(const SpaceSpec& space, const Symbol& symbol,
                             double theta);

inline constexpr double kBoundarySpreadLimit = 1e-2;

/// Closed-form transform at every grid point. Hardy and Bergman only.
RangeSample sample_range(const SpaceSpec& space, const Symbol& symbol,
                         const PolarGrid& grid);

}  // namespace berezin
