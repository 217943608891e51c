#include "berezin/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "berezin/parallel.hpp"

namespace berezin {

PolarGrid PolarGrid::uniform_r2(std::size_t r_steps, std::size_t theta_steps,
                                double r_max) {
  if (r_steps < 1 || theta_steps < 1) throw std::invalid_argument("empty grid");
  if (!(r_max >= 0.0 && r_max < 1.0)) throw std::invalid_argument("r_max must lie in [0, 1)");
  PolarGrid g;
  g.r_values.resize(r_steps);
  const double t_max = r_max * r_max;
  for (std::size_t k = 0; k < r_steps; ++k) {
    g.r_values[k] = r_steps == 1 ? r_max
                                 : std::sqrt(t_max * static_cast<double>(k) /
                                             static_cast<double>(r_steps - 1));
  }
  g.r_values.back() = r_max;
  g.theta_values.resize(theta_steps);
  for (std::size_t j = 0; j < theta_steps; ++j) {
    g.theta_values[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(theta_steps);
  }
  g.validate();
  return g;
}

PolarGrid PolarGrid::uniform_r(std::size_t r_steps, std::size_t theta_steps,
                               double r_max) {
  PolarGrid g = uniform_r2(r_steps, theta_steps, r_max);
  for (std::size_t k = 0; k < r_steps; ++k) {
    g.r_values[k] = r_steps == 1 ? r_max
                                 : r_max * static_cast<double>(k) /
                                       static_cast<double>(r_steps - 1);
  }
  g.validate();
  return g;
}

PolarGrid PolarGrid::default_grid() {
  return uniform_r2(kDefaultRadii, kDefaultAngles, kDefaultRMax);
}

void PolarGrid::validate() const {
  if (r_values.empty() || theta_values.empty()) throw std::invalid_argument("empty grid");
  for (std::size_t k = 0; k < r_values.size(); ++k) {
    if (!(r_values[k] >= 0.0 && r_values[k] < 1.0)) {
      throw std::invalid_argument("grid radius outside [0, 1)");
    }
    if (k > 0 && !(r_values[k] > r_values[k - 1])) {
      throw std::invalid_argument("grid radii must be strictly increasing");
    }
  }
  for (std::size_t j = 0; j < theta_values.size(); ++j) {
    if (!(theta_values[j] >= 0.0 && theta_values[j] < kTwoPi)) {
      throw std::invalid_argument("grid angle outside [0, 2pi)");
    }
    if (j > 0 && !(theta_values[j] > theta_values[j - 1])) {
      throw std::invalid_argument("grid angles must be strictly increasing");
    }
  }
}

bool PolarGrid::wraps() const {
  const std::size_t n = theta_values.size();
  if (n < 3) return false;
  for (std::size_t j = 0; j < n; ++j) {
    const double expected = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    if (std::abs(theta_values[j] - expected) > 1e-12) return false;
  }
  return true;
}

std::vector<PlanarPoint> RangeSample::points() const {
  std::vector<PlanarPoint> out;
  out.reserve(static_cast<std::size_t>(values.size()));
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
      out.push_back({values(i, j).real(), values(i, j).imag()});
    }
  }
  return out;
}

std::vector<Triangle> RangeSample::mesh() const {
  std::vector<Triangle> tris;
  const auto rows = static_cast<std::size_t>(values.rows());
  const auto cols = static_cast<std::size_t>(values.cols());
  const std::size_t col_cells = grid.wraps() ? cols : cols - 1;
  auto at = [cols](std::size_t i, std::size_t j) { return i * cols + (j % cols); };
  for (std::size_t i = 0; i + 1 < rows; ++i) {
    for (std::size_t j = 0; j < col_cells; ++j) {
      tris.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
      tris.push_back({at(i, j), at(i + 1, j + 1), at(i, j + 1)});
    }
  }
  return tris;
}

Complex hardy_transform(const Symbol& symbol, const DiskPoint& z) {
  return z.one_minus_r2() / (1.0 - std::conj(z.z()) * symbol.apply(z));
}

Complex bergman_transform(const Symbol& symbol, const DiskPoint& z) {
  const Complex h = hardy_transform(symbol, z);
  return h * h;
}

Complex closed_form_transform(const SpaceSpec& space, const Symbol& symbol,
                              const DiskPoint& z) {
  switch (space.kind) {
    case SpaceSpec::Kind::Hardy: return hardy_transform(symbol, z);
    case SpaceSpec::Kind::Bergman: return bergman_transform(symbol, z);
    default: break;
  }
  throw std::invalid_argument("closed-form transforms exist for hardy and bergman only; "
                              "use the matrix oracle for " + space.name());
}

std::pair<double, double> blaschke_real_imag(Complex alpha, const DiskPoint& z) {
  if (!(std::abs(alpha) < 1.0)) throw std::invalid_argument("|alpha| must be < 1");
  const Complex az = std::conj(alpha) * z.z();
  const double x = az.real();
  const double y = az.imag();
  const double s = z.one_minus_r2();  // 1 - |z|^2
  const double t = 1.0 - s;           // |z|^2
  // Im(alpha conj(z)) = -Im(conj(alpha) z)
  const double denom_im = -2.0 * y;
  const double k = s / (s * s + denom_im * denom_im);
  const double p = s * (1.0 - x) + 2.0 * y * y;
  const double q = y * (1.0 + t - 2.0 * x);
  const double k2 = k * k;
  return {k2 * (p * p - q * q), 2.0 * k2 * p * q};
}

DiskPoint conjugation_partner(const Symbol& symbol, const DiskPoint& z) {
  if (symbol.kind() != Symbol::Kind::Blaschke) {
    throw std::invalid_argument("conjugation partner is defined for Blaschke symbols");
  }
  const Complex alpha = symbol.alpha();
  if (alpha == Complex{}) return z;
  const double psi = std::arg(alpha);
  return DiskPoint::polar(z.r(), 2.0 * psi - z.theta());
}

BoundaryLimit boundary_limit(const SpaceSpec& space, const Symbol& symbol,
                             double theta) {
  BoundaryLimit out;
  for (int k = 2; k <= 6; ++k) {
    const double r = 1.0 - std::pow(10.0, -k);
    out.radii.push_back(r);
    out.moduli.push_back(
        std::abs(closed_form_transform(space, symbol, DiskPoint::polar(r, theta))));
  }
  const auto n = out.moduli.size();
  // Richardson step on the last two terms assuming an O(1 - r) remainder.
  const double e1 = 1.0 - out.radii[n - 2];
  const double e2 = 1.0 - out.radii[n - 1];
  const double m1 = out.moduli[n - 2];
  const double m2 = out.moduli[n - 1];
  out.value = std::max(0.0, (m2 * e1 - m1 * e2) / (e1 - e2));
  const auto tail = std::minmax_element(out.moduli.end() - 3, out.moduli.end());
  out.spread = *tail.second - *tail.first;
  out.converged = out.spread <= kBoundarySpreadLimit;
  return out;
}

RangeSample sample_range(const SpaceSpec& space, const Symbol& symbol,
                         const PolarGrid& grid) {
  if (space.kind != SpaceSpec::Kind::Hardy && space.kind != SpaceSpec::Kind::Bergman) {
    throw std::invalid_argument("sample_range supports hardy and bergman; "
                                "use model_berezin_range for " + space.name());
  }
  grid.validate();
  RangeSample sample{space, symbol, grid,
                     CMatrix(static_cast<Eigen::Index>(grid.r_values.size()),
                             static_cast<Eigen::Index>(grid.theta_values.size()))};
  parallel_for(grid.r_values.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < grid.theta_values.size(); ++j) {
      sample.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          closed_form_transform(space, symbol, sample.point_at(i, j));
    }
  });
  return sample;
}

}  // namespace berezin
