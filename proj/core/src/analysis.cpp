#include "berezin/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace berezin {

namespace {

constexpr double kSnapTolerance = 1e-12;
constexpr double kLatticeMatch = 1e-9;

// 4000 radii keep the gap between consecutive Hardy samples near the
// boundary below ten tolerances even for |alpha| close to 1.
constexpr std::size_t kSweepRadii = 4000;
constexpr std::size_t kSweepAngles = 16;

Complex snap(Complex z) {
  const double re = std::abs(z.real()) < kSnapTolerance ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < kSnapTolerance ? 0.0 : z.imag();
  return {re, im};
}

}  // namespace

ConvexityReport range_report(const RangeSample& sample, double relative_tol) {
  if (!(relative_tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const auto pts = sample.points();
  const double tol = relative_tolerance(pts, relative_tol);
  const auto mesh = sample.mesh();
  return convexity_report(pts, tol, false, mesh);
}

PolarGrid sweep_grid() { return PolarGrid::uniform_r2(kSweepRadii, kSweepAngles, kDefaultRMax); }

Symbol sweep_symbol(SweepFamily family, Complex parameter) {
  switch (family) {
    case SweepFamily::Elliptic:
      return Symbol::elliptic(parameter);
    case SweepFamily::AutomorphismB0: {
      const double m = std::abs(parameter);
      if (m == 0.0) throw std::invalid_argument("automorphism needs a != 0");
      return Symbol::automorphism(parameter / m, Complex(0.0, 0.0));
    }
  }
  throw std::invalid_argument("unknown sweep family");
}

std::optional<Verdict> expected_verdict(SweepFamily family, Complex parameter,
                                        double boundary_band) {
  switch (family) {
    case SweepFamily::Elliptic: {
      const double im = std::abs(parameter.imag());
      if (im < kSnapTolerance) return Verdict::Convex;
      if (im <= boundary_band) return std::nullopt;
      return Verdict::NotConvex;
    }
    case SweepFamily::AutomorphismB0: {
      const Complex a = parameter / std::abs(parameter);
      for (const Complex c : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
        if (std::abs(a - c) < kLatticeMatch) return Verdict::Convex;
      }
      return Verdict::NotConvex;
    }
  }
  return std::nullopt;
}

std::vector<Complex> alpha_lattice(int radii, int angles) {
  if (radii < 1 || angles < 1) throw std::invalid_argument("lattice needs radii, angles >= 1");
  std::vector<Complex> out{Complex(0.0, 0.0)};
  for (int i = 1; i <= radii; ++i) {
    const double rho = static_cast<double>(i) / radii;
    for (int j = 0; j < angles; ++j) {
      out.push_back(snap(std::polar(rho, kTwoPi * j / angles)));
    }
  }
  return out;
}

std::vector<Complex> unit_circle_lattice(int count) {
  if (count < 1) throw std::invalid_argument("lattice needs count >= 1");
  std::vector<Complex> out;
  for (int j = 0; j < count; ++j) out.push_back(snap(std::polar(1.0, kTwoPi * j / count)));
  return out;
}

std::vector<SweepEntry> run_sweep(const SpaceSpec& space, SweepFamily family,
                                  const std::vector<Complex>& parameters,
                                  const PolarGrid& grid) {
  std::vector<SweepEntry> out;
  out.reserve(parameters.size());
  for (const Complex p : parameters) {
    const RangeSample sample = sample_range(space, sweep_symbol(family, p), grid);
    out.push_back({p, range_report(sample), expected_verdict(family, p)});
  }
  return out;
}

bool sweep_matches(const std::vector<SweepEntry>& entries) {
  for (const auto& e : entries) {
    if (e.expected && *e.expected != e.report.verdict) return false;
  }
  return true;
}

}  // namespace berezin
