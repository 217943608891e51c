#pragma once

// Convexity reports for sampled ranges and verdict sweeps over symbol
// parameters.

#include <optional>
#include <vector>

#include "berezin/closed_form.hpp"
#include "berezin/geometry.hpp"
#include "berezin/kernels.hpp"
#include "berezin/types.hpp"

namespace berezin {

/// Sampled-range report: tolerance relative to the diameter, mesh coverage
/// attached as a diagnostic.
ConvexityReport range_report(const RangeSample& sample,
                             double relative_tol = kDefaultRelativeTolerance);

/// Grid used by sweeps: dense in r^2 so the sampled segments have no gaps
/// beyond the segment tolerance, few angles.
PolarGrid sweep_grid();

enum class SweepFamily { Elliptic, AutomorphismB0 };

struct SweepEntry {
  Complex parameter;             // alpha, or a for the automorphism
  ConvexityReport report;
  std::optional<Verdict> expected;  // empty near the decision boundary
};

/// Symbol for one lattice parameter. Automorphism parameters are
/// normalized onto the unit circle.
Symbol sweep_symbol(SweepFamily family, Complex parameter);

/// Predicted verdict: elliptic ranges are convex iff alpha is real;
/// the b = 0 automorphism iff a is one of 1, -1, i, -i. Parameters with
/// 0 < |Im alpha| <= boundary_band get no prediction.
std::optional<Verdict> expected_verdict(SweepFamily family, Complex parameter,
                                        double boundary_band = 0.05);

/// Polar lattice over the closed unit disk: the origin plus `radii` rings
/// (the last on |alpha| = 1) of `angles` points each. Parts below 1e-12 are
/// snapped to zero.
std::vector<Complex> alpha_lattice(int radii, int angles);

/// Unit-circle lattice e^{2 pi i j / count}.
std::vector<Complex> unit_circle_lattice(int count);

std::vector<SweepEntry> run_sweep(const SpaceSpec& space, SweepFamily family,
                                  const std::vector<Complex>& parameters,
                                  const PolarGrid& grid = sweep_grid());

/// True when every predicted verdict matches.
bool sweep_matches(const std::vector<SweepEntry>& entries);

}  // namespace berezin
