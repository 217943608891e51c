#pragma once

// Truncated operator matrices in orthonormal bases. Berezin transforms
// computed here are quadratic forms, independent of the closed forms.

#include <span>
#include <vector>

#include "berezin/closed_form.hpp"
#include "berezin/geometry.hpp"
#include "berezin/kernels.hpp"
#include "berezin/symbols.hpp"
#include "berezin/types.hpp"

namespace berezin {

enum class Basis { HardyMonomial, BergmanMonomial, Model, L2Standard };

struct OperatorMatrix {
  CMatrix entries;
  Basis basis = Basis::L2Standard;
  int model_n = 0;

  int truncation() const { return static_cast<int>(entries.rows()); }
};

/// Matrix of C_phi: column k holds the coordinates of C_phi(e_k), with
/// Bergman weights sqrt(k+1)/sqrt(j+1) applied for the Bergman basis.
OperatorMatrix composition_matrix(const SpaceSpec& space, const Symbol& symbol,
                                  int truncation = kDefaultTruncation);

/// v* M v with v = normalized_kernel_coeffs(space, w, N).
Complex berezin_from_matrix(const OperatorMatrix& op, const SpaceSpec& space,
                            const DiskPoint& w);

/// Berezin transform of the truncated operator itself: the kernel vector
/// is renormalized inside the N-dimensional subspace, so the value lies in
/// the numerical range of the matrix.
Complex truncated_berezin(const OperatorMatrix& op, const SpaceSpec& space,
                          const DiskPoint& w);

/// Distinct diagonal entries, in order of first appearance.
std::vector<Complex> l2_berezin_set(std::span<const Complex> diag);

/// Compressed shift on K_{z^n}: ones on the first subdiagonal.
OperatorMatrix model_operator_matrix(int n);

RangeSample model_berezin_range(int n, const PolarGrid& grid);

/// <A u, u> for the top eigenvector u of Re(e^{-i theta_m} A), theta_m =
/// 2 pi m / M. The hull of the result approximates W(A) from inside.
std::vector<PlanarPoint> numerical_range_boundary(const OperatorMatrix& op, int directions);
std::vector<PlanarPoint> numerical_range_boundary(const CMatrix& a, int directions);

}  // namespace berezin
