#include "berezin/matrix_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "berezin/hermitian.hpp"
#include "berezin/parallel.hpp"

namespace berezin {

namespace {

bool compatible(const OperatorMatrix& op, const SpaceSpec& space) {
  switch (op.basis) {
    case Basis::HardyMonomial: return space.kind == SpaceSpec::Kind::Hardy;
    case Basis::BergmanMonomial: return space.kind == SpaceSpec::Kind::Bergman;
    case Basis::Model:
      return space.kind == SpaceSpec::Kind::Model && space.model_n == op.model_n;
    case Basis::L2Standard: return false;
  }
  return false;
}

CVector kernel_vector(const OperatorMatrix& op, const SpaceSpec& space, const DiskPoint& w) {
  if (!compatible(op, space)) {
    throw std::invalid_argument("operator basis does not match space " + space.name());
  }
  if (op.entries.rows() != op.entries.cols()) throw std::invalid_argument("matrix must be square");
  return normalized_kernel_coeffs(space, w, op.truncation());
}

}  // namespace

OperatorMatrix composition_matrix(const SpaceSpec& space, const Symbol& symbol, int truncation) {
  if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
  const bool bergman = space.kind == SpaceSpec::Kind::Bergman;
  if (!bergman && space.kind != SpaceSpec::Kind::Hardy) {
    throw std::invalid_argument("composition matrices are built for hardy and bergman");
  }
  OperatorMatrix op{CMatrix::Zero(truncation, truncation),
                    bergman ? Basis::BergmanMonomial : Basis::HardyMonomial, 0};
  const CVector phi = symbol.series(truncation);
  CVector power = CVector::Zero(truncation);
  power[0] = 1.0;
  for (int k = 0; k < truncation; ++k) {
    for (int j = 0; j < truncation; ++j) {
      const double weight = bergman ? std::sqrt((k + 1.0) / (j + 1.0)) : 1.0;
      op.entries(j, k) = weight * power[j];
    }
    if (k + 1 < truncation) power = multiply_series(power, phi, truncation);
  }
  return op;
}

Complex berezin_from_matrix(const OperatorMatrix& op, const SpaceSpec& space, const DiskPoint& w) {
  const CVector v = kernel_vector(op, space, w);
  return v.dot(op.entries * v);
}

Complex truncated_berezin(const OperatorMatrix& op, const SpaceSpec& space, const DiskPoint& w) {
  CVector v = kernel_vector(op, space, w);
  v.normalize();
  return v.dot(op.entries * v);
}

std::vector<Complex> l2_berezin_set(std::span<const Complex> diag) {
  if (diag.empty()) throw std::invalid_argument("empty diagonal");
  std::vector<Complex> out;
  for (const Complex& d : diag) {
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  }
  return out;
}

OperatorMatrix model_operator_matrix(int n) {
  if (n < 1) throw std::invalid_argument("model operator requires n >= 1");
  OperatorMatrix op{CMatrix::Zero(n, n), Basis::Model, n};
  for (int k = 0; k + 1 < n; ++k) op.entries(k + 1, k) = 1.0;
  return op;
}

RangeSample model_berezin_range(int n, const PolarGrid& grid) {
  grid.validate();
  const OperatorMatrix op = model_operator_matrix(n);
  const SpaceSpec space = SpaceSpec::model(n);
  RangeSample sample{space, std::nullopt, grid,
                     CMatrix(static_cast<Eigen::Index>(grid.r_values.size()),
                             static_cast<Eigen::Index>(grid.theta_values.size()))};
  parallel_for(grid.r_values.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < grid.theta_values.size(); ++j) {
      sample.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          berezin_from_matrix(op, space, sample.point_at(i, j));
    }
  });
  return sample;
}

std::vector<PlanarPoint> numerical_range_boundary(const CMatrix& a, int directions) {
  if (directions < 3) throw std::invalid_argument("numerical range needs >= 3 directions");
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
  // Neighbouring directions are solved in the previous eigenbasis, where the
  // rotated Hermitian part is already nearly diagonal. Blocks restart from
  // the identity so the result does not depend on the thread count.
  constexpr std::size_t kBlock = 12;
  const std::size_t count = static_cast<std::size_t>(directions);
  std::vector<PlanarPoint> out(count);
  parallel_for((count + kBlock - 1) / kBlock, [&](std::size_t block) {
    CMatrix basis = CMatrix::Identity(a.rows(), a.cols());
    for (std::size_t m = block * kBlock; m < std::min(count, (block + 1) * kBlock); ++m) {
      const double theta = kTwoPi * static_cast<double>(m) / directions;
      const CMatrix rotated = std::polar(1.0, -theta) * a;
      const CMatrix herm = 0.5 * (rotated + rotated.adjoint());
      CMatrix local = basis.adjoint() * herm * basis;
      local = 0.5 * (local + local.adjoint()).eval();
      const EigenDecomposition e = jacobi_eigensolver(local);
      basis = basis * e.vectors;
      const CVector u = basis.col(basis.cols() - 1);
      const Complex value = u.dot(a * u);
      out[m] = {value.real(), value.imag()};
    }
  });
  return out;
}

std::vector<PlanarPoint> numerical_range_boundary(const OperatorMatrix& op, int directions) {
  return numerical_range_boundary(op.entries, directions);
}

}  // namespace berezin
