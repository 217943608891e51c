#pragma once

// Cyclic Jacobi eigensolver for complex Hermitian matrices and a Hermitian
// operator type with a cached eigendecomposition for functional calculus.

#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>

#include "berezin/types.hpp"

namespace berezin {

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, int sweeps)
      : std::runtime_error(what), sweeps_(sweeps) {}
  int sweeps() const { return sweeps_; }

 private:
  int sweeps_;
};

struct EigenDecomposition {
  RVector values;   // ascending
  CMatrix vectors;  // unitary, column i pairs with values[i]
  int sweeps = 0;
};

inline constexpr double kJacobiThreshold = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Stops when the off-diagonal Frobenius norm falls below
/// threshold * ||H||_F. Throws ConvergenceError after max_sweeps.
EigenDecomposition jacobi_eigensolver(const CMatrix& h,
                                      double threshold = kJacobiThreshold,
                                      int max_sweeps = kJacobiMaxSweeps);

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-12;

class HermitianOperator {
 public:
  /// Throws std::invalid_argument unless square with max|M - M*| <= 1e-12.
  /// The stored matrix is the exact Hermitian part (M + M*)/2.
  explicit HermitianOperator(const CMatrix& entries);

  static HermitianOperator identity(int dim);
  static HermitianOperator diagonal(std::span<const double> diag);

  const CMatrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

  const EigenDecomposition& eigen() const;
  const RVector& eigenvalues() const { return eigen().values; }
  const CMatrix& eigenvectors() const { return eigen().vectors; }
  double min_eigenvalue() const { return eigenvalues().minCoeff(); }
  double max_eigenvalue() const { return eigenvalues().maxCoeff(); }
  bool is_psd(double tol = kPositivityTolerance) const { return min_eigenvalue() >= -tol; }

  /// U diag(g(lambda_i)) U* for real-valued g.
  HermitianOperator apply(const std::function<double(double)>& g) const;

  /// |M| via eigenvalue absolute values.
  HermitianOperator abs() const { return apply([](double t) { return std::abs(t); }); }

  /// M - s I. Shares eigenvectors with M.
  HermitianOperator shifted(double s) const;

  friend HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b);
  friend HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b);
  friend HermitianOperator operator*(double s, const HermitianOperator& a);

 private:
  struct Cache {
    std::once_flag once;
    EigenDecomposition eig;
  };
  HermitianOperator(CMatrix entries, std::shared_ptr<Cache> cache);

  CMatrix m_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace berezin
