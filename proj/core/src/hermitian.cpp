#include "berezin/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace berezin {

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// One unitary rotation in the (p, q) plane annihilating a(p, q).
void rotate(CMatrix& a, CMatrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double b = std::abs(apq);
  if (b == 0.0) return;
  const Complex phase = apq / b;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double zeta = (aqq - app) / (2.0 * b);
  const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  // U = W R with W = diag(1, conj(phase)), R = [[c, s], [-s, c]].
  const Complex upp = c;
  const Complex upq = s;
  const Complex uqp = -s * std::conj(phase);
  const Complex uqq = c * std::conj(phase);
  // Columns p, q of A U; rows follow by Hermitian symmetry.
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    const Complex np = akp * upp + akq * uqp;
    const Complex nq = akp * upq + akq * uqq;
    a(k, p) = np;
    a(k, q) = nq;
    a(p, k) = std::conj(np);
    a(q, k) = std::conj(nq);
  }
  a(p, p) = app - t * b;
  a(q, q) = aqq + t * b;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * upp + vkq * uqp;
    v(k, q) = vkp * upq + vkq * uqq;
  }
}

}  // namespace

EigenDecomposition jacobi_eigensolver(const CMatrix& h, double threshold, int max_sweeps) {
  if (h.rows() != h.cols()) throw std::invalid_argument("matrix must be square");
  const Eigen::Index n = h.rows();
  CMatrix a = h;
  CMatrix v = CMatrix::Identity(n, n);
  const double scale = a.norm();
  EigenDecomposition out;
  int sweep = 0;
  if (scale > 0.0) {
    const double target = threshold * scale;
    while (off_diagonal_norm(a) > target) {
      if (sweep >= max_sweeps) {
        throw ConvergenceError("Jacobi eigensolver did not converge after " +
                                   std::to_string(sweep) + " sweeps",
                               sweep);
      }
      for (Eigen::Index p = 0; p < n - 1; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
      }
      ++sweep;
    }
  }
  out.sweeps = sweep;
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() < a(j, j).real();
  });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

HermitianOperator::HermitianOperator(const CMatrix& entries)
    : cache_(std::make_shared<Cache>()) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    throw std::invalid_argument("Hermitian operator must be a nonempty square matrix");
  }
  if (!entries.allFinite()) throw std::invalid_argument("non-finite matrix entry");
  const double defect = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (defect > kHermitianTolerance) {
    throw std::invalid_argument("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  m_ = 0.5 * (entries + entries.adjoint());
}

HermitianOperator::HermitianOperator(CMatrix entries, std::shared_ptr<Cache> cache)
    : m_(std::move(entries)), cache_(std::move(cache)) {}

HermitianOperator HermitianOperator::identity(int dim) {
  return HermitianOperator(CMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::diagonal(std::span<const double> diag) {
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(diag.size()),
                            static_cast<Eigen::Index>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag[i];
  }
  return HermitianOperator(m);
}

const EigenDecomposition& HermitianOperator::eigen() const {
  std::call_once(cache_->once, [this] { cache_->eig = jacobi_eigensolver(m_); });
  return cache_->eig;
}

HermitianOperator HermitianOperator::apply(const std::function<double(double)>& g) const {
  const auto& e = eigen();
  RVector mapped(e.values.size());
  for (Eigen::Index i = 0; i < e.values.size(); ++i) mapped[i] = g(e.values[i]);
  CMatrix out = e.vectors * mapped.asDiagonal() * e.vectors.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  auto cache = std::make_shared<Cache>();
  // The result is diagonal in the same basis; seed its cache directly.
  std::call_once(cache->once, [&] {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(mapped.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return mapped[i] < mapped[j]; });
    cache->eig.values.resize(mapped.size());
    cache->eig.vectors.resize(e.vectors.rows(), e.vectors.cols());
    for (Eigen::Index k = 0; k < mapped.size(); ++k) {
      cache->eig.values[k] = mapped[order[k]];
      cache->eig.vectors.col(k) = e.vectors.col(order[k]);
    }
  });
  return HermitianOperator(std::move(out), std::move(cache));
}

HermitianOperator HermitianOperator::shifted(double s) const {
  CMatrix out = m_;
  out.diagonal().array() -= s;
  if (!cache_) return HermitianOperator(out);
  const auto& e = eigen();
  auto cache = std::make_shared<Cache>();
  std::call_once(cache->once, [&] {
    cache->eig = e;
    cache->eig.values.array() -= s;
  });
  return HermitianOperator(std::move(out), std::move(cache));
}

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  return HermitianOperator(a.m_ + b.m_);
}

HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  return HermitianOperator(a.m_ - b.m_);
}

HermitianOperator operator*(double s, const HermitianOperator& a) {
  return HermitianOperator(s * a.m_);
}

}  // namespace berezin
