#include "berezin/random.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/QR>

namespace berezin {

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  std::uint64_t z = root + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

CMatrix random_complex_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  return g;
}

HermitianOperator random_psd(int dim, Rng& rng, double max_eigenvalue) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  const CMatrix g = random_complex_gaussian(dim, dim, rng);
  CMatrix a = g.adjoint() * g;
  a.diagonal().array() += 1e-6;
  a = 0.5 * (a + a.adjoint()).eval();
  const HermitianOperator raw(a);
  return (max_eigenvalue / raw.max_eigenvalue()) * raw;
}

HermitianOperator random_diagonal_psd(int dim, Rng& rng, double max_eigenvalue) {
  std::vector<double> d(static_cast<std::size_t>(dim));
  for (auto& x : d) x = uniform_real(rng, 0.0, max_eigenvalue);
  return HermitianOperator::diagonal(d);
}

CMatrix random_isometry(int dim, int cols, Rng& rng) {
  if (cols < 1 || cols > dim) throw std::invalid_argument("isometry needs 1 <= cols <= dim");
  const CMatrix g = random_complex_gaussian(dim, dim, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  const CMatrix q = qr.householderQ() * CMatrix::Identity(dim, cols);
  return q;
}

std::vector<std::vector<int>> random_partition(int dim, Rng& rng) {
  std::vector<std::vector<int>> blocks;
  int next = 0;
  while (next < dim) {
    const int size = uniform_int(rng, 1, dim - next);
    std::vector<int> block;
    for (int k = 0; k < size; ++k) block.push_back(next++);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace berezin
