#pragma once

// Seeded generators for the randomized harnesses.

#include <cstdint>
#include <random>
#include <vector>

#include "berezin/hermitian.hpp"
#include "berezin/types.hpp"

namespace berezin {

using Rng = std::mt19937_64;

// splitmix64 of root + index; per-trial seeds independent of scheduling.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

CMatrix random_complex_gaussian(int rows, int cols, Rng& rng);

/// G*G + 1e-6 I, rescaled so the largest eigenvalue equals max_eigenvalue.
HermitianOperator random_psd(int dim, Rng& rng, double max_eigenvalue = 10.0);

/// Diagonal PSD with entries uniform in [0, max_eigenvalue].
HermitianOperator random_diagonal_psd(int dim, Rng& rng, double max_eigenvalue = 10.0);

/// dim x cols matrix with orthonormal columns.
CMatrix random_isometry(int dim, int cols, Rng& rng);

/// Partition of {0, ..., dim-1} into consecutive blocks of random sizes.
std::vector<std::vector<int>> random_partition(int dim, Rng& rng);

int uniform_int(Rng& rng, int lo, int hi);
double uniform_real(Rng& rng, double lo, double hi);

}  // namespace berezin
