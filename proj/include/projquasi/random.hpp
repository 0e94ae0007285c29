#pragma once

#include <cstdint>
#include <random>

#include "projquasi/numcore.hpp"

namespace projquasi {

using Rng = std::mt19937_64;

Vector random_vector(Index n, Rng& rng);

/// Unit-norm random direction.
Vector random_unit_vector(Index n, Rng& rng);

Matrix random_matrix(Index rows, Index cols, Rng& rng);

Matrix random_symmetric(Index n, Rng& rng);

/// Random orthogonal matrix (Q factor of a Gaussian matrix).
Matrix random_orthogonal(Index n, Rng& rng);

/// SPD matrix with eigenvalues drawn uniformly from [lambda_min, lambda_max].
Matrix random_spd(Index n, Rng& rng, double lambda_min = 0.5, double lambda_max = 5.0);

}  // namespace projquasi
