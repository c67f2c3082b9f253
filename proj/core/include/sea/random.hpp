#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sea/matrix.hpp"
#include "sea/matrix_ea.hpp"

namespace sea {

// All sampling is driven by a seeded 64-bit Mersenne twister; the helpers
// below avoid std distributions so that streams are identical across
// standard libraries.
using Rng = std::mt19937_64;

// Uniform in [0, 1).
double uniform01(Rng& rng);
double uniform(Rng& rng, double lo, double hi);
// Uniform in {0, ..., n-1}.
std::size_t uniform_index(Rng& rng, std::size_t n);
// k / 2^bits for k uniform in {0, ..., 2^bits}.
double dyadic(Rng& rng, int bits);

// Random unitary: three passes of complex Jacobi rotations with random angles
// and phases over all index pairs, then random diagonal phases.
Matrix random_unitary(std::size_t n, Rng& rng);

// U diag(d) U*
HermitianMatrix conjugate_diagonal(const Matrix& u, std::span<const double> d);

// Eigenvalues uniform in [0, 1], random eigenbasis.
Effect random_effect(std::size_t n, Rng& rng, const Tolerances& tol = {});
Effect effect_with_spectrum(const Matrix& u, std::span<const double> eigenvalues,
                            const Tolerances& tol = {});
// Eigenvalues uniform in [lo, hi].
HermitianMatrix random_hermitian(std::size_t n, Rng& rng, double lo = -1.0, double hi = 1.0);
Projection random_projection(std::size_t n, std::size_t rank, Rng& rng);
// Rank uniform in {0, ..., n}.
Projection random_projection(std::size_t n, Rng& rng);

struct EffectPair {
  Effect first;
  Effect second;
};

// Two random diagonal effects conjugated by one shared unitary.
EffectPair random_commuting_pair(std::size_t n, Rng& rng, const Tolerances& tol = {});
// Independent unitaries.
EffectPair random_generic_pair(std::size_t n, Rng& rng, const Tolerances& tol = {});

}  // namespace sea
