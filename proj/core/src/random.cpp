#include "sea/random.hpp"

#include <cmath>
#include <numbers>

namespace sea {

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

std::size_t uniform_index(Rng& rng, std::size_t n) {
  return n == 0 ? 0 : static_cast<std::size_t>(rng() % n);
}

double dyadic(Rng& rng, int bits) {
  const std::uint64_t denom = std::uint64_t{1} << bits;
  return std::ldexp(static_cast<double>(rng() % (denom + 1)), -bits);
}

Matrix random_unitary(std::size_t n, Rng& rng) {
  Matrix u = Matrix::identity(n);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (int pass = 0; pass < 3; ++pass) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double theta = uniform(rng, 0.0, two_pi);
        const Complex phase = std::polar(1.0, uniform(rng, 0.0, two_pi));
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // Right-multiply by the rotation acting on columns p, q.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex ukp = u(k, p);
          const Complex ukq = u(k, q);
          u(k, p) = c * ukp - s * std::conj(phase) * ukq;
          u(k, q) = s * phase * ukp + c * ukq;
        }
      }
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    const Complex phase = std::polar(1.0, uniform(rng, 0.0, two_pi));
    for (std::size_t k = 0; k < n; ++k) u(k, q) *= phase;
  }
  return u;
}

HermitianMatrix conjugate_diagonal(const Matrix& u, std::span<const double> d) {
  return HermitianMatrix(u * Matrix::diagonal(d) * u.adjoint());
}

Effect effect_with_spectrum(const Matrix& u, std::span<const double> eigenvalues,
                            const Tolerances& tol) {
  return Effect::validate(conjugate_diagonal(u, eigenvalues), tol);
}

Effect random_effect(std::size_t n, Rng& rng, const Tolerances& tol) {
  std::vector<double> d(n);
  for (auto& x : d) x = uniform01(rng);
  return effect_with_spectrum(random_unitary(n, rng), d, tol);
}

HermitianMatrix random_hermitian(std::size_t n, Rng& rng, double lo, double hi) {
  std::vector<double> d(n);
  for (auto& x : d) x = uniform(rng, lo, hi);
  return conjugate_diagonal(random_unitary(n, rng), d);
}

Projection random_projection(std::size_t n, std::size_t rank, Rng& rng) {
  std::vector<double> d(n, 0.0);
  for (std::size_t k = 0; k < rank && k < n; ++k) d[k] = 1.0;
  return Projection::trusted(conjugate_diagonal(random_unitary(n, rng), d));
}

Projection random_projection(std::size_t n, Rng& rng) {
  return random_projection(n, uniform_index(rng, n + 1), rng);
}

EffectPair random_commuting_pair(std::size_t n, Rng& rng, const Tolerances& tol) {
  std::vector<double> d1(n);
  std::vector<double> d2(n);
  for (auto& x : d1) x = uniform01(rng);
  for (auto& x : d2) x = uniform01(rng);
  const Matrix u = random_unitary(n, rng);
  return {effect_with_spectrum(u, d1, tol), effect_with_spectrum(u, d2, tol)};
}

EffectPair random_generic_pair(std::size_t n, Rng& rng, const Tolerances& tol) {
  Effect a = random_effect(n, rng, tol);
  Effect b = random_effect(n, rng, tol);
  return {std::move(a), std::move(b)};
}

}  // namespace sea
