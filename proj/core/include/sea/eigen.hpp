#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "sea/matrix.hpp"
#include "sea/tolerances.hpp"

namespace sea {

// A run of equal (within tolerance) eigenvalues: indices [begin, end).
struct EigenCluster {
  std::size_t begin = 0;
  std::size_t end = 0;
  double value = 0.0;  // mean of the member eigenvalues

  std::size_t size() const { return end - begin; }
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // unitary, column k belongs to eigenvalues[k]
  std::vector<EigenCluster> clusters;
  int sweeps = 0;

  std::size_t dim() const { return eigenvalues.size(); }

  // Q f(Lambda) Q*
  HermitianMatrix apply(const std::function<double(double)>& f) const;
  // Orthogonal projection onto the span of eigenvectors [begin, end).
  HermitianMatrix projection(std::size_t begin, std::size_t end) const;
  HermitianMatrix cluster_projection(const EigenCluster& c) const {
    return projection(c.begin, c.end);
  }
  // Sum of projections onto eigenvectors whose eigenvalue satisfies `keep`.
  HermitianMatrix projection_where(const std::function<bool(double)>& keep) const;
};

// Cyclic-by-row complex Jacobi. Iterates until the off-diagonal Frobenius
// norm is <= 1e-12 * ||A||_F; more than 30 sweeps throws ConvergenceError.
EigenDecomposition eigh(const HermitianMatrix& a, const Tolerances& tol = {});
// Same, for a general matrix; throws InputError unless it is Hermitian within tol.hermitian.
EigenDecomposition eigh(const Matrix& a, const Tolerances& tol = {});

// Groups ascending eigenvalues whose neighbours differ by <= tol * max(1, max|lambda|).
std::vector<EigenCluster> cluster_eigenvalues(const std::vector<double>& ascending, double tol);

double min_eigenvalue(const HermitianMatrix& a, const Tolerances& tol = {});
double max_eigenvalue(const HermitianMatrix& a, const Tolerances& tol = {});
// Spectral norm; for Hermitian matrices also the order-unit norm.
double spectral_norm(const HermitianMatrix& a, const Tolerances& tol = {});

}  // namespace sea
