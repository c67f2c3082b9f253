#include "sea/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sea/error.hpp"

namespace sea {
namespace {

constexpr int kMaxSweeps = 30;
constexpr double kOffDiagonalTarget = 1e-12;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// Zeroes a(p,q) with the unitary G = diag-phase * real rotation acting on
// columns p and q:
//   G_pp = c, G_pq = s, G_qp = -s e^{-i phi}, G_qq = c e^{-i phi}
// where a(p,q) = |a(p,q)| e^{i phi}.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = std::conj(apq) / mag;  // e^{-i phi}

  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * phase;
  const Complex gqq = c * phase;

  const std::size_t n = a.dim();
  // A <- A G
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  // A <- G* A
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  // V <- V G
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

std::vector<EigenCluster> cluster_eigenvalues(const std::vector<double>& ascending, double tol) {
  std::vector<EigenCluster> clusters;
  if (ascending.empty()) return clusters;
  double scale = 1.0;
  for (double x : ascending) scale = std::max(scale, std::abs(x));
  const double gap = tol * scale;
  std::size_t begin = 0;
  for (std::size_t k = 1; k <= ascending.size(); ++k) {
    if (k == ascending.size() || ascending[k] - ascending[k - 1] > gap) {
      const double sum = std::accumulate(ascending.begin() + begin, ascending.begin() + k, 0.0);
      clusters.push_back({begin, k, sum / static_cast<double>(k - begin)});
      begin = k;
    }
  }
  return clusters;
}

EigenDecomposition eigh(const HermitianMatrix& input, const Tolerances& tol) {
  const std::size_t n = input.dim();
  Matrix a = input.matrix();
  Matrix v = Matrix::identity(n);
  const double target = kOffDiagonalTarget * a.frobenius_norm();

  int sweeps = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweeps == kMaxSweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge in 30 sweeps (n = " +
                             std::to_string(n) + ")");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.sweeps = sweeps;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  out.clusters = cluster_eigenvalues(out.eigenvalues, tol.cluster);
  return out;
}

EigenDecomposition eigh(const Matrix& a, const Tolerances& tol) {
  return eigh(HermitianMatrix::checked(a, tol.hermitian), tol);
}

HermitianMatrix EigenDecomposition::apply(const std::function<double(double)>& f) const {
  const std::size_t n = dim();
  Matrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eigenvalues[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eigenvectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) m(i, j) += vik * std::conj(eigenvectors(j, k));
    }
  }
  return HermitianMatrix(m);
}

HermitianMatrix EigenDecomposition::projection(std::size_t begin, std::size_t end) const {
  const std::size_t n = dim();
  Matrix m(n);
  for (std::size_t k = begin; k < end; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eigenvectors(i, k);
      for (std::size_t j = 0; j < n; ++j) m(i, j) += vik * std::conj(eigenvectors(j, k));
    }
  }
  return HermitianMatrix(m);
}

HermitianMatrix EigenDecomposition::projection_where(const std::function<bool(double)>& keep) const {
  return apply([&](double x) { return keep(x) ? 1.0 : 0.0; });
}

double min_eigenvalue(const HermitianMatrix& a, const Tolerances& tol) {
  const auto d = eigh(a, tol);
  return d.eigenvalues.empty() ? 0.0 : d.eigenvalues.front();
}

double max_eigenvalue(const HermitianMatrix& a, const Tolerances& tol) {
  const auto d = eigh(a, tol);
  return d.eigenvalues.empty() ? 0.0 : d.eigenvalues.back();
}

double spectral_norm(const HermitianMatrix& a, const Tolerances& tol) {
  const auto d = eigh(a, tol);
  if (d.eigenvalues.empty()) return 0.0;
  return std::max(std::abs(d.eigenvalues.front()), std::abs(d.eigenvalues.back()));
}

}  // namespace sea
