#include "sea/matrix_ea.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sea/error.hpp"

namespace sea {
namespace {

// Eigenvalues this close to 0 or 1 are treated as exactly 0 or 1 before
// taking square roots; Jacobi noise is ~1e-16 * ||A||.
constexpr double kSnap = 1e-12;

std::string describe_eigenvalue(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

std::shared_ptr<const EigenDecomposition> clamped(EigenDecomposition d) {
  for (double& x : d.eigenvalues) {
    if (x < kSnap) x = 0.0;
    if (x > 1.0 - kSnap) x = 1.0;
  }
  for (auto& c : d.clusters) c.value = std::clamp(c.value, 0.0, 1.0);
  return std::make_shared<const EigenDecomposition>(std::move(d));
}

}  // namespace

Effect Effect::validate(const HermitianMatrix& a, const Tolerances& tol) {
  auto d = eigh(a, tol);
  for (double x : d.eigenvalues) {
    if (x < -tol.psd || x > 1.0 + tol.psd) {
      throw NotAnEffect("not an effect (lambda=" + describe_eigenvalue(x) + ")", x);
    }
  }
  return Effect(a, clamped(std::move(d)));
}

Effect Effect::complement(const Tolerances& tol) const {
  return Effect::validate(HermitianMatrix::identity(dim()) - m_, tol);
}

Projection Projection::validate(const HermitianMatrix& p, const Tolerances& tol) {
  const double defect = (p.matrix() * p.matrix() - p.matrix()).frobenius_norm();
  if (defect > tol.projection) {
    throw InputError("not a projection (||P^2 - P||_F = " + describe_eigenvalue(defect) + ")");
  }
  return Projection(p);
}

std::size_t Projection::rank() const {
  return static_cast<std::size_t>(std::llround(std::max(0.0, m_.trace())));
}

Projection Projection::complement() const {
  return Projection(HermitianMatrix::identity(dim()) - m_);
}

TraceState TraceState::validate(const HermitianMatrix& rho, const Tolerances& tol) {
  const double lo = min_eigenvalue(rho, tol);
  if (lo < -tol.psd) throw NotAnEffect("state is not positive semidefinite", lo);
  if (std::abs(rho.trace() - 1.0) > 1e-10) throw InputError("state trace must be 1");
  return TraceState(rho);
}

TraceState TraceState::pure(const std::vector<Complex>& psi) {
  double norm2 = 0.0;
  for (const auto& z : psi) norm2 += std::norm(z);
  if (norm2 == 0.0) throw InputError("pure state from the zero vector");
  const std::size_t n = psi.size();
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = psi[i] * std::conj(psi[j]) / norm2;
  }
  return TraceState(HermitianMatrix(m));
}

bool is_psd(const HermitianMatrix& a, const Tolerances& tol) {
  return min_eigenvalue(a, tol) >= -tol.psd;
}

bool leq(const HermitianMatrix& a, const HermitianMatrix& b, const Tolerances& tol) {
  require_same_dim(a, b);
  return is_psd(b - a, tol);
}

Effect sqrt_effect(const Effect& a, const Tolerances& tol) {
  return Effect::validate(a.decomposition().apply([](double x) { return std::sqrt(x); }), tol);
}

Effect seq_product(const Effect& a, const Effect& b, const Tolerances& tol) {
  require_same_dim(a.matrix(), b.matrix());
  const HermitianMatrix root = a.decomposition().apply([](double x) { return std::sqrt(x); });
  return Effect::validate(b.matrix().sandwich(root), tol);
}

HermitianMatrix compress(const Projection& p, const HermitianMatrix& v) {
  require_same_dim(p.matrix(), v);
  return v.sandwich(p.matrix());
}

Effect compression(const Projection& p, const Effect& a, const Tolerances& tol) {
  return Effect::validate(compress(p, a.matrix()), tol);
}

Projection rickart(const HermitianMatrix& v, const Tolerances& tol) {
  const auto d = eigh(v, tol);
  return Projection::trusted(d.projection_where([&](double x) { return std::abs(x) <= tol.kernel; }));
}

Projection projection_cover(const Effect& a, const Tolerances& tol) {
  return rickart(a.matrix(), tol).complement();
}

Projection floor(const Effect& a, const Tolerances& tol) {
  return rickart(a.matrix() - HermitianMatrix::identity(a.dim()), tol);
}

std::vector<Effect> floor_iterates(const Effect& a, int k, const Tolerances& tol) {
  if (k < 1) throw InputError("floor_iterates needs K >= 1");
  std::vector<Effect> out;
  out.reserve(static_cast<std::size_t>(k));
  out.push_back(a);
  for (int i = 1; i < k; ++i) out.push_back(seq_product(a, out.back(), tol));
  return out;
}

CommutationCheck commutation(const Effect& a, const Effect& b, const Tolerances& tol) {
  require_same_dim(a.matrix(), b.matrix());
  CommutationCheck c;
  c.product_residual = distance(seq_product(a, b, tol).matrix(), seq_product(b, a, tol).matrix());
  c.commutator_residual = commutator_norm(a.matrix().matrix(), b.matrix().matrix());
  c.via_product = c.product_residual <= tol.comm;
  c.via_commutator = c.commutator_residual <= tol.comm;
  return c;
}

bool commutes_seq(const Effect& a, const Effect& b, const Tolerances& tol) {
  return commutation(a, b, tol).via_product;
}

std::vector<Projection> bicommutant_projections(const Effect& a) {
  std::vector<Projection> out;
  const auto& d = a.decomposition();
  for (const auto& c : d.clusters) out.push_back(Projection::trusted(d.cluster_projection(c)));
  return out;
}

double state_eval(const TraceState& s, const Effect& a) {
  require_same_dim(s.rho(), a.matrix());
  return (s.rho().matrix() * a.matrix().matrix()).trace().real();
}

Effect meet_with_projection(const Projection& p, const Effect& a, const Tolerances& tol) {
  require_same_dim(p.matrix(), a.matrix());
  const Projection q = p.complement();
  const HermitianMatrix a11 = compress(p, a.matrix());
  const HermitianMatrix a22 = compress(q, a.matrix());
  const Matrix a12 = p.matrix().matrix() * a.matrix().matrix() * q.matrix().matrix();
  const HermitianMatrix a22_pinv =
      eigh(a22, tol).apply([&](double x) { return x > tol.kernel ? 1.0 / x : 0.0; });
  const Matrix correction = a12 * a22_pinv.matrix() * a12.adjoint();
  return Effect::validate(a11 - HermitianMatrix(correction), tol);
}

HermitianMatrix JointDiagonalization::apply(const std::vector<double>& values) const {
  const std::size_t n = vectors.dim();
  if (values.size() != n) throw InputError("joint basis value count mismatch");
  Matrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (values[k] == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = vectors(i, k) * values[k];
      for (std::size_t j = 0; j < n; ++j) m(i, j) += vik * std::conj(vectors(j, k));
    }
  }
  return HermitianMatrix(m);
}

JointDiagonalization joint_diagonalize(const HermitianMatrix& a, const HermitianMatrix& b,
                                       const Tolerances& tol) {
  require_same_dim(a, b);
  const double comm = commutator_norm(a.matrix(), b.matrix());
  if (comm > tol.comm) {
    throw NotApplicable("joint diagonalization of non-commuting pair (||ab - ba||_F = " +
                        describe_eigenvalue(comm) + ")");
  }
  const std::size_t n = a.dim();
  const auto da = eigh(a, tol);
  JointDiagonalization out;
  out.vectors = Matrix(n);
  out.first.resize(n);
  out.second.resize(n);
  for (const auto& c : da.clusters) {
    // Restrict b to the cluster's eigenspace and diagonalize there.
    const std::size_t k = c.size();
    Matrix block(k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t s = 0; s < k; ++s) {
        Complex z = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          const Complex vi = std::conj(da.eigenvectors(i, c.begin + r));
          for (std::size_t j = 0; j < n; ++j) z += vi * b(i, j) * da.eigenvectors(j, c.begin + s);
        }
        block(r, s) = z;
      }
    }
    const auto db = eigh(HermitianMatrix(block), tol);
    for (std::size_t s = 0; s < k; ++s) {
      const std::size_t col = c.begin + s;
      out.first[col] = c.value;
      out.second[col] = db.eigenvalues[s];
      for (std::size_t i = 0; i < n; ++i) {
        Complex z = 0.0;
        for (std::size_t r = 0; r < k; ++r) z += da.eigenvectors(i, c.begin + r) * db.eigenvectors(r, s);
        out.vectors(i, col) = z;
      }
    }
  }
  return out;
}

Effect commuting_meet(const Effect& a, const Effect& b, const Tolerances& tol) {
  const auto joint = joint_diagonalize(a.matrix(), b.matrix(), tol);
  std::vector<double> mins(joint.first.size());
  for (std::size_t k = 0; k < mins.size(); ++k) mins[k] = std::min(joint.first[k], joint.second[k]);
  return Effect::validate(joint.apply(mins), tol);
}

}  // namespace sea
