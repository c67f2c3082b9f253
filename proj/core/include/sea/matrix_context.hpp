#pragma once

#include <vector>

#include "sea/matrix.hpp"
#include "sea/matrix_ea.hpp"
#include "sea/spectral.hpp"
#include "sea/tolerances.hpp"

namespace sea {

// Self-adjoint matrices as a spectral order unit space: Rickart map = kernel
// projection, J_p(v) = pvp.
class MatrixContext {
 public:
  using Element = HermitianMatrix;

  MatrixContext() = default;
  explicit MatrixContext(Tolerances tol) : tol_(tol) {}

  const Tolerances& tolerances() const { return tol_; }

  Element unit_like(const Element& v) const { return HermitianMatrix::identity(v.dim()); }
  Element zero_like(const Element& v) const { return HermitianMatrix::zero(v.dim()); }
  Element add(const Element& v, const Element& w) const { return v + w; }
  Element scale(double s, const Element& v) const { return s * v; }
  Element positive_part(const Element& v) const;
  Element rickart(const Element& v) const { return sea::rickart(v, tol_).matrix(); }
  // Eigenvalue cluster values, ascending.
  std::vector<double> spectrum(const Element& v) const;
  Element compress(const Element& p, const Element& v) const { return v.sandwich(p); }
  // Hermitian part of pq (equal to pq when p and q commute).
  Element product(const Element& p, const Element& q) const;
  bool commute(const Element& v, const Element& w) const;
  bool leq(const Element& v, const Element& w) const { return sea::leq(v, w, tol_); }
  bool is_zero(const Element& v) const { return v.frobenius_norm() <= tol_.projection; }
  double norm(const Element& v) const { return spectral_norm(v, tol_); }
  // ||v - w||_F / dim
  double distance(const Element& v, const Element& w) const;
  std::size_t rank(const Element& p) const;

 private:
  Tolerances tol_;
};

static_assert(SpectralContext<MatrixContext>);

}  // namespace sea
