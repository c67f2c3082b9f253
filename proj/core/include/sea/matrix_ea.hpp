#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "sea/eigen.hpp"
#include "sea/matrix.hpp"
#include "sea/tolerances.hpp"

namespace sea {

// Hermitian A with 0 <= A <= I. Carries its eigendecomposition, with
// eigenvalues clamped to [0, 1].
class Effect {
 public:
  // Throws NotAnEffect carrying the first eigenvalue outside
  // [-tol.psd, 1 + tol.psd].
  static Effect validate(const HermitianMatrix& a, const Tolerances& tol = {});

  std::size_t dim() const { return m_.dim(); }
  const HermitianMatrix& matrix() const { return m_; }
  const EigenDecomposition& decomposition() const { return *dec_; }

  Effect complement(const Tolerances& tol = {}) const;

 private:
  Effect(HermitianMatrix m, std::shared_ptr<const EigenDecomposition> dec)
      : m_(std::move(m)), dec_(std::move(dec)) {}

  HermitianMatrix m_;
  std::shared_ptr<const EigenDecomposition> dec_;
};

// Orthogonal projection: Hermitian with ||P^2 - P||_F <= tol.projection.
class Projection {
 public:
  static Projection validate(const HermitianMatrix& p, const Tolerances& tol = {});
  // Caller guarantees idempotence (e.g. built from orthonormal eigenvectors).
  static Projection trusted(HermitianMatrix p) { return Projection(std::move(p)); }

  static Projection zero(std::size_t n) { return Projection(HermitianMatrix::zero(n)); }
  static Projection identity(std::size_t n) { return Projection(HermitianMatrix::identity(n)); }

  std::size_t dim() const { return m_.dim(); }
  const HermitianMatrix& matrix() const { return m_; }
  std::size_t rank() const;
  Projection complement() const;
  Effect as_effect(const Tolerances& tol = {}) const { return Effect::validate(m_, tol); }

 private:
  explicit Projection(HermitianMatrix m) : m_(std::move(m)) {}

  HermitianMatrix m_;
};

// Density matrix: PSD with unit trace.
class TraceState {
 public:
  static TraceState validate(const HermitianMatrix& rho, const Tolerances& tol = {});
  // |psi><psi| / <psi|psi>
  static TraceState pure(const std::vector<Complex>& psi);

  std::size_t dim() const { return rho_.dim(); }
  const HermitianMatrix& rho() const { return rho_; }

 private:
  explicit TraceState(HermitianMatrix rho) : rho_(std::move(rho)) {}

  HermitianMatrix rho_;
};

bool is_psd(const HermitianMatrix& a, const Tolerances& tol = {});
// a <= b in the operator order: min eigenvalue of b - a >= -tol.psd.
bool leq(const HermitianMatrix& a, const HermitianMatrix& b, const Tolerances& tol = {});

Effect sqrt_effect(const Effect& a, const Tolerances& tol = {});

// a^{1/2} b a^{1/2}
Effect seq_product(const Effect& a, const Effect& b, const Tolerances& tol = {});

// p v p; defined for any Hermitian v (the linear extension of J_p).
HermitianMatrix compress(const Projection& p, const HermitianMatrix& v);
Effect compression(const Projection& p, const Effect& a, const Tolerances& tol = {});

// Projection onto the eigenvectors of v with |lambda| <= tol.kernel.
Projection rickart(const HermitianMatrix& v, const Tolerances& tol = {});
// Support projection (a^*)^perp.
Projection projection_cover(const Effect& a, const Tolerances& tol = {});
// rickart(a - I): the largest projection below a.
Projection floor(const Effect& a, const Tolerances& tol = {});
// a, a o a, ..., a^K
std::vector<Effect> floor_iterates(const Effect& a, int k, const Tolerances& tol = {});

struct CommutationCheck {
  double product_residual = 0.0;      // ||a o b - b o a||_F
  double commutator_residual = 0.0;   // ||ab - ba||_F
  bool via_product = false;
  bool via_commutator = false;

  bool agree() const { return via_product == via_commutator; }
};

CommutationCheck commutation(const Effect& a, const Effect& b, const Tolerances& tol = {});
// a|b, decided by a o b = b o a. commutation() also reports the ab = ba test.
bool commutes_seq(const Effect& a, const Effect& b, const Tolerances& tol = {});

// Eigenprojections of a, one per eigenvalue cluster, ascending by eigenvalue.
// P(a) is the set of their sub-sums.
std::vector<Projection> bicommutant_projections(const Effect& a);

double state_eval(const TraceState& s, const Effect& a);

// Greatest lower bound p /\ a for a projection p and effect a: the shorted
// operator of a to ran(p), A11 - A12 A22^+ A21 in the p / p^perp blocks.
Effect meet_with_projection(const Projection& p, const Effect& a, const Tolerances& tol = {});

// Common eigenbasis of commuting a, b: column k of `vectors` has eigenvalue
// first[k] for a and second[k] for b.
struct JointDiagonalization {
  Matrix vectors;
  std::vector<double> first;
  std::vector<double> second;

  HermitianMatrix apply(const std::vector<double>& values) const;
};

// Throws NotApplicable when ||ab - ba||_F > tol.comm.
JointDiagonalization joint_diagonalize(const HermitianMatrix& a, const HermitianMatrix& b,
                                       const Tolerances& tol = {});

// Pointwise min in a joint eigenbasis of commuting a, b. When one of them is a
// projection this is their meet in E(H).
Effect commuting_meet(const Effect& a, const Effect& b, const Tolerances& tol = {});

}  // namespace sea
