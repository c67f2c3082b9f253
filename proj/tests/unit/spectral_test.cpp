#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "sea/eigen.hpp"
#include "sea/error.hpp"
#include "sea/matrix_context.hpp"
#include "sea/mv_ea.hpp"
#include "sea/spectral.hpp"
#include "test_support.hpp"

namespace sea {
namespace {

using test::diag;

// Everything a context needs except the Rickart map.
struct NoRickart {
  using Element = RealFunction;
  Element unit_like(const Element& v) const { return v; }
  Element zero_like(const Element& v) const { return v; }
  Element add(const Element& v, const Element&) const { return v; }
  Element scale(double, const Element& v) const { return v; }
  Element positive_part(const Element& v) const { return v; }
  std::vector<double> spectrum(const Element&) const { return {}; }
  Element compress(const Element& v, const Element&) const { return v; }
  Element product(const Element& v, const Element&) const { return v; }
  bool commute(const Element&, const Element&) const { return true; }
  bool leq(const Element&, const Element&) const { return true; }
  bool is_zero(const Element&) const { return true; }
  double norm(const Element&) const { return 0.0; }
  double distance(const Element&, const Element&) const { return 0.0; }
  std::size_t rank(const Element&) const { return 0; }
};

struct WithRickart : NoRickart {
  Element rickart(const Element& v) const { return v; }
};

static_assert(!SpectralContext<NoRickart>);
static_assert(SpectralContext<WithRickart>);

const MatrixContext kCtx;

double op_norm(const HermitianMatrix& a) { return spectral_norm(a); }

TEST(Spectral, FamilyOfDiagonal) {
  const auto f = spectral_family(kCtx, diag({0.2, 0.7}));
  ASSERT_EQ(f.breakpoints, (std::vector<double>{0.2, 0.7}));
  EXPECT_LT(f.at(0.1).frobenius_norm(), 1e-15);
  EXPECT_LT(distance(f.at(0.2), diag({1, 0})), 1e-15);
  EXPECT_LT(distance(f.at(0.69), diag({1, 0})), 1e-15);
  EXPECT_LT(distance(f.at(0.7), HermitianMatrix::identity(2)), 1e-15);
  EXPECT_LT(distance(f.at(5.0), HermitianMatrix::identity(2)), 1e-15);
  EXPECT_EQ(f.lower, 0.2);
  EXPECT_EQ(f.upper, 0.7);
}

TEST(Spectral, FamilyOfProjectionAndScalar) {
  const auto p = test::real2(0.5, 0.5, 0.5, 0.5);
  const auto f = spectral_family(kCtx, p);
  ASSERT_EQ(f.breakpoints.size(), 2U);
  EXPECT_NEAR(f.breakpoints[0], 0.0, 1e-14);
  EXPECT_NEAR(f.breakpoints[1], 1.0, 1e-14);
  EXPECT_LT(distance(f.at(0.5), HermitianMatrix::identity(2) - p), 1e-14);
  EXPECT_LT(distance(f.at(1.0 + 1e-12), HermitianMatrix::identity(2)), 1e-14);

  const auto s = spectral_family(kCtx, HermitianMatrix::scalar(3, 0.4));
  ASSERT_EQ(s.breakpoints.size(), 1U);
  EXPECT_NEAR(s.breakpoints[0], 0.4, 1e-15);
  EXPECT_LT(s.at(0.39).frobenius_norm(), 1e-15);
  EXPECT_LT(distance(s.at(s.breakpoints[0]), HermitianMatrix::identity(3)), 1e-15);
  const auto b = spectral_bounds(kCtx, HermitianMatrix::scalar(3, 0.4));
  EXPECT_NEAR(b.lower, 0.4, 1e-15);
  EXPECT_NEAR(b.upper, 0.4, 1e-15);
}

TEST(Spectral, Eigenprojection) {
  const auto a = diag({0.2, 0.2, 0.9});
  EXPECT_LT(distance(eigenprojection(kCtx, a, 0.2), diag({1, 1, 0})), 1e-15);
  EXPECT_LT(eigenprojection(kCtx, a, 0.5).frobenius_norm(), 1e-15);
  // p_alpha - d_alpha is the previous step.
  const auto f = spectral_family(kCtx, a);
  for (std::size_t k = 0; k < f.breakpoints.size(); ++k) {
    const auto jump = f.projections[k + 1] - eigenprojection(kCtx, a, f.breakpoints[k]);
    EXPECT_LT(distance(jump, f.projections[k]), 1e-14);
  }
}

TEST(Spectral, Bounds) {
  const auto b = spectral_bounds(kCtx, diag({0.2, 0.7}));
  EXPECT_EQ(b.lower, 0.2);
  EXPECT_EQ(b.upper, 0.7);
  const auto p = test::real2(0.5, 0.5, 0.5, 0.5);
  const auto bp = bounds_from_family(kCtx, spectral_family(kCtx, p));
  EXPECT_NEAR(bp.lower, 0.0, 1e-14);
  EXPECT_NEAR(bp.upper, 1.0, 1e-14);
}

TEST(Spectral, Reconstruction) {
  const auto a = diag({0.2, 0.7});
  const auto f = spectral_family(kCtx, a);
  EXPECT_LT(distance(reconstruct_at_breakpoints(kCtx, f), a), 1e-15);
  EXPECT_LE(op_norm(a - reconstruct(kCtx, f, 0.05)), 0.05);
  const auto s = HermitianMatrix::scalar(2, 0.33);
  for (double mesh : {0.3, 0.01}) {
    EXPECT_LE(op_norm(s - reconstruct(kCtx, spectral_family(kCtx, s), mesh)), mesh);
  }
  EXPECT_THROW(reconstruct(kCtx, f, 0.0), InputError);
}

TEST(Spectral, SimpleApproximation) {
  const auto a = diag({0.2, 0.7});
  EXPECT_LT(distance(simple_approximation(kCtx, a, 1).element, diag({0.0, 0.5})), 1e-15);
  EXPECT_LT(distance(simple_approximation(kCtx, a, 3).element, diag({0.125, 0.625})), 1e-15);
  const auto d = diag({0.25, 0.75, 0.5});
  EXPECT_LT(distance(simple_approximation(kCtx, d, 4).element, d), 1e-15);
  EXPECT_THROW(simple_approximation(kCtx, a, 0), InputError);
}

TEST(Spectral, OrthogonalDecomposition) {
  const auto dec = orthogonal_decomposition(kCtx, diag({0.3, -0.4}));
  EXPECT_LT(distance(dec.plus, diag({0.3, 0.0})), 1e-15);
  EXPECT_LT(distance(dec.minus, diag({0.0, 0.4})), 1e-15);
  EXPECT_LT(distance(dec.projection, diag({1, 0})), 1e-15);

  const auto v = diag({0.5, 0.0, 0.2});
  const auto pos = orthogonal_decomposition(kCtx, v);
  EXPECT_LT(distance(pos.plus, v), 1e-15);
  EXPECT_LT(pos.minus.frobenius_norm(), 1e-15);
  EXPECT_TRUE(in_comparability_set(kCtx, v, pos.projection));

  const auto neg = orthogonal_decomposition(kCtx, -v);
  EXPECT_LT(neg.plus.frobenius_norm(), 1e-15);
  EXPECT_LT(distance(neg.minus, v), 1e-15);
  EXPECT_TRUE(in_comparability_set(kCtx, -v, neg.projection));
}

TEST(Spectral, ComparabilityWitness) {
  const auto e = diag({0.3, 0.6});
  const auto f = diag({0.5, 0.4});
  const auto w = comparability_witness(kCtx, e, f);
  ASSERT_TRUE(w.has_value());
  EXPECT_LT(distance(w->projection, diag({1, 0})), 1e-15);
  EXPECT_FALSE(w->degenerate);

  const auto le = comparability_witness(kCtx, diag({0.1, 0.2}), diag({0.3, 0.2}));
  ASSERT_TRUE(le.has_value());
  EXPECT_LT(distance(le->projection, HermitianMatrix::identity(2)), 1e-15);

  const auto same = comparability_witness(kCtx, e, e);
  ASSERT_TRUE(same.has_value());
  EXPECT_LT(distance(same->projection, HermitianMatrix::identity(2)), 1e-15);
  EXPECT_TRUE(is_comparability_witness(kCtx, e, e, HermitianMatrix::zero(2)));

  EXPECT_THROW(comparability_witness(kCtx, diag({1, 0}), test::real2(0.5, 0.3, 0.3, 0.5)), NotApplicable);
}

TEST(Spectral, ReducedRepresentation) {
  const auto r = reduced_representation(kCtx, diag({0.2, 0.2, 0.9}));
  EXPECT_EQ(r.coefficients, (std::vector<double>{0.2, 0.9}));
  ASSERT_EQ(r.projections.size(), 2U);
  EXPECT_LT(distance(r.projections[0], diag({1, 1, 0})), 1e-15);
  EXPECT_LT(distance(r.projections[1], diag({0, 0, 1})), 1e-15);

  const auto s = reduced_representation(kCtx, HermitianMatrix::scalar(2, 0.6));
  ASSERT_EQ(s.projections.size(), 1U);
  EXPECT_LT(distance(s.projections[0], HermitianMatrix::identity(2)), 1e-15);

  const auto p = test::real2(0.5, 0.5, 0.5, 0.5);
  const auto rp = reduced_representation(kCtx, p);
  ASSERT_EQ(rp.projections.size(), 2U);
  EXPECT_LT(distance(rp.projections[0], HermitianMatrix::identity(2) - p), 1e-14);
  EXPECT_LT(distance(rp.projections[1], p), 1e-14);
}

// p_i = prod_{j != i} (a - mu_j) / (mu_i - mu_j), built with plain matrix products.
std::vector<HermitianMatrix> lagrange_projections(const HermitianMatrix& a, const std::vector<double>& mu) {
  std::vector<HermitianMatrix> out;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    Matrix acc = Matrix::identity(n);
    for (std::size_t j = 0; j < mu.size(); ++j) {
      if (j == i) continue;
      acc = acc * ((a.matrix() - mu[j] * Matrix::identity(n)) * (1.0 / (mu[i] - mu[j])));
    }
    out.emplace_back(acc);
  }
  return out;
}

TEST(Spectral, LagrangeInterpolation) {
  const auto a = diag({0.2, 0.9});
  const auto r = reduced_representation(kCtx, a);
  const auto lp = lagrange_projections(a, r.coefficients);
  for (std::size_t i = 0; i < lp.size(); ++i) EXPECT_LT(distance(lp[i], r.projections[i]), 1e-8);

  auto g = test::make_rng(5);
  const auto u = test::oracle_unitary(4, g);
  const auto b = test::with_spectrum(u, {0.1, 0.5, 0.5, 0.8});
  const auto rb = reduced_representation(kCtx, b);
  ASSERT_EQ(rb.coefficients.size(), 3U);
  const auto lb = lagrange_projections(b, rb.coefficients);
  for (std::size_t i = 0; i < lb.size(); ++i) EXPECT_LT(distance(lb[i], rb.projections[i]), 1e-8);

  const auto c = reduced_representation(kCtx, HermitianMatrix::scalar(3, 0.3));
  ASSERT_EQ(c.projections.size(), 1U);
  EXPECT_LT(distance(lagrange_projections(HermitianMatrix::scalar(3, 0.3), c.coefficients)[0], c.projections[0]),
            1e-15);
}

TEST(Spectral, FunctionContextFamily) {
  const FunctionContext ctx;
  const RealFunction v({-0.5, 0.25, 0.25, 1.0});
  const auto f = spectral_family(ctx, v);
  EXPECT_EQ(f.breakpoints, (std::vector<double>{-0.5, 0.25, 1.0}));
  EXPECT_EQ(reconstruct_at_breakpoints(ctx, f), v);
  const auto dec = orthogonal_decomposition(ctx, v);
  EXPECT_EQ(dec.plus.values(), (std::vector<double>{0.0, 0.25, 0.25, 1.0}));
  EXPECT_EQ(dec.minus.values(), (std::vector<double>{0.5, 0.0, 0.0, 0.0}));
}

// Property: families are monotone, right-continuous step functions that
// reconstruct a within mesh and exactly at breakpoints.
TEST(SpectralProperty, FamiliesReconstruct) {
  auto g = test::make_rng(31);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int s = 0; s < 15; ++s) {
      const auto a = test::with_spectrum(test::oracle_unitary(n, g), test::unit_values(n, g));
      const auto f = spectral_family(kCtx, a);
      const auto ref = test::oracle_eigenvalues(a);
      EXPECT_NEAR(f.lower, ref.front(), 1e-10);
      EXPECT_NEAR(f.upper, ref.back(), 1e-10);
      for (std::size_t k = 1; k < f.projections.size(); ++k) {
        EXPECT_GE(test::oracle_min_eig(f.projections[k] - f.projections[k - 1]), -1e-9);
      }
      // rank of p_lambda = #eigenvalues <= lambda
      for (std::size_t k = 0; k < f.breakpoints.size(); ++k) {
        std::size_t count = 0;
        for (double x : ref) count += x <= f.breakpoints[k] + 1e-8 ? 1 : 0;
        EXPECT_EQ(kCtx.rank(f.projections[k + 1]), count);
      }
      for (double mesh : {0.1, 0.01, 0.001}) {
        EXPECT_LE(op_norm(a - reconstruct(kCtx, f, mesh)), mesh * (1.0 + 1e-12));
      }
      EXPECT_LT(distance(a, reconstruct_at_breakpoints(kCtx, f)), 1e-9);
    }
  }
}

// Property: dyadic approximations ascend, stay below a, and converge at rate
// 2^-n; the coefficients are the dyadic floors of the Eigen eigenvalues.
TEST(SpectralProperty, SimpleApproximationsAscend) {
  auto g = test::make_rng(32);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int s = 0; s < 15; ++s) {
      const auto a = test::with_spectrum(test::oracle_unitary(n, g), test::unit_values(n, g));
      HermitianMatrix prev = HermitianMatrix::zero(n);
      for (int k = 1; k <= 10; ++k) {
        const auto ap = simple_approximation(kCtx, a, k);
        EXPECT_LE(op_norm(a - ap.element), std::ldexp(1.0, -k) + 1e-10);
        EXPECT_GE(test::oracle_min_eig(ap.element - prev), -1e-9);
        EXPECT_GE(test::oracle_min_eig(a - ap.element), -1e-9);
        for (double c : ap.coefficients) EXPECT_EQ(c, std::ldexp(std::floor(std::ldexp(c, k)), -k));
        prev = ap.element;
      }
    }
  }
}

// Property: every eigenprojection sub-sum in P_+-(v) gives the same (v+, v-),
// and v+ - v- = v with v+ v- = 0.
TEST(SpectralProperty, DecompositionUnique) {
  auto g = test::make_rng(33);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int s = 0; s < 15; ++s) {
      auto vals = test::unit_values(n, g);
      for (auto& x : vals) x = 2.0 * x - 1.0;
      if (s % 3 == 0) vals[0] = 0.0;
      const auto v = test::with_spectrum(test::oracle_unitary(n, g), vals);
      const auto dec = orthogonal_decomposition(kCtx, v);
      EXPECT_LT(distance(v, dec.plus - dec.minus), 1e-10);
      EXPECT_LT(HermitianMatrix(dec.plus.matrix() * dec.minus.matrix()).frobenius_norm(), 1e-10);
      EXPECT_GE(test::oracle_min_eig(dec.plus), -1e-9);
      EXPECT_GE(test::oracle_min_eig(dec.minus), -1e-9);
      const auto r = reduced_representation(kCtx, v);
      const std::size_t k = r.projections.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        HermitianMatrix q = HermitianMatrix::zero(n);
        for (std::size_t i = 0; i < k; ++i)
          if ((mask >> i) & 1U) q += r.projections[i];
        if (!in_comparability_set(kCtx, v, q)) continue;
        const auto other = decomposition_with(kCtx, v, q);
        EXPECT_LT(distance(other.plus, dec.plus), 1e-8);
        EXPECT_LT(distance(other.minus, dec.minus), 1e-8);
      }
    }
  }
}

// Property: for commuting pairs the witness satisfies both compressed
// inequalities; checked against Eigen directly.
TEST(SpectralProperty, ComparabilityOnCommutingPairs) {
  auto g = test::make_rng(34);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int s = 0; s < 20; ++s) {
      const auto u = test::oracle_unitary(n, g);
      const auto e = test::with_spectrum(u, test::unit_values(n, g));
      const auto f = test::with_spectrum(u, test::unit_values(n, g));
      const auto w = comparability_witness(kCtx, e, f);
      ASSERT_TRUE(w.has_value());
      const auto p = w->projection;
      const auto q = HermitianMatrix::identity(n) - p;
      EXPECT_GE(test::oracle_min_eig(f.sandwich(p) - e.sandwich(p)), -1e-9);
      EXPECT_GE(test::oracle_min_eig(e.sandwich(q) - f.sandwich(q)), -1e-9);
    }
  }
}

}  // namespace
}  // namespace sea
