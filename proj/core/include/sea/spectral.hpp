#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <vector>

#include "sea/error.hpp"

namespace sea {

// A model exposing the operations the spectral machinery needs. Projections
// are represented as ordinary elements.
//
//   spectrum(v)      distinct spectral values (eigenvalue clusters), ascending
//   positive_part(v) v_+
//   rickart(v)       v^*, the largest projection p commuting with v and p v p = 0
//   compress(p, v)   J_p(v)
//   product(p, q)    p o q for commuting p, q
//   norm(v)          order-unit norm
//   distance(v, w)   residual metric used by the verifier
template <class C>
concept SpectralContext =
    requires(const C& ctx, const typename C::Element& v, const typename C::Element& w, double s) {
      typename C::Element;
      { ctx.unit_like(v) } -> std::same_as<typename C::Element>;
      { ctx.zero_like(v) } -> std::same_as<typename C::Element>;
      { ctx.add(v, w) } -> std::same_as<typename C::Element>;
      { ctx.scale(s, v) } -> std::same_as<typename C::Element>;
      { ctx.positive_part(v) } -> std::same_as<typename C::Element>;
      { ctx.rickart(v) } -> std::same_as<typename C::Element>;
      { ctx.spectrum(v) } -> std::same_as<std::vector<double>>;
      { ctx.compress(v, w) } -> std::same_as<typename C::Element>;
      { ctx.product(v, w) } -> std::same_as<typename C::Element>;
      { ctx.commute(v, w) } -> std::same_as<bool>;
      { ctx.leq(v, w) } -> std::same_as<bool>;
      { ctx.is_zero(v) } -> std::same_as<bool>;
      { ctx.norm(v) } -> std::same_as<double>;
      { ctx.distance(v, w) } -> std::same_as<double>;
      { ctx.rank(v) } -> std::same_as<std::size_t>;
    };

// Right-continuous step function lambda -> p_lambda.
//
// projections[k] is p_lambda for lambda in [breakpoints[k-1], breakpoints[k]),
// with projections[0] = 0 below the first breakpoint and projections.back()
// = 1 from the last one on.
template <class E>
struct SpectralFamily {
  std::vector<double> breakpoints;
  std::vector<E> projections;
  double lower = 0.0;  // L_v
  double upper = 0.0;  // U_v

  std::size_t step_index(double lambda) const {
    return static_cast<std::size_t>(
        std::upper_bound(breakpoints.begin(), breakpoints.end(), lambda) - breakpoints.begin());
  }
  const E& at(double lambda) const { return projections[step_index(lambda)]; }
};

struct SpectralBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// mu_1 < ... < mu_n with pairwise orthogonal projections summing to 1.
template <class E>
struct ReducedRepresentation {
  std::vector<double> coefficients;
  std::vector<E> projections;
};

template <class E>
struct OrthogonalDecomposition {
  E plus;
  E minus;
  E projection;
};

template <class E>
struct ComparabilityWitness {
  E projection;
  // Some joint block r = p_i o q_j has rank > 1; the bicommutant may then be
  // larger than the sub-sums of joint blocks.
  bool degenerate = false;
};

template <class E>
struct SimpleApproximation {
  std::vector<double> coefficients;
  std::vector<E> projections;
  E element;
};

namespace spectral_detail {

template <SpectralContext C>
typename C::Element sub(const C& ctx, const typename C::Element& v, const typename C::Element& w) {
  return ctx.add(v, ctx.scale(-1.0, w));
}

template <SpectralContext C>
typename C::Element shift(const C& ctx, const typename C::Element& v, double lambda) {
  return ctx.add(v, ctx.scale(-lambda, ctx.unit_like(v)));
}

template <SpectralContext C>
typename C::Element complement(const C& ctx, const typename C::Element& p) {
  return sub(ctx, ctx.unit_like(p), p);
}

}  // namespace spectral_detail

// p_{v,lambda} = ((v - lambda)_+)^* at each spectral value.
template <SpectralContext C>
SpectralFamily<typename C::Element> spectral_family(const C& ctx, const typename C::Element& v) {
  SpectralFamily<typename C::Element> f;
  f.breakpoints = ctx.spectrum(v);
  if (f.breakpoints.empty()) throw InputError("spectral family of an empty element");
  f.projections.reserve(f.breakpoints.size() + 1);
  f.projections.push_back(ctx.zero_like(v));
  for (double lambda : f.breakpoints) {
    f.projections.push_back(ctx.rickart(ctx.positive_part(spectral_detail::shift(ctx, v, lambda))));
  }
  f.lower = f.breakpoints.front();
  f.upper = f.breakpoints.back();
  return f;
}

// d_{v,lambda} = (v - lambda)^*; nonzero exactly at eigenvalues.
template <SpectralContext C>
typename C::Element eigenprojection(const C& ctx, const typename C::Element& v, double lambda) {
  return ctx.rickart(spectral_detail::shift(ctx, v, lambda));
}

template <SpectralContext C>
SpectralBounds spectral_bounds(const C& ctx, const typename C::Element& v) {
  const auto s = ctx.spectrum(v);
  if (s.empty()) throw InputError("spectral bounds of an empty element");
  return {s.front(), s.back()};
}

// L = sup{lambda : p_lambda = 0}, U = inf{lambda : p_lambda = 1}, read off the
// step representation.
template <SpectralContext C>
SpectralBounds bounds_from_family(const C& ctx, const SpectralFamily<typename C::Element>& f) {
  SpectralBounds b{f.breakpoints.front(), f.breakpoints.back()};
  for (std::size_t k = 0; k < f.breakpoints.size(); ++k) {
    if (!ctx.is_zero(f.projections[k + 1])) {
      b.lower = f.breakpoints[k];
      break;
    }
  }
  const auto unit = ctx.unit_like(f.projections.back());
  for (std::size_t k = 0; k < f.breakpoints.size(); ++k) {
    if (ctx.is_zero(spectral_detail::sub(ctx, unit, f.projections[k + 1]))) {
      b.upper = f.breakpoints[k];
      break;
    }
  }
  return b;
}

// Riemann-Stieltjes sum sum_i t_i (p_{t_i} - p_{t_{i-1}}) over the given
// ascending partition, tagged at right endpoints.
template <SpectralContext C>
typename C::Element stieltjes_sum(const C& ctx, const SpectralFamily<typename C::Element>& f,
                                  const std::vector<double>& points) {
  auto acc = ctx.zero_like(f.projections.front());
  if (points.empty()) return acc;
  std::size_t prev = f.step_index(points.front());
  for (std::size_t i = 1; i < points.size(); ++i) {
    const std::size_t cur = f.step_index(points[i]);
    if (cur != prev) {
      acc = ctx.add(acc, ctx.scale(points[i], spectral_detail::sub(ctx, f.projections[cur],
                                                                   f.projections[prev])));
      prev = cur;
    }
  }
  return acc;
}

// Uniform partition of [L - mesh, U] with width <= mesh; ||v - result|| <= mesh.
template <SpectralContext C>
typename C::Element reconstruct(const C& ctx, const SpectralFamily<typename C::Element>& f,
                                double mesh) {
  if (!(mesh > 0.0)) throw InputError("reconstruct needs mesh > 0");
  const double start = f.lower - mesh;
  const double length = f.upper - start;
  const auto intervals = static_cast<std::size_t>(std::ceil(length / mesh));
  std::vector<double> points(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    points[i] = start + length * static_cast<double>(i) / static_cast<double>(intervals);
  }
  points.back() = f.upper;
  return stieltjes_sum(ctx, f, points);
}

// Partition {L - 1, breakpoints...}: exact for simple elements.
template <SpectralContext C>
typename C::Element reconstruct_at_breakpoints(const C& ctx,
                                               const SpectralFamily<typename C::Element>& f) {
  std::vector<double> points;
  points.reserve(f.breakpoints.size() + 1);
  points.push_back(f.lower - 1.0);
  points.insert(points.end(), f.breakpoints.begin(), f.breakpoints.end());
  return stieltjes_sum(ctx, f, points);
}

template <SpectralContext C>
ReducedRepresentation<typename C::Element> reduced_representation(const C& ctx,
                                                                  const typename C::Element& a) {
  ReducedRepresentation<typename C::Element> r;
  r.coefficients = ctx.spectrum(a);
  for (double mu : r.coefficients) r.projections.push_back(eigenprojection(ctx, a, mu));
  return r;
}

// mu_i are the breakpoints and p_i the jumps of the family.
template <SpectralContext C>
ReducedRepresentation<typename C::Element> reduced_from_family(
    const C& ctx, const SpectralFamily<typename C::Element>& f) {
  ReducedRepresentation<typename C::Element> r;
  r.coefficients = f.breakpoints;
  for (std::size_t k = 1; k < f.projections.size(); ++k) {
    r.projections.push_back(spectral_detail::sub(ctx, f.projections[k], f.projections[k - 1]));
  }
  return r;
}

// Closed-form family of a simple element a = (+)_i mu_i p_i:
// p_lambda = p_1 (+) ... (+) p_{k-1} for lambda in [mu_{k-1}, mu_k).
template <SpectralContext C>
SpectralFamily<typename C::Element> family_from_reduced(
    const C& ctx, const ReducedRepresentation<typename C::Element>& r) {
  if (r.projections.empty()) throw InputError("empty reduced representation");
  SpectralFamily<typename C::Element> f;
  f.breakpoints = r.coefficients;
  auto acc = ctx.zero_like(r.projections.front());
  f.projections.push_back(acc);
  for (const auto& p : r.projections) {
    acc = ctx.add(acc, p);
    f.projections.push_back(acc);
  }
  f.lower = f.breakpoints.front();
  f.upper = f.breakpoints.back();
  return f;
}

template <SpectralContext C>
typename C::Element compose(const C& ctx, const ReducedRepresentation<typename C::Element>& r) {
  if (r.projections.empty()) throw InputError("empty reduced representation");
  auto acc = ctx.zero_like(r.projections.front());
  for (std::size_t i = 0; i < r.projections.size(); ++i) {
    acc = ctx.add(acc, ctx.scale(r.coefficients[i], r.projections[i]));
  }
  return acc;
}

// a_n = (+)_i c_{n,i} p_i with c_{n,i} the largest multiple of 2^-n below the
// i-th spectral value; ascending in n with ||a - a_n|| <= 2^-n.
template <SpectralContext C>
SimpleApproximation<typename C::Element> simple_approximation(const C& ctx,
                                                             const typename C::Element& a, int n) {
  if (n < 1) throw InputError("simple_approximation needs n >= 1");
  const auto rep = reduced_representation(ctx, a);
  SimpleApproximation<typename C::Element> s;
  s.projections = rep.projections;
  for (double mu : rep.coefficients) {
    s.coefficients.push_back(std::max(0.0, std::ldexp(std::floor(std::ldexp(mu, n)), -n)));
  }
  s.element = compose(ctx, ReducedRepresentation<typename C::Element>{s.coefficients, s.projections});
  return s;
}

template <SpectralContext C>
OrthogonalDecomposition<typename C::Element> decomposition_with(const C& ctx,
                                                                const typename C::Element& v,
                                                                const typename C::Element& p) {
  return {ctx.compress(p, v), ctx.scale(-1.0, ctx.compress(spectral_detail::complement(ctx, p), v)),
          p};
}

// p = support of v_+; v_+ = J_p(v), v_- = -J_{p^perp}(v).
template <SpectralContext C>
OrthogonalDecomposition<typename C::Element> orthogonal_decomposition(
    const C& ctx, const typename C::Element& v) {
  const auto p = spectral_detail::complement(ctx, ctx.rickart(ctx.positive_part(v)));
  return decomposition_with(ctx, v, p);
}

// q in P_+-(v): q commutes with v and J_{q^perp}(v) <= 0 <= J_q(v). Membership
// of q in P(v) is the caller's responsibility.
template <SpectralContext C>
bool in_comparability_set(const C& ctx, const typename C::Element& v,
                          const typename C::Element& q) {
  const auto zero = ctx.zero_like(v);
  return ctx.commute(q, v) && ctx.leq(zero, ctx.compress(q, v)) &&
         ctx.leq(ctx.compress(spectral_detail::complement(ctx, q), v), zero);
}

// p in P_<=(e, f): J_p(e) <= J_p(f) and J_{p^perp}(f) <= J_{p^perp}(e).
template <SpectralContext C>
bool is_comparability_witness(const C& ctx, const typename C::Element& e,
                              const typename C::Element& f, const typename C::Element& p) {
  const auto q = spectral_detail::complement(ctx, p);
  return ctx.commute(p, e) && ctx.commute(p, f) && ctx.leq(ctx.compress(p, e), ctx.compress(p, f)) &&
         ctx.leq(ctx.compress(q, f), ctx.compress(q, e));
}

// Joint refinement r_ij = p_i o q_j of the reduced representations; p collects
// the blocks where e's value is <= f's value (ties included).
template <SpectralContext C>
std::optional<ComparabilityWitness<typename C::Element>> comparability_witness(
    const C& ctx, const typename C::Element& e, const typename C::Element& f) {
  if (!ctx.commute(e, f)) {
    throw NotApplicable("comparability witness requested for a non-commuting pair");
  }
  const auto re = reduced_representation(ctx, e);
  const auto rf = reduced_representation(ctx, f);
  ComparabilityWitness<typename C::Element> w{ctx.zero_like(e), false};
  for (std::size_t i = 0; i < re.projections.size(); ++i) {
    for (std::size_t j = 0; j < rf.projections.size(); ++j) {
      const auto r = ctx.product(re.projections[i], rf.projections[j]);
      if (ctx.is_zero(r)) continue;
      if (ctx.rank(r) > 1) w.degenerate = true;
      if (re.coefficients[i] <= rf.coefficients[j]) w.projection = ctx.add(w.projection, r);
    }
  }
  if (!is_comparability_witness(ctx, e, f, w.projection)) return std::nullopt;
  return w;
}

}  // namespace sea
