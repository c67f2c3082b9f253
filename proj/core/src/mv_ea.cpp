#include "sea/mv_ea.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sea/eigen.hpp"
#include "sea/error.hpp"

namespace sea {
namespace {

void require_same_space(std::size_t a, std::size_t b) {
  if (a != b) {
    throw InputError("space mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

template <class Op>
std::vector<double> pointwise(const std::vector<double>& a, const std::vector<double>& b, Op op) {
  require_same_space(a.size(), b.size());
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

}  // namespace

RealFunction::RealFunction(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty() || values_.size() > kMaxSpace) {
    throw InputError("space size must be in [1, " + std::to_string(kMaxSpace) + "]");
  }
  for (double x : values_) {
    if (!std::isfinite(x)) throw InputError("function values must be finite");
  }
}

RealFunction RealFunction::constant(std::size_t k, double c) {
  return RealFunction(std::vector<double>(k, c));
}

FuzzySet FuzzySet::validate(std::vector<double> values) {
  for (double x : values) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw NotAnEffect("not an effect (value " + std::to_string(x) + " outside [0,1])", x);
    }
  }
  return FuzzySet(RealFunction(std::move(values)));
}

FuzzySet FuzzySet::indicator(std::size_t k, std::span<const std::size_t> support) {
  std::vector<double> v(k, 0.0);
  for (std::size_t i : support) {
    if (i >= k) throw InputError("indicator index out of range");
    v[i] = 1.0;
  }
  return validate(std::move(v));
}

bool FuzzySet::is_sharp() const {
  return std::all_of(values().begin(), values().end(), [](double x) { return x == 0.0 || x == 1.0; });
}

std::optional<FuzzySet> mv_oplus(const FuzzySet& a, const FuzzySet& b) {
  auto s = pointwise(a.values(), b.values(), [](double x, double y) { return x + y; });
  if (std::any_of(s.begin(), s.end(), [](double x) { return x > 1.0; })) return std::nullopt;
  return FuzzySet::validate(std::move(s));
}

FuzzySet mv_seq(const FuzzySet& a, const FuzzySet& b) {
  return FuzzySet::validate(pointwise(a.values(), b.values(), [](double x, double y) { return x * y; }));
}

FuzzySet mv_complement(const FuzzySet& a) {
  std::vector<double> v(a.values());
  for (double& x : v) x = 1.0 - x;
  return FuzzySet::validate(std::move(v));
}

FuzzySet mv_meet(const FuzzySet& a, const FuzzySet& b) {
  return FuzzySet::validate(
      pointwise(a.values(), b.values(), [](double x, double y) { return std::min(x, y); }));
}

FuzzySet mv_join(const FuzzySet& a, const FuzzySet& b) {
  return FuzzySet::validate(
      pointwise(a.values(), b.values(), [](double x, double y) { return std::max(x, y); }));
}

std::optional<FuzzySet> mv_ominus(const FuzzySet& b, const FuzzySet& a) {
  if (!mv_leq(a, b)) return std::nullopt;
  return FuzzySet::validate(pointwise(b.values(), a.values(), [](double x, double y) { return x - y; }));
}

bool mv_leq(const FuzzySet& a, const FuzzySet& b) {
  const auto d = pointwise(a.values(), b.values(), [](double x, double y) { return x <= y ? 1.0 : 0.0; });
  return std::all_of(d.begin(), d.end(), [](double x) { return x == 1.0; });
}

RealFunction FunctionContext::add(const RealFunction& v, const RealFunction& w) const {
  return RealFunction(pointwise(v.values(), w.values(), [](double x, double y) { return x + y; }));
}

RealFunction FunctionContext::scale(double s, const RealFunction& v) const {
  std::vector<double> out(v.values());
  for (double& x : out) x *= s;
  return RealFunction(std::move(out));
}

RealFunction FunctionContext::positive_part(const RealFunction& v) const {
  std::vector<double> out(v.values());
  for (double& x : out) x = std::max(x, 0.0);
  return RealFunction(std::move(out));
}

RealFunction FunctionContext::rickart(const RealFunction& v) const {
  std::vector<double> out(v.space_size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(v[i]) <= merge_ ? 1.0 : 0.0;
  return RealFunction(std::move(out));
}

std::vector<double> FunctionContext::spectrum(const RealFunction& v) const {
  std::vector<double> s(v.values());
  std::sort(s.begin(), s.end());
  if (merge_ <= 0.0) {
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }
  std::vector<double> out;
  std::size_t begin = 0;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    if (k == s.size() || s[k] - s[k - 1] > merge_) {
      double sum = 0.0;
      for (std::size_t i = begin; i < k; ++i) sum += s[i];
      out.push_back(sum / static_cast<double>(k - begin));
      begin = k;
    }
  }
  return out;
}

RealFunction FunctionContext::compress(const RealFunction& p, const RealFunction& v) const {
  return product(p, v);
}

RealFunction FunctionContext::product(const RealFunction& v, const RealFunction& w) const {
  return RealFunction(pointwise(v.values(), w.values(), [](double x, double y) { return x * y; }));
}

bool FunctionContext::leq(const RealFunction& v, const RealFunction& w) const {
  require_same_space(v.space_size(), w.space_size());
  for (std::size_t i = 0; i < v.space_size(); ++i) {
    if (v[i] > w[i]) return false;
  }
  return true;
}

bool FunctionContext::is_zero(const RealFunction& v) const {
  return std::all_of(v.values().begin(), v.values().end(), [](double x) { return x == 0.0; });
}

double FunctionContext::norm(const RealFunction& v) const {
  double m = 0.0;
  for (double x : v.values()) m = std::max(m, std::abs(x));
  return m;
}

double FunctionContext::distance(const RealFunction& v, const RealFunction& w) const {
  return norm(add(v, scale(-1.0, w)));
}

std::size_t FunctionContext::rank(const RealFunction& p) const {
  return static_cast<std::size_t>(
      std::count_if(p.values().begin(), p.values().end(), [](double x) { return x != 0.0; }));
}

SpectralFamily<RealFunction> mv_spectral_family(const FuzzySet& a, const FunctionContext& ctx) {
  return spectral_family(ctx, a.function());
}

ContextSpectralResult mv_is_context_spectral(const FuzzySet& a, const FunctionContext& ctx) {
  const auto rep = reduced_representation(ctx, a.function());
  ContextSpectralResult r;
  r.coefficients = rep.coefficients;
  for (const auto& p : rep.projections) {
    std::vector<std::size_t> part;
    for (std::size_t i = 0; i < p.space_size(); ++i) {
      if (p[i] != 0.0) part.push_back(i);
    }
    r.context.parts.push_back(std::move(part));
  }
  return r;
}

SpectrumRepresentationReport spectrum_representation(const Effect& a, const Tolerances& tol) {
  const auto& dec = a.decomposition();
  const auto& clusters = dec.clusters;
  const std::size_t n = a.dim();

  std::vector<double> points;
  SpectrumRepresentationReport report{FuzzySet::validate({0.0}), {}, 0, 0.0, 0.0, false};
  for (const auto& c : clusters) {
    points.push_back(c.value);
    report.multiplicities.push_back(c.size());
  }
  report.phi = FuzzySet::validate(points);

  // Phi of a matrix commuting with a, read off one eigenvector per cluster.
  auto measure = [&](const HermitianMatrix& m) {
    std::vector<double> out(clusters.size());
    for (std::size_t x = 0; x < clusters.size(); ++x) {
      const std::size_t col = clusters[x].begin;
      Complex z = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          z += std::conj(dec.eigenvectors(i, col)) * m(i, j) * dec.eigenvectors(j, col);
        }
      }
      out[x] = z.real();
    }
    return out;
  };

  struct Sample {
    Effect element;
    std::vector<double> phi;  // predicted values on X
  };
  std::vector<Sample> family;
  {
    const Effect one = Effect::validate(HermitianMatrix::identity(n), tol);
    std::vector<double> ones(points.size(), 1.0);
    family.push_back({one, ones});
    for (int k = 1; k <= 6; ++k) {
      const Sample& prev = family.back();
      std::vector<double> phi(points.size());
      for (std::size_t x = 0; x < points.size(); ++x) phi[x] = points[x] * prev.phi[x];
      family.push_back({seq_product(a, prev.element, tol), phi});
    }
    const std::size_t powers = family.size();
    for (std::size_t k = 1; k < powers; ++k) {
      std::vector<double> avg(points.size());
      std::vector<double> comp(points.size());
      for (std::size_t x = 0; x < points.size(); ++x) {
        avg[x] = 0.5 * (family[k - 1].phi[x] + family[k].phi[x]);
        comp[x] = 1.0 - family[k].phi[x];
      }
      family.push_back(
          {Effect::validate(0.5 * (family[k - 1].element.matrix() + family[k].element.matrix()), tol),
           avg});
      family.push_back({family[k].element.complement(tol), comp});
    }
  }

  auto max_abs_diff = [](const std::vector<double>& x, const std::vector<double>& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
  };

  for (const auto& s : family) {
    double predicted_norm = 0.0;
    for (double x : s.phi) predicted_norm = std::max(predicted_norm, std::abs(x));
    report.max_isometry_residual =
        std::max(report.max_isometry_residual, std::abs(spectral_norm(s.element.matrix(), tol) - predicted_norm));
    report.max_multiplicative_residual =
        std::max(report.max_multiplicative_residual, max_abs_diff(measure(s.element.matrix()), s.phi));
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i; j < family.size(); ++j) {
      std::vector<double> expected(points.size());
      for (std::size_t x = 0; x < points.size(); ++x) expected[x] = family[i].phi[x] * family[j].phi[x];
      const auto product = seq_product(family[i].element, family[j].element, tol);
      report.max_multiplicative_residual =
          std::max(report.max_multiplicative_residual, max_abs_diff(measure(product.matrix()), expected));
      ++report.polynomials_tested;
    }
  }
  report.ok = report.max_multiplicative_residual <= tol.residual &&
              report.max_isometry_residual <= tol.residual;
  return report;
}

nlohmann::json to_json(const RealFunction& f) {
  return {{"space", f.space_size()}, {"values", f.values()}};
}

nlohmann::json to_json(const FuzzySet& f) { return to_json(f.function()); }

RealFunction function_from_json(const nlohmann::json& j) {
  try {
    const auto k = j.at("space").get<std::size_t>();
    auto values = j.at("values").get<std::vector<double>>();
    if (values.size() != k) throw InputError("`values` must have `space` entries");
    return RealFunction(std::move(values));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed fuzzy-set JSON: ") + ex.what());
  }
}

FuzzySet fuzzy_from_json(const nlohmann::json& j) {
  return FuzzySet::validate(function_from_json(j).values());
}

nlohmann::json to_json(const ContextSpectralResult& r) {
  return {{"mu", r.coefficients}, {"parts", r.context.parts}};
}

}  // namespace sea
