#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "sea/matrix_ea.hpp"
#include "sea/spectral.hpp"

namespace sea {

// Real-valued function on a finite set X = {0, ..., k-1}: an element of the
// order unit space C(X) with unit the constant 1.
class RealFunction {
 public:
  static constexpr std::size_t kMaxSpace = 1024;

  RealFunction() = default;
  explicit RealFunction(std::vector<double> values);

  static RealFunction constant(std::size_t k, double c);

  std::size_t space_size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const RealFunction&, const RealFunction&) = default;

 private:
  std::vector<double> values_;
};

// Function X -> [0, 1]; values are stored exactly as given.
class FuzzySet {
 public:
  // Throws NotAnEffect on the first value outside [0, 1].
  static FuzzySet validate(std::vector<double> values);
  static FuzzySet indicator(std::size_t k, std::span<const std::size_t> support);

  std::size_t space_size() const { return f_.space_size(); }
  const std::vector<double>& values() const { return f_.values(); }
  const RealFunction& function() const { return f_; }
  double operator[](std::size_t i) const { return f_[i]; }
  bool is_sharp() const;

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;

 private:
  explicit FuzzySet(RealFunction f) : f_(std::move(f)) {}

  RealFunction f_;
};

// Partition of X; part i is the support of the indicator projection p_i.
struct Context {
  std::vector<std::vector<std::size_t>> parts;
};

std::optional<FuzzySet> mv_oplus(const FuzzySet& a, const FuzzySet& b);
FuzzySet mv_seq(const FuzzySet& a, const FuzzySet& b);
FuzzySet mv_complement(const FuzzySet& a);
FuzzySet mv_meet(const FuzzySet& a, const FuzzySet& b);
FuzzySet mv_join(const FuzzySet& a, const FuzzySet& b);
// b - a when a <= b pointwise.
std::optional<FuzzySet> mv_ominus(const FuzzySet& b, const FuzzySet& a);
bool mv_leq(const FuzzySet& a, const FuzzySet& b);

// Pointwise context on C(X). `merge` > 0 merges values closer than it when
// forming level sets; 0 means exact comparison.
class FunctionContext {
 public:
  using Element = RealFunction;

  FunctionContext() = default;
  explicit FunctionContext(double merge) : merge_(merge) {}

  double merge() const { return merge_; }

  Element unit_like(const Element& v) const { return RealFunction::constant(v.space_size(), 1.0); }
  Element zero_like(const Element& v) const { return RealFunction::constant(v.space_size(), 0.0); }
  Element add(const Element& v, const Element& w) const;
  Element scale(double s, const Element& v) const;
  Element positive_part(const Element& v) const;
  // Indicator of {x : v(x) = 0} (|v(x)| <= merge).
  Element rickart(const Element& v) const;
  std::vector<double> spectrum(const Element& v) const;
  Element compress(const Element& p, const Element& v) const;
  Element product(const Element& v, const Element& w) const;
  bool commute(const Element&, const Element&) const { return true; }
  bool leq(const Element& v, const Element& w) const;
  bool is_zero(const Element& v) const;
  double norm(const Element& v) const;
  double distance(const Element& v, const Element& w) const;
  std::size_t rank(const Element& p) const;

 private:
  double merge_ = 0.0;
};

static_assert(SpectralContext<FunctionContext>);

SpectralFamily<RealFunction> mv_spectral_family(const FuzzySet& a, const FunctionContext& ctx = {});

struct ContextSpectralResult {
  bool context_spectral = true;
  Context context;
  std::vector<double> coefficients;  // strictly increasing
};

// Level sets of the distinct values, ascending.
ContextSpectralResult mv_is_context_spectral(const FuzzySet& a, const FunctionContext& ctx = {});

struct SpectrumRepresentationReport {
  FuzzySet phi;                         // Phi(a) on X = eigenvalue clusters
  std::vector<std::size_t> multiplicities;
  int polynomials_tested = 0;
  double max_multiplicative_residual = 0.0;  // |Phi(b o c) - Phi(b) Phi(c)|
  double max_isometry_residual = 0.0;        // | ||b|| - max |Phi(b)| |
  bool ok = false;
};

// X = eigenvalue clusters of a, Phi(f(a)) = f on X. Checks multiplicativity
// and isometry on sequential powers and products of polynomials in a up to
// degree 6, against Phi computed from the matrices themselves.
SpectrumRepresentationReport spectrum_representation(const Effect& a, const Tolerances& tol = {});

// {"space": k, "values": [...]}
nlohmann::json to_json(const RealFunction& f);
nlohmann::json to_json(const FuzzySet& f);
RealFunction function_from_json(const nlohmann::json& j);
FuzzySet fuzzy_from_json(const nlohmann::json& j);
// {"mu": [...], "parts": [[indices], ...]}
nlohmann::json to_json(const ContextSpectralResult& r);

}  // namespace sea
