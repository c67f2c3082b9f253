// seakit: command-line front end to the seakit library.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sea/core_ea.hpp"
#include "sea/error.hpp"
#include "sea/family_io.hpp"
#include "sea/matrix.hpp"
#include "sea/matrix_context.hpp"
#include "sea/matrix_ea.hpp"
#include "sea/mv_ea.hpp"
#include "sea/report.hpp"
#include "sea/spectral.hpp"
#include "sea/verifier.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

struct Options {
  std::vector<std::string> inputs;
  std::string out;
  double mesh = 0.01;
  int levels = 8;
  std::size_t dim = 4;
  std::optional<std::size_t> size;
  int samples = 200;
  std::uint64_t seed = 42;
  std::string suite = "all";
  std::string model = "matrix";
  bool jordan = false;
  std::optional<double> tol_psd;
  std::optional<double> tol_comm;
  std::optional<double> tol_cluster;

  sea::Tolerances tolerances() const {
    sea::Tolerances t;
    if (tol_psd) t.psd = *tol_psd;
    if (tol_comm) t.comm = *tol_comm;
    if (tol_cluster) t.cluster = *tol_cluster;
    return t;
  }
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sea::InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& ex) {
    throw sea::InputError(path + ": " + ex.what());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw sea::InputError("cannot write " + path.string());
  out << text;
}

void write_json(const fs::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

void emit(const Options& o, const json& j) {
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json(o.out, j);
  }
}

const std::string& single_input(const Options& o) {
  if (o.inputs.size() != 1) throw sea::InputError("exactly one --input is required");
  return o.inputs.front();
}

// An input element: either a matrix or a function on a finite set.
struct Element {
  std::optional<sea::HermitianMatrix> matrix;
  std::optional<sea::RealFunction> function;
};

Element load_element(const std::string& path, const sea::Tolerances& tol) {
  const json j = read_json(path);
  Element e;
  if (j.contains("dim")) {
    e.matrix = sea::HermitianMatrix::checked(sea::matrix_from_json(j), tol.hermitian);
  } else if (j.contains("space")) {
    e.function = sea::function_from_json(j);
  } else {
    throw sea::InputError(path + ": expected a matrix {\"dim\",...} or a fuzzy set {\"space\",...}");
  }
  return e;
}

// Throws NotAnEffect when some value leaves [0, 1].
void require_effect(const Element& e, const sea::Tolerances& tol) {
  if (e.matrix) {
    sea::Effect::validate(*e.matrix, tol);
  } else {
    sea::FuzzySet::validate(e.function->values());
  }
}

std::string format_double(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

int cmd_validate(const Options& o) {
  const auto tol = o.tolerances();
  const json j = read_json(single_input(o));
  json report;
  if (j.contains("dim")) {
    const sea::Matrix m = sea::matrix_from_json(j);
    const sea::HermitianMatrix h(m);
    if ((m - m.adjoint()).frobenius_norm() > tol.hermitian * std::max(1.0, m.frobenius_norm())) {
      std::cout << "not hermitian\n";
      return kDomainFailure;
    }
    const auto eig = sea::eigh(h, tol).eigenvalues;
    report["eigenvalues"] = eig;
    try {
      sea::Effect::validate(h, tol);
    } catch (const sea::NotAnEffect& ex) {
      std::cout << "not an effect (lambda=" << format_double(ex.eigenvalue()) << ")\n";
      report["classification"] = "neither";
      report["offending_eigenvalue"] = ex.eigenvalue();
      if (!o.out.empty()) write_json(o.out, report);
      return kDomainFailure;
    }
    const bool projection =
        sea::distance(sea::HermitianMatrix(h.matrix() * h.matrix()), h) <= tol.projection;
    report["classification"] = projection ? "projection" : "effect";
  } else {
    const auto f = sea::function_from_json(j);
    report["values"] = f.values();
    try {
      const auto fuzzy = sea::FuzzySet::validate(f.values());
      report["classification"] = fuzzy.is_sharp() ? "projection" : "effect";
    } catch (const sea::NotAnEffect& ex) {
      std::cout << "not an effect (value=" << format_double(ex.eigenvalue()) << ")\n";
      report["classification"] = "neither";
      report["offending_value"] = ex.eigenvalue();
      if (!o.out.empty()) write_json(o.out, report);
      return kDomainFailure;
    }
  }
  std::cout << report["classification"].get<std::string>() << "\n";
  if (!o.out.empty()) write_json(o.out, report);
  return kOk;
}

template <class C>
json spectrum_report(const C& ctx, const typename C::Element& a, double mesh,
                     const sea::SpectralFamily<typename C::Element>& family) {
  const auto rep = sea::reduced_representation(ctx, a);
  json eigen = json::array();
  for (std::size_t i = 0; i < rep.coefficients.size(); ++i) {
    eigen.push_back({{"value", rep.coefficients[i]},
                     {"multiplicity", ctx.rank(rep.projections[i])},
                     {"projection", to_json(rep.projections[i])}});
  }
  const auto approx = sea::reconstruct(ctx, family, mesh);
  const auto exact = sea::reconstruct_at_breakpoints(ctx, family);
  return {{"L", family.lower},
          {"U", family.upper},
          {"eigenvalues", eigen},
          {"mesh", mesh},
          {"reconstruction_residual", ctx.norm(sea::spectral_detail::sub(ctx, a, approx))},
          {"breakpoint_residual", ctx.norm(sea::spectral_detail::sub(ctx, a, exact))}};
}

template <class C>
std::string rank_csv(const C& ctx, const sea::SpectralFamily<typename C::Element>& family, double mesh) {
  std::ostringstream csv;
  csv << "lambda,rank\n";
  const auto steps = static_cast<long>(std::llround(1.0 / mesh));
  for (long k = 0; k <= steps; ++k) {
    const double lambda = std::min(1.0, static_cast<double>(k) * mesh);
    csv << lambda << "," << ctx.rank(family.at(lambda)) << "\n";
  }
  return csv.str();
}

int cmd_spectrum(const Options& o) {
  if (!(o.mesh > 0.0)) throw sea::InputError("--mesh must be positive");
  const auto tol = o.tolerances();
  const Element e = load_element(single_input(o), tol);
  require_effect(e, tol);
  json family_json;
  json report;
  std::string csv;
  if (e.matrix) {
    const sea::MatrixContext ctx(tol);
    const auto family = sea::spectral_family(ctx, *e.matrix);
    family_json = sea::to_json(family);
    report = spectrum_report(ctx, *e.matrix, o.mesh, family);
    csv = rank_csv(ctx, family, o.mesh);
  } else {
    const sea::FunctionContext ctx;
    const auto family = sea::spectral_family(ctx, *e.function);
    family_json = sea::to_json(family);
    report = spectrum_report(ctx, *e.function, o.mesh, family);
    csv = rank_csv(ctx, family, o.mesh);
  }
  if (o.out.empty()) {
    std::cout << json{{"family", family_json}, {"spectrum", report}}.dump(2) << "\n";
  } else {
    const fs::path dir(o.out);
    write_json(dir / "family.json", family_json);
    write_json(dir / "spectrum.json", report);
    write_text(dir / "family.csv", csv);
    std::cout << "L=" << report["L"].get<double>() << " U=" << report["U"].get<double>()
              << " residual=" << report["reconstruction_residual"].get<double>() << " (mesh " << o.mesh << ")\n";
  }
  return kOk;
}

template <class C>
json approx_report(const C& ctx, const typename C::Element& a, int levels) {
  json chain = json::array();
  json last;
  for (int n = 1; n <= levels; ++n) {
    const auto s = sea::simple_approximation(ctx, a, n);
    const double err = ctx.norm(sea::spectral_detail::sub(ctx, a, s.element));
    chain.push_back({{"n", n}, {"coefficients", s.coefficients}, {"error", err}, {"bound", std::ldexp(1.0, -n)}});
    last = to_json(s.element);
  }
  return {{"levels", levels}, {"chain", chain}, {"element", last}};
}

int cmd_approx(const Options& o) {
  if (o.levels < 1) throw sea::InputError("--levels must be >= 1");
  const auto tol = o.tolerances();
  const Element e = load_element(single_input(o), tol);
  require_effect(e, tol);
  emit(o, e.matrix ? approx_report(sea::MatrixContext(tol), *e.matrix, o.levels)
                   : approx_report(sea::FunctionContext(), *e.function, o.levels));
  return kOk;
}

template <class C>
json decompose_report(const C& ctx, const typename C::Element& v) {
  const auto d = sea::orthogonal_decomposition(ctx, v);
  const double residual =
      ctx.norm(sea::spectral_detail::sub(ctx, v, sea::spectral_detail::sub(ctx, d.plus, d.minus)));
  return {{"plus", to_json(d.plus)},
          {"minus", to_json(d.minus)},
          {"projection", to_json(d.projection)},
          {"mu_plus", ctx.norm(d.plus)},
          {"mu_minus", ctx.norm(d.minus)},
          {"residual", residual}};
}

int cmd_decompose(const Options& o) {
  const auto tol = o.tolerances();
  const Element e = load_element(single_input(o), tol);
  emit(o, e.matrix ? decompose_report(sea::MatrixContext(tol), *e.matrix)
                   : decompose_report(sea::FunctionContext(), *e.function));
  return kOk;
}

template <class C>
int witness_for(const Options& o, const C& ctx, const typename C::Element& e, const typename C::Element& f) {
  const auto w = sea::comparability_witness(ctx, e, f);
  if (!w) {
    std::cout << "no comparability witness among joint eigenprojection sub-sums\n";
    return kDomainFailure;
  }
  emit(o, {{"projection", to_json(w->projection)}, {"degenerate", w->degenerate}});
  return kOk;
}

int cmd_witness(const Options& o) {
  if (o.inputs.size() != 2) throw sea::InputError("witness needs two --input files (e then f)");
  const auto tol = o.tolerances();
  const Element e = load_element(o.inputs[0], tol);
  const Element f = load_element(o.inputs[1], tol);
  require_effect(e, tol);
  require_effect(f, tol);
  if (e.matrix.has_value() != f.matrix.has_value()) throw sea::InputError("witness inputs must share a model");
  if (e.matrix) {
    sea::require_same_dim(*e.matrix, *f.matrix);
    return witness_for(o, sea::MatrixContext(tol), *e.matrix, *f.matrix);
  }
  if (e.function->space_size() != f.function->space_size()) throw sea::InputError("space mismatch");
  return witness_for(o, sea::FunctionContext(), *e.function, *f.function);
}

int cmd_verify(const Options& o) {
  sea::SuiteOptions so;
  so.model = sea::parse_model(o.model);
  so.dim = so.model == sea::ModelKind::mv ? o.size.value_or(8) : o.dim;
  so.samples = o.samples;
  so.seed = o.seed;
  so.tol = o.tolerances();
  so.product = o.jordan ? sea::ProductKind::jordan : sea::ProductKind::standard;
  const auto report = sea::run_suite(o.suite, so);
  std::cout << sea::summarize(report);
  if (!o.out.empty()) write_json(o.out, sea::to_json(report));
  return report.passed() ? kOk : kDomainFailure;
}

// With --input: level-set context and family of a fuzzy set. Without: the
// Lukasiewicz chain with --levels elements and its axiom report.
int cmd_mv(const Options& o) {
  if (o.inputs.empty()) {
    if (o.levels < 2 || static_cast<std::size_t>(o.levels) > sea::FiniteEffectAlgebra::kMaxSize) {
      throw sea::InputError("--levels must be in [2, 64]");
    }
    const auto chain = sea::lukasiewicz_chain(static_cast<std::size_t>(o.levels));
    const auto report = sea::check_ea_axioms(chain.table, "table(" + chain.name + ")");
    std::cout << sea::summarize(report);
    emit(o, {{"table", sea::to_json(chain.table)}, {"embedding", chain.embedding}, {"axioms", sea::to_json(report)}});
    return report.passed() ? kOk : kDomainFailure;
  }
  const auto a = sea::fuzzy_from_json(read_json(single_input(o)));
  const auto context = sea::mv_is_context_spectral(a);
  emit(o, {{"context", sea::to_json(context)}, {"family", sea::to_json(sea::mv_spectral_family(a))}});
  return kOk;
}

void add_tolerance_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--tol-psd", o.tol_psd, "eigenvalue slack for 0 <= A <= I");
  cmd->add_option("--tol-comm", o.tol_comm, "commutator tolerance");
  cmd->add_option("--tol-cluster", o.tol_cluster, "eigenvalue clustering tolerance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seakit: sequential effect algebras, spectral families and property suites"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "classify a matrix or fuzzy set as projection, effect or neither");
  validate->add_option("--input", o.inputs, "element JSON")->required();
  validate->add_option("--out", o.out, "report JSON");

  auto* spectrum = app.add_subcommand("spectrum", "spectral family, eigenvalues and reconstruction of an effect");
  spectrum->add_option("--input", o.inputs, "effect JSON")->required();
  spectrum->add_option("--out", o.out, "output directory for family.json, spectrum.json, family.csv");
  spectrum->add_option("--mesh", o.mesh, "partition width for reconstruction and CSV grid")->capture_default_str();

  auto* approx = app.add_subcommand("approx", "ascending dyadic simple approximations of an effect");
  approx->add_option("--input", o.inputs, "effect JSON")->required();
  approx->add_option("--out", o.out, "output JSON");
  approx->add_option("--levels", o.levels, "approximations a_1..a_levels")->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "orthogonal decomposition v = v+ - v-");
  decompose->add_option("--input", o.inputs, "Hermitian matrix or real function JSON")->required();
  decompose->add_option("--out", o.out, "output JSON");

  auto* witness = app.add_subcommand("witness", "comparability witness for a commuting pair e, f");
  witness->add_option("--input", o.inputs, "two effect JSON files: e then f")->required()->expected(2);
  witness->add_option("--out", o.out, "output JSON");

  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", o.suite, "sea|compression|spectrality|context|tables|all")
      ->check(CLI::IsMember(sea::suite_names()))
      ->capture_default_str();
  verify->add_option("--model", o.model, "matrix|mv")->check(CLI::IsMember({"matrix", "mv"}))->capture_default_str();
  verify->add_option("--dim", o.dim, "matrix dimension")->check(CLI::Range(1, 64))->capture_default_str();
  verify->add_option("--size", o.size, "mv space size (default 8)")->check(CLI::Range(1, 1024));
  verify->add_option("--samples", o.samples, "samples per check")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  verify->add_flag("--jordan", o.jordan, "use (ab + ba)/2 as the sequential product");
  verify->add_option("--out", o.out, "report JSON");

  auto* mv = app.add_subcommand("mv", "context of a fuzzy set, or a Lukasiewicz chain");
  mv->add_option("--input", o.inputs, "fuzzy set JSON");
  mv->add_option("--levels", o.levels, "chain length when no input is given")->capture_default_str();
  mv->add_option("--out", o.out, "output JSON");

  for (auto* cmd : {validate, spectrum, approx, decompose, witness, verify, mv}) add_tolerance_flags(cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*spectrum) return cmd_spectrum(o);
    if (*approx) return cmd_approx(o);
    if (*decompose) return cmd_decompose(o);
    if (*witness) return cmd_witness(o);
    if (*verify) return cmd_verify(o);
    if (*mv) return cmd_mv(o);
  } catch (const sea::InputError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const sea::NotAnEffect& ex) {
    std::cout << ex.what() << "\n";
    return kDomainFailure;
  } catch (const sea::NotApplicable& ex) {
    std::cerr << "not applicable: " << ex.what() << "\n";
    return kDomainFailure;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kDomainFailure;
  }
  return kUsage;
}
