// Acceptance criteria, one PASS/FAIL line each. Exit status 0 iff all pass.
//
//   seakit_acceptance [--cli PATH --workdir DIR]
//
// With --cli, criterion 11 also runs `verify --suite all` twice through the
// command-line tool and compares the written reports byte for byte.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "sea/eigen.hpp"
#include "sea/matrix_context.hpp"
#include "sea/matrix_ea.hpp"
#include "sea/random.hpp"
#include "sea/spectral.hpp"
#include "sea/verifier.hpp"

namespace {

using namespace sea;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Args {
  std::string cli;
  std::string workdir = "acceptance_work";
};

const MatrixContext kCtx;

double op_norm(const HermitianMatrix& a) { return spectral_norm(a); }

SuiteOptions opts(ModelKind model, std::size_t dim, int samples, std::uint64_t seed) {
  SuiteOptions o;
  o.model = model;
  o.dim = dim;
  o.samples = samples;
  o.seed = seed;
  return o;
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

// 1. SEA axioms, dims 2-8 x 200 samples, residuals <= 1e-8; mv exact; < 60 s.
Outcome sea_axioms() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (std::size_t dim = 2; dim <= 8; ++dim) {
    const auto r = run_sea_suite(opts(ModelKind::matrix, dim, 200, 42));
    for (const char* id : {"S1", "S2", "S3", "S4", "S5"}) {
      const auto* c = r.find(id);
      if (!c || !c->ok() || c->samples != 200 || c->max_residual > 1e-8) {
        out.fail(std::string(id) + " at dim " + std::to_string(dim));
      } else {
        worst = std::max(worst, c->max_residual);
      }
    }
  }
  const auto mv = run_sea_suite(opts(ModelKind::mv, 8, 200, 1));
  for (const char* id : {"S1", "S2", "S3", "S4", "S5"}) {
    const auto* c = mv.find(id);
    if (!c || !c->ok() || c->max_residual != 0.0) out.fail(std::string(id) + " on mv");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 60.0) out.fail("runtime " + fmt(secs) + " s");
  if (out.pass) out.detail = "max residual " + fmt(worst) + ", mv exact, " + fmt(secs) + " s";
  return out;
}

// 2. The symmetrized product breaks (S3) with a witness at every dim >= 2.
Outcome jordan_control() {
  Outcome out;
  for (std::size_t dim = 2; dim <= 8; ++dim) {
    auto o = opts(ModelKind::matrix, dim, 200, 42);
    o.product = ProductKind::jordan;
    const auto r = run_sea_suite(o);
    const auto* c = r.find("S3");
    if (!c || c->ok() || !c->witness) out.fail("no S3 witness at dim " + std::to_string(dim));
  }
  if (out.pass) out.detail = "S3 witness found at dims 2-8";
  return out;
}

// 3. The five compatibility statements agree on 500 pairs per dim.
Outcome compatibility_equivalence() {
  Outcome out;
  for (std::size_t dim = 1; dim <= 8; ++dim) {
    const auto r = run_compression_suite(opts(ModelKind::matrix, dim, 500, 42));
    const auto* c = r.find("le:comE");
    if (!c || !c->ok() || c->samples != 500) out.fail("disagreement at dim " + std::to_string(dim));
  }
  if (out.pass) out.detail = "500 pairs x dims 1-8";
  return out;
}

// 4. Reconstruction within mesh, exact at breakpoint partitions.
Outcome reconstruction() {
  Outcome out;
  Rng g(4);
  double worst_exact = 0.0;
  for (std::size_t dim = 1; dim <= 8; ++dim) {
    for (int s = 0; s < 100; ++s) {
      const auto a = random_effect(dim, g).matrix();
      const auto f = spectral_family(kCtx, a);
      for (double mesh : {0.1, 0.01, 0.001}) {
        const double err = op_norm(a - reconstruct(kCtx, f, mesh));
        if (err > mesh) out.fail("mesh " + fmt(mesh) + " error " + fmt(err) + " at dim " + std::to_string(dim));
      }
      const double exact = op_norm(a - reconstruct_at_breakpoints(kCtx, f));
      worst_exact = std::max(worst_exact, exact);
      if (exact > 1e-8) out.fail("breakpoint partition error " + fmt(exact));
    }
  }
  if (out.pass) out.detail = "100 effects x dims 1-8, breakpoint error " + fmt(worst_exact);
  return out;
}

// 5. Closed-form families of simple elements, matrix <= 1e-8 and mv exact.
Outcome closed_form() {
  Outcome out;
  double worst = 0.0;
  for (std::size_t dim = 1; dim <= 8; ++dim) {
    const auto r = run_context_suite(opts(ModelKind::matrix, dim, 100, 5));
    const auto* c = r.find("thm:contexts");
    if (!c || !c->ok() || c->max_residual > 1e-8) out.fail("matrix dim " + std::to_string(dim));
    else worst = std::max(worst, c->max_residual);
  }
  for (std::size_t size : {1, 4, 8, 16}) {
    const auto r = run_context_suite(opts(ModelKind::mv, size, 100, 5));
    const auto* c = r.find("thm:contexts");
    if (!c || !c->ok() || c->max_residual != 0.0) out.fail("mv size " + std::to_string(size));
  }
  if (out.pass) out.detail = "matrix residual " + fmt(worst) + ", mv exact";
  return out;
}

// 6. ||a - a_n|| <= 2^-n and a_n <= a_{n+1}, n = 1..10.
Outcome simple_limit() {
  Outcome out;
  Rng g(6);
  for (int s = 0; s < 100; ++s) {
    const std::size_t dim = 1 + static_cast<std::size_t>(s % 8);
    const auto a = random_effect(dim, g).matrix();
    HermitianMatrix prev;
    for (int n = 1; n <= 10; ++n) {
      const auto an = simple_approximation(kCtx, a, n).element;
      if (op_norm(a - an) > std::ldexp(1.0, -n)) out.fail("rate at n=" + std::to_string(n));
      if (n > 1 && !leq(prev, an)) out.fail("not ascending at n=" + std::to_string(n));
      prev = an;
    }
  }
  if (out.pass) out.detail = "100 effects, n = 1..10";
  return out;
}

// 7. rickart(a - I) is the eigenvalue-1 projection; ||a^K - floor|| <= mu^K.
Outcome floor_identities() {
  constexpr int kPower = 50;
  Outcome out;
  Rng g(7);
  double worst_excess = -1.0;
  for (int s = 0; s < 100; ++s) {
    const std::size_t dim = 1 + static_cast<std::size_t>(s % 8);
    std::vector<double> d(dim);
    for (auto& x : d) x = uniform01(g) < 0.4 ? 1.0 : uniform(g, 0.7, 0.95);
    const auto u = random_unitary(dim, g);
    const auto a = effect_with_spectrum(u, d);
    std::vector<double> ones(dim);
    double mu = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      ones[i] = d[i] == 1.0 ? 1.0 : 0.0;
      if (d[i] < 1.0) mu = std::max(mu, d[i]);
    }
    const auto expected = conjugate_diagonal(u, ones);
    const auto fl = rickart(a.matrix() - HermitianMatrix::identity(dim)).matrix();
    if (op_norm(fl - expected) > 1e-8) out.fail("floor differs from eigenvalue-1 projection");
    const auto powers = floor_iterates(a, kPower);
    const double err = op_norm(powers.back().matrix() - fl);
    // The bound is attained on the non-unit eigenvalues; allow the absolute
    // rounding of K sequential products only.
    const double rounding = kPower * static_cast<double>(dim) * std::numeric_limits<double>::epsilon();
    worst_excess = std::max(worst_excess, err - std::pow(mu, kPower));
    if (err > std::pow(mu, kPower) + rounding) out.fail("rate " + fmt(err) + " > " + fmt(std::pow(mu, kPower)));
  }
  if (out.pass) out.detail = "100 effects, K = 50, max excess over mu^K " + fmt(worst_excess);
  return out;
}

bool families_commute(const Effect& a, const Effect& b, const Tolerances& tol) {
  for (const auto& p : bicommutant_projections(a))
    for (const auto& q : bicommutant_projections(b))
      if (commutator_norm(p.matrix().matrix(), q.matrix().matrix()) > tol.comm) return false;
  return true;
}

// 8. a|b <=> ab = ba <=> spectral projections commute.
Outcome commutation_equivalence() {
  Outcome out;
  const Tolerances tol;
  Rng g(8);
  int disagreements = 0;
  for (int s = 0; s < 400; ++s) {
    const std::size_t dim = 2 + static_cast<std::size_t>(s % 7);
    const bool shared = s < 200;
    const auto pair = shared ? random_commuting_pair(dim, g) : random_generic_pair(dim, g);
    const auto c = commutation(pair.first, pair.second, tol);
    const bool fam = families_commute(pair.first, pair.second, tol);
    if (!c.agree() || c.via_product != fam || c.via_product != shared) ++disagreements;
  }
  if (disagreements > 0) out.fail(std::to_string(disagreements) + " disagreements");
  else out.detail = "200 commuting + 200 generic pairs";
  return out;
}

// 9. Every valid q in P_+-(v) among eigenprojection sub-sums gives the same pair.
Outcome decomposition_uniqueness() {
  Outcome out;
  Rng g(9);
  int witnesses = 0;
  for (std::size_t dim = 1; dim <= 8; ++dim) {
    for (int s = 0; s < 100; ++s) {
      const auto v = random_hermitian(dim, g);
      const auto dec = orthogonal_decomposition(kCtx, v);
      const auto r = reduced_representation(kCtx, v);
      const std::size_t k = r.projections.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        auto q = HermitianMatrix::zero(dim);
        for (std::size_t i = 0; i < k; ++i)
          if ((mask >> i) & 1U) q += r.projections[i];
        if (!in_comparability_set(kCtx, v, q)) continue;
        ++witnesses;
        const auto other = decomposition_with(kCtx, v, q);
        if (op_norm(other.plus - dec.plus) > 1e-8 || op_norm(other.minus - dec.minus) > 1e-8) {
          out.fail("pairs differ at dim " + std::to_string(dim));
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(witnesses) + " witnesses over 100 v x dims 1-8";
  return out;
}

// 10. Brute-force table answers match the fuzzy-set model.
Outcome table_oracle() {
  Outcome out;
  const auto r = run_table_suite(opts(ModelKind::mv, 1, 1, 42));
  int checks = 0;
  for (const auto& c : r.results) {
    ++checks;
    if (!c.ok()) out.fail(c.statement_id + " [" + c.model + "]");
  }
  if (out.pass) out.detail = std::to_string(checks) + " checks over L3, L5, B2, B3, diamond";
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// 11. Identical flags give byte-identical reports.
Outcome determinism(const Args& args) {
  Outcome out;
  for (const auto& o : {opts(ModelKind::matrix, 4, 200, 42), opts(ModelKind::mv, 8, 200, 1)}) {
    if (to_json(run_suite("all", o)).dump() != to_json(run_suite("all", o)).dump()) out.fail("library reports differ");
  }
  if (!args.cli.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(args.workdir);
    const fs::path a = fs::path(args.workdir) / "report_a.json";
    const fs::path b = fs::path(args.workdir) / "report_b.json";
    const std::string base = "\"" + args.cli + "\" verify --suite all --model matrix --dim 4 --samples 200 --seed 42";
    const int ra = std::system((base + " --out \"" + a.string() + "\" > /dev/null").c_str());
    const int rb = std::system((base + " --out \"" + b.string() + "\" > /dev/null").c_str());
    if (ra != 0 || rb != 0) out.fail("verify exited nonzero");
    else if (slurp(a).empty() || slurp(a) != slurp(b)) out.fail("CLI reports differ");
  }
  if (out.pass) out.detail = args.cli.empty() ? "library only" : "library and CLI";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Args args;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string key = argv[i];
    if (key == "--cli") args.cli = argv[i + 1];
    else if (key == "--workdir") args.workdir = argv[i + 1];
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"SEA axioms, dims 2-8 x 200, residual <= 1e-8, mv exact, < 60 s", sea_axioms},
      {"symmetrized product fails S3 with a witness", jordan_control},
      {"le:comE five-way agreement, 500 pairs per dim", compatibility_equivalence},
      {"eq:spectresV reconstruction within mesh", reconstruction},
      {"thm:contexts closed form", closed_form},
      {"coro:limit rate and monotonicity", simple_limit},
      {"floor identities and lemma:floor rate", floor_identities},
      {"prop:commut three-way equivalence", commutation_equivalence},
      {"orthogonal decomposition uniqueness", decomposition_uniqueness},
      {"finite-table oracle cross-check", table_oracle},
      {"byte-identical verify reports", [&args] { return determinism(args); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %2zu %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
