#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sea/report.hpp"
#include "sea/tolerances.hpp"

namespace sea {

enum class ModelKind { matrix, mv };

// Which binary operation the suites treat as the sequential product.
//   standard    a^{1/2} b a^{1/2} (matrix), pointwise product (mv)
//   jordan      (ab + ba)/2; coincides with the standard product on mv
//   lukasiewicz max(a + b - 1, 0), mv only
enum class ProductKind { standard, jordan, lukasiewicz };

struct SuiteOptions {
  ModelKind model = ModelKind::matrix;
  std::size_t dim = 4;  // matrix dimension or |X| for mv
  int samples = 200;
  std::uint64_t seed = 42;
  Tolerances tol;
  ProductKind product = ProductKind::standard;
};

ModelKind parse_model(std::string_view name);
ProductKind parse_product(std::string_view name);
std::string model_label(const SuiteOptions& o);

// (E1)-(E4) and convexity instances, strong archimedeanity, (S1)-(S5), the
// affinity lemma and the six sharp-element statements.
SuiteReport run_sea_suite(const SuiteOptions& o);
// Compression clauses, compression-base conditions (C1), (C2'), (C3), the
// five-way compatibility equivalence and the compatible-projections lemma.
SuiteReport run_compression_suite(const SuiteOptions& o);
// Projection covers, b-comparability, floors, spectral families and their
// reconstruction, simple approximation, orthogonal decomposition, the
// commutation equivalence and property A on constructed chains.
SuiteReport run_spectrality_suite(const SuiteOptions& o);
// Closed-form spectral families of simple elements, uniqueness of reduced
// representations, eigenvalues and polynomial functional calculus.
SuiteReport run_context_suite(const SuiteOptions& o);
// Built-in finite tables: axioms, order-theoretic invariants, and
// brute-force answers against the MV model.
SuiteReport run_table_suite(const SuiteOptions& o);

// name in {sea, compression, spectrality, context, tables, all}.
// Throws InputError for anything else.
SuiteReport run_suite(std::string_view name, const SuiteOptions& o);

const std::vector<std::string>& suite_names();

// Statement ids every `all` run must cover.
const std::vector<std::string>& required_statements();

}  // namespace sea
