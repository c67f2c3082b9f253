#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sea/tolerances.hpp"

namespace sea {

// Outcome of one statement checked over a batch of samples.
struct CheckResult {
  std::string statement_id;
  std::string model;
  int samples = 0;
  int passed = 0;
  std::optional<std::string> witness;  // first failing sample, serialized
  double max_residual = 0.0;

  bool ok() const { return passed == samples; }
};

struct SuiteReport {
  static constexpr int kSchemaVersion = 1;

  std::uint64_t seed = 0;
  Tolerances config;
  std::vector<CheckResult> results;
  std::vector<std::string> notes;

  bool passed() const;
  // Sorts results by (statement_id, model) and de-duplicates notes.
  void normalize();
  void merge(const SuiteReport& other);
  const CheckResult* find(const std::string& statement_id) const;
};

// Accumulates one CheckResult; keeps only the first failing witness.
class CheckAccumulator {
 public:
  CheckAccumulator(std::string statement_id, std::string model);

  // Records one sample. `witness` is evaluated only for the first failure.
  template <class WitnessFn>
  void record(bool pass, double residual, WitnessFn&& witness) {
    ++result_.samples;
    if (residual > result_.max_residual) result_.max_residual = residual;
    if (pass) {
      ++result_.passed;
    } else if (!result_.witness) {
      result_.witness = witness();
    }
  }

  void record(bool pass, double residual = 0.0) {
    record(pass, residual, [] { return std::string("{}"); });
  }

  const CheckResult& result() const { return result_; }
  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

nlohmann::json to_json(const Tolerances& tol);
Tolerances tolerances_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const SuiteReport& r);

// Human-readable one-line-per-check summary.
std::string summarize(const SuiteReport& r);

}  // namespace sea
