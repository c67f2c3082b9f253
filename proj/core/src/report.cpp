#include "sea/report.hpp"

#include <algorithm>
#include <sstream>

namespace sea {

bool SuiteReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.ok(); });
}

void SuiteReport::normalize() {
  std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    if (a.statement_id != b.statement_id) return a.statement_id < b.statement_id;
    return a.model < b.model;
  });
  std::sort(notes.begin(), notes.end());
  notes.erase(std::unique(notes.begin(), notes.end()), notes.end());
}

void SuiteReport::merge(const SuiteReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  normalize();
}

const CheckResult* SuiteReport::find(const std::string& statement_id) const {
  auto it = std::find_if(results.begin(), results.end(),
                         [&](const CheckResult& r) { return r.statement_id == statement_id; });
  return it == results.end() ? nullptr : &*it;
}

CheckAccumulator::CheckAccumulator(std::string statement_id, std::string model) {
  result_.statement_id = std::move(statement_id);
  result_.model = std::move(model);
}

nlohmann::json to_json(const Tolerances& tol) {
  return {{"psd", tol.psd},         {"projection", tol.projection}, {"eig", tol.eig},
          {"cluster", tol.cluster}, {"kernel", tol.kernel},         {"comm", tol.comm},
          {"residual", tol.residual}, {"hermitian", tol.hermitian}};
}

Tolerances tolerances_from_json(const nlohmann::json& j) {
  Tolerances t;
  t.psd = j.value("psd", t.psd);
  t.projection = j.value("projection", t.projection);
  t.eig = j.value("eig", t.eig);
  t.cluster = j.value("cluster", t.cluster);
  t.kernel = j.value("kernel", t.kernel);
  t.comm = j.value("comm", t.comm);
  t.residual = j.value("residual", t.residual);
  t.hermitian = j.value("hermitian", t.hermitian);
  return t;
}

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j = {{"statement_id", r.statement_id},
                      {"model", r.model},
                      {"samples", r.samples},
                      {"passed", r.passed},
                      {"max_residual", r.max_residual}};
  if (r.witness) {
    // Witnesses are produced as JSON text; keep them structured when possible.
    auto parsed = nlohmann::json::parse(*r.witness, nullptr, false);
    j["witness"] = parsed.is_discarded() ? nlohmann::json(*r.witness) : parsed;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& c : r.results) results.push_back(to_json(c));
  return {{"schema_version", SuiteReport::kSchemaVersion},
          {"seed", r.seed},
          {"config", to_json(r.config)},
          {"results", std::move(results)},
          {"notes", r.notes},
          {"verdict", r.passed() ? "pass" : "fail"}};
}

std::string summarize(const SuiteReport& r) {
  std::ostringstream out;
  out.setf(std::ios::scientific);
  out.precision(2);
  for (const auto& c : r.results) {
    out << (c.ok() ? "PASS " : "FAIL ") << c.statement_id << " [" << c.model << "] " << c.passed
        << "/" << c.samples << " max_residual=" << c.max_residual;
    if (c.witness) out << " witness=" << *c.witness;
    out << '\n';
  }
  for (const auto& n : r.notes) out << "note: " << n << '\n';
  out << "verdict: " << (r.passed() ? "pass" : "fail") << '\n';
  return out.str();
}

}  // namespace sea
