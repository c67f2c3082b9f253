#include <gtest/gtest.h>

#include <set>
#include <string>

#include "sea/error.hpp"
#include "sea/verifier.hpp"

namespace sea {
namespace {

SuiteOptions matrix_opts(std::size_t dim, int samples, std::uint64_t seed) {
  SuiteOptions o;
  o.dim = dim;
  o.samples = samples;
  o.seed = seed;
  return o;
}

SuiteOptions mv_opts(std::size_t size, int samples, std::uint64_t seed) {
  SuiteOptions o = matrix_opts(size, samples, seed);
  o.model = ModelKind::mv;
  return o;
}

std::string failures(const SuiteReport& r) {
  std::string out;
  for (const auto& c : r.results)
    if (!c.ok()) out += c.statement_id + " " + c.witness.value_or("") + "\n";
  return out;
}

TEST(Verifier, SeaMatrix) {
  const auto r = run_sea_suite(matrix_opts(4, 200, 42));
  EXPECT_TRUE(r.passed()) << failures(r);
  for (const char* id : {"S1", "S2", "S3", "S4", "S5"}) {
    const auto* c = r.find(id);
    ASSERT_NE(c, nullptr) << id;
    EXPECT_EQ(c->samples, 200) << id;
    EXPECT_LT(c->max_residual, 1e-8) << id;
  }
}

TEST(Verifier, SeaMvExact) {
  const auto r = run_sea_suite(mv_opts(8, 200, 1));
  EXPECT_TRUE(r.passed()) << failures(r);
  for (const char* id : {"S1", "S2", "S3", "S4", "S5"}) EXPECT_EQ(r.find(id)->max_residual, 0.0) << id;
}

TEST(Verifier, JordanProductBreaksS3) {
  auto o = matrix_opts(4, 200, 42);
  o.product = ProductKind::jordan;
  const auto r = run_sea_suite(o);
  const auto* s3 = r.find("S3");
  ASSERT_NE(s3, nullptr);
  EXPECT_FALSE(s3->ok());
  ASSERT_TRUE(s3->witness.has_value());
  const auto w = nlohmann::json::parse(*s3->witness);
  EXPECT_TRUE(w.contains("a"));
  EXPECT_TRUE(w.contains("b"));
  EXPECT_FALSE(r.passed());
}

TEST(Verifier, LukasiewiczRejectedOnMatrix) {
  auto o = matrix_opts(2, 10, 1);
  o.product = ProductKind::lukasiewicz;
  EXPECT_THROW(run_sea_suite(o), InputError);
}

TEST(Verifier, NegativeControlsFire) {
  const auto sea = run_sea_suite(matrix_opts(3, 100, 5));
  ASSERT_NE(sea.find("neg:jordan-S3"), nullptr);
  EXPECT_TRUE(sea.find("neg:jordan-S3")->ok());
  const auto mv = run_sea_suite(mv_opts(4, 100, 5));
  ASSERT_NE(mv.find("neg:lukasiewicz-S1"), nullptr);
  EXPECT_TRUE(mv.find("neg:lukasiewicz-S1")->ok());
  const auto comp = run_compression_suite(matrix_opts(3, 100, 5));
  ASSERT_NE(comp.find("neg:nonprojection-focus"), nullptr);
  EXPECT_TRUE(comp.find("neg:nonprojection-focus")->ok());
  const auto spectral = run_spectrality_suite(matrix_opts(3, 100, 5));
  EXPECT_TRUE(spectral.find("neg:floor-as-cover")->ok());
  const auto ctx = run_context_suite(matrix_opts(3, 100, 5));
  EXPECT_TRUE(ctx.find("neg:perturbed-closed-form")->ok());
  const auto tables = run_table_suite(matrix_opts(3, 1, 5));
  EXPECT_TRUE(tables.find("neg:broken-table")->ok());
}

TEST(Verifier, Compression) {
  const auto r = run_compression_suite(matrix_opts(4, 200, 42));
  EXPECT_TRUE(r.passed()) << failures(r);
  EXPECT_LT(r.find("lemma:compatible_projs")->max_residual, 1e-9);
}

TEST(Verifier, Spectrality) {
  const auto m = run_spectrality_suite(matrix_opts(6, 100, 7));
  EXPECT_TRUE(m.passed()) << failures(m);
  const auto v = run_spectrality_suite(mv_opts(16, 100, 7));
  EXPECT_TRUE(v.passed()) << failures(v);
}

TEST(Verifier, Contexts) {
  EXPECT_TRUE(run_context_suite(matrix_opts(5, 100, 3)).passed());
  const auto v = run_context_suite(mv_opts(8, 100, 3));
  EXPECT_TRUE(v.passed()) << failures(v);
  EXPECT_EQ(v.find("thm:contexts")->max_residual, 0.0);
}

TEST(Verifier, AllCoversRequiredStatements) {
  for (const auto& o : {matrix_opts(3, 20, 11), mv_opts(5, 20, 11)}) {
    const auto r = run_suite("all", o);
    EXPECT_TRUE(r.passed()) << failures(r);
    std::set<std::string> ids;
    for (const auto& c : r.results) ids.insert(c.statement_id);
    for (const auto& id : required_statements()) EXPECT_TRUE(ids.count(id)) << id;
  }
}

TEST(Verifier, Deterministic) {
  const auto o = matrix_opts(3, 30, 99);
  EXPECT_EQ(to_json(run_suite("all", o)).dump(), to_json(run_suite("all", o)).dump());
  auto other = o;
  other.seed = 100;
  EXPECT_NE(to_json(run_suite("sea", o)).dump(), to_json(run_suite("sea", other)).dump());
}

TEST(Verifier, InputErrors) {
  EXPECT_THROW(run_suite("bogus", matrix_opts(2, 1, 1)), InputError);
  EXPECT_THROW(parse_model("tensor"), InputError);
  EXPECT_THROW(parse_product("cubic"), InputError);
  EXPECT_THROW(run_sea_suite(matrix_opts(0, 1, 1)), InputError);
  EXPECT_EQ(parse_model("mv"), ModelKind::mv);
  EXPECT_EQ(model_label(matrix_opts(4, 1, 1)), "matrix(dim=4)");
  EXPECT_EQ(model_label(mv_opts(8, 1, 1)), "mv(size=8)");
}

}  // namespace
}  // namespace sea
