#include <gtest/gtest.h>

#include <string>

#include "sea/report.hpp"

namespace sea {
namespace {

TEST(Report, AccumulatorKeepsFirstWitness) {
  CheckAccumulator acc("S1", "m");
  acc.record(true, 0.5);
  acc.record(false, 0.1, [] { return std::string("first"); });
  acc.record(false, 2.0, [] { return std::string("second"); });
  const auto r = acc.take();
  EXPECT_EQ(r.samples, 3);
  EXPECT_EQ(r.passed, 1);
  EXPECT_EQ(r.witness, "first");
  EXPECT_EQ(r.max_residual, 2.0);
  EXPECT_FALSE(r.ok());
}

TEST(Report, NormalizeSortsAndDeduplicates) {
  SuiteReport r;
  r.results = {{"b", "m", 1, 1, {}, 0}, {"a", "z", 1, 1, {}, 0}, {"a", "m", 1, 1, {}, 0}};
  r.notes = {"x", "y", "x"};
  r.normalize();
  EXPECT_EQ(r.results[0].statement_id, "a");
  EXPECT_EQ(r.results[0].model, "m");
  EXPECT_EQ(r.results[2].statement_id, "b");
  EXPECT_EQ(r.notes.size(), 2U);
  EXPECT_TRUE(r.passed());
  r.results[1].passed = 0;
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.find("b")->statement_id, "b");
  EXPECT_EQ(r.find("nope"), nullptr);
}

TEST(Report, TolerancesRoundTrip) {
  Tolerances t;
  t.psd = 1e-7;
  t.comm = 3e-9;
  const auto back = tolerances_from_json(to_json(t));
  EXPECT_EQ(back.psd, 1e-7);
  EXPECT_EQ(back.comm, 3e-9);
  EXPECT_EQ(back.cluster, t.cluster);
}

TEST(Report, JsonShape) {
  SuiteReport r;
  r.seed = 9;
  r.results = {{"S3", "matrix(dim=2)", 4, 3, std::string("{}"), 1e-3}};
  const auto j = to_json(r);
  EXPECT_EQ(j.at("seed"), 9);
  EXPECT_EQ(j.at("results").size(), 1U);
  const auto& c = j.at("results")[0];
  EXPECT_EQ(c.at("statement_id"), "S3");
  EXPECT_EQ(c.at("samples"), 4);
  EXPECT_EQ(c.at("passed"), 3);
  EXPECT_FALSE(summarize(r).empty());
}

}  // namespace
}  // namespace sea
