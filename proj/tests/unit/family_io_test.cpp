#include <gtest/gtest.h>

#include <vector>

#include "sea/error.hpp"
#include "sea/family_io.hpp"
#include "sea/matrix_context.hpp"
#include "test_support.hpp"

namespace sea {
namespace {

TEST(FamilyIo, MatrixRoundTrip) {
  auto g = test::make_rng(41);
  const MatrixContext ctx;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto a = test::with_spectrum(test::oracle_unitary(n, g), test::unit_values(n, g));
    const auto f = spectral_family(ctx, a);
    const auto back = matrix_family_from_json(nlohmann::json::parse(to_json(f).dump()));
    EXPECT_EQ(back.breakpoints, f.breakpoints);
    EXPECT_EQ(back.lower, f.lower);
    EXPECT_EQ(back.upper, f.upper);
    ASSERT_EQ(back.projections.size(), f.projections.size());
    for (std::size_t k = 0; k < f.projections.size(); ++k) EXPECT_EQ(back.projections[k], f.projections[k]);
  }
}

TEST(FamilyIo, MvRoundTrip) {
  const auto f = mv_spectral_family(FuzzySet::validate({0.2, 0.2, 0.9}));
  const auto back = mv_family_from_json(to_json(f));
  EXPECT_EQ(back.breakpoints, f.breakpoints);
  EXPECT_EQ(back.projections, f.projections);
}

TEST(FamilyIo, RejectsMalformed) {
  auto j = to_json(mv_spectral_family(FuzzySet::validate({0.2, 0.9})));
  auto short_j = j;
  short_j["projections"].erase(0);
  EXPECT_THROW(mv_family_from_json(short_j), InputError);
  auto unsorted = j;
  unsorted["breakpoints"] = {0.9, 0.2};
  EXPECT_THROW(mv_family_from_json(unsorted), InputError);
  EXPECT_THROW(mv_family_from_json(nlohmann::json{{"L", 0}}), InputError);
}

}  // namespace
}  // namespace sea
