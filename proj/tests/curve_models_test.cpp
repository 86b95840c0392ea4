#include <gtest/gtest.h>

#include "wildrep/curve_models.hpp"
#include "wildrep/errors.hpp"
#include "wildrep/local_field.hpp"

using namespace wildrep;

namespace {

LocalField q2() { return LocalField::unramified(1, 64); }

ShortWeierstrass<LocalElement> curve(const LocalField& k, long a4, long a6) {
  return {k.integer(a4), k.integer(a6)};
}

}  // namespace

TEST(Discriminant, FrozenValues) {
  const LocalField k = q2();
  EXPECT_TRUE(discriminant(curve(k, 0, 1)).equals_to_precision(k.integer(-432)));
  EXPECT_TRUE(discriminant(curve(k, 1, 0)).equals_to_precision(k.integer(-64)));
  // -16(4*(-1)^3 + 27*16) = -6848
  EXPECT_TRUE(discriminant(curve(k, -1, 4)).equals_to_precision(k.integer(-6848)));
  EXPECT_THROW(discriminant(curve(k, -3, 2)), Error);
}

TEST(JInvariant, FrozenValues) {
  const LocalField k = q2();
  EXPECT_TRUE(j_invariant(curve(k, 0, 1)).is_zero());
  EXPECT_TRUE(j_invariant(curve(k, 1, 0)).equals_to_precision(k.integer(1728)));
  // v(j) = -4 for y^2 = x^3 - 3x + 1026
  EXPECT_EQ(j_invariant(curve(k, -3, 1026)).valuation(), -4);
}

TEST(Gamma, Coefficients) {
  const LocalField k = q2();
  const auto c = gamma_coefficients(curve(k, 2, 3));
  ASSERT_EQ(c.size(), 9u);
  const long expect[9] = {-108, 0, 324, 0, 36, 0, 0, 0, 1};
  for (int i = 0; i < 9; ++i) EXPECT_TRUE(c[i].equals_to_precision(k.integer(expect[i]))) << i;
  // a4 = 0, a6 = 1: t^8 + 108 t^2
  const auto g = gamma_coefficients(curve(k, 0, 1));
  EXPECT_TRUE(g[0].is_zero());
  EXPECT_TRUE(g[2].equals_to_precision(k.integer(108)));
  EXPECT_TRUE(g[4].is_zero());
}

TEST(Chain, RationalSlopeGivesThreeTorsion) {
  // gamma(1) = 0 for a4 = 1, a6 = 2/27
  const LocalField k = q2();
  const ShortWeierstrass<LocalElement> E{k.integer(1), k.integer(2) / k.integer(27)};
  const LocalElement lambda = k.one();
  EXPECT_TRUE(eval_poly(gamma_coefficients(E), lambda).is_zero());
  const auto P = torsion_point_from_slope(E, lambda);
  EXPECT_TRUE(on_curve(E, P));
  EXPECT_TRUE(has_order_three(E, P));
  Transcript tr;
  const auto M = to_kernel_form(E, P, lambda, &tr);
  EXPECT_EQ(tr.size(), 1u);
  EXPECT_TRUE(discriminant(M).equals_to_precision(discriminant(E)));
  EXPECT_TRUE(j_invariant(M).equals_to_precision(j_invariant(E)));
  EXPECT_TRUE(M.A.equals_to_precision(k.integer(2)));
}

TEST(Chain, SlopeMustBeARoot) {
  const LocalField k = q2();
  EXPECT_THROW(torsion_point_from_slope(curve(k, -1, 4), k.one()), Error);
}

TEST(ReducedCurve, PointCounts) {
  EXPECT_EQ(count_points({1}), 3);
  EXPECT_EQ(count_points({2}), 9);
  EXPECT_EQ(count_points({3}), 9);
  EXPECT_EQ(count_points({4}), 9);
  for (unsigned f = 1; f <= 12; ++f)
    EXPECT_EQ(count_points_enumerate(f), (std::int64_t{1} << f) + 1 - frobenius_trace(f)) << f;
}

TEST(ReducedCurve, FrobeniusTraces) {
  EXPECT_EQ(frobenius_trace(1), 0);
  EXPECT_EQ(frobenius_trace(2), -4);
  EXPECT_EQ(frobenius_trace(4), 8);
  EXPECT_EQ(frobenius_trace(6), -16);
  EXPECT_EQ(frobenius_trace(7), 0);
}

TEST(ReducedCurve, ThreeTorsion) {
  for (unsigned f = 1; f <= 6; ++f) {
    const auto t = reduced_three_torsion({f});
    const auto s = search_three_torsion(f);
    EXPECT_EQ(t.points.size(), f % 2 ? 2u : 8u) << f;
    EXPECT_EQ(s.size(), t.points.size()) << f;
    EXPECT_EQ(t.complete, f % 2 == 0);
  }
}
