#include <gtest/gtest.h>

#include "wildrep/cube_tests.hpp"
#include "wildrep/errors.hpp"
#include "wildrep/local_field.hpp"
#include "wildrep/local_polynomial.hpp"
#include "wildrep/residue_field.hpp"

using namespace wildrep;

TEST(ResidueField, CubesInF4AreZeroAndOne) {
  ResidueField k(2);
  int cubes = 0;
  for (std::uint64_t b = 1; b < 4; ++b) cubes += k.is_cube(k.element(b)) ? 1 : 0;
  EXPECT_EQ(cubes, 1);  // only 1 among the units
  EXPECT_TRUE(k.is_cube(k.one()));
  EXPECT_FALSE(k.is_cube(k.generator()));
}

TEST(ResidueField, OddDegreeEveryUnitIsACube) {
  for (unsigned n : {1u, 3u, 5u}) {
    ResidueField k(n);
    for (std::uint64_t b = 1; b < (1u << n); ++b) EXPECT_TRUE(k.is_cube(k.element(b))) << n << " " << b;
  }
}

TEST(ResidueField, CubeRootOfUnity) {
  EXPECT_FALSE(ResidueField(1).primitive_cube_root_of_unity().has_value());
  ResidueField k(4);
  auto z = k.primitive_cube_root_of_unity();
  ASSERT_TRUE(z.has_value());
  EXPECT_FALSE(*z == k.one());
  EXPECT_TRUE(k.pow(*z, 3) == k.one());
}

TEST(ResidueField, ModulusIrreducible) {
  EXPECT_TRUE(detail::gf2_is_irreducible(0b111));   // x^2+x+1
  EXPECT_FALSE(detail::gf2_is_irreducible(0b101));  // (x+1)^2
  EXPECT_TRUE(detail::gf2_is_irreducible(0b1011));  // x^3+x+1
  EXPECT_THROW(ResidueField(2, 0b101), Error);
}

TEST(LocalField, ValuationsOverQ2) {
  const LocalField k = LocalField::unramified(1, 64);
  EXPECT_EQ(k.integer(12).valuation(), 2);
  EXPECT_EQ(k.integer(-432).valuation(), 4);
  EXPECT_EQ(k.integer(-64).valuation(), 6);
  EXPECT_EQ(k.integer(3).inverse().valuation(), 0);
  EXPECT_EQ((k.integer(1) / k.integer(8)).valuation(), -3);
  EXPECT_TRUE(k.integer(0).is_zero());
}

TEST(LocalField, ArithmeticRoundTrip) {
  const LocalField k = LocalField::unramified(2, 64);
  const LocalElement x = k.unramified_generator() + k.integer(6);
  const LocalElement y = x * x.inverse();
  EXPECT_TRUE(y.equals_to_precision(k.one()));
  EXPECT_TRUE((x.pow(3) / x).equals_to_precision(x * x));
}

TEST(LocalField, RelativePrecisionIsCapped) {
  const LocalField k = LocalField::unramified(1, 32);
  const LocalElement x = k.integer(5);
  EXPECT_EQ(x.relative_precision(), 32);
  EXPECT_EQ(x.shift(10).absolute_precision(), 42);
  // cancellation loses precision instead of inventing digits
  const LocalElement d = (x + k.integer(1 << 20)) - x;
  EXPECT_EQ(d.valuation(), 20);
  EXPECT_LE(d.absolute_precision(), 32);
}

TEST(LocalField, RamifiedSqrtMinus2) {
  // pi^2 + 2 = 0
  const LocalField k = LocalField::eisenstein(1, {{2}, {0}}, 48);
  EXPECT_EQ(k.e(), 2u);
  const LocalElement pi = k.uniformizer();
  EXPECT_EQ(pi.valuation(), 1);
  EXPECT_EQ(k.integer(2).valuation(), 2);
  EXPECT_TRUE((pi * pi + k.integer(2)).is_zero());
}

TEST(LocalField, InsufficientPrecisionIsReported) {
  const LocalField k = LocalField::unramified(1, 16);
  const LocalElement x = k.integer(1) - k.integer(1);
  EXPECT_TRUE(x.is_zero());
  try {
    (void)x.inverse();
    FAIL() << "inverse of zero";
  } catch (const Error& e) {
    EXPECT_TRUE(e.kind() == ErrorKind::InsufficientPrecision || e.kind() == ErrorKind::Precondition);
  }
}

TEST(LocalPolynomial, NewtonPolygons) {
  const LocalField k = LocalField::unramified(1, 64);
  // t^2 - 2: one segment of slope -1/2
  auto np = newton_polygon(LocalPolynomial({k.integer(-2), k.zero(), k.one()}));
  ASSERT_EQ(np.segments.size(), 1u);
  EXPECT_EQ(np.segments[0].slope, mpq_class(-1, 2));
  EXPECT_EQ(np.segments[0].length, 2);
  // t^2 - 3: slope 0
  np = newton_polygon(LocalPolynomial({k.integer(-3), k.zero(), k.one()}));
  ASSERT_EQ(np.segments.size(), 1u);
  EXPECT_EQ(np.segments[0].slope, mpq_class(0));
}

TEST(LocalPolynomial, RootsInField) {
  const LocalField k = LocalField::unramified(1, 64);
  // t^2 + 7 has two roots in Q2
  auto r = roots_in_field(LocalPolynomial({k.integer(7), k.zero(), k.one()}));
  EXPECT_EQ(r.size(), 2u);
  for (const auto& x : r) EXPECT_TRUE((x * x + k.integer(7)).is_zero());
  // t^2 + 1 has none
  EXPECT_TRUE(roots_in_field(LocalPolynomial({k.integer(1), k.zero(), k.one()})).empty());
}

TEST(CubeTests, Q2) {
  const LocalField k = LocalField::unramified(1, 64);
  EXPECT_TRUE(is_cube_in_K(k.integer(3)));  // units of Q2 are cubes
  EXPECT_TRUE(is_cube_in_K(k.integer(8)));
  EXPECT_FALSE(is_cube_in_K(k.integer(2)));
  EXPECT_FALSE(is_cube_in_Knr(k.integer(4)));
  EXPECT_FALSE(is_cube_in_K(k.integer(-432)));  // v = 4
  EXPECT_TRUE(is_cube_in_K(k.integer(-432 * 4)));
  const LocalElement c = hensel_cube_root(k.integer(-27));
  EXPECT_TRUE((c * c * c).equals_to_precision(k.integer(-27)));
}

TEST(CubeTests, Q4NonCubeUnitBecomesCubeOverKnr) {
  const LocalField k = LocalField::unramified(2, 64);
  const LocalElement u = k.unramified_generator();
  EXPECT_FALSE(is_cube_in_K(u));
  EXPECT_TRUE(is_cube_in_Knr(u));
  EXPECT_FALSE(is_cube_in_Knr(u * k.integer(2)));
}
