#include <gtest/gtest.h>

#include "wildrep/curve_models.hpp"
#include "wildrep/errors.hpp"
#include "wildrep/factor_profile.hpp"
#include "wildrep/field_builders.hpp"
#include "wildrep/good_field.hpp"
#include "wildrep/quotient_algebra.hpp"

using namespace wildrep;

namespace {

using Curve = ShortWeierstrass<LocalElement>;

struct Input {
  LocalField k;
  Curve E;
};

Input over_q2(long a4, long a6) {
  const LocalField k = LocalField::unramified(1, 64);
  return {k, {k.integer(a4), k.integer(a6)}};
}

// coordinates over W_2: c0 + c1 X
Input over_q4(std::vector<mpz_class> a4, std::vector<mpz_class> a6) {
  const LocalField k = LocalField::unramified(2, 64);
  return {k, {k.from_coordinates(0, {a4}), k.from_coordinates(0, {a6})}};
}

FactorProfile profile_of(const Input& in) { return factor_profile_over_Knr(gamma_poly(in.E), in.k); }

}  // namespace

TEST(FactorProfile, ReducibleWhenA4Vanishes) {
  // t^8 + 108 t^2
  const auto p = profile_of(over_q2(0, 1));
  EXPECT_TRUE(p.certified);
  EXPECT_FALSE(p.irreducible);
  EXPECT_EQ(p.t_power, 2);
  EXPECT_EQ(p.total_degree(), 8);
  ASSERT_FALSE(p.evidence.empty());
  EXPECT_NE(p.evidence.front().find("t^2 divides"), std::string::npos);
}

TEST(FactorProfile, IrreducibleCases) {
  for (const auto& in : {over_q2(-1, 4), over_q2(1, -3), over_q4({-6, -2}, {-6}), over_q4({-6, -3}, {-6})}) {
    const auto p = profile_of(in);
    EXPECT_TRUE(p.certified);
    EXPECT_TRUE(p.irreducible) << p.method;
    EXPECT_EQ(p.total_degree(), 8);
  }
}

TEST(QuotientAlgebra, NormAndCharpoly) {
  const LocalField k = LocalField::unramified(1, 64);
  // t^2 - 3 t + 5
  const QuotientAlgebra A(k, LocalPolynomial({k.integer(5), k.integer(-3), k.one()}));
  const AlgebraElement t = A.generator();
  EXPECT_TRUE(t.norm().equals_to_precision(k.integer(5)));
  const auto cp = t.charpoly();
  ASSERT_EQ(cp.size(), 3u);
  EXPECT_TRUE(cp[0].equals_to_precision(k.integer(5)));
  EXPECT_TRUE(cp[1].equals_to_precision(k.integer(-3)));
  // N(t + 1) = 1 + 3 + 5
  EXPECT_TRUE((t + A.one()).norm().equals_to_precision(k.integer(9)));
  EXPECT_TRUE(((t * t.inverse()) - A.one()).is_zero());
}

TEST(Builders, UnramifiedCubicLayer) {
  const LocalField k = LocalField::unramified(2, 64);
  const Extension ext = unramified_extension(k, 3);
  EXPECT_EQ(ext.field.n(), 6u);
  EXPECT_EQ(ext.field.e(), 1u);
  EXPECT_EQ(ext.layer.f, 3u);
  // the non-cube unit X becomes a cube upstairs
  EXPECT_FALSE(is_cube_in_K(k.unramified_generator()));
  EXPECT_TRUE(is_cube_in_K(ext.embedding.apply(k.unramified_generator())));
}

TEST(Builders, CubeRootLayer) {
  const LocalField k = LocalField::unramified(1, 64);
  const Extension ext = cube_root_extension(k.integer(2), k, 192);
  EXPECT_EQ(ext.field.e(), 3u);
  const LocalElement w = ext.field.uniformizer();
  EXPECT_TRUE((w * w * w).equals_to_precision(ext.embedding.apply(k.integer(2))));
  EXPECT_EQ(ext.embedding.apply(k.integer(2)).valuation(), 3);
}

TEST(GoodField, DegreesPerBranch) {
  struct Case {
    Input in;
    unsigned e, f;
    bool cK, cKnr;
  };
  const std::vector<Case> cases = {
      {over_q2(-1, 4), 8, 1, true, true},
      {over_q2(1, -3), 24, 1, false, false},
      {over_q4({-6, -2}, {-6}), 8, 1, true, true},
      {over_q4({-6, -3}, {-6, -2}), 8, 3, false, true},
      {over_q4({-6, -3}, {-6}), 24, 1, false, false},
  };
  for (const auto& c : cases) {
    const Curve& E = c.in.E;
    const GoodField g = build_good_field(E, c.in.k, profile_of(c.in));
    EXPECT_EQ(g.e_over_K, c.e);
    EXPECT_EQ(g.f_over_K, c.f);
    EXPECT_EQ(g.cube_in_K, c.cK);
    EXPECT_EQ(g.cube_in_Knr, c.cKnr);
    EXPECT_TRUE((g.delta * g.delta * g.delta).equals_to_precision(g.k_to_base.apply(discriminant(E))));
    const GoodModel m = run_good_model(E, g);
    EXPECT_TRUE(m.order_three);
    EXPECT_TRUE(m.discriminant_identity);
    EXPECT_EQ(m.v_good_discriminant, 0);
    EXPECT_GE(m.v_Aprime, 1);
  }
}

TEST(GoodField, AbelianCaseRejected) {
  const Input in = over_q2(0, 1);
  try {
    (void)build_good_field(in.E, in.k, profile_of(in));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AbelianInertia);
  }
}

TEST(ExplicitField, GammaSplitsInTheRealizedField) {
  // independent oracle: an Eisenstein model L of F; both curves are in the
  // SD16 branch, F/K is not Galois and |Aut(F/K)| = 2 roots of gamma lie in L
  for (const auto& in : {over_q2(-1, 4), over_q2(1, 0)}) {
    const LocalField& k = in.k;
    const GoodField g = build_good_field(in.E, k, profile_of(in));
    const ExplicitField x = realize_explicitly(g, in.E);
    EXPECT_EQ(x.field.e(), 8u);
    EXPECT_TRUE(g.cube_in_K);
    ASSERT_EQ(x.gamma_roots.size(), 2u);
    const auto gam = gamma_coefficients(in.E);
    for (const auto& r : x.gamma_roots) {
      const auto rc = charpoly_over_unramified(r, k);
      ASSERT_EQ(rc.size(), 9u);
      for (int i = 0; i < 9; ++i) EXPECT_TRUE(rc[i].equals_to_precision(gam[i])) << i;
    }
    const auto cp = charpoly_over_unramified(x.field.uniformizer(), k);
    ASSERT_EQ(cp.size(), 9u);
    for (int i = 0; i < 8; ++i) EXPECT_GE(cp[i].valuation(), 1) << i;
    EXPECT_EQ(cp[0].valuation(), 1);
  }
}
