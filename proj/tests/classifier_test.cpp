#include <gtest/gtest.h>

#include "wildrep/classifier.hpp"
#include "wildrep/errors.hpp"

using namespace wildrep;

namespace {

const SqrtNeg2Number r2 = SqrtNeg2Number::root();

ClassificationInput q2_input(long a4, long a6, int prec = 64) {
  const LocalField k = LocalField::unramified(1, prec);
  return {k, {k.integer(a4), k.integer(a6)}, {}};
}

ClassificationInput q4_input(std::vector<mpz_class> a4, std::vector<mpz_class> a6, int prec = 64) {
  const LocalField k = LocalField::unramified(2, prec);
  return {k, {k.from_coordinates(0, {a4}), k.from_coordinates(0, {a6})}, {}};
}

ErrorKind kind_of(const ClassificationInput& in) {
  try {
    (void)classify(in);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

SqrtNeg2Number rho_at(const GaloisRepReport& r, const std::string& label) {
  for (const auto& e : r.rho)
    if (e.label == label) return e.value;
  ADD_FAILURE() << "no class " << label;
  return {};
}

}  // namespace

TEST(Chi, Values) {
  EXPECT_EQ(chi_value(1, 1), r2);
  EXPECT_EQ(chi_value(2, 1), SqrtNeg2Number(-2));
  EXPECT_EQ(chi_value(3, 2), SqrtNeg2Number(-8));
  EXPECT_EQ(chi_value(5, 0), SqrtNeg2Number(1));
}

TEST(InertiaDegree, OfF) {
  EXPECT_EQ(f_F_over_Q2(1, true, true), 1);
  EXPECT_EQ(f_F_over_Q2(2, false, true), 6);
  EXPECT_EQ(f_F_over_Q2(4, false, false), 4);
  EXPECT_THROW(f_F_over_Q2(2, true, false), Error);
}

TEST(FrobeniusCharpoly, FrozenCoefficients) {
  EXPECT_EQ(frobenius_charpoly(1), (QuadraticPoly{0, 2}));
  EXPECT_EQ(frobenius_charpoly(2), (QuadraticPoly{4, 4}));
  EXPECT_EQ(frobenius_charpoly(3), (QuadraticPoly{0, 8}));
  EXPECT_EQ(frobenius_charpoly(4), (QuadraticPoly{-8, 16}));
  // T^2 - a_f T + 2^f with a_f the trace on the reduction
  for (int f = 1; f <= 8; ++f) {
    const auto cp = frobenius_charpoly(f);
    EXPECT_EQ(cp.c0, SqrtNeg2Number(1L << f));
    const long af = f % 2 ? 0 : (f % 4 == 2 ? -4 : 8) * (1L << (2 * ((f - 1) / 4)));
    EXPECT_EQ(cp.c1, SqrtNeg2Number(-af)) << f;
  }
}

TEST(Mod3, MatricesAndOrientation) {
  const Mod3Matrices m = mod3_matrices();
  EXPECT_EQ(m.a.trace(), 1);
  EXPECT_EQ(m.b.order(), 2);
  EXPECT_EQ(m.sigma.order(), 4);
  for (int n : {1, 3, 5, 7, 9, 11}) {
    EXPECT_EQ(orient_table(n), Orientation::Standard) << n;
    EXPECT_TRUE(congruent(orientation_value(n, Orientation::Standard), SqrtNeg2Number(1), 3));
    EXPECT_FALSE(congruent(orientation_value(n, Orientation::Dual), SqrtNeg2Number(1), 3));
  }
  EXPECT_THROW(orient_table(2), Error);
}

TEST(DecisionTree, Branches) {
  auto b = branch_for(2, true, true);
  EXPECT_EQ(b.full_group, "Q8");
  EXPECT_EQ(b.inertia_group, "Q8");
  b = branch_for(2, false, true);
  EXPECT_EQ(b.full_group, "SL2F3");
  EXPECT_EQ(b.inertia_group, "Q8");
  b = branch_for(4, false, false);
  EXPECT_EQ(b.full_group, "SL2F3");
  EXPECT_EQ(b.inertia_group, "SL2F3");
  b = branch_for(3, true, true);
  EXPECT_EQ(b.full_group, "SD16");
  EXPECT_EQ(b.inertia_group, "Q8");
  b = branch_for(1, false, false);
  EXPECT_EQ(b.full_group, "GL2F3");
  EXPECT_EQ(b.inertia_group, "SL2F3");
  EXPECT_THROW(branch_for(3, false, true), Error);
}

TEST(Report, RhoValuesSD16) {
  const GaloisRepReport r = report_from_flags(1, true, true);
  EXPECT_FALSE(r.F_galois);
  EXPECT_EQ(rho_at(r, "1"), SqrtNeg2Number(2));
  EXPECT_EQ(rho_at(r, "2A"), SqrtNeg2Number(-2));
  EXPECT_EQ(rho_at(r, "8A"), SqrtNeg2Number(-2));
  EXPECT_EQ(rho_at(r, "8B"), SqrtNeg2Number(2));
  EXPECT_EQ(r.frob_charpoly, frobenius_charpoly(1));
}

TEST(Report, UnramifiedFrobeniusBranch) {
  const GaloisRepReport r = report_from_flags(2, false, true);
  EXPECT_EQ(r.full_group, "SL2F3");
  EXPECT_EQ(r.inertia_group, "Q8");
  EXPECT_EQ(r.f_F, 6);
  EXPECT_TRUE(r.has_unramified_frobenius);
  EXPECT_EQ(r.unramified_frobenius.trace, SqrtNeg2Number(-1));
  // inertia classes carry no Frobenius factor
  EXPECT_EQ(rho_at(r, "2"), SqrtNeg2Number(-2));
  EXPECT_EQ(rho_at(r, "4"), SqrtNeg2Number(0));
  // chi(Frob_K) psi(3A)
  EXPECT_EQ(rho_at(r, "3A"), SqrtNeg2Number(2));
  EXPECT_EQ(rho_at(r, "3B"), SqrtNeg2Number(-4));
}

TEST(Report, DualizeSwapsOnlyOrderEight) {
  const GaloisRepReport r = report_from_flags(3, false, false);
  const GaloisRepReport d = dualize(r);
  EXPECT_TRUE(d.dual_applied);
  EXPECT_EQ(rho_at(d, "8A"), rho_at(r, "8B"));
  EXPECT_EQ(rho_at(d, "8B"), rho_at(r, "8A"));
  EXPECT_EQ(rho_at(d, "3"), rho_at(r, "3"));
  EXPECT_FALSE(dualize(d).dual_applied);
  EXPECT_EQ(rho_at(dualize(d), "8A"), rho_at(r, "8A"));
}

TEST(Classify, Q2Curves) {
  GaloisRepReport r = classify(q2_input(-1, 4));
  EXPECT_EQ(r.full_group, "SD16");
  EXPECT_EQ(r.inertia_group, "Q8");
  EXPECT_EQ(r.f_F, 1);
  EXPECT_EQ(r.degree_F_over_K, 8u);
  EXPECT_EQ(rho_at(r, "8A"), SqrtNeg2Number(-2));
  r = classify(q2_input(1, -3));
  EXPECT_EQ(r.full_group, "GL2F3");
  EXPECT_EQ(r.inertia_group, "SL2F3");
  EXPECT_EQ(r.degree_F_over_K, 24u);
}

TEST(Classify, Q4Curves) {
  EXPECT_EQ(classify(q4_input({-6, -2}, {-6})).full_group, "Q8");
  GaloisRepReport r = classify(q4_input({-6, -3}, {-6, -2}));
  EXPECT_EQ(r.full_group, "SL2F3");
  EXPECT_EQ(r.inertia_group, "Q8");
  EXPECT_EQ(r.f_F, 6);
  r = classify(q4_input({-6, -3}, {-6}));
  EXPECT_EQ(r.full_group, "SL2F3");
  EXPECT_EQ(r.inertia_group, "SL2F3");
  EXPECT_EQ(r.f_F, 2);
}

TEST(Classify, RamifiedBase) {
  const LocalField k = LocalField::eisenstein(1, {{2}, {0}}, 48);
  const LocalElement pi = k.uniformizer();
  const LocalElement a4 = k.integer(-4) - k.integer(2) * pi;
  EXPECT_EQ(classify({k, {a4, k.integer(-2)}, {}}).full_group, "SD16");
  EXPECT_EQ(classify({k, {a4, a4}, {}}).full_group, "GL2F3");
}

TEST(Classify, Rejections) {
  EXPECT_EQ(kind_of(q2_input(0, 1)), ErrorKind::AbelianInertia);
  EXPECT_EQ(kind_of(q2_input(-3, 1026)), ErrorKind::NotPotentiallyGood);
  EXPECT_EQ(kind_of(q2_input(-3, 2)), ErrorKind::Singular);
}

TEST(Classify, ModelIndependence) {
  const LocalField k = LocalField::unramified(1, 64);
  const GaloisRepReport base = classify(q2_input(-1, 4));
  for (long u : {2L, 3L, 6L}) {
    const LocalElement U = k.integer(u);
    const ClassificationInput in{k, {k.integer(-1) * U.pow(4), k.integer(4) * U.pow(6)}, {}};
    EXPECT_TRUE(same_verdict(classify(in), base)) << u;
  }
  // negative powers too
  const LocalElement h = k.integer(2).inverse();
  EXPECT_TRUE(same_verdict(classify({k, {k.integer(-1) * h.pow(4), k.integer(4) * h.pow(6)}, {}}), base));
}

TEST(Escalation, DoublesUntilSuccess) {
  std::vector<int> seen;
  const int got = with_precision_escalation(16, 128, [&](int p) {
    seen.push_back(p);
    require(p >= 64, ErrorKind::InsufficientPrecision, "more");
    return p;
  });
  EXPECT_EQ(got, 64);
  EXPECT_EQ(seen, (std::vector<int>{16, 32, 64}));
  EXPECT_THROW(with_precision_escalation(16, 32,
                                         [](int) -> int { fail(ErrorKind::InsufficientPrecision, "never"); }),
               Error);
  EXPECT_EQ(default_max_precision(16), 256);
  EXPECT_EQ(default_max_precision(100), 400);
}

TEST(Escalation, LowPrecisionRecovers) {
  const auto run = [](int p) { return classify(q4_input({-6, -3}, {-6}, p)); };
  EXPECT_THROW(run(16), Error);
  const GaloisRepReport r = with_precision_escalation(16, 256, run);
  EXPECT_TRUE(same_verdict(r, run(64)));
}
