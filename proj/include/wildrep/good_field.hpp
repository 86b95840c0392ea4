#pragma once

// The field F = K(x_P, y_P, Delta^(1/3)) over which the curve acquires good
// reduction, realized as B[t]/(gamma) with B = K, K_3 or K(c^(1/3)), and
// the chain of models ending in y^2 + A'xy + y = x^3.

#include <string>
#include <vector>

#include "wildrep/cube_tests.hpp"
#include "wildrep/curve_models.hpp"
#include "wildrep/errors.hpp"
#include "wildrep/factor_profile.hpp"
#include "wildrep/field_builders.hpp"
#include "wildrep/quotient_algebra.hpp"

namespace wildrep {

struct GoodField {
  LocalField k;
  LocalField base;           // B
  FieldEmbedding k_to_base;  // K -> B
  QuotientAlgebra field;     // F = B[t]/(gamma)
  LocalElement delta;        // cube root of the discriminant, in B
  std::vector<TowerLayer> tower;
  bool cube_in_K = false;
  bool cube_in_Knr = false;
  unsigned e_over_K = 0;
  unsigned f_over_K = 0;
  unsigned degree_over_K() const { return e_over_K * f_over_K; }
  /// [L : K^nr] with L = F^nr.
  unsigned degree_over_Knr() const { return e_over_K; }
};

inline TowerLayer base_layer(const LocalField& k) {
  return {k.is_unramified() ? "unramified" : "eisenstein",
          k.is_unramified() ? "residue degree " + std::to_string(k.n()) : describe_eisenstein(k), k.e(), k.n()};
}

/// Builds F for a short model with integral coefficients whose gamma is
/// certified irreducible over K^nr.
inline GoodField build_good_field(const ShortWeierstrass<LocalElement>& E, const LocalField& k,
                                  const FactorProfile& profile) {
  require(profile.certified, ErrorKind::InsufficientPrecision, "factor profile is not certified");
  require(profile.irreducible, ErrorKind::AbelianInertia, "gamma is reducible over K^nr: abelian inertia");
  require(E.a4.field_ptr() == k.shared(), ErrorKind::Precondition, "curve over a different field");
  const LocalElement disc = discriminant(E);
  GoodField g;
  g.k = k;
  g.cube_in_K = is_cube_in_K(disc);
  g.cube_in_Knr = is_cube_in_Knr(disc);
  require(!(g.cube_in_K && !g.cube_in_Knr), ErrorKind::Internal, "cube in K but not in K^nr");
  g.tower.push_back(base_layer(k));
  unsigned e_base = 1, f_base = 1;
  if (g.cube_in_K) {
    g.base = k;
    g.k_to_base = FieldEmbedding::identity(k);
    g.delta = hensel_cube_root(disc);
  } else if (g.cube_in_Knr) {
    require(k.n() % 2 == 0, ErrorKind::Internal, "cube in K^nr but not in K with odd residue degree");
    Extension ext = unramified_extension(k, 3);
    g.base = ext.field;
    g.k_to_base = ext.embedding;
    g.tower.push_back(ext.layer);
    f_base = 3;
    const LocalElement d = ext.embedding.apply(disc);
    require(is_cube_in_K(d), ErrorKind::Internal, "discriminant is not a cube after the unramified cubic layer");
    g.delta = hensel_cube_root(d);
  } else {
    const int v = disc.valuation();
    const int a = ((v % 3) + 3) % 3 == 1 ? 1 : 2;
    const int b3 = 1 - a * v;
    const LocalElement c = disc.pow(a) * k.uniformizer().pow(b3);
    Extension ext = cube_root_extension(c, k, 3 * k.precision());
    g.base = ext.field;
    g.k_to_base = ext.embedding;
    g.tower.push_back(ext.layer);
    e_base = 3;
    // varpi^3 = Delta^a pi^b3
    const LocalElement eps = ext.field.uniformizer() * ext.embedding.apply(k.uniformizer()).pow(-b3 / 3);
    const LocalElement d = ext.embedding.apply(disc);
    g.delta = a == 1 ? eps : d / eps;
    require((g.delta * g.delta * g.delta).equals_to_precision(d), ErrorKind::Internal,
            "cube root of the discriminant does not cube back");
  }
  std::vector<LocalElement> gam;
  for (const auto& c : gamma_coefficients(E)) gam.push_back(g.k_to_base.apply(c));
  g.field = QuotientAlgebra(g.base, LocalPolynomial(gam)).certified_field(8, 1);
  g.tower.push_back(g.field.layer());
  g.e_over_K = 8 * e_base;
  g.f_over_K = f_base;
  return g;
}

struct GoodModel {
  AlgebraElement lambda;
  CurvePoint<AlgebraElement> point;
  KernelForm<AlgebraElement> kernel;
  GoodForm<AlgebraElement> good;
  bool discriminant_identity = false;  // -27B^4 + (AB)^3 = Delta
  bool order_three = false;
  int v_Aprime = 0;
  int v_good_discriminant = 0;
  std::string reduction;
  Transcript transcript;
};

/// Runs the chain short form -> kernel form -> good form inside F.
inline GoodModel run_good_model(const ShortWeierstrass<LocalElement>& E, const GoodField& g) {
  const QuotientAlgebra& F = g.field;
  ShortWeierstrass<AlgebraElement> EF{F.constant(g.k_to_base.apply(E.a4)), F.constant(g.k_to_base.apply(E.a6))};
  GoodModel m;
  m.lambda = F.generator();
  m.point = torsion_point_from_slope(EF, m.lambda);
  m.order_three = has_order_three(EF, m.point);
  require(m.order_three, ErrorKind::Internal, "torsion point does not have order 3");
  m.kernel = to_kernel_form(EF, m.point, m.lambda, &m.transcript);
  const AlgebraElement disc = F.constant(g.k_to_base.apply(discriminant(E)));
  m.discriminant_identity = (discriminant(m.kernel) - disc).is_zero();
  require(m.discriminant_identity, ErrorKind::Internal, "kernel form changed the discriminant");
  m.good = rescale_to_good_form(m.kernel, F.constant(g.delta), &m.transcript);
  m.v_Aprime = m.good.Aprime.is_zero() ? kInfiniteValuation : m.good.Aprime.valuation();
  m.v_good_discriminant = discriminant(m.good).valuation();
  require(m.v_good_discriminant == 0, ErrorKind::Internal, "good form does not have unit discriminant");
  // A' reduces to 0 and the y-coefficient is 1.
  m.reduction = "y^2 + y = x^3";
  return m;
}

/// F realized as a LocalField L over an unramified base: a uniformizer
/// theta of F is located by search, its characteristic polynomial is
/// Eisenstein and defines L, and gamma is then solved in L directly.
struct ExplicitField {
  AlgebraElement theta;
  std::vector<LocalElement> eisenstein;  // charpoly of theta, low degree first
  LocalField field;
  FieldEmbedding k_to_field;
  std::vector<LocalElement> gamma_roots;
};

inline ExplicitField realize_explicitly(const GoodField& g, const ShortWeierstrass<LocalElement>& E) {
  require(g.base == g.k && g.k.is_unramified(), ErrorKind::Precondition,
          "explicit realization needs F of degree 8 over an unramified K");
  const QuotientAlgebra& F = g.field;
  const LocalField& k = g.k;
  const AlgebraElement two = F.constant(k.integer(2));
  // Seeds: lambda and the elements produced by the good-model chain.
  const GoodModel gm = run_good_model(E, g);
  std::vector<std::pair<AlgebraElement, int>> pool;
  auto add = [&](const AlgebraElement& x) {
    if (x.is_zero()) return false;
    const int v = x.valuation();
    for (const auto& p : pool)
      if (p.second == v) return false;
    pool.emplace_back(x, v);
    return true;
  };
  add(two);
  add(gm.lambda);
  add(gm.point.y);
  add(gm.kernel.B);
  add(gm.good.Aprime);
  // Residue of a unit of F: N(u) = r^8 mod the maximal ideal (F/K totally ramified).
  auto residue_of_unit = [&](const AlgebraElement& u) {
    ResidueElement r = u.norm().unit_part().residue();
    for (int i = 0; i < 3; ++i) r = k.residue().sqrt(r);
    return r;
  };
  AlgebraElement theta;
  int vt = 0;
  for (int round = 0; round < 40 && vt == 0; ++round) {
    for (const auto& [x, v] : pool)
      if (v % 2 != 0) {
        theta = x;
        vt = v;
        break;
      }
    if (vt) break;
    bool grew = false;
    for (std::size_t i = 0; i < pool.size() && !grew; ++i)
      for (std::size_t j = 0; j < pool.size() && !grew; ++j)
        for (int a = 1; a <= 8 && !grew; ++a)
          for (int b = 0; b <= 8 && !grew; ++b) {
            const int tot = a * pool[i].second + b * pool[j].second;
            if (tot % 8 != 0) continue;
            const AlgebraElement u = pool[i].first.pow(a) * pool[j].first.pow(b) * two.pow(-tot / 8);
            const AlgebraElement w = u - F.constant(k.lift(residue_of_unit(u)));
            grew = add(w);
          }
    require(grew, ErrorKind::InsufficientPrecision, "uniformizer search stalled");
  }
  require(vt != 0, ErrorKind::InsufficientPrecision, "no element of odd valuation found");
  // a*vt + 8b = 1
  int a = 1;
  while (((a * vt - 1) % 8 + 8) % 8 != 0) ++a;
  const int b = (1 - a * vt) / 8;
  ExplicitField out;
  out.theta = theta.pow(a) * two.pow(b);
  require(out.theta.valuation() == 1, ErrorKind::Internal, "uniformizer search produced the wrong valuation");
  auto cp = out.theta.charpoly();
  out.eisenstein = cp;
  int kb = INT_MAX;
  std::vector<std::vector<mpz_class>> co;
  for (int i = 0; i < 8; ++i) {
    const LocalElement& c = cp[static_cast<std::size_t>(i)];
    require(c.absolute_precision() > 1, ErrorKind::InsufficientPrecision,
            "characteristic polynomial of the uniformizer not known to precision");
    require(c.is_zero() || c.valuation() >= 1, ErrorKind::Internal, "characteristic polynomial is not Eisenstein");
    kb = std::min(kb, c.absolute_precision());
    co.push_back(cp[static_cast<std::size_t>(i)].integral_coordinates());
  }
  const int prec = std::min(8 * k.precision(), max_precision_for_bits(8, kb));
  require(prec >= 64, ErrorKind::InsufficientPrecision, "Eisenstein polynomial known to too few digits");
  for (auto& row : co)
    for (auto& z : row) detail::mod2k(z, static_cast<unsigned>(kb));
  out.field = LocalField::eisenstein(k.n(), co, prec, k.residue().modulus(), kb);
  out.k_to_field = {k, out.field, out.field.unramified_generator(), out.field.integer(2), 8};
  std::vector<LocalElement> gam;
  for (const auto& c : gamma_coefficients(E)) gam.push_back(out.k_to_field.apply(c));
  out.gamma_roots = roots_in_field(LocalPolynomial(gam));
  return out;
}

}  // namespace wildrep
