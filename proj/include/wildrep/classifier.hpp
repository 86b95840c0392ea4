#pragma once

// Classification of rho = chi (x) psi for curves with non-abelian inertia:
// the group G = Gal(F(zeta_3)/K), its inertia subgroup, the character of
// psi, the unramified twist chi and the Frobenius data.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "wildrep/cube_tests.hpp"
#include "wildrep/curve_models.hpp"
#include "wildrep/errors.hpp"
#include "wildrep/factor_profile.hpp"
#include "wildrep/finite_groups.hpp"
#include "wildrep/good_field.hpp"
#include "wildrep/sqrt_neg2.hpp"

namespace wildrep {

/// chi(Frob_K^power) = sqrt(-2)^(n * power); chi is trivial on inertia.
inline SqrtNeg2Number chi_value(int n, int power) {
  require(n >= 1 && power >= 0, ErrorKind::Precondition, "chi_value needs n >= 1 and power >= 0");
  return SqrtNeg2Number::root().pow(static_cast<long>(n) * power);
}

/// Inertia degree of F over Q2.
inline int f_F_over_Q2(int n, bool cube_in_K, bool cube_in_Knr) {
  require(!(cube_in_K && !cube_in_Knr), ErrorKind::Internal, "a cube in K is a cube in K^nr");
  return cube_in_Knr && !cube_in_K ? 3 * n : n;
}

/// T^2 + c1 T + c0.
struct QuadraticPoly {
  SqrtNeg2Number c1, c0;
  friend bool operator==(const QuadraticPoly&, const QuadraticPoly&) = default;
  std::string to_string() const {
    std::string s = "T^2";
    if (!(c1 == SqrtNeg2Number())) s += " + (" + c1.to_string() + ")*T";
    if (!(c0 == SqrtNeg2Number())) s += " + (" + c0.to_string() + ")";
    return s;
  }
};

/// Characteristic polynomial of rho(Frob_F) when f_{F/Q2} = f: the roots
/// are (+-sqrt(-2))^f.
inline QuadraticPoly frobenius_charpoly(int f) {
  require(f >= 1, ErrorKind::Precondition, "frobenius_charpoly needs f >= 1");
  const SqrtNeg2Number r = SqrtNeg2Number::root().pow(f);
  const SqrtNeg2Number s = (-SqrtNeg2Number::root()).pow(f);
  return {-(r + s), r * s};
}

struct Mod3Matrices {
  MatF3 b;      // Frobenius
  MatF3 sigma;  // inertia element of order 4
  MatF3 a;      // b * sigma
};

inline Mod3Matrices mod3_matrices() {
  Mod3Matrices m{mats::phi(), mats::sigma(), mats::phi() * mats::sigma()};
  require(m.a == mats::a(), ErrorKind::Internal, "a != b * sigma");
  require(verify_presentation_sd16(m.a, m.b), ErrorKind::Internal, "a, b do not present SD16");
  return m;
}

/// chi(Frob_K) * psi(phi sigma) for the given orientation.
inline SqrtNeg2Number orientation_value(int n, Orientation o) {
  const SqrtNeg2Number psi8A = o == Orientation::Standard ? SqrtNeg2Number::root() : -SqrtNeg2Number::root();
  return chi_value(n, 1) * psi8A;
}

/// For odd n exactly one orientation makes tr rho(Frob_K sigma) = 1 mod 3,
/// matching the trace of a.
inline Orientation orient_table(int n) {
  require(n >= 1 && n % 2 == 1, ErrorKind::Precondition, "orientation is only needed for odd n");
  const SqrtNeg2Number target(mod3_matrices().a.trace());
  const bool standard = congruent(orientation_value(n, Orientation::Standard), target, 3);
  const bool dual = congruent(orientation_value(n, Orientation::Dual), target, 3);
  require(standard != dual, ErrorKind::Internal, "orientation congruence does not single out one table");
  return standard ? Orientation::Standard : Orientation::Dual;
}

/// tr psi(Frob_K) when n is even and the cube root of Delta generates the
/// unramified cubic extension.
struct UnramifiedFrobenius {
  SqrtNeg2Number trace;
  SqrtNeg2Number det;
  bool cube_identity = false;  // (-2)^(3n/2) = ((-2)^(n/2) psi(Frob_K))^3 on eigenvalues
};

inline UnramifiedFrobenius unramified_frobenius_trace(int n) {
  require(n >= 2 && n % 2 == 0, ErrorKind::Precondition, "unramified branch needs even n");
  // psi(Frob_K) has order 3 and determinant 1: eigenvalues are the two
  // primitive cube roots of unity, realized here by tau.
  const MatF3 t = mats::tau();
  require(t.order() == 3 && t.det() == 1, ErrorKind::Internal, "tau is not of order 3 in SL2");
  UnramifiedFrobenius u;
  u.trace = SqrtNeg2Number(-1);
  u.det = SqrtNeg2Number(1);
  // eigenvalue z with z^2 + z + 1 = 0, so z^3 = 1
  const SqrtNeg2Number scal = SqrtNeg2Number(-2).pow(n / 2);
  u.cube_identity = SqrtNeg2Number(-2).pow(3 * n / 2) == scal * scal * scal;
  require(congruent(u.trace, SqrtNeg2Number(t.trace()), 3), ErrorKind::Internal, "trace -1 is not the trace of tau");
  return u;
}

struct Branch {
  std::string full_group;
  std::string inertia_group;
};

/// The decision tree on (parity of n, cube flags).
inline Branch branch_for(int n, bool cube_in_K, bool cube_in_Knr) {
  require(n >= 1, ErrorKind::Precondition, "n must be positive");
  require(!(cube_in_K && !cube_in_Knr), ErrorKind::Internal, "a cube in K is a cube in K^nr");
  if (n % 2 == 0) {
    if (cube_in_K) return {"Q8", "Q8"};
    return {"SL2F3", cube_in_Knr ? "Q8" : "SL2F3"};
  }
  require(cube_in_K || !cube_in_Knr, ErrorKind::Internal,
          "Delta a cube in K^nr but not in K is impossible for odd n");
  if (cube_in_K) return {"SD16", "Q8"};
  return {"GL2F3", "SL2F3"};
}

struct RhoEntry {
  std::string label;
  int frobenius_power = 0;  // exponent of Frob_K in the coset of inertia
  SqrtNeg2Number value;     // chi(Frob_K)^power * psi
};

struct Evidence {
  FactorProfile profile;
  ResolventData resolvent;
  std::vector<TowerLayer> tower;
  int model_scale = 0;  // the input was rescaled by u = pi^model_scale
  int v_discriminant = 0;
  int v_j = 0;
  int v_Aprime = 0;
  int v_good_discriminant = 0;
  bool discriminant_identity = false;
  std::string reduction;
  Transcript transcript;
  std::vector<std::string> congruence;
};

struct GaloisRepReport {
  std::string batch_id;
  unsigned n = 0;
  unsigned e = 0;
  bool cube_in_K = false;
  bool cube_in_Knr = false;
  std::string full_group;
  std::string inertia_group;
  unsigned degree_F_over_K = 0;
  unsigned e_F_over_K = 0;
  unsigned f_F_over_K = 0;
  bool F_galois = false;
  int f_F = 0;
  SqrtNeg2Number chi_frobK;
  CharacterTable psi;
  std::vector<RhoEntry> rho;
  QuadraticPoly frob_charpoly;
  std::vector<SqrtNeg2Number> frob_eigenvalues;
  bool has_unramified_frobenius = false;
  UnramifiedFrobenius unramified_frobenius;
  Mod3Matrices mod3;
  Orientation orientation = Orientation::Standard;
  bool dual_applied = false;
  Evidence evidence;
};

namespace detail {

inline int frobenius_power(const GaloisRepReport& r, const ClassEntry& c, const MatrixGroupF3& inertia) {
  if (inertia.contains(c.representative)) return 0;
  if (r.full_group == "SL2F3") {
    // G/Q8 is cyclic of order 3; Frob_K lies over the coset of tau (3A).
    return c.label == "3A" || c.label == "6A" ? 1 : 2;
  }
  return 1;
}

inline void fill_rho(GaloisRepReport& r) {
  const MatrixGroupF3 inertia = standard_group(r.inertia_group);
  r.rho.clear();
  for (const auto& c : r.psi.classes) {
    const int p = frobenius_power(r, c, inertia);
    r.rho.push_back({c.label, p, chi_value(static_cast<int>(r.n), p) * c.value});
  }
}

}  // namespace detail

/// Everything that depends only on n and the cube flags.
inline GaloisRepReport report_from_flags(int n, bool cube_in_K, bool cube_in_Knr) {
  const Branch b = branch_for(n, cube_in_K, cube_in_Knr);
  GaloisRepReport r;
  r.n = static_cast<unsigned>(n);
  r.cube_in_K = cube_in_K;
  r.cube_in_Knr = cube_in_Knr;
  r.full_group = b.full_group;
  r.inertia_group = b.inertia_group;
  r.F_galois = n % 2 == 0;
  r.f_F = f_F_over_Q2(n, cube_in_K, cube_in_Knr);
  r.chi_frobK = chi_value(n, 1);
  r.orientation = n % 2 == 1 ? orient_table(n) : Orientation::Standard;
  r.psi = psi_table(b.full_group, r.orientation);
  require(check_orthogonality(r.psi) && is_faithful(r.psi), ErrorKind::Internal, "psi is not irreducible and faithful");
  if (b.full_group != b.inertia_group && b.full_group != "SL2F3")
    require(same_values(restrict_to_inertia(r.psi), psi_table(b.inertia_group)), ErrorKind::Internal,
            "psi does not restrict to the inertia character");
  r.frob_charpoly = frobenius_charpoly(r.f_F);
  r.frob_eigenvalues = {SqrtNeg2Number::root().pow(r.f_F), (-SqrtNeg2Number::root()).pow(r.f_F)};
  if (n % 2 == 0 && cube_in_Knr && !cube_in_K) {
    r.has_unramified_frobenius = true;
    r.unramified_frobenius = unramified_frobenius_trace(n);
    require(r.unramified_frobenius.trace == r.psi.at("3A").value, ErrorKind::Internal,
            "tr psi(Frob_K) is not the value on 3A");
  }
  r.mod3 = mod3_matrices();
  if (n % 2 == 1) {
    r.evidence.congruence.push_back("chi(Frob_K) * psi(phi sigma) = " +
                                    orientation_value(n, r.orientation).to_string() + " = tr(a) = " +
                                    std::to_string(r.mod3.a.trace()) + " mod 3");
  }
  detail::fill_rho(r);
  return r;
}

/// Swap the values on 8A and 8B (the dual convention); an involution.
inline GaloisRepReport dualize(GaloisRepReport r) {
  if (!(r.psi.has("8A") && r.psi.has("8B"))) {
    r.dual_applied = !r.dual_applied;
    return r;
  }
  r.psi = detail::swap_order_eight(std::move(r.psi));
  r.psi.orientation = r.psi.orientation == Orientation::Standard ? Orientation::Dual : Orientation::Standard;
  r.orientation = r.psi.orientation;
  r.dual_applied = !r.dual_applied;
  detail::fill_rho(r);
  return r;
}

struct ClassificationOptions {
  bool dual = false;
  std::string batch_id;
};

struct ClassificationInput {
  LocalField field;
  ShortWeierstrass<LocalElement> curve;
  ClassificationOptions options;
};

/// Rescales (a4, a6) by (u^4, u^6), u = pi^k, with the least k >= 0 making
/// both coefficients integral.
inline std::pair<ShortWeierstrass<LocalElement>, int> integral_model(const ShortWeierstrass<LocalElement>& E) {
  auto need = [](const LocalElement& x, int w) {
    if (x.is_zero()) return 0;
    const int v = x.valuation();
    return v >= 0 ? 0 : (-v + w - 1) / w;
  };
  const int k = std::max(need(E.a4, 4), need(E.a6, 6));
  if (k == 0) return {E, 0};
  return {{E.a4.shift(4 * k), E.a6.shift(6 * k)}, k};
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

inline GaloisRepReport classify(const ClassificationInput& in) {
  const LocalField& k = in.field;
  require(in.curve.a4.field_ptr() == k.shared() && in.curve.a6.field_ptr() == k.shared(), ErrorKind::Precondition,
          "curve coefficients are not in the given field");
  const auto [E, scale] = integral_model(in.curve);
  const LocalElement disc = discriminant(E);
  int vj = kInfiniteValuation;
  if (!E.a4.is_zero()) {
    const LocalElement j = j_invariant(E);
    if (!j.is_zero()) vj = j.valuation();
  }
  require(vj >= 0, ErrorKind::NotPotentiallyGood,
          "v(j) = " + std::to_string(vj) + " < 0: no potential good reduction");

  ResolventData rd;
  const FactorProfile profile = factor_profile_over_Knr(gamma_poly(E), k, &rd);
  if (!profile.irreducible)
    fail(ErrorKind::AbelianInertia,
         "gamma is reducible over K^nr, inertia is abelian: " + join(profile.evidence, "; "));

  const GoodField g = build_good_field(E, k, profile);
  const GoodModel m = run_good_model(E, g);

  GaloisRepReport r = report_from_flags(static_cast<int>(k.n()), g.cube_in_K, g.cube_in_Knr);
  r.batch_id = in.options.batch_id;
  r.e = k.e();
  r.degree_F_over_K = g.degree_over_K();
  r.e_F_over_K = g.e_over_K;
  r.f_F_over_K = g.f_over_K;
  require(r.degree_F_over_K == (g.cube_in_K ? 8u : 24u), ErrorKind::Internal, "[F:K] is neither 8 nor 24");
  require(static_cast<int>(k.n() * g.f_over_K) == r.f_F, ErrorKind::Internal,
          "residue degree of F disagrees with the cube flags");
  Evidence& ev = r.evidence;
  ev.profile = profile;
  ev.resolvent = rd;
  ev.tower = g.tower;
  ev.model_scale = scale;
  ev.v_discriminant = disc.valuation();
  ev.v_j = vj;
  ev.v_Aprime = m.v_Aprime;
  ev.v_good_discriminant = m.v_good_discriminant;
  ev.discriminant_identity = m.discriminant_identity;
  ev.reduction = m.reduction;
  ev.transcript = m.transcript;
  if (in.options.dual) r = dualize(std::move(r));
  return r;
}

/// Default cap for precision escalation.
inline int default_max_precision(int start) { return std::max(4 * start, 256); }

/// Calls fn(N) for N = start, 2 start, ... up to max_precision while it
/// throws InsufficientPrecision. The inputs must be rebuilt by fn at each
/// precision; every other error propagates at once.
template <class Fn>
auto with_precision_escalation(int start, int max_precision, Fn&& fn) -> decltype(fn(start)) {
  require(start >= 1 && max_precision >= start, ErrorKind::Precondition, "bad precision range");
  for (int p = start;; p = std::min(2 * p, max_precision)) {
    try {
      return fn(p);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InsufficientPrecision || p >= max_precision) throw;
    }
  }
}

/// The discrete part of a report: groups, flags, tables and Frobenius data.
inline bool same_verdict(const GaloisRepReport& x, const GaloisRepReport& y) {
  if (x.rho.size() != y.rho.size()) return false;
  for (std::size_t i = 0; i < x.rho.size(); ++i)
    if (x.rho[i].label != y.rho[i].label || !(x.rho[i].value == y.rho[i].value) ||
        x.rho[i].frobenius_power != y.rho[i].frobenius_power)
      return false;
  return x.n == y.n && x.cube_in_K == y.cube_in_K && x.cube_in_Knr == y.cube_in_Knr &&
         x.full_group == y.full_group && x.inertia_group == y.inertia_group &&
         x.degree_F_over_K == y.degree_F_over_K && x.f_F == y.f_F && x.chi_frobK == y.chi_frobK &&
         same_values(x.psi, y.psi) && x.frob_charpoly == y.frob_charpoly && x.orientation == y.orientation &&
         x.dual_applied == y.dual_applied;
}

}  // namespace wildrep
