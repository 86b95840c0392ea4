#pragma once

// Factorization profile of a degree-8 polynomial over K^nr.
//
// Stage 1: split off powers of t, then one Newton-polygon round with
// residual polynomials; separable residuals resolve a segment into parts
// that are totally ramified over K^nr.
//
// Stage 2 (for even polynomials gamma(t) = g(t^2) that stage 1 leaves as a
// single unresolved block): g is a quartic s^4 + p s^2 + q s + r and the
// action on its roots is decided through the cubic resolvent
// R(u) = u^3 + 2p u^2 + (p^2 - 4r) u - q^2 over K'^nr, K' = K(D^(1/3)) with
// D = -(8p^3 + 27q^2). g is irreducible over K^nr exactly when R splits
// over K'^nr and the three square classes u_i are all non-squares there.

#include <gmpxx.h>

#include <numeric>
#include <string>
#include <vector>

#include "wildrep/cube_tests.hpp"
#include "wildrep/errors.hpp"
#include "wildrep/field_builders.hpp"
#include "wildrep/local_field.hpp"
#include "wildrep/local_polynomial.hpp"

namespace wildrep {

struct ProfileSegment {
  mpq_class slope;
  int length = 0;
  std::vector<int> residual_split;  // one entry per part; a single entry == length/e means unresolved
};

struct ProfilePart {
  int degree = 0;
  int e = 0;  // ramification over K^nr; 0 when the part is not resolved further
  int f = 0;
  bool resolved = false;
};

struct FactorProfile {
  int t_power = 0;
  std::vector<ProfileSegment> segments;
  std::vector<ProfilePart> parts;
  bool irreducible = false;
  bool certified = false;
  std::string method;
  std::vector<std::string> evidence;

  int total_degree() const {
    int s = 0;
    for (const auto& p : parts) s += p.degree;
    return s;
  }
};

namespace detail {

inline bool residue_separable(const ResidueField& k, const ResiduePoly& p) {
  if (residue_poly::degree(p) <= 0) return true;
  ResiduePoly d = residue_poly::derivative(k, p);
  if (d.empty()) return false;
  return residue_poly::degree(residue_poly::gcd(k, p, d)) == 0;
}

// Residual polynomial of the segment starting at exponent i0 with slope
// -h/e (in lowest terms) and horizontal length len.
inline ResiduePoly residual_polynomial(const LocalPolynomial& p, int i0, int v0, int h, int e, int len) {
  ResiduePoly r;
  for (int k = 0; k * e <= len; ++k) {
    const LocalElement& c = p[static_cast<std::size_t>(i0 + k * e)];
    const int line = v0 - k * h;
    if (c.is_zero()) {
      require(c.absolute_precision() > line, ErrorKind::InsufficientPrecision,
              "residual coefficient not determined at working precision");
      r.push_back({});
      continue;
    }
    if (c.valuation() > line) r.push_back({});
    else r.push_back(c.unit_part().residue());
  }
  residue_poly::trim(r);
  return r;
}

inline std::string slope_string(const mpq_class& q) { return q.get_str(); }

}  // namespace detail

/// Stage 1 only; returns a profile whose `certified` flag is false when a
/// segment stays unresolved.
inline FactorProfile newton_profile(const LocalPolynomial& poly) {
  const int deg = poly.degree();
  require(deg >= 1, ErrorKind::Precondition, "profile of a constant polynomial");
  require(static_cast<int>(poly.size()) == deg + 1, ErrorKind::Precondition, "polynomial has trailing zeros");
  FactorProfile prof;
  // Powers of t.
  int k = 0;
  while (k < deg && poly[static_cast<std::size_t>(k)].is_zero()) {
    require(poly[static_cast<std::size_t>(k)].is_exact_zero(), ErrorKind::InsufficientPrecision,
            "low coefficient vanishes only to working precision");
    ++k;
  }
  prof.t_power = k;
  for (int i = 0; i < k; ++i) prof.parts.push_back({1, 1, 1, true});
  if (k > 0) prof.evidence.push_back("t^" + std::to_string(k) + " divides the polynomial");
  if (k == deg) {
    prof.certified = true;
    prof.irreducible = deg == 1;
    prof.method = "newton-polygon";
    return prof;
  }
  std::vector<LocalElement> rest(poly.coeffs().begin() + k, poly.coeffs().end());
  const LocalPolynomial q(rest);
  const NewtonPolygon np = newton_polygon(q);
  const auto& kf = q[0].data().residue;
  bool all_resolved = true;
  for (std::size_t s = 0; s < np.segments.size(); ++s) {
    const auto& seg = np.segments[s];
    ProfileSegment ps{seg.slope, seg.length, {}};
    const int e = static_cast<int>(mpz_class(seg.slope.get_den()).get_si());
    const int h = static_cast<int>(mpz_class(-seg.slope.get_num()).get_si());
    const int i0 = np.vertices[s].first;
    const int v0 = np.vertices[s].second;
    const ResiduePoly res = detail::residual_polynomial(q, i0, v0, h, e, seg.length);
    require(residue_poly::degree(res) == seg.length / e, ErrorKind::Internal, "residual polynomial degree mismatch");
    if (detail::residue_separable(kf, res)) {
      for (int j = 0; j < seg.length / e; ++j) {
        ps.residual_split.push_back(1);
        prof.parts.push_back({e, e, 1, true});
      }
    } else {
      ps.residual_split.push_back(seg.length / e);
      prof.parts.push_back({seg.length, 0, 0, false});
      all_resolved = false;
    }
    prof.evidence.push_back("segment slope " + detail::slope_string(seg.slope) + " length " +
                            std::to_string(seg.length) + (ps.residual_split.size() > 1 || ps.residual_split[0] == 1
                                                              ? ": separable residual polynomial"
                                                              : ": inseparable residual polynomial"));
    prof.segments.push_back(std::move(ps));
  }
  prof.method = "newton-polygon";
  if (prof.parts.size() >= 2) {
    prof.irreducible = false;
    prof.certified = true;
  } else {
    prof.irreducible = all_resolved;
    prof.certified = all_resolved;
  }
  return prof;
}

namespace detail {

inline bool is_even_polynomial(const LocalPolynomial& p) {
  for (std::size_t i = 1; i < p.size(); i += 2)
    if (!p[i].is_exact_zero()) return false;
  return true;
}

}  // namespace detail

/// Result of the resolvent stage, kept for the report.
struct ResolventData {
  std::string cube_layer;  // "none" or the Eisenstein polynomial used
  int split_level = 0;      // m with R split over K'_m, 0 if never
  int squares = 0;          // how many of the three square classes are squares
};

/// Decomposition of an even degree-8 polynomial (such as gamma) over K^nr.
/// `k` must be the coefficient field.
inline FactorProfile factor_profile_over_Knr(const LocalPolynomial& poly, const LocalField& k,
                                             ResolventData* data = nullptr) {
  require(poly.degree() == 8, ErrorKind::Precondition, "profile expects a degree-8 polynomial");
  require(poly[0].field_ptr() == k.shared(), ErrorKind::Precondition, "polynomial over a different field");
  require(poly[8].equals_to_precision(k.one()), ErrorKind::Precondition, "profile expects a monic polynomial");
  require(poly.min_valuation() >= 0, ErrorKind::Precondition, "profile expects integral coefficients");
  FactorProfile prof = newton_profile(poly);
  if (prof.certified) return prof;
  require(detail::is_even_polynomial(poly), ErrorKind::Precondition,
          "unresolved block in a polynomial that is not even in t");
  require(prof.t_power == 0, ErrorKind::Internal, "unresolved block after splitting powers of t");

  // g(s) = s^4 + p s^2 + q s + r.
  const LocalElement p = poly[4], q = poly[2], r = poly[0];
  const LocalElement D = -(k.integer(8) * p * p * p + k.integer(27) * q * q);
  require(!D.is_zero(), ErrorKind::InsufficientPrecision, "discriminant vanishes to working precision");

  // K' = K(D^(1/3)) if D is not a cube in K^nr.
  Extension base{k, FieldEmbedding::identity(k), {"unramified", "pi - 2", 1, 1}};
  std::string cube_layer = "none";
  if (!is_cube_in_Knr(D)) {
    const int v = D.valuation();
    const int a = ((v % 3) + 3) % 3 == 1 ? 1 : 2;
    const int b3 = 1 - a * v;  // divisible by 3
    const LocalElement c = D.pow(a) * k.uniformizer().pow(b3);
    base = cube_root_extension(c, k, 3 * k.precision());
    cube_layer = base.layer.modulus;
  }

  ResolventData rd;
  rd.cube_layer = cube_layer;
  int best_roots = 0;
  for (unsigned m = 1; m <= 3; ++m) {
    Extension lvl = base;
    if (m > 1) {
      Extension up = unramified_extension(base.field, m);
      lvl = {up.field, base.embedding.then(up.embedding), up.layer};
    }
    const auto& emb = lvl.embedding;
    const LocalElement pm = emb.apply(p), qm = emb.apply(q), rm = emb.apply(r);
    const LocalField& M = lvl.field;
    const LocalPolynomial R({-(qm * qm), pm * pm - M.integer(4) * rm, M.integer(2) * pm, M.one()});
    const auto roots = roots_in_field(R);
    best_roots = std::max(best_roots, static_cast<int>(roots.size()));
    if (roots.size() < 3) continue;
    rd.split_level = static_cast<int>(m);
    int squares = 0;
    for (const auto& u : roots) {
      LocalElement cls = u;
      if (u.is_zero()) {
        require(q.is_exact_zero(), ErrorKind::InsufficientPrecision, "resolvent root vanishes to working precision");
        cls = pm * pm - M.integer(4) * rm;
      }
      if (is_square_in_Mnr(cls)) ++squares;
    }
    rd.squares = squares;
    if (data) *data = rd;
    prof.method = "cubic-resolvent";
    prof.certified = true;
    prof.parts.clear();
    prof.evidence.push_back("resolvent splits over level " + std::to_string(m) + " of K'^nr; K' layer: " + cube_layer);
    prof.evidence.push_back(std::to_string(squares) + " of 3 resolvent square classes are squares over K'^nr");
    if (squares == 0) {
      prof.irreducible = true;
      prof.parts.push_back({8, 8, 1, true});
    } else if (squares == 1) {
      prof.parts = {{4, 0, 0, false}, {4, 0, 0, false}};
    } else {
      require(squares == 3, ErrorKind::Internal, "square classes of the resolvent are inconsistent");
      prof.parts = {{2, 0, 0, false}, {2, 0, 0, false}, {2, 0, 0, false}, {2, 0, 0, false}};
    }
    return prof;
  }
  if (data) *data = rd;
  prof.method = "cubic-resolvent";
  prof.certified = true;
  prof.irreducible = false;
  prof.parts = {{2, 0, 0, false}, {6, 0, 0, false}};
  prof.evidence.push_back("resolvent has " + std::to_string(best_roots) +
                          " roots over K'^nr; the quartic has a root there");
  return prof;
}

}  // namespace wildrep
