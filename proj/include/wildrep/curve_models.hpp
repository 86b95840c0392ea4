#pragma once

// Weierstrass models: short form y^2 = x^3 + a4 x + a6, kernel form
// y^2 + Axy + By = x^3, good form y^2 + A'xy + y = x^3, and the reduced
// curve y^2 + y = x^3 over F_{2^f}.
//
// The model types are templates over the coefficient type so the same code
// runs over a LocalField and over an extension algebra. T must provide
// + - * /, unary -, is_zero(), valuation(), one_like(), integer_like(long)
// and to_string().

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wildrep/cube_tests.hpp"
#include "wildrep/errors.hpp"
#include "wildrep/local_field.hpp"
#include "wildrep/local_polynomial.hpp"
#include "wildrep/residue_field.hpp"

namespace wildrep {

template <class T>
struct ShortWeierstrass {
  T a4, a6;
};

template <class T>
struct KernelForm {
  T A, B;
};

template <class T>
struct GoodForm {
  T Aprime;
};

template <class T>
struct CurvePoint {
  T x, y;
};

struct ReducedCurve {
  unsigned f = 1;
};

/// One change of variables, recorded for audit.
struct TranscriptStep {
  std::string name;
  std::vector<std::pair<std::string, std::string>> values;
};
using Transcript = std::vector<TranscriptStep>;

template <class T>
T discriminant(const ShortWeierstrass<T>& E) {
  const T d = E.a4.integer_like(-16) *
              (E.a4.integer_like(4) * E.a4 * E.a4 * E.a4 + E.a4.integer_like(27) * E.a6 * E.a6);
  require(!d.is_zero(), ErrorKind::Singular, "singular model or insufficient precision");
  return d;
}

template <class T>
T j_invariant(const ShortWeierstrass<T>& E) {
  const T d = discriminant(E);
  const T f = E.a4.integer_like(4) * E.a4;
  return E.a4.integer_like(-1728) * f * f * f / d;
}

/// -27 B^4 + (AB)^3.
template <class T>
T discriminant(const KernelForm<T>& M) {
  const T b2 = M.B * M.B;
  const T ab = M.A * M.B;
  return M.A.integer_like(-27) * b2 * b2 + ab * ab * ab;
}

/// A^3 (A^3 - 24B)^3 / (B^3 (A^3 - 27B)).
template <class T>
T j_invariant(const KernelForm<T>& M) {
  const T a3 = M.A * M.A * M.A;
  const T u = a3 - M.A.integer_like(24) * M.B;
  return a3 * u * u * u / (M.B * M.B * M.B * (a3 - M.A.integer_like(27) * M.B));
}

/// A'^3 - 27.
template <class T>
T discriminant(const GoodForm<T>& G) {
  return G.Aprime * G.Aprime * G.Aprime - G.Aprime.integer_like(27);
}

/// Coefficients (low degree first) of t^8 + 18 a4 t^4 + 108 a6 t^2 - 27 a4^2.
template <class T>
std::vector<T> gamma_coefficients(const ShortWeierstrass<T>& E) {
  const T z = E.a4.integer_like(0);
  std::vector<T> c(9, z);
  c[0] = E.a4.integer_like(-27) * E.a4 * E.a4;
  c[2] = E.a4.integer_like(108) * E.a6;
  c[4] = E.a4.integer_like(18) * E.a4;
  c[8] = E.a4.one_like();
  return c;
}

inline LocalPolynomial gamma_poly(const ShortWeierstrass<LocalElement>& E) {
  return LocalPolynomial(gamma_coefficients(E));
}

template <class T>
T eval_poly(const std::vector<T>& c, const T& x) {
  T r = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) r = r * x + c[i];
  return r;
}

template <class T>
bool on_curve(const ShortWeierstrass<T>& E, const CurvePoint<T>& P) {
  return (P.y * P.y - (P.x * P.x * P.x + E.a4 * P.x + E.a6)).is_zero();
}

/// [2]P by the tangent construction (P not 2-torsion).
template <class T>
CurvePoint<T> double_point(const ShortWeierstrass<T>& E, const CurvePoint<T>& P) {
  require(!P.y.is_zero(), ErrorKind::Precondition, "doubling a 2-torsion point");
  const T m = (P.x.integer_like(3) * P.x * P.x + E.a4) / (P.y.integer_like(2) * P.y);
  const T x2 = m * m - P.x.integer_like(2) * P.x;
  return {x2, m * (P.x - x2) - P.y};
}

/// Order-3 witness: [2]P = -P.
template <class T>
bool has_order_three(const ShortWeierstrass<T>& E, const CurvePoint<T>& P) {
  const auto Q = double_point(E, P);
  return (Q.x - P.x).is_zero() && (Q.y + P.y).is_zero();
}

/// (lambda^2/3, (lambda^4 + 3 a4)/(6 lambda)) for a root lambda of gamma.
template <class T>
CurvePoint<T> torsion_point_from_slope(const ShortWeierstrass<T>& E, const T& lambda) {
  require(!lambda.is_zero(), ErrorKind::Precondition, "slope 0 does not give a torsion point");
  require(eval_poly(gamma_coefficients(E), lambda).is_zero(), ErrorKind::Precondition,
          "slope is not a root of gamma");
  const T l2 = lambda * lambda;
  return {l2 / lambda.integer_like(3), (l2 * l2 + lambda.integer_like(3) * E.a4) / (lambda.integer_like(6) * lambda)};
}

/// x -> x + x_P, y -> y + lambda x + y_P. Returns y^2 + Axy + By = x^3.
template <class T>
KernelForm<T> to_kernel_form(const ShortWeierstrass<T>& E, const CurvePoint<T>& P, const T& lambda,
                             Transcript* transcript = nullptr) {
  const T three = lambda.integer_like(3), two = lambda.integer_like(2);
  // Coefficients of x^2, x, 1 on the right after moving everything over.
  const T c2 = three * P.x - lambda * lambda;
  const T c1 = three * P.x * P.x + E.a4 - two * lambda * P.y;
  const T c0 = P.x * P.x * P.x + E.a4 * P.x + E.a6 - P.y * P.y;
  require(c2.is_zero() && c1.is_zero() && c0.is_zero(), ErrorKind::Precondition,
          "transformed equation keeps x^2, x or constant terms");
  KernelForm<T> M{two * lambda, two * P.y};
  require(!M.B.is_zero(), ErrorKind::Precondition, "kernel form needs B != 0");
  if (transcript)
    transcript->push_back({"translate",
                           {{"x", "x + x_P"}, {"y", "y + lambda*x + y_P"}, {"x_P", P.x.to_string()},
                            {"y_P", P.y.to_string()}, {"lambda", lambda.to_string()},
                            {"A", M.A.to_string()}, {"B", M.B.to_string()}}});
  return M;
}

/// Newton iteration for z^3 = w from z = 1; needs w = 1 mod the maximal ideal.
template <class T>
T cube_root_near_one(const T& w) {
  T z = w.one_like();
  const T three = w.integer_like(3);
  for (int iter = 0; iter < 64; ++iter) {
    const T err = z * z * z - w;
    if (err.is_zero()) return z;
    z = z - err / (three * z * z);
  }
  require((z * z * z - w).is_zero(), ErrorKind::InsufficientPrecision, "cube root iteration did not converge");
  return z;
}

/// x -> (B^(1/3))^2 x, y -> B y. `delta` is a cube root of the discriminant
/// in the ambient field; then B^(1/3) = -delta / (3 z B) with z^3 = 1 - A^3/(27B).
template <class T>
GoodForm<T> rescale_to_good_form(const KernelForm<T>& M, const T& delta, Transcript* transcript = nullptr) {
  require(!M.B.is_zero(), ErrorKind::Precondition, "kernel form needs B != 0");
  require(!delta.is_zero(), ErrorKind::Precondition, "cube root of the discriminant is zero");
  require((delta * delta * delta - discriminant(M)).is_zero(), ErrorKind::Precondition,
          "delta is not a cube root of the discriminant");
  const T ratio = M.A * M.A * M.A / (M.A.integer_like(27) * M.B);
  require(ratio.is_zero() || ratio.valuation() > 0, ErrorKind::WrongBranch,
          "model not potentially good / wrong branch: v(A^3/27B) <= 0");
  const T w = M.A.one_like() - ratio;
  const T z = cube_root_near_one(w);
  const T cb = -delta / (M.A.integer_like(3) * z * M.B);
  require((cb * cb * cb - M.B).is_zero(), ErrorKind::Internal, "rescaling factor is not a cube root of B");
  GoodForm<T> G{M.A / cb};
  require(G.Aprime.is_zero() || G.Aprime.valuation() > 0, ErrorKind::WrongBranch,
          "model not potentially good / wrong branch: v(A') <= 0");
  if (transcript)
    transcript->push_back({"rescale",
                           {{"x", "(B^(1/3))^2 * x"}, {"y", "B * y"}, {"B^(1/3)", cb.to_string()},
                            {"A'", G.Aprime.to_string()}}});
  return G;
}

/// Over a field where B is already a cube (uses a Hensel cube root of B).
inline GoodForm<LocalElement> rescale_to_good_form(const KernelForm<LocalElement>& M,
                                                   Transcript* transcript = nullptr) {
  const LocalElement d = discriminant(M);
  require(is_cube_in_K(d), ErrorKind::FieldTooSmall, "field too small: construct F first");
  return rescale_to_good_form(M, hensel_cube_root(d), transcript);
}

// ---- the reduced curve y^2 + y = x^3 over F_{2^f} ----

namespace detail {
struct ReducedPoint {
  bool infinity = false;
  ResidueElement x, y;
  friend bool operator==(const ReducedPoint&, const ReducedPoint&) = default;
};

inline ReducedPoint reduced_neg(const ReducedPoint& p) {
  if (p.infinity) return p;
  return {false, p.x, {p.y.bits ^ 1}};
}

inline ReducedPoint reduced_add(const ResidueField& k, const ReducedPoint& p, const ReducedPoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (q == reduced_neg(p)) return {true, {}, {}};
  ResidueElement m;
  if (p == q) {
    m = k.square(p.x);  // (3x^2)/(2y+1) in characteristic 2
  } else {
    m = k.mul(k.add(q.y, p.y), k.inverse(k.add(q.x, p.x)));
  }
  const ResidueElement x3 = k.add(k.add(k.square(m), p.x), q.x);
  const ResidueElement y3 = k.add(k.add(k.mul(m, k.add(p.x, x3)), p.y), k.one());
  return {false, x3, y3};
}
}  // namespace detail

/// Enumerates points; the y-count per x uses the trace criterion above f = 8.
inline std::int64_t count_points_enumerate(unsigned f) {
  require(f >= 1 && f <= 16, ErrorKind::Precondition, "enumeration is limited to f <= 16");
  ResidueField k(f);
  std::int64_t count = 1;  // infinity
  for (std::uint64_t xb = 0; xb < k.size(); ++xb) {
    const ResidueElement x{xb};
    const ResidueElement c = k.mul(k.square(x), x);
    if (f <= 8) {
      for (std::uint64_t yb = 0; yb < k.size(); ++yb) {
        const ResidueElement y{yb};
        if (k.add(k.square(y), y) == c) ++count;
      }
    } else if (k.trace(c) == 0) {
      count += 2;
    }
  }
  return count;
}

/// Trace of Frobenius a_f: a_1 = 0, a_2 = -4, a_f = -2 a_{f-2}.
inline std::int64_t frobenius_trace(unsigned f) {
  require(f >= 1 && f <= 60, ErrorKind::Precondition, "trace recurrence limited to f <= 60");
  std::int64_t a = (f % 2) ? 0 : -4;
  for (unsigned g = (f % 2) ? 1 : 2; g < f; g += 2) a *= -2;
  return a;
}

inline std::int64_t count_points(const ReducedCurve& C) {
  require(C.f >= 1, ErrorKind::Precondition, "f must be positive");
  if (C.f <= 12) return count_points_enumerate(C.f);
  return (std::int64_t{1} << C.f) + 1 - frobenius_trace(C.f);
}

struct ThreeTorsion {
  ResidueField field;
  std::vector<std::pair<ResidueElement, ResidueElement>> points;
  bool complete = false;  // all 8 points rational
};

/// Points of exact order 3 on y^2 + y = x^3: (0,0), (0,1), (z,z), (z,z^2),
/// (1,z), (1,z^2), (z^2,z), (z^2,z^2) with z a primitive cube root of unity;
/// only the first two when f is odd.
inline ThreeTorsion reduced_three_torsion(const ReducedCurve& C) {
  require(C.f >= 1 && C.f <= 32, ErrorKind::Precondition, "f out of range");
  ResidueField k(C.f);
  ThreeTorsion out{k, {}, C.f % 2 == 0};
  const ResidueElement o = k.zero(), i = k.one();
  out.points = {{o, o}, {o, i}};
  if (out.complete) {
    const ResidueElement z = *k.primitive_cube_root_of_unity();
    const ResidueElement z2 = k.square(z);
    out.points.insert(out.points.end(), {{z, z}, {z, z2}, {i, z}, {i, z2}, {z2, z}, {z2, z2}});
  }
  for (const auto& [x, y] : out.points) {
    detail::ReducedPoint p{false, x, y};
    require(k.add(k.square(y), y) == k.mul(k.square(x), x), ErrorKind::Internal, "listed point not on curve");
    auto p3 = detail::reduced_add(k, detail::reduced_add(k, p, p), p);
    require(p3.infinity, ErrorKind::Internal, "listed point does not have order 3");
  }
  return out;
}

/// Brute-force search for points of exact order 3 (independent check).
inline std::vector<std::pair<ResidueElement, ResidueElement>> search_three_torsion(unsigned f) {
  require(f >= 1 && f <= 10, ErrorKind::Precondition, "search limited to f <= 10");
  ResidueField k(f);
  std::vector<std::pair<ResidueElement, ResidueElement>> out;
  for (std::uint64_t xb = 0; xb < k.size(); ++xb)
    for (std::uint64_t yb = 0; yb < k.size(); ++yb) {
      detail::ReducedPoint p{false, {xb}, {yb}};
      if (k.add(k.square(p.y), p.y) != k.mul(k.square(p.x), p.x)) continue;
      auto p2 = detail::reduced_add(k, p, p);
      if (p2.infinity) continue;
      if (detail::reduced_add(k, p2, p).infinity) out.emplace_back(p.x, p.y);
    }
  return out;
}

}  // namespace wildrep
