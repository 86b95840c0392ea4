#pragma once

// Polynomials over a LocalField: evaluation, Taylor shifts, Newton polygons
// and root finding inside the field.

#include <gmpxx.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "wildrep/errors.hpp"
#include "wildrep/local_field.hpp"

namespace wildrep {

class LocalPolynomial {
 public:
  LocalPolynomial() = default;
  explicit LocalPolynomial(std::vector<LocalElement> coeffs) : c_(std::move(coeffs)) {
    require(!c_.empty(), ErrorKind::Precondition, "polynomial needs at least one coefficient");
    for (const auto& x : c_)
      require(x.same_field(c_.front()), ErrorKind::Precondition, "coefficients from different fields");
  }

  /// Monic x - a.
  static LocalPolynomial linear(const LocalElement& a) { return LocalPolynomial({-a, a.one_like()}); }

  const std::vector<LocalElement>& coeffs() const { return c_; }
  const LocalElement& operator[](std::size_t i) const { return c_.at(i); }
  std::size_t size() const { return c_.size(); }

  /// Index of the last coefficient that is nonzero to precision; -1 if none.
  int degree() const {
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
      if (!c_[static_cast<std::size_t>(i)].is_zero()) return i;
    return -1;
  }

  LocalElement operator()(const LocalElement& x) const {
    LocalElement r = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) r = r * x + c_[i];
    return r;
  }

  LocalPolynomial derivative() const {
    if (c_.size() == 1) return LocalPolynomial({c_[0].zero_like()});
    std::vector<LocalElement> d;
    const auto& f = c_[0];
    for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(c_[i] * LocalElement::from_integral(f.field_ptr(), int_coeffs(f, static_cast<long>(i)),
                                                      kInfiniteValuation));
    return LocalPolynomial(std::move(d));
  }

  /// p(a + b*s) as a polynomial in s.
  LocalPolynomial taylor_shift(const LocalElement& a, const LocalElement& b) const {
    std::vector<LocalElement> t = c_;
    const std::size_t n = t.size();
    // Repeated synthetic division by (x - a).
    for (std::size_t k = 0; k + 1 < n; ++k)
      for (std::size_t i = n - 1; i > k; --i) t[i - 1] = t[i - 1] + a * t[i];
    LocalElement bp = a.one_like();
    for (std::size_t k = 0; k < n; ++k) {
      t[k] = t[k] * bp;
      bp = bp * b;
    }
    return LocalPolynomial(std::move(t));
  }

  /// Divide every coefficient by pi^k.
  LocalPolynomial shifted(int k) const {
    std::vector<LocalElement> t;
    for (const auto& x : c_) t.push_back(x.shift(k));
    return LocalPolynomial(std::move(t));
  }

  LocalPolynomial scaled(const LocalElement& s) const {
    std::vector<LocalElement> t;
    for (const auto& x : c_) t.push_back(x * s);
    return LocalPolynomial(std::move(t));
  }

  int min_valuation() const {
    int m = kInfiniteValuation;
    for (const auto& x : c_) m = std::min(m, x.valuation());
    return m;
  }

  friend LocalPolynomial operator*(const LocalPolynomial& a, const LocalPolynomial& b) {
    std::vector<LocalElement> r(a.size() + b.size() - 1, a.c_[0].zero_like());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return LocalPolynomial(std::move(r));
  }

 private:
  static detail::Coeffs int_coeffs(const LocalElement& f, long v) {
    detail::Coeffs s(f.data().dim());
    s[0] = v;
    return s;
  }

  std::vector<LocalElement> c_;
};

struct NewtonSegment {
  mpq_class slope;  // (v_j - v_i)/(j - i); roots in this segment have valuation -slope
  int length = 0;
  int start = 0;    // exponent of the left vertex
};

struct NewtonPolygon {
  std::vector<std::pair<int, int>> vertices;  // (exponent, valuation)
  std::vector<NewtonSegment> segments;

  int degree() const { return vertices.empty() ? 0 : vertices.back().first - vertices.front().first; }
};

/// Lower convex hull of {(i, v(c_i))}. Coefficients that are zero to
/// precision are allowed only when their precision bound already lies on or
/// above the hull.
inline NewtonPolygon newton_polygon(const LocalPolynomial& p) {
  const auto& c = p.coeffs();
  const int deg = p.degree();
  require(deg >= 1, ErrorKind::Precondition, "Newton polygon of a constant");
  require(!c[0].is_zero(), ErrorKind::Precondition, "Newton polygon needs a nonzero constant term");
  std::vector<std::pair<int, int>> pts;
  for (int i = 0; i <= deg; ++i)
    if (!c[static_cast<std::size_t>(i)].is_zero()) pts.emplace_back(i, c[static_cast<std::size_t>(i)].valuation());
  // Monotone-chain lower hull.
  std::vector<std::pair<int, int>> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // remove b if it lies on or above segment a-q
      const long cross = static_cast<long>(b.first - a.first) * (q.second - a.second) -
                         static_cast<long>(b.second - a.second) * (q.first - a.first);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(q);
  }
  NewtonPolygon np;
  np.vertices = hull;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    NewtonSegment s;
    s.length = hull[k + 1].first - hull[k].first;
    s.start = hull[k].first;
    s.slope = mpq_class(hull[k + 1].second - hull[k].second, s.length);
    s.slope.canonicalize();
    np.segments.push_back(s);
  }
  // Zero-to-precision coefficients must not be able to lower the hull.
  for (int i = 0; i <= deg; ++i) {
    const auto& x = c[static_cast<std::size_t>(i)];
    if (!x.is_zero() || x.is_exact_zero()) continue;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
      if (i < hull[k].first || i > hull[k + 1].first) continue;
      mpq_class line = mpq_class(hull[k].second) + np.segments[k].slope * (i - hull[k].first);
      require(mpq_class(x.absolute_precision()) >= line, ErrorKind::InsufficientPrecision,
              "coefficient valuation unknown at working precision");
    }
  }
  return np;
}

/// Reduction of an integral polynomial modulo the uniformizer.
inline ResiduePoly reduce(const LocalPolynomial& p) {
  ResiduePoly r;
  for (const auto& x : p.coeffs()) {
    if (x.is_zero()) {
      require(x.absolute_precision() >= 1, ErrorKind::InsufficientPrecision,
              "coefficient not known modulo the uniformizer");
      r.push_back({});
    } else {
      r.push_back(x.residue());
    }
  }
  residue_poly::trim(r);
  return r;
}

namespace detail {

inline LocalElement newton_lift(const LocalPolynomial& g, LocalElement s) {
  const LocalPolynomial dg = g.derivative();
  const int cap = s.data().precision;
  for (int iter = 0; iter < 2 * cap + 8; ++iter) {
    LocalElement val = g(s);
    if (val.is_zero()) return s.truncate_absolute(val.absolute_precision());
    LocalElement d = dg(s);
    require(d.valuation() == 0, ErrorKind::Internal, "Newton lift without a unit derivative");
    LocalElement next = s - val / d;
    if (next.equals_to_precision(s) && iter > 0) return next;
    s = next;
  }
  fail(ErrorKind::InsufficientPrecision, "Newton iteration did not converge");
}

inline void integral_roots(const LocalPolynomial& g, const LocalElement& offset, int depth,
                           std::vector<LocalElement>& out) {
  const auto& f = offset.data();
  require(depth <= f.precision, ErrorKind::InsufficientPrecision,
          "roots not separated at working precision");
  ResiduePoly gb = reduce(g);
  if (residue_poly::degree(gb) <= 0) return;
  const LocalElement pi = offset.one_like().shift(1);
  const LocalElement pid = offset.one_like().shift(depth);
  for (const auto& [c, mult] : residue_poly::roots(f.residue, gb)) {
    LocalElement lift = LocalElement::from_integral(offset.field_ptr(), f.abs_lift(c), kInfiniteValuation);
    if (mult == 1) {
      out.push_back(offset + pid * newton_lift(g, lift));
      continue;
    }
    LocalPolynomial h = g.taylor_shift(lift, pi);
    const int m = h.min_valuation();
    require(m < kInfiniteValuation, ErrorKind::InsufficientPrecision, "polynomial vanished to precision");
    integral_roots(h.shifted(-m), offset + pid * lift, depth + 1, out);
  }
}

}  // namespace detail

/// Distinct roots in the coefficient field of a polynomial whose leading
/// coefficient is a unit and whose other coefficients are integral.
/// The polynomial must be squarefree; clustered roots beyond the working
/// precision raise InsufficientPrecision.
inline std::vector<LocalElement> roots_in_field(const LocalPolynomial& p) {
  const int deg = p.degree();
  require(deg >= 1, ErrorKind::Precondition, "root finding needs degree >= 1");
  require(p[static_cast<std::size_t>(deg)].valuation() == 0, ErrorKind::Precondition,
          "root finding needs a unit leading coefficient");
  require(p.min_valuation() >= 0, ErrorKind::Precondition, "root finding needs integral coefficients");
  std::vector<LocalElement> out;
  detail::integral_roots(p, p[0].zero_like(), 0, out);
  return out;
}

}  // namespace wildrep
