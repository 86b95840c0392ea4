#pragma once

// B[t]/(P) for a monic P over a LocalField B. When P is certified
// irreducible with known (e, f) the algebra is a field F and valuations are
// transported through the norm: v_F(x) = (e/d) v_B(N(x)).

#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wildrep/errors.hpp"
#include "wildrep/field_builders.hpp"
#include "wildrep/local_field.hpp"
#include "wildrep/local_polynomial.hpp"

namespace wildrep {

class AlgebraElement;

namespace detail {
struct AlgebraData {
  LocalField base;
  std::vector<LocalElement> modulus;  // monic, low degree first, size d + 1
  unsigned d = 0;
  unsigned e = 0;  // 0 until certified
  unsigned f = 0;
};

// Row-reduce a copy of m; returns the determinant. If rhs is given it is
// overwritten with the solution of m x = rhs.
inline LocalElement eliminate(std::vector<std::vector<LocalElement>> m, std::vector<LocalElement>* rhs) {
  const std::size_t n = m.size();
  LocalElement det = m[0][0].one_like();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    int best = kInfiniteValuation;
    for (std::size_t r = col; r < n; ++r)
      if (!m[r][col].is_zero() && m[r][col].valuation() < best) {
        best = m[r][col].valuation();
        piv = r;
      }
    if (piv == n) {
      bool exact = true;
      for (std::size_t r = col; r < n; ++r) exact = exact && m[r][col].is_exact_zero();
      require(!exact, ErrorKind::Precondition, "singular matrix");
      fail(ErrorKind::InsufficientPrecision, "matrix is singular to working precision");
    }
    if (piv != col) {
      std::swap(m[piv], m[col]);
      if (rhs) std::swap((*rhs)[piv], (*rhs)[col]);
      det = -det;
    }
    det = det * m[col][col];
    const LocalElement inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_exact_zero()) continue;
      const LocalElement factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
      if (rhs) (*rhs)[r] = (*rhs)[r] - factor * (*rhs)[col];
    }
  }
  if (rhs) {
    for (std::size_t i = n; i-- > 0;) {
      LocalElement acc = (*rhs)[i];
      for (std::size_t c = i + 1; c < n; ++c) acc = acc - m[i][c] * (*rhs)[c];
      (*rhs)[i] = acc / m[i][i];
    }
  }
  return det;
}
}  // namespace detail

class QuotientAlgebra {
 public:
  QuotientAlgebra() = default;

  QuotientAlgebra(const LocalField& base, const LocalPolynomial& modulus) {
    const int deg = modulus.degree();
    require(deg >= 1, ErrorKind::Precondition, "quotient algebra needs a modulus of degree >= 1");
    require(static_cast<int>(modulus.size()) == deg + 1, ErrorKind::Precondition, "modulus has trailing zeros");
    require(modulus[static_cast<std::size_t>(deg)].equals_to_precision(base.one()), ErrorKind::Precondition,
            "modulus must be monic");
    require(modulus[0].field_ptr() == base.shared(), ErrorKind::Precondition, "modulus over a different field");
    auto d = std::make_shared<detail::AlgebraData>();
    d->base = base;
    d->modulus = modulus.coeffs();
    d->modulus.back() = base.one();
    d->d = static_cast<unsigned>(deg);
    d_ = std::move(d);
  }

  /// Record that the algebra is a field with ramification e and residue
  /// degree f over the base (e * f = d).
  QuotientAlgebra certified_field(unsigned e, unsigned f) const {
    require(e * f == d_->d, ErrorKind::Internal, "e * f must equal the degree");
    auto d = std::make_shared<detail::AlgebraData>(*d_);
    d->e = e;
    d->f = f;
    QuotientAlgebra q;
    q.d_ = std::move(d);
    return q;
  }

  const LocalField& base() const { return d_->base; }
  unsigned degree() const { return d_->d; }
  bool is_certified_field() const { return d_->e != 0; }
  unsigned e() const { return d_->e; }
  unsigned f() const { return d_->f; }
  LocalPolynomial modulus() const { return LocalPolynomial(d_->modulus); }
  std::shared_ptr<const detail::AlgebraData> shared() const { return d_; }

  inline AlgebraElement constant(const LocalElement& c) const;
  inline AlgebraElement generator() const;
  inline AlgebraElement zero() const;
  inline AlgebraElement one() const;
  inline AlgebraElement from_coeffs(std::vector<LocalElement> c) const;

  TowerLayer layer() const {
    std::ostringstream os;
    os << "t^" << d_->d;
    for (std::size_t i = d_->d; i-- > 0;) {
      const auto& c = d_->modulus[i];
      if (c.is_zero()) continue;
      os << " + (" << c.to_string() << ")";
      if (i) os << "*t^" << i;
    }
    return {"quotient", os.str(), d_->e, d_->f};
  }

 private:
  std::shared_ptr<const detail::AlgebraData> d_;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(std::shared_ptr<const detail::AlgebraData> a, std::vector<LocalElement> c)
      : a_(std::move(a)), c_(std::move(c)) {
    require(c_.size() == a_->d, ErrorKind::Internal, "algebra element has wrong length");
  }

  const std::vector<LocalElement>& coeffs() const { return c_; }
  const detail::AlgebraData& algebra() const { return *a_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  AlgebraElement operator-() const {
    auto c = c_;
    for (auto& x : c) x = -x;
    return {a_, std::move(c)};
  }
  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    check(x, y);
    auto c = x.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] + y.c_[i];
    return {x.a_, std::move(c)};
  }
  friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) { return x + (-y); }

  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    check(x, y);
    const std::size_t d = x.a_->d;
    const LocalElement z = x.a_->base.zero();
    std::vector<LocalElement> prod(2 * d - 1, z);
    for (std::size_t i = 0; i < d; ++i) {
      if (x.c_[i].is_exact_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) prod[i + j] = prod[i + j] + x.c_[i] * y.c_[j];
    }
    for (std::size_t k = 2 * d - 1; k-- > d;) {
      const LocalElement top = prod[k];
      if (top.is_exact_zero()) continue;
      for (std::size_t i = 0; i < d; ++i) prod[k - d + i] = prod[k - d + i] - top * x.a_->modulus[i];
    }
    prod.resize(d);
    return {x.a_, std::move(prod)};
  }

  /// Matrix of multiplication by this element on the basis 1, t, ..., t^(d-1)
  /// (column j holds the coordinates of x * t^j).
  std::vector<std::vector<LocalElement>> multiplication_matrix() const {
    const std::size_t d = a_->d;
    std::vector<std::vector<LocalElement>> m(d, std::vector<LocalElement>(d, a_->base.zero()));
    AlgebraElement col = *this;
    AlgebraElement t = generator_of(a_);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < d; ++i) m[i][j] = col.c_[i];
      if (j + 1 < d) col = col * t;
    }
    return m;
  }

  LocalElement norm() const { return detail::eliminate(multiplication_matrix(), nullptr); }

  /// det(T - x), lowest degree first.
  std::vector<LocalElement> charpoly() const {
    return berkowitz_charpoly(multiplication_matrix(), a_->base.zero());
  }

  AlgebraElement inverse() const {
    std::vector<LocalElement> rhs(a_->d, a_->base.zero());
    rhs[0] = a_->base.one();
    detail::eliminate(multiplication_matrix(), &rhs);
    return {a_, std::move(rhs)};
  }

  friend AlgebraElement operator/(const AlgebraElement& x, const AlgebraElement& y) { return x * y.inverse(); }

  AlgebraElement pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    AlgebraElement r = one_like(), b = *this;
    while (k) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  }

  /// Normalized valuation of the field F = B[t]/(P).
  int valuation() const {
    require(a_->e != 0, ErrorKind::Precondition, "valuation needs a certified field extension");
    if (is_zero()) return kInfiniteValuation;
    const LocalElement nx = norm();
    require(!nx.is_zero(), ErrorKind::InsufficientPrecision, "norm vanishes to working precision");
    const long num = static_cast<long>(a_->e) * nx.valuation();
    require(num % static_cast<long>(a_->d) == 0, ErrorKind::Internal, "valuation not integral in the extension");
    return static_cast<int>(num / static_cast<long>(a_->d));
  }

  AlgebraElement one_like() const { return constant_like(a_->base.one()); }
  AlgebraElement zero_like() const { return constant_like(a_->base.zero()); }
  AlgebraElement integer_like(long k) const { return constant_like(a_->base.integer(k)); }
  AlgebraElement constant_like(const LocalElement& c) const {
    std::vector<LocalElement> v(a_->d, a_->base.zero());
    v[0] = c;
    return {a_, std::move(v)};
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_exact_zero()) continue;
      os << (first ? "" : " + ") << "(" << c_[i].to_string() << ")*t^" << i;
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  static AlgebraElement generator_of(const std::shared_ptr<const detail::AlgebraData>& a) {
    std::vector<LocalElement> v(a->d, a->base.zero());
    if (a->d == 1) v[0] = -a->modulus[0];
    else v[1] = a->base.one();
    return {a, std::move(v)};
  }

  static void check(const AlgebraElement& x, const AlgebraElement& y) {
    require(x.a_ == y.a_, ErrorKind::Precondition, "elements of different algebras");
  }

  std::shared_ptr<const detail::AlgebraData> a_;
  std::vector<LocalElement> c_;
};

inline AlgebraElement QuotientAlgebra::from_coeffs(std::vector<LocalElement> c) const {
  require(c.size() <= d_->d, ErrorKind::Precondition, "too many coefficients");
  c.resize(d_->d, d_->base.zero());
  return {d_, std::move(c)};
}
inline AlgebraElement QuotientAlgebra::constant(const LocalElement& c) const {
  require(c.field_ptr() == d_->base.shared(), ErrorKind::Precondition, "constant from a different field");
  return from_coeffs({c});
}
inline AlgebraElement QuotientAlgebra::zero() const { return from_coeffs({}); }
inline AlgebraElement QuotientAlgebra::one() const { return constant(d_->base.one()); }
inline AlgebraElement QuotientAlgebra::generator() const {
  if (d_->d == 1) return constant(-d_->modulus[0]);
  std::vector<LocalElement> v(d_->d, d_->base.zero());
  v[1] = d_->base.one();
  return {d_, std::move(v)};
}

/// Norm of an algebra element to the base.
inline LocalElement norm(const AlgebraElement& x) { return x.norm(); }

/// Normalized valuation in the certified extension field.
inline int valuation_in_extension(const AlgebraElement& x) { return x.valuation(); }

}  // namespace wildrep
