#pragma once

// Bounded-precision arithmetic in finite extensions K of Q_2.
//
// K is presented as W_n[pi]/(E(pi)), where W_n = Z_2[X]/(mu(X)) is the
// unramified extension of degree n (mu a 0/1 lift of the residue modulus) and
// E is Eisenstein over W_n of degree e (E = pi - 2 when K is unramified).
//
// An integral element is stored as sum_{i<e, j<n} c_ij X^j pi^i with
// c_ij in Z/2^M. A LocalElement is pi^val * u with u a unit in that form and
// `relprec` digits of u guaranteed; the remaining digits are noise. Every
// operation propagates the guarantee, and anything that would need digits
// beyond it raises ErrorKind::InsufficientPrecision.

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wildrep/errors.hpp"
#include "wildrep/residue_field.hpp"

namespace wildrep {

/// Valuation marker for exact zero.
inline constexpr int kInfiniteValuation = INT_MAX / 4;

namespace detail {

using Coeffs = std::vector<mpz_class>;

inline int v2(const mpz_class& a, int cap) {
  if (a == 0) return cap;
  return std::min<int>(cap, static_cast<int>(mpz_scan1(a.get_mpz_t(), 0)));
}

inline void mod2k(mpz_class& a, unsigned bits) {
  mpz_fdiv_r_2exp(a.get_mpz_t(), a.get_mpz_t(), bits);
}

inline int sat_add(int a, int b) {
  if (a >= kInfiniteValuation || b >= kInfiniteValuation) return kInfiniteValuation;
  return a + b;
}

struct FieldData {
  ResidueField residue;
  unsigned n = 1;
  unsigned e = 1;
  int precision = 64;  // relative-precision cap, in uniformizer digits
  unsigned bits = 0;   // M: coefficients live in Z/2^M
  Coeffs mu;           // monic lift of the residue modulus, n+1 entries
  std::vector<Coeffs> eis;  // E = pi^e + sum_{i<e} eis[i] pi^i, each a W-element
  Coeffs neg_h_inv;    // (-h)^{-1} where E(pi) = 0 gives pi^e = -2h
  Coeffs rho;          // -pi^(e-1) h^{-1}; (s * rho)/2 = s/pi

  explicit FieldData(ResidueField k) : residue(k) {}

  std::size_t dim() const { return static_cast<std::size_t>(n) * e; }

  // --- W_n arithmetic (vectors of n coefficients) ---

  Coeffs w_mul(const mpz_class* a, const mpz_class* b) const {
    Coeffs prod(2 * n - 1);
    for (unsigned i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
    }
    for (unsigned d = 2 * n - 2; d >= n && d < 2 * n; --d) {
      if (prod[d] == 0) continue;
      const mpz_class c = prod[d];
      // X^d = X^(d-n) * (X^n) and X^n = -sum_{j<n} mu_j X^j
      for (unsigned j = 0; j < n; ++j)
        if (mu[j] != 0) prod[d - n + j] -= c * mu[j];
      prod[d] = 0;
    }
    prod.resize(n);
    for (auto& c : prod) mod2k(c, bits);
    return prod;
  }

  // --- integral absolute representation (vectors of e*n coefficients) ---

  Coeffs abs_mul(const Coeffs& a, const Coeffs& b) const {
    std::vector<Coeffs> acc(2 * e - 1, Coeffs(n));
    for (unsigned i = 0; i < e; ++i) {
      bool a_zero = true;
      for (unsigned j = 0; j < n; ++j)
        if (a[i * n + j] != 0) { a_zero = false; break; }
      if (a_zero) continue;
      for (unsigned k = 0; k < e; ++k) {
        Coeffs p = w_mul(&a[i * n], &b[k * n]);
        for (unsigned j = 0; j < n; ++j) acc[i + k][j] += p[j];
      }
    }
    reduce_pi(acc);
    Coeffs out(dim());
    for (unsigned i = 0; i < e; ++i)
      for (unsigned j = 0; j < n; ++j) {
        out[i * n + j] = acc[i][j];
        mod2k(out[i * n + j], bits);
      }
    return out;
  }

  // Fold pi-degrees >= e back using pi^e = -sum eis[i] pi^i.
  void reduce_pi(std::vector<Coeffs>& acc) const {
    for (std::size_t d = acc.size(); d-- > e;) {
      bool zero = true;
      for (auto& c : acc[d]) {
        mod2k(c, bits);
        if (c != 0) zero = false;
      }
      if (zero) continue;
      for (unsigned i = 0; i < e; ++i) {
        Coeffs p = w_mul(acc[d].data(), eis[i].data());
        for (unsigned j = 0; j < n; ++j) acc[d - e + i][j] -= p[j];
      }
      for (auto& c : acc[d]) c = 0;
    }
  }

  Coeffs abs_mul_pi(const Coeffs& a) const {
    std::vector<Coeffs> acc(e + 1, Coeffs(n));
    for (unsigned i = 0; i < e; ++i)
      for (unsigned j = 0; j < n; ++j) acc[i + 1][j] = a[i * n + j];
    reduce_pi(acc);
    Coeffs out(dim());
    for (unsigned i = 0; i < e; ++i)
      for (unsigned j = 0; j < n; ++j) {
        out[i * n + j] = acc[i][j];
        mod2k(out[i * n + j], bits);
      }
    return out;
  }

  Coeffs abs_one() const {
    Coeffs o(dim());
    o[0] = 1;
    return o;
  }

  int abs_valuation(const Coeffs& a) const {
    const int cap = static_cast<int>(bits);
    int best = kInfiniteValuation;
    for (unsigned i = 0; i < e; ++i) {
      int vi = cap;
      for (unsigned j = 0; j < n; ++j) vi = std::min(vi, v2(a[i * n + j], cap));
      if (vi < cap) best = std::min(best, static_cast<int>(e) * vi + static_cast<int>(i));
    }
    return best;
  }

  // Exact division of every coefficient by 2^k (caller guarantees divisibility).
  void abs_div2k(Coeffs& a, unsigned k) const {
    for (auto& c : a) mpz_tdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), k);
  }

  // s / pi^k for integral s with v(s) >= k.
  Coeffs abs_div_pi(Coeffs s, int k) const {
    const unsigned q = static_cast<unsigned>(k) / e;
    const unsigned r = static_cast<unsigned>(k) % e;
    if (q) {
      abs_div2k(s, q);
      for (unsigned i = 0; i < q; ++i) s = abs_mul(s, neg_h_inv);
    }
    for (unsigned i = 0; i < r; ++i) {
      s = abs_mul(s, rho);
      abs_div2k(s, 1);
    }
    return s;
  }

  ResidueElement abs_residue(const Coeffs& a) const {
    std::uint64_t b = 0;
    for (unsigned j = 0; j < n; ++j)
      if (mpz_tstbit(a[j].get_mpz_t(), 0)) b |= std::uint64_t{1} << j;
    return {b};
  }

  Coeffs abs_lift(ResidueElement r) const {
    Coeffs o(dim());
    for (unsigned j = 0; j < n; ++j) o[j] = (r.bits >> j) & 1;
    return o;
  }

  // Inverse of a unit by Newton iteration y <- y(2 - u y).
  Coeffs abs_unit_inverse(const Coeffs& u) const {
    const ResidueElement r = abs_residue(u);
    require(!r.is_zero(), ErrorKind::Internal, "unit inverse of a non-unit");
    Coeffs y = abs_lift(residue.inverse(r));
    int known = 1;
    const int target = static_cast<int>(e * bits);
    while (known < target) {
      Coeffs uy = abs_mul(u, y);
      for (auto& c : uy) c = -c;
      uy[0] += 2;
      y = abs_mul(y, uy);
      known *= 2;
    }
    return y;
  }
};

}  // namespace detail

class LocalElement;

/// A 2-adic field K with residue degree n, ramification index e and a
/// relative-precision cap of `precision` uniformizer digits.
class LocalField {
 public:
  LocalField() = default;

  static LocalField unramified(unsigned n, int precision,
                               std::optional<std::uint64_t> modulus = std::nullopt) {
    return build(n, modulus, {}, precision, INT_MAX);
  }

  /// Eisenstein extension of W_n. `coeffs[i]` is the W_n-coordinate vector
  /// (length n, integers) of the coefficient of pi^i, i < e; the polynomial
  /// is monic of degree e = coeffs.size(). `known_bits` says how many 2-adic
  /// bits of the coefficients are reliable.
  static LocalField eisenstein(unsigned n, const std::vector<std::vector<mpz_class>>& coeffs,
                               int precision,
                               std::optional<std::uint64_t> modulus = std::nullopt,
                               int known_bits = INT_MAX) {
    require(!coeffs.empty(), ErrorKind::Precondition, "Eisenstein polynomial needs degree >= 1");
    return build(n, modulus, coeffs, precision, known_bits);
  }

  /// The same field presented with a different precision cap.
  LocalField with_precision(int precision) const {
    std::vector<std::vector<mpz_class>> co;
    if (!is_unramified_presentation_) co = eis_input_;
    return build(d_->n, d_->residue.modulus(), co, precision, eis_known_bits_);
  }

  unsigned n() const { return d_->n; }
  unsigned e() const { return d_->e; }
  int precision() const { return d_->precision; }
  unsigned storage_bits() const { return d_->bits; }
  const ResidueField& residue() const { return d_->residue; }
  bool is_unramified() const { return is_unramified_presentation_; }
  /// Eisenstein coefficients as given (empty for an unramified field).
  const std::vector<std::vector<mpz_class>>& eisenstein_coefficients() const { return eis_input_; }

  bool valid() const { return static_cast<bool>(d_); }
  const detail::FieldData* data() const { return d_.get(); }
  std::shared_ptr<const detail::FieldData> shared() const { return d_; }

  friend bool operator==(const LocalField& a, const LocalField& b) { return a.d_ == b.d_; }

  inline LocalElement zero() const;
  inline LocalElement one() const;
  inline LocalElement integer(const mpz_class& v) const;
  inline LocalElement integer(long v) const;
  inline LocalElement uniformizer() const;
  /// The class of X, a generator of the unramified subring.
  inline LocalElement unramified_generator() const;
  inline LocalElement lift(ResidueElement r) const;
  inline LocalElement from_digits(int val, const std::vector<ResidueElement>& digits) const;
  /// Exact element from W_n-coordinate vectors in powers of pi (integral).
  inline LocalElement from_coordinates(int val, const std::vector<std::vector<mpz_class>>& pi_coeffs) const;

  std::string describe() const {
    std::ostringstream os;
    os << "Q2(n=" << n() << ", e=" << e() << ", N=" << precision() << ")";
    return os.str();
  }

 private:
  static LocalField build(unsigned n, std::optional<std::uint64_t> modulus,
                          const std::vector<std::vector<mpz_class>>& coeffs, int precision,
                          int known_bits) {
    require(precision >= 1, ErrorKind::Precondition, "precision must be positive");
    ResidueField k = modulus ? ResidueField(n, *modulus) : ResidueField(n);
    auto d = std::make_shared<detail::FieldData>(k);
    d->n = n;
    d->e = coeffs.empty() ? 1 : static_cast<unsigned>(coeffs.size());
    d->precision = precision;
    const unsigned e = d->e;
    d->bits = static_cast<unsigned>((precision + static_cast<int>(e) - 1) / static_cast<int>(e)) + e + 6;
    require(static_cast<long>(known_bits) >= static_cast<long>(d->bits), ErrorKind::InsufficientPrecision,
            "Eisenstein coefficients are not known to the storage precision");
    d->mu.assign(n + 1, 0);
    for (unsigned j = 0; j <= n; ++j) d->mu[j] = (k.modulus() >> j) & 1;
    if (coeffs.empty()) {
      d->eis = {detail::Coeffs(n)};
      d->eis[0][0] = -2;
      detail::mod2k(d->eis[0][0], d->bits);
    } else {
      for (const auto& c : coeffs) {
        require(c.size() == n, ErrorKind::Precondition, "Eisenstein coefficient has wrong length");
        detail::Coeffs w = c;
        for (auto& x : w) detail::mod2k(x, d->bits);
        d->eis.push_back(w);
      }
      // Eisenstein criterion: all coefficients even, constant term exactly 2 * unit.
      for (unsigned i = 0; i < e; ++i)
        for (const auto& x : d->eis[i])
          require(mpz_tstbit(x.get_mpz_t(), 0) == 0, ErrorKind::Precondition,
                  "polynomial is not Eisenstein: odd coefficient");
      bool unit_half = false;
      for (const auto& x : d->eis[0])
        if (mpz_tstbit(x.get_mpz_t(), 1)) unit_half = true;
      require(unit_half, ErrorKind::Precondition,
              "polynomial is not Eisenstein: constant term valuation is not 1");
    }
    // h = (sum eis[i] pi^i) / 2, as an integral element; -h is a unit.
    detail::Coeffs h(d->dim());
    for (unsigned i = 0; i < e; ++i)
      for (unsigned j = 0; j < n; ++j) {
        mpz_class c = d->eis[i][j];
        mpz_tdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), 1);
        h[i * n + j] = c;
      }
    detail::Coeffs neg_h = h;
    for (auto& c : neg_h) {
      c = -c;
      detail::mod2k(c, d->bits);
    }
    d->neg_h_inv = d->abs_unit_inverse(neg_h);
    // rho = -pi^(e-1) h^{-1} = pi^(e-1) * (-h)^{-1}
    detail::Coeffs r = d->neg_h_inv;
    for (unsigned i = 0; i + 1 < e; ++i) r = d->abs_mul_pi(r);
    d->rho = r;

    LocalField f;
    f.d_ = d;
    f.is_unramified_presentation_ = coeffs.empty();
    f.eis_input_ = coeffs;
    f.eis_known_bits_ = known_bits;
    return f;
  }

  std::shared_ptr<const detail::FieldData> d_;
  bool is_unramified_presentation_ = true;
  std::vector<std::vector<mpz_class>> eis_input_;
  int eis_known_bits_ = INT_MAX;
};

/// pi^val * unit, with `relprec` guaranteed digits of the unit. A zero
/// element records the absolute precision to which it is known to vanish
/// (kInfiniteValuation for an exact zero).
class LocalElement {
 public:
  LocalElement() = default;

  const detail::FieldData& data() const { return *f_; }
  std::shared_ptr<const detail::FieldData> field_ptr() const { return f_; }
  bool same_field(const LocalElement& o) const { return f_ == o.f_; }

  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && val_ >= kInfiniteValuation; }
  /// Normalized valuation; kInfiniteValuation when zero to precision.
  int valuation() const { return zero_ ? kInfiniteValuation : val_; }
  int relative_precision() const { return zero_ ? 0 : relprec_; }
  int absolute_precision() const { return zero_ ? val_ : detail::sat_add(val_, relprec_); }
  const detail::Coeffs& unit_coordinates() const { return unit_; }

  LocalElement operator-() const {
    LocalElement r = *this;
    if (!zero_)
      for (auto& c : r.unit_) {
        c = -c;
        detail::mod2k(c, f_->bits);
      }
    return r;
  }

  friend LocalElement operator+(const LocalElement& a, const LocalElement& b) { return add(a, b, false); }
  friend LocalElement operator-(const LocalElement& a, const LocalElement& b) { return add(a, b, true); }

  friend LocalElement operator*(const LocalElement& a, const LocalElement& b) {
    check_same(a, b);
    if (a.zero_ || b.zero_) {
      // a zero operand stores its absolute precision in val_
      return make_zero(a.f_, detail::sat_add(a.val_, b.val_));
    }
    LocalElement r;
    r.f_ = a.f_;
    r.zero_ = false;
    r.val_ = a.val_ + b.val_;
    r.relprec_ = std::min(a.relprec_, b.relprec_);
    r.unit_ = a.f_->abs_mul(a.unit_, b.unit_);
    return r;
  }

  LocalElement inverse() const {
    if (zero_) {
      require(!is_exact_zero(), ErrorKind::Precondition, "division by exact zero");
      fail(ErrorKind::InsufficientPrecision, "division by an element that is zero to precision");
    }
    LocalElement r = *this;
    r.val_ = -val_;
    r.unit_ = f_->abs_unit_inverse(unit_);
    return r;
  }

  friend LocalElement operator/(const LocalElement& a, const LocalElement& b) { return a * b.inverse(); }

  LocalElement& operator+=(const LocalElement& o) { return *this = *this + o; }
  LocalElement& operator-=(const LocalElement& o) { return *this = *this - o; }
  LocalElement& operator*=(const LocalElement& o) { return *this = *this * o; }

  LocalElement pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    LocalElement base = *this;
    LocalElement r = one_like();
    while (k) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  /// Multiply by pi^k.
  LocalElement shift(int k) const {
    LocalElement r = *this;
    if (zero_) r.val_ = detail::sat_add(val_, k);
    else r.val_ += k;
    return r;
  }

  /// Drop guaranteed digits so that absolute precision is at most `absprec`.
  LocalElement truncate_absolute(int absprec) const {
    if (absolute_precision() <= absprec) return *this;
    if (zero_ || val_ >= absprec) return make_zero(f_, std::min(absolute_precision(), absprec));
    LocalElement r = *this;
    r.relprec_ = absprec - val_;
    return r;
  }

  /// Unit part pi^{-v} x.
  LocalElement unit_part() const {
    require(!zero_, ErrorKind::InsufficientPrecision, "unit part of zero");
    LocalElement r = *this;
    r.val_ = 0;
    return r;
  }

  /// Residue class; requires v >= 0.
  ResidueElement residue() const {
    if (zero_) {
      require(val_ >= 1, ErrorKind::InsufficientPrecision, "residue of an element with no known digits");
      return {};
    }
    require(val_ >= 0, ErrorKind::Precondition, "residue of a non-integral element");
    if (val_ > 0) return {};
    return f_->abs_residue(unit_);
  }

  /// True when a - b vanishes to the joint precision.
  bool equals_to_precision(const LocalElement& o) const { return (*this - o).is_zero(); }

  /// Uniformizer-adic digits of the unit part (at most `count`, capped by
  /// the guaranteed precision).
  std::vector<ResidueElement> digits(int count) const {
    std::vector<ResidueElement> out;
    if (zero_) return out;
    count = std::min(count, relprec_);
    detail::Coeffs s = unit_;
    for (int i = 0; i < count; ++i) {
      ResidueElement d = f_->abs_residue(s);
      out.push_back(d);
      detail::Coeffs l = f_->abs_lift(d);
      for (std::size_t t = 0; t < s.size(); ++t) {
        s[t] -= l[t];
        detail::mod2k(s[t], f_->bits);
      }
      s = f_->abs_div_pi(s, 1);
    }
    return out;
  }

  /// Coordinates (X^j pi^i) of an integral element, valid modulo the
  /// absolute precision.
  detail::Coeffs integral_coordinates() const {
    if (zero_) {
      require(val_ >= 0, ErrorKind::Precondition, "coordinates of a non-integral element");
      return detail::Coeffs(f_->dim());
    }
    require(val_ >= 0, ErrorKind::Precondition, "coordinates of a non-integral element");
    detail::Coeffs s = unit_;
    for (int i = 0; i < val_; ++i) s = f_->abs_mul_pi(s);
    return s;
  }

  LocalElement integer_like(long k) const {
    detail::Coeffs s(f_->dim());
    s[0] = k;
    return from_integral(f_, s, kInfiniteValuation);
  }

  LocalElement one_like() const { return from_integral(f_, f_->abs_one(), f_->precision); }
  LocalElement zero_like() const { return make_zero(f_, kInfiniteValuation); }

  // Builds an element from an integral absolute representation known to
  // `absprec` digits (absprec may be kInfiniteValuation for exact data).
  static LocalElement from_integral(std::shared_ptr<const detail::FieldData> f, detail::Coeffs s, int absprec) {
    for (auto& c : s) detail::mod2k(c, f->bits);
    const int k = f->abs_valuation(s);
    if (k >= absprec || k >= kInfiniteValuation) {
      return make_zero(f, absprec >= kInfiniteValuation && k >= kInfiniteValuation ? kInfiniteValuation
                                                                                    : std::min(absprec, k));
    }
    LocalElement r;
    r.f_ = f;
    r.zero_ = false;
    r.val_ = k;
    const int storage_digits = static_cast<int>(f->e * f->bits) - k - static_cast<int>(f->e * f->e);
    int rel = f->precision;
    if (absprec < kInfiniteValuation) rel = std::min(rel, absprec - k);
    r.relprec_ = std::min(rel, storage_digits);
    r.unit_ = f->abs_div_pi(std::move(s), k);
    return r;
  }

  static LocalElement make_zero(std::shared_ptr<const detail::FieldData> f, int absprec) {
    LocalElement r;
    r.f_ = std::move(f);
    r.zero_ = true;
    r.val_ = absprec;
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    if (zero_) {
      if (is_exact_zero()) os << "0";
      else os << "O(pi^" << val_ << ")";
      return os.str();
    }
    os << "pi^" << val_ << "*[";
    auto ds = digits(std::min(relprec_, 8));
    for (std::size_t i = 0; i < ds.size(); ++i) os << (i ? "," : "") << ds[i].bits;
    os << (relprec_ > 8 ? ",...]" : "]") << "+O(pi^" << absolute_precision() << ")";
    return os.str();
  }

 private:
  static void check_same(const LocalElement& a, const LocalElement& b) {
    require(a.f_ && a.f_ == b.f_, ErrorKind::Precondition, "elements belong to different fields");
  }

  static LocalElement add(const LocalElement& a, const LocalElement& b, bool subtract) {
    check_same(a, b);
    const int pa = a.absolute_precision();
    const int pb = b.absolute_precision();
    const int absprec = std::min(pa, pb);
    if (a.zero_ && b.zero_) return make_zero(a.f_, absprec);
    if (b.zero_) return a.zero_ ? make_zero(a.f_, absprec) : a.truncate_absolute(absprec);
    if (a.zero_) return (subtract ? -b : b).truncate_absolute(absprec);
    const int m = std::min(a.val_, b.val_);
    if (absprec <= m) return make_zero(a.f_, absprec);
    const auto& f = *a.f_;
    detail::Coeffs sa = a.unit_;
    for (int i = m; i < a.val_; ++i) sa = f.abs_mul_pi(sa);
    detail::Coeffs sb = b.unit_;
    for (int i = m; i < b.val_; ++i) sb = f.abs_mul_pi(sb);
    for (std::size_t t = 0; t < sa.size(); ++t) {
      if (subtract) sa[t] -= sb[t];
      else sa[t] += sb[t];
    }
    LocalElement r = from_integral(a.f_, std::move(sa), absprec >= kInfiniteValuation ? kInfiniteValuation : absprec - m);
    if (r.zero_) return make_zero(a.f_, detail::sat_add(r.val_, m));
    r.val_ += m;
    return r;
  }

  std::shared_ptr<const detail::FieldData> f_;
  bool zero_ = true;
  int val_ = kInfiniteValuation;
  int relprec_ = 0;
  detail::Coeffs unit_;
};

inline LocalElement LocalField::zero() const { return LocalElement::make_zero(d_, kInfiniteValuation); }

inline LocalElement LocalField::one() const {
  return LocalElement::from_integral(d_, d_->abs_one(), kInfiniteValuation);
}

inline LocalElement LocalField::integer(const mpz_class& v) const {
  if (v == 0) return zero();
  // Split off the power of two first so that large values keep full precision.
  mpz_class u = v;
  const unsigned t = static_cast<unsigned>(mpz_scan1(u.get_mpz_t(), 0));
  mpz_tdiv_q_2exp(u.get_mpz_t(), u.get_mpz_t(), t);
  detail::Coeffs s(d_->dim());
  s[0] = u;
  LocalElement unit = LocalElement::from_integral(d_, s, kInfiniteValuation);
  LocalElement two_pow = one();
  if (t) {
    detail::Coeffs two(d_->dim());
    two[0] = 2;
    two_pow = LocalElement::from_integral(d_, two, kInfiniteValuation).pow(t);
  }
  return unit * two_pow;
}

inline LocalElement LocalField::integer(long v) const { return integer(mpz_class(v)); }

inline LocalElement LocalField::uniformizer() const {
  detail::Coeffs s(d_->dim());
  if (d_->e == 1) s[0] = 2;
  else s[d_->n] = 1;
  return LocalElement::from_integral(d_, s, kInfiniteValuation);
}

inline LocalElement LocalField::unramified_generator() const {
  detail::Coeffs s(d_->dim());
  // For n = 1 the modulus lift is X + 1, so X = -1.
  if (d_->n == 1) s[0] = -1;
  else s[1] = 1;
  return LocalElement::from_integral(d_, s, kInfiniteValuation);
}

inline LocalElement LocalField::lift(ResidueElement r) const {
  if (r.is_zero()) return zero();
  return LocalElement::from_integral(d_, d_->abs_lift(r), kInfiniteValuation);
}

inline LocalElement LocalField::from_digits(int val, const std::vector<ResidueElement>& digits) const {
  LocalElement acc = zero();
  LocalElement pi = uniformizer();
  LocalElement p = pi.pow(val);
  for (const auto& dgt : digits) {
    require(dgt.bits < residue().size(), ErrorKind::Parse, "digit outside the residue field");
    if (!dgt.is_zero()) acc = acc + lift(dgt) * p;
    p = p * pi;
  }
  return acc;
}

inline LocalElement LocalField::from_coordinates(int val, const std::vector<std::vector<mpz_class>>& pi_coeffs) const {
  require(pi_coeffs.size() <= d_->e, ErrorKind::Precondition, "too many pi-coordinates");
  detail::Coeffs s(d_->dim());
  for (std::size_t i = 0; i < pi_coeffs.size(); ++i) {
    require(pi_coeffs[i].size() <= d_->n, ErrorKind::Precondition, "too many X-coordinates");
    for (std::size_t j = 0; j < pi_coeffs[i].size(); ++j) s[i * d_->n + j] = pi_coeffs[i][j];
  }
  return LocalElement::from_integral(d_, s, kInfiniteValuation).shift(val);
}

}  // namespace wildrep
