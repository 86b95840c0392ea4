#pragma once

// Finite fields F_{2^n} in a polynomial basis, with small-degree polynomial
// helpers used for residual polynomials.
//
// Bit order: bit j of an element is the coefficient of x^j, where x is the
// class of the indeterminate modulo the field modulus. The modulus itself is
// stored with its leading bit (bit n) set.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wildrep/errors.hpp"

namespace wildrep {

struct ResidueElement {
  std::uint64_t bits = 0;
  bool is_zero() const { return bits == 0; }
  friend bool operator==(ResidueElement, ResidueElement) = default;
  friend auto operator<=>(ResidueElement a, ResidueElement b) { return a.bits <=> b.bits; }
};

namespace detail {

inline std::uint64_t gf2_degree(std::uint64_t p) {
  return p ? 63 - static_cast<std::uint64_t>(__builtin_clzll(p)) : 0;
}

// Product of binary polynomials of degree < 32.
inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

inline std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t m) {
  const std::uint64_t dm = gf2_degree(m);
  while (a && gf2_degree(a) >= dm) a ^= m << (gf2_degree(a) - dm);
  return a;
}

inline std::uint64_t gf2_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = gf2_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// x^(2^k) mod m by repeated squaring of x.
inline std::uint64_t gf2_frobenius_power_of_x(unsigned k, std::uint64_t m) {
  std::uint64_t r = gf2_mod(2, m);
  for (unsigned i = 0; i < k; ++i) r = gf2_mod(clmul(r, r), m);
  return r;
}

// Rabin's test: m of degree n is irreducible iff x^(2^n) = x mod m and
// gcd(x^(2^(n/q)) - x, m) = 1 for each prime q | n.
inline bool gf2_is_irreducible(std::uint64_t m) {
  const unsigned n = static_cast<unsigned>(gf2_degree(m));
  if (n == 0) return false;
  if (gf2_frobenius_power_of_x(n, m) != gf2_mod(2, m)) return false;
  unsigned rest = n;
  for (unsigned q = 2; q <= rest; ++q) {
    if (rest % q) continue;
    while (rest % q == 0) rest /= q;
    std::uint64_t h = gf2_frobenius_power_of_x(n / q, m) ^ gf2_mod(2, m);
    if (gf2_gcd(m, h) != 1) return false;
  }
  return true;
}

// Conway polynomials C(2, n) for n = 1..16.
inline constexpr std::array<std::uint64_t, 17> kConwayModuli = {
    0,
    0b11,                  // x + 1
    0b111,                 // x^2 + x + 1
    0b1011,                // x^3 + x + 1
    0b10011,               // x^4 + x + 1
    0b100101,              // x^5 + x^2 + 1
    0b1011011,             // x^6 + x^4 + x^3 + x + 1
    0b10000011,            // x^7 + x + 1
    0b100011101,           // x^8 + x^4 + x^3 + x^2 + 1
    0b1000010001,          // x^9 + x^4 + 1
    0b10001101111,         // x^10 + x^6 + x^5 + x^3 + x^2 + x + 1
    0b100000000101,        // x^11 + x^2 + 1
    0b1000011101011,       // x^12 + x^7 + x^6 + x^5 + x^3 + x + 1
    0b10000000011011,      // x^13 + x^4 + x^3 + x + 1
    0b100000010101001,     // x^14 + x^7 + x^5 + x^3 + 1
    0b1000000000110101,    // x^15 + x^5 + x^4 + x^2 + 1
    0b10000000000101101,   // x^16 + x^5 + x^3 + x^2 + 1
};

}  // namespace detail

/// F_{2^n} = F_2[x]/(modulus), 1 <= n <= 32.
class ResidueField {
 public:
  static constexpr unsigned kMaxDegree = 32;

  /// Default modulus: the Conway polynomial for n <= 16, otherwise the
  /// lexicographically smallest irreducible polynomial of degree n.
  explicit ResidueField(unsigned n) : ResidueField(n, default_modulus(n)) {}

  ResidueField(unsigned n, std::uint64_t modulus) : n_(n), modulus_(modulus) {
    require(n >= 1 && n <= kMaxDegree, ErrorKind::Precondition,
            "residue field degree must lie in [1, 32]");
    require(detail::gf2_degree(modulus) == n, ErrorKind::Precondition,
            "residue modulus has the wrong degree");
    require(detail::gf2_is_irreducible(modulus), ErrorKind::Precondition,
            "residue modulus is reducible over F_2");
  }

  static std::uint64_t default_modulus(unsigned n) {
    if (n >= 1 && n < detail::kConwayModuli.size()) return detail::kConwayModuli[n];
    require(n >= 1 && n <= kMaxDegree, ErrorKind::Precondition,
            "residue field degree must lie in [1, 32]");
    for (std::uint64_t low = 1; low < (std::uint64_t{1} << n); low += 2) {
      std::uint64_t m = (std::uint64_t{1} << n) | low;
      if (detail::gf2_is_irreducible(m)) return m;
    }
    fail(ErrorKind::Internal, "no irreducible polynomial found");
  }

  unsigned degree() const { return n_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  ResidueElement zero() const { return {0}; }
  ResidueElement one() const { return {1}; }
  ResidueElement generator() const { return {detail::gf2_mod(2, modulus_)}; }
  ResidueElement element(std::uint64_t bits) const {
    require(bits < size(), ErrorKind::Precondition, "residue bits exceed field size");
    return {bits};
  }

  ResidueElement add(ResidueElement a, ResidueElement b) const { return {a.bits ^ b.bits}; }
  ResidueElement mul(ResidueElement a, ResidueElement b) const {
    return {detail::gf2_mod(detail::clmul(a.bits, b.bits), modulus_)};
  }
  ResidueElement square(ResidueElement a) const { return mul(a, a); }

  ResidueElement pow(ResidueElement a, std::uint64_t e) const {
    ResidueElement r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = square(a);
      e >>= 1;
    }
    return r;
  }

  ResidueElement inverse(ResidueElement a) const {
    require(!a.is_zero(), ErrorKind::Precondition, "inverse of zero in residue field");
    return pow(a, size() - 2);
  }

  /// The unique square root (Frobenius is bijective).
  ResidueElement sqrt(ResidueElement a) const {
    for (unsigned i = 0; i + 1 < n_; ++i) a = square(a);
    return a;
  }

  /// Absolute trace to F_2.
  unsigned trace(ResidueElement a) const {
    ResidueElement t = a, s = a;
    for (unsigned i = 1; i < n_; ++i) {
      s = square(s);
      t = add(t, s);
    }
    return static_cast<unsigned>(t.bits & 1);
  }

  bool is_cube(ResidueElement u) const {
    require(!u.is_zero(), ErrorKind::Precondition, "cube test on zero residue");
    const std::uint64_t q1 = size() - 1;
    const std::uint64_t g = (q1 % 3 == 0) ? 3 : 1;
    return pow(u, q1 / g) == one();
  }

  /// Some cube root of a nonzero cube.
  ResidueElement cube_root(ResidueElement u) const {
    require(is_cube(u), ErrorKind::NotACube, "residue is not a cube");
    const std::uint64_t q1 = size() - 1;
    if (q1 % 3 != 0) {
      // 3 is invertible mod q-1
      std::uint64_t k = 1;
      while ((3 * k) % q1 != 1 % q1) ++k;
      return pow(u, k);
    }
    std::uint64_t t = q1, s3 = 1;
    while (t % 3 == 0) {
      t /= 3;
      s3 *= 3;
    }
    std::uint64_t k = 1;  // 3k = 1 mod t
    while ((3 * k) % t != 1 % t) ++k;
    const ResidueElement r0 = pow(u, k);
    // eps = u^(3k-1) lies in the 3-primary part of order s3
    const ResidueElement eps = mul(pow(r0, 3), inverse(u));
    ResidueElement z = one();
    for (std::uint64_t b = 2; b < size(); ++b)
      if (!is_cube({b})) {
        z = {b};
        break;
      }
    const ResidueElement c = pow(z, t);  // generates the 3-primary part
    ResidueElement cm = one();
    for (std::uint64_t m = 0; m < s3; ++m, cm = mul(cm, c)) {
      if (cm == eps) {
        require(m % 3 == 0, ErrorKind::Internal, "cube root discrete log");
        return mul(r0, inverse(pow(c, m / 3)));
      }
    }
    fail(ErrorKind::Internal, "cube root not found");
  }

  /// A primitive cube root of unity, when F_4 is a subfield (n even).
  std::optional<ResidueElement> primitive_cube_root_of_unity() const {
    if (n_ % 2) return std::nullopt;
    for (std::uint64_t b = 2; b < size(); ++b) {
      ResidueElement z{b};
      if (add(add(square(z), z), one()).is_zero()) return z;
    }
    fail(ErrorKind::Internal, "F_4 not found inside an even-degree field");
  }

  friend bool operator==(const ResidueField& a, const ResidueField& b) {
    return a.n_ == b.n_ && a.modulus_ == b.modulus_;
  }

 private:
  unsigned n_;
  std::uint64_t modulus_;
};

/// Dense polynomial over F_{2^n}, low degree first, no trailing zeros.
using ResiduePoly = std::vector<ResidueElement>;

namespace residue_poly {

inline void trim(ResiduePoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int degree(const ResiduePoly& p) { return static_cast<int>(p.size()) - 1; }

inline ResidueElement eval(const ResidueField& k, const ResiduePoly& p, ResidueElement x) {
  ResidueElement r = k.zero();
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = k.add(k.mul(r, x), *it);
  return r;
}

inline ResiduePoly derivative(const ResidueField&, const ResiduePoly& p) {
  ResiduePoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(i % 2 ? p[i] : ResidueElement{});
  trim(d);
  return d;
}

inline ResiduePoly mul(const ResidueField& k, const ResiduePoly& a, const ResiduePoly& b) {
  if (a.empty() || b.empty()) return {};
  ResiduePoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  trim(r);
  return r;
}

// Quotient and remainder; b must be nonzero.
inline std::pair<ResiduePoly, ResiduePoly> divmod(const ResidueField& k, ResiduePoly a,
                                                  const ResiduePoly& b) {
  require(!b.empty(), ErrorKind::Precondition, "division by zero polynomial");
  trim(a);
  ResiduePoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, ResidueElement{});
  const ResidueElement lead_inv = k.inverse(b.back());
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const ResidueElement c = k.mul(a.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = k.add(a[i + shift], k.mul(c, b[i]));
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline ResiduePoly monic(const ResidueField& k, ResiduePoly p) {
  trim(p);
  if (p.empty()) return p;
  const ResidueElement inv = k.inverse(p.back());
  for (auto& c : p) c = k.mul(c, inv);
  return p;
}

inline ResiduePoly gcd(const ResidueField& k, ResiduePoly a, ResiduePoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(k, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, a);
}

/// Product of the distinct monic irreducible factors (over the algebraic
/// closure its degree counts distinct roots).
inline ResiduePoly radical(const ResidueField& k, ResiduePoly p) {
  p = monic(k, p);
  if (degree(p) <= 0) return {k.one()};
  ResiduePoly d = derivative(k, p);
  if (d.empty()) {
    // p = s^2 with s obtained from square roots of the even coefficients.
    ResiduePoly s;
    for (std::size_t i = 0; i < p.size(); i += 2) s.push_back(k.sqrt(p[i]));
    return radical(k, s);
  }
  ResiduePoly g = gcd(k, p, d);
  ResiduePoly simple = divmod(k, p, g).first;
  ResiduePoly rg = radical(k, g);
  ResiduePoly common = gcd(k, simple, rg);
  return monic(k, mul(k, simple, divmod(k, rg, common).first));
}

/// Roots lying in the field itself, with multiplicity, by exhaustive search.
inline std::vector<std::pair<ResidueElement, int>> roots(const ResidueField& k, ResiduePoly p) {
  trim(p);
  std::vector<std::pair<ResidueElement, int>> out;
  if (degree(p) <= 0) return out;
  for (std::uint64_t b = 0; b < k.size(); ++b) {
    const ResidueElement x{b};
    if (!eval(k, p, x).is_zero()) continue;
    int mult = 0;
    ResiduePoly lin{x, k.one()};
    for (;;) {
      auto [q, r] = divmod(k, p, lin);
      if (!r.empty()) break;
      p = std::move(q);
      ++mult;
    }
    out.emplace_back(x, mult);
  }
  return out;
}

}  // namespace residue_poly

}  // namespace wildrep
