#pragma once

// Field towers over K: embeddings, unramified layers K_m, cube-root layers
// K(c^(1/3)), characteristic polynomials and the square test over M^nr.

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

#include "wildrep/errors.hpp"
#include "wildrep/local_field.hpp"
#include "wildrep/local_polynomial.hpp"

namespace wildrep {

/// Coefficients of det(t*I - A), lowest degree first, by the division-free
/// Berkowitz recurrence. Works for any commutative ring element type.
template <class T>
std::vector<T> berkowitz_charpoly(const std::vector<std::vector<T>>& a, const T& zero) {
  const std::size_t n = a.size();
  T one = zero.one_like();
  std::vector<T> vect{one};  // descending
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<T> q{one, -a[k][k]};
    std::vector<T> x(k, zero);
    for (std::size_t i = 0; i < k; ++i) x[i] = a[i][k];
    for (std::size_t j = 0; j < k; ++j) {
      T dot = zero;
      for (std::size_t i = 0; i < k; ++i) dot = dot + a[k][i] * x[i];
      q.push_back(-dot);
      std::vector<T> y(k, zero);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) y[r] = y[r] + a[r][c] * x[c];
      x = std::move(y);
    }
    std::vector<T> next(k + 2, zero);
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j) next[i] = next[i] + q[i - j] * vect[j];
    vect = std::move(next);
  }
  std::reverse(vect.begin(), vect.end());
  return vect;
}

/// Largest precision (in uniformizer digits) whose storage fits `known_bits`
/// reliable 2-adic bits for ramification index e.
inline int max_precision_for_bits(unsigned e, int known_bits) {
  const long ie = static_cast<long>(e);
  const long room = static_cast<long>(known_bits) - ie - 6;
  if (room <= 0) return 0;
  return static_cast<int>(std::min<long>(INT_MAX / 4, ie * room));
}

/// K -> L given by the images of the unramified generator X and of the
/// uniformizer of K.
struct FieldEmbedding {
  LocalField source;
  LocalField target;
  LocalElement x_image;
  LocalElement pi_image;
  unsigned ramification = 1;  // e(L/K)

  LocalElement apply(const LocalElement& x) const {
    require(x.field_ptr() == source.shared(), ErrorKind::Precondition, "embedding applied to a foreign element");
    if (x.is_zero()) {
      if (x.is_exact_zero()) return target.zero();
      return LocalElement::make_zero(target.shared(), detail::sat_add(0, x.absolute_precision() * static_cast<int>(ramification)));
    }
    const auto& f = x.data();
    const auto& u = x.unit_coordinates();
    LocalElement acc = target.zero();
    LocalElement rp = target.one();
    for (unsigned i = 0; i < f.e; ++i) {
      LocalElement w = target.zero();
      LocalElement xp = target.one();
      for (unsigned j = 0; j < f.n; ++j) {
        if (u[i * f.n + j] != 0) w = w + target.integer(u[i * f.n + j]) * xp;
        if (j + 1 < f.n) xp = xp * x_image;
      }
      acc = acc + w * rp;
      if (i + 1 < f.e) rp = rp * pi_image;
    }
    acc = acc.truncate_absolute(x.relative_precision() * static_cast<int>(ramification));
    return acc * pi_image.pow(x.valuation());
  }

  /// this followed by `next`.
  FieldEmbedding then(const FieldEmbedding& next) const {
    require(next.source == target, ErrorKind::Precondition, "embeddings do not compose");
    return {source, next.target, next.apply(x_image), next.apply(pi_image), ramification * next.ramification};
  }

  static FieldEmbedding identity(const LocalField& k) {
    return {k, k, k.unramified_generator(), k.uniformizer(), 1};
  }
};

struct TowerLayer {
  std::string kind;  // unramified | eisenstein | quotient
  std::string modulus;
  unsigned e = 1;
  unsigned f = 1;
};

inline std::string describe_eisenstein(const LocalField& k) {
  if (k.is_unramified()) return "pi - 2";
  std::string s = "pi^" + std::to_string(k.e());
  const auto& co = k.eisenstein_coefficients();
  for (std::size_t i = co.size(); i-- > 0;) {
    bool zero = std::all_of(co[i].begin(), co[i].end(), [](const mpz_class& c) { return c == 0; });
    if (zero) continue;
    s += " + [";
    for (std::size_t j = 0; j < co[i].size(); ++j) s += (j ? "," : "") + co[i][j].get_str();
    s += "]";
    if (i) s += "*pi^" + std::to_string(i);
  }
  return s;
}

struct Extension {
  LocalField field;
  FieldEmbedding embedding;
  TowerLayer layer;
};

namespace detail {

inline std::vector<std::vector<mpz_class>> split_coordinates(const Coeffs& s, unsigned n, unsigned e) {
  std::vector<std::vector<mpz_class>> out(e, std::vector<mpz_class>(n));
  for (unsigned i = 0; i < e; ++i)
    for (unsigned j = 0; j < n; ++j) out[i][j] = s[i * n + j];
  return out;
}

// 2-adic bits reliably known for an integral element of an unramified field.
inline int known_bits(const LocalElement& w) { return w.absolute_precision(); }

}  // namespace detail

/// K_m: the unramified extension of degree m, with K embedded.
inline Extension unramified_extension(const LocalField& k, unsigned m,
                                      std::optional<std::uint64_t> modulus = std::nullopt) {
  require(m >= 1, ErrorKind::Precondition, "extension degree must be positive");
  const unsigned n = k.n(), e = k.e(), nm = n * m;
  require(nm <= 32, ErrorKind::Precondition, "residue degree above 32 is not supported");
  const int need_bits = static_cast<int>(k.storage_bits()) + 8;
  LocalField w = LocalField::unramified(nm, need_bits + 8, modulus);
  // Root of the lifted residue modulus of K.
  std::vector<LocalElement> mu;
  for (unsigned j = 0; j <= n; ++j) mu.push_back(w.integer(static_cast<long>((k.residue().modulus() >> j) & 1)));
  auto roots = roots_in_field(LocalPolynomial(mu));
  require(roots.size() == n, ErrorKind::Internal, "residue modulus does not split in the extension");
  const LocalElement xi = roots.front();
  const std::uint64_t big_mod = w.residue().modulus();

  LocalField km;
  int xi_bits = detail::known_bits(xi);
  if (k.is_unramified()) {
    km = LocalField::unramified(nm, k.precision(), big_mod);
  } else {
    std::vector<std::vector<mpz_class>> co;
    int kb = INT_MAX;
    for (const auto& c : k.eisenstein_coefficients()) {
      LocalElement acc = w.zero(), xp = w.one();
      for (unsigned j = 0; j < n; ++j) {
        if (c[j] != 0) acc = acc + w.integer(c[j]) * xp;
        xp = xp * xi;
      }
      kb = std::min(kb, detail::known_bits(acc));
      co.push_back(acc.integral_coordinates());
      for (auto& z : co.back()) detail::mod2k(z, static_cast<unsigned>(std::min(kb, need_bits + 8)));
    }
    km = LocalField::eisenstein(nm, co, k.precision(), big_mod, std::min(kb, need_bits + 8));
  }
  LocalElement xi_k = LocalElement::from_integral(km.shared(), [&] {
    detail::Coeffs s(km.data()->dim());
    auto c = xi.integral_coordinates();
    for (unsigned j = 0; j < nm; ++j) s[j] = c[j];
    return s;
  }(), xi_bits * static_cast<int>(e));
  FieldEmbedding emb{k, km, xi_k, km.uniformizer(), 1};
  return {km, emb, {"unramified", "degree " + std::to_string(m) + " residue extension", 1, m}};
}

/// K(c^(1/3)) for v(c) = 1, presented by the absolute Eisenstein polynomial
/// of the cube root over the unramified subfield. Its uniformizer is the
/// chosen cube root of c.
inline Extension cube_root_extension(const LocalElement& c, const LocalField& k, int precision) {
  require(c.field_ptr() == k.shared(), ErrorKind::Precondition, "element not in the given field");
  require(!c.is_zero() && c.valuation() == 1, ErrorKind::Precondition, "cube-root layer needs v(c) = 1");
  const unsigned n = k.n(), e = k.e(), d = 3 * e;
  LocalField w = LocalField::unramified(n, static_cast<int>(k.storage_bits()) + 4, k.residue().modulus());

  // Multiplication by Y on the W-basis pi^i Y^j (index j*e + i).
  std::vector<std::vector<LocalElement>> mat(d, std::vector<LocalElement>(d, w.zero()));
  auto w_elem = [&](const detail::Coeffs& s, unsigned i, int absbits) {
    std::vector<std::vector<mpz_class>> one_row{std::vector<mpz_class>(s.begin() + i * n, s.begin() + (i + 1) * n)};
    return w.from_coordinates(0, one_row).truncate_absolute(absbits);
  };
  for (unsigned j = 0; j < 3; ++j)
    for (unsigned i = 0; i < e; ++i) {
      const unsigned col = j * e + i;
      if (j < 2) {
        mat[(j + 1) * e + i][col] = w.one();
        continue;
      }
      LocalElement pc = c * k.uniformizer().pow(i);
      const int absbits = pc.absolute_precision() / static_cast<int>(e);
      auto s = pc.integral_coordinates();
      for (unsigned r = 0; r < e; ++r) mat[r][col] = w_elem(s, r, absbits);
    }
  auto cp = berkowitz_charpoly(mat, w.zero());
  int kb = INT_MAX;
  std::vector<std::vector<mpz_class>> co;
  for (unsigned i = 0; i < d; ++i) {
    kb = std::min(kb, cp[i].absolute_precision());
    co.push_back(cp[i].integral_coordinates());
  }
  kb = std::min(kb, static_cast<int>(w.storage_bits()) - 2);
  const int feasible = max_precision_for_bits(d, kb);
  const int prec = std::min(precision, feasible);
  require(prec >= static_cast<int>(8 * d), ErrorKind::InsufficientPrecision,
          "cube-root layer needs more precision in the base field");
  for (auto& row : co)
    for (auto& z : row) detail::mod2k(z, static_cast<unsigned>(kb));
  LocalField kp = LocalField::eisenstein(n, co, prec, k.residue().modulus(), kb);

  // Locate the image of pi_K: a root r of E_K with c(r) = Y^3.
  const LocalElement y = kp.uniformizer();
  const LocalElement y3 = y * y * y;
  std::vector<LocalElement> ek;
  for (unsigned i = 0; i < e; ++i) {
    std::vector<mpz_class> row(n);
    if (k.is_unramified()) row[0] = -2;
    else row = k.eisenstein_coefficients()[i];
    ek.push_back(kp.from_coordinates(0, {row}));
  }
  ek.push_back(kp.one());
  const LocalElement x_img = kp.unramified_generator();
  for (const auto& r : roots_in_field(LocalPolynomial(ek))) {
    FieldEmbedding emb{k, kp, x_img, r, 3};
    if (emb.apply(c).equals_to_precision(y3))
      return {kp, emb, {"eisenstein", describe_eisenstein(kp), 3, 1}};
  }
  fail(ErrorKind::Internal, "no embedding of the base field matches the cube root");
}

/// Characteristic polynomial over the unramified subfield `w` of an
/// integral element of a LocalField sharing w's residue modulus.
inline std::vector<LocalElement> charpoly_over_unramified(const LocalElement& x, const LocalField& w) {
  const auto& f = x.data();
  require(w.is_unramified() && w.n() == f.n && w.residue().modulus() == f.residue.modulus(),
          ErrorKind::Precondition, "charpoly needs the matching unramified subfield");
  require(x.is_zero() || x.valuation() >= 0, ErrorKind::Precondition, "charpoly of a non-integral element");
  const unsigned e = f.e, n = f.n;
  std::vector<std::vector<LocalElement>> mat(e, std::vector<LocalElement>(e, w.zero()));
  LocalElement col = x;
  const LocalElement pi = x.one_like().shift(1);
  for (unsigned j = 0; j < e; ++j) {
    const auto s = col.integral_coordinates();
    const int bits = col.absolute_precision() >= kInfiniteValuation ? kInfiniteValuation
                                                                     : col.absolute_precision() / static_cast<int>(e);
    for (unsigned i = 0; i < e; ++i) {
      std::vector<mpz_class> row(s.begin() + i * n, s.begin() + (i + 1) * n);
      mat[i][j] = w.from_coordinates(0, {row}).truncate_absolute(bits);
    }
    col = col * pi;
  }
  return berkowitz_charpoly(mat, w.zero());
}

/// Square test in the maximal unramified extension of the field of x.
inline bool is_square_in_Mnr(const LocalElement& x) {
  require(!x.is_exact_zero(), ErrorKind::Precondition, "square test on zero");
  require(!x.is_zero(), ErrorKind::InsufficientPrecision, "square test on an element zero to precision");
  if (x.valuation() % 2 != 0) return false;
  const auto& f = x.data();
  const int two_e = 2 * static_cast<int>(f.e);
  LocalElement u = x.unit_part();
  // Make the unit congruent to 1.
  const ResidueElement r = f.residue.sqrt(f.residue.inverse(u.residue()));
  LocalElement lift = LocalElement::from_integral(x.field_ptr(), f.abs_lift(r), kInfiniteValuation);
  u = u * lift * lift;
  const LocalElement one = x.one_like();
  for (int guard = 0; guard <= two_e + 1; ++guard) {
    LocalElement d = u - one;
    if (d.is_zero()) {
      require(d.absolute_precision() >= two_e, ErrorKind::InsufficientPrecision,
              "square class not determined at working precision");
      return true;
    }
    const int k = d.valuation();
    if (k >= two_e) return true;
    if (k % 2 != 0) return false;
    // u = 1 + a pi^k with k = 2j < 2e; divide by (1 + c pi^j)^2, c^2 = a mod pi.
    const ResidueElement a = d.unit_part().residue();
    const ResidueElement cr = f.residue.sqrt(a);
    LocalElement s = one + LocalElement::from_integral(x.field_ptr(), f.abs_lift(cr), kInfiniteValuation).shift(k / 2);
    u = u / (s * s);
  }
  fail(ErrorKind::Internal, "square test did not terminate");
}

}  // namespace wildrep
