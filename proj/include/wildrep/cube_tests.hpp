#pragma once

// Cube tests in K and in its maximal unramified extension, and Hensel
// cube roots.

#include "wildrep/errors.hpp"
#include "wildrep/local_field.hpp"

namespace wildrep {

inline bool residue_is_cube(const ResidueField& k, ResidueElement u) { return k.is_cube(u); }

namespace detail {
inline int require_nonzero_valuation(const LocalElement& x) {
  require(!x.is_exact_zero(), ErrorKind::Precondition, "cube test on zero");
  require(!x.is_zero(), ErrorKind::InsufficientPrecision, "element is zero to working precision");
  return x.valuation();
}

inline int floor_mod(int a, int m) { return ((a % m) + m) % m; }
}  // namespace detail

/// Every unit is a cube over K^nr (residue field algebraically closed, 3 odd),
/// so only the valuation matters.
inline bool is_cube_in_Knr(const LocalElement& x) {
  return detail::floor_mod(detail::require_nonzero_valuation(x), 3) == 0;
}

/// 3 | v(x) and the residue of the unit part is a cube in F_q. Units
/// congruent to 1 are cubes since 3 is a unit.
inline bool is_cube_in_K(const LocalElement& x) {
  if (!is_cube_in_Knr(x)) return false;
  return x.data().residue.is_cube(x.unit_part().residue());
}

/// y with y^3 = x in K. Throws NotACube when x is not a cube in K.
inline LocalElement hensel_cube_root(const LocalElement& x) {
  require(is_cube_in_K(x), ErrorKind::NotACube, "element is not a cube in the field");
  const auto& f = x.data();
  const LocalElement u = x.unit_part();
  const ResidueElement r = f.residue.cube_root(u.residue());
  LocalElement w = LocalElement::from_integral(x.field_ptr(), f.abs_lift(r), kInfiniteValuation);
  const LocalElement three = x.one_like() + x.one_like() + x.one_like();
  for (int iter = 0; iter < 2 * f.precision + 8; ++iter) {
    LocalElement err = w * w * w - u;
    if (err.is_zero()) break;
    LocalElement next = w - err / (three * w * w);
    if (next.equals_to_precision(w)) {
      w = next;
      break;
    }
    w = next;
  }
  w = w.truncate_absolute(u.relative_precision());
  return w.shift(x.valuation() / 3);
}

}  // namespace wildrep
