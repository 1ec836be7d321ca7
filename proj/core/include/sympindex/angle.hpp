#pragma once

#include <string>

#include "sympindex/approx.hpp"
#include "sympindex/rational.hpp"

namespace sympindex {

/* A point on the unit circle written as a fraction of a full turn, in (0,1).
 *
 * Rational angles are exact. Irrational angles carry a decimal approximation
 * (stored as the exact rational the literal denotes) plus a declared gap
 * g > 0: the caller asserts the true value differs from the approximation by
 * less than g/4 and keeps distance at least g from every rational with small
 * denominator. Nonzero integer multiples of a flagged-irrational angle are
 * never integers, which is what the nullity and phi-term rules rely on. */
class Angle {
 public:
  static Angle rational(const Rat& v);
  static Angle irrational(const std::string& approx, const std::string& gap);
  static Angle irrational_exactish(const Rat& approx, const Rat& gap);

  bool is_rational() const { return rational_; }
  const Rat& rat() const;          // throws unless rational
  const Rat& approx() const { return value_; }
  const Rat& gap() const { return gap_; }
  Rat err() const { return rational_ ? Rat(0) : Rat(gap_ / 4); }

  /* The angle as an interval; never_integer is set for irrational angles. */
  ApproxRat value() const;

  /* m * angle (the quantity whose ceilings/fractional parts drive the
   * iteration formula). never_integer is preserved for m != 0. */
  ApproxRat times(const Int& m) const;

  /* Mirror image 1 - a (the conjugate eigenvalue position). */
  Angle conjugate() const;

  /* Equality of circle points. Distinct irrational markers closer than the
   * sum of their error radii cannot be told apart: PrecisionExhausted. */
  bool same_point(const Angle& o) const;

  bool operator==(const Angle& o) const {
    return rational_ == o.rational_ && value_ == o.value_ && gap_ == o.gap_;
  }

  std::string describe() const;

 private:
  Angle() = default;
  bool rational_ = true;
  Rat value_;   // exact value, or the decimal approximation
  Rat gap_;     // 0 for rational angles
};

}  // namespace sympindex
