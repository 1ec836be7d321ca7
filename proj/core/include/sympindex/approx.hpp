#pragma once

#include <optional>
#include <string>

#include "sympindex/rational.hpp"

namespace sympindex {

/* A real number known to satisfy |true - val| <= err, with val and err exact
 * rationals. err == 0 means the value is exact. Every decision either
 * succeeds with a certificate or throws PrecisionExhausted; nothing is ever
 * guessed from the approximation alone.
 *
 * never_integer marks quantities that are provably not integers (nonzero
 * integer multiples of flagged-irrational angles); it survives scaling by
 * nonzero integers and is consulted by the integrality tests. */
struct ApproxRat {
  Rat val;
  Rat err;                 // >= 0
  bool never_integer = false;

  ApproxRat() : val(0), err(0) {}
  ApproxRat(Rat v) : val(std::move(v)), err(0) {}
  ApproxRat(Rat v, Rat e, bool ni = false)
      : val(std::move(v)), err(std::move(e)), never_integer(ni) {}

  bool exact() const { return err == 0; }

  ApproxRat operator+(const ApproxRat& o) const;
  ApproxRat operator-(const ApproxRat& o) const;
  ApproxRat operator*(const ApproxRat& o) const;
  ApproxRat operator-() const;
  ApproxRat scaled(const Rat& c) const;      // exact scalar multiply
  ApproxRat reciprocal() const;              // throws if the interval meets 0

  /* Trichotomy against an exact rational. Throws PrecisionExhausted when the
   * interval straddles c without being pinned to it. */
  int compare(const Rat& c) const;           // -1, 0, +1
  bool less_than(const Rat& c) const { return compare(c) < 0; }
  bool greater_than(const Rat& c) const { return compare(c) > 0; }

  Int floor_decide() const;
  Int ceil_decide() const;
  ApproxRat frac_decide() const;             // value - floor, in [0,1)
  int phi_decide() const;                    // 0 iff integer
  bool is_integer_decide() const;

  /* Distance to the nearest integer, as an interval. */
  ApproxRat dist_to_int() const;

  std::string str() const;                   // diagnostic rendering
};

}  // namespace sympindex
