#include "sympindex/approx.hpp"

#include "sympindex/errors.hpp"

namespace sympindex {

namespace {
Rat abs_rat(const Rat& a) { return a < 0 ? Rat(-a) : a; }
}

ApproxRat ApproxRat::operator+(const ApproxRat& o) const {
  return {val + o.val, err + o.err, false};
}

ApproxRat ApproxRat::operator-(const ApproxRat& o) const {
  return {val - o.val, err + o.err, false};
}

ApproxRat ApproxRat::operator*(const ApproxRat& o) const {
  /* |xy - ab| <= |a| eb + |b| ea + ea eb */
  Rat e = abs_rat(val) * o.err + abs_rat(o.val) * err + err * o.err;
  return {val * o.val, e, false};
}

ApproxRat ApproxRat::operator-() const { return {-val, err, never_integer}; }

ApproxRat ApproxRat::scaled(const Rat& c) const {
  bool ni = never_integer && is_integer(c) && c != 0;
  return {val * c, err * abs_rat(c), ni};
}

ApproxRat ApproxRat::reciprocal() const {
  Rat a = abs_rat(val);
  if (a <= err)
    throw PrecisionExhausted("reciprocal of an interval containing zero");
  /* |1/x - 1/v| = |x-v|/(|x||v|) <= err / (|v|(|v|-err)) */
  Rat e = err / (a * (a - err));
  return {Rat(1) / val, e, false};
}

int ApproxRat::compare(const Rat& c) const {
  if (err == 0) return val < c ? -1 : (val > c ? 1 : 0);
  if (val - err > c) return 1;
  if (val + err < c) return -1;
  throw PrecisionExhausted("comparison undecidable at declared precision: " +
                           str() + " vs " + format_rat(c));
}

Int ApproxRat::floor_decide() const {
  if (err == 0) return floor_rat(val);
  Rat lo = val - err, hi = val + err;
  Int fl = floor_rat(lo);
  if (hi <= Rat(fl + 1)) return fl;
  /* the open interval (lo, hi) crosses an integer */
  if (never_integer && floor_rat(hi) == fl + 1 && frac_rat(hi) == 0) return fl;
  throw PrecisionExhausted("floor undecidable at declared precision: " + str());
}

Int ApproxRat::ceil_decide() const {
  if (err == 0) return ceil_rat(val);
  Rat lo = val - err, hi = val + err;
  Int cl = ceil_rat(hi);
  if (lo >= Rat(cl - 1)) return cl;
  if (never_integer && ceil_rat(lo) == cl - 1 && frac_rat(lo) == 0) return cl;
  throw PrecisionExhausted("ceil undecidable at declared precision: " + str());
}

ApproxRat ApproxRat::frac_decide() const {
  Int fl = floor_decide();
  return {val - Rat(fl), err, never_integer};
}

int ApproxRat::phi_decide() const { return is_integer_decide() ? 0 : 1; }

bool ApproxRat::is_integer_decide() const {
  if (err == 0) return is_integer(val);
  if (never_integer) return false;
  Rat lo = val - err, hi = val + err;
  if (floor_rat(lo) == floor_rat(hi) && !is_integer(lo) && !is_integer(hi))
    return false;  // no integer inside the interval
  throw PrecisionExhausted("integrality undecidable at declared precision: " +
                           str());
}

ApproxRat ApproxRat::dist_to_int() const {
  Rat f = frac_rat(val);
  Rat d = f <= Rat(1, 2) ? f : Rat(1) - f;
  return {d, err, false};
}

std::string ApproxRat::str() const {
  if (err == 0) return format_rat(val);
  return format_decimal(val, 40) + " +/- " + format_decimal(err, 60);
}

}  // namespace sympindex
