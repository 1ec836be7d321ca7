#include "sympindex/angle.hpp"

#include "sympindex/errors.hpp"

namespace sympindex {

Angle Angle::rational(const Rat& v) {
  if (v <= 0 || v >= 1)
    throw InputError("angle must lie in (0,1), got " + format_rat(v));
  Angle a;
  a.rational_ = true;
  a.value_ = v;
  a.gap_ = 0;
  return a;
}

Angle Angle::irrational(const std::string& approx, const std::string& gap) {
  return irrational_exactish(parse_decimal(approx), parse_decimal(gap));
}

Angle Angle::irrational_exactish(const Rat& approx, const Rat& gap) {
  if (gap <= 0) throw InputError("irrational angle gap must be positive");
  if (approx <= 0 || approx >= 1)
    throw InputError("angle approximation must lie in (0,1)");
  Angle a;
  a.rational_ = false;
  a.value_ = approx;
  a.gap_ = gap;
  return a;
}

const Rat& Angle::rat() const {
  if (!rational_) throw InputError("angle is flagged irrational");
  return value_;
}

ApproxRat Angle::value() const { return {value_, err(), !rational_}; }

ApproxRat Angle::times(const Int& m) const {
  return value().scaled(Rat(m));
}

Angle Angle::conjugate() const {
  Angle a;
  a.rational_ = rational_;
  a.value_ = 1 - value_;
  a.gap_ = gap_;
  return a;
}

bool Angle::same_point(const Angle& o) const {
  if (rational_ && o.rational_) return value_ == o.value_;
  if (*this == o) return true;
  Rat sep = value_ - o.value_;
  if (sep < 0) sep = -sep;
  if (sep > err() + o.err()) return false;
  if (rational_ != o.rational_) {
    /* a rational point vs an irrational marker: distinct by flag, provided
     * the rational is credibly separated; within the error radius we cannot
     * certify the marker's honesty either way */
    throw PrecisionExhausted("rational angle within the error radius of an "
                             "irrational marker");
  }
  throw PrecisionExhausted("irrational angle markers too close to separate");
}

std::string Angle::describe() const {
  if (rational_) return format_rat(value_);
  return format_decimal(value_, 24) + "~ (gap " + format_decimal(gap_, 60) + ")";
}

}  // namespace sympindex
