#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sympindex {

using Int = mpz_class;
using Rat = mpq_class;

/* floor, ceiling, fractional part and the integrality indicator
 * phi(a) = ceil(a) - floor(a) for exact rationals. */
Int floor_rat(const Rat& a);
Int ceil_rat(const Rat& a);
Rat frac_rat(const Rat& a);          // a - floor(a), in [0,1)
int phi_rat(const Rat& a);           // 0 iff a is an integer, else 1
bool is_integer(const Rat& a);

Int lcm_int(const Int& a, const Int& b);

/* "p/q" or "k"; canonicalized, q > 0. Throws InputError on junk or q == 0. */
Rat parse_rat(const std::string& s);
std::string format_rat(const Rat& a);

/* Decimal literals, optionally signed, with optional fraction and exponent:
 * "0.125", "-3", "1e-30", "6.18e-1". Exact: result has a power-of-ten
 * denominator. */
Rat parse_decimal(const std::string& s);

/* Round-to-nearest fixed-point rendering with `digits` places after the
 * point, trailing zeros trimmed. Exact for inputs whose denominator divides
 * 10^digits (in particular anything parse_decimal produced at or below that
 * scale). */
std::string format_decimal(const Rat& a, int digits);

/* Number of decimal digits used when deriving irrational approximations,
 * settable once at startup from SYMPINDEX_PRECISION. */
int default_precision();
void set_default_precision(int digits);

std::int64_t to_i64(const Int& v);

}  // namespace sympindex
