#include "doctest.h"
#include "sympindex/approx.hpp"
#include "sympindex/errors.hpp"
#include "sympindex/rational.hpp"

using namespace sympindex;

TEST_CASE("floor ceil frac on signed rationals") {
  CHECK(floor_rat(Rat(7, 2)) == 3);
  CHECK(floor_rat(Rat(-7, 2)) == -4);
  CHECK(floor_rat(Rat(4)) == 4);
  CHECK(ceil_rat(Rat(7, 2)) == 4);
  CHECK(ceil_rat(Rat(-7, 2)) == -3);
  CHECK(ceil_rat(Rat(-4)) == -4);
  CHECK(frac_rat(Rat(-1, 3)) == Rat(2, 3));
  CHECK(frac_rat(Rat(5)) == 0);
}

TEST_CASE("phi is the half-open fractional indicator") {
  CHECK(phi_rat(Rat(3)) == 0);
  CHECK(phi_rat(Rat(1, 2)) == 1);
  CHECK(phi_rat(Rat(-1, 2)) == 1);
}

TEST_CASE("decimal parsing round-trips through formatting") {
  Rat v = parse_decimal("0.125");
  CHECK(v == Rat(1, 8));
  CHECK(format_decimal(Rat(1, 8), 3) == "0.125");
  CHECK(format_decimal(Rat(1, 3), 5) == "0.33333");
  CHECK(format_decimal(Rat(-1, 8), 2) == "-0.12");  // round half up
  CHECK(format_decimal(Rat(5, 2), 4) == "2.5");     // trailing zeros dropped
  CHECK(parse_decimal("-2.50") == Rat(-5, 2));
  CHECK_THROWS_AS(parse_decimal("1.2.3"), InputError);
}

TEST_CASE("rat parsing accepts integers and fractions") {
  CHECK(parse_rat("22/7") == Rat(22, 7));
  CHECK(parse_rat("-3") == Rat(-3));
  CHECK_THROWS_AS(parse_rat("1/0"), InputError);
}

TEST_CASE("interval arithmetic tracks worst-case error") {
  ApproxRat a(Rat(1, 3), Rat(1, 100));
  ApproxRat b(Rat(1, 6), Rat(1, 50));
  ApproxRat s = a + b;
  CHECK(s.val == Rat(1, 2));
  CHECK(s.err == Rat(3, 100));
  CHECK(!s.exact());
  CHECK((a - a).err == Rat(1, 50));
}

TEST_CASE("floor decisions refuse straddling intervals") {
  ApproxRat near2(Rat(199, 100), Rat(1, 50));  // covers 2
  CHECK_THROWS_AS(near2.floor_decide(), PrecisionExhausted);
  ApproxRat safe(Rat(199, 100), Rat(1, 500));
  CHECK(safe.floor_decide() == 1);
  ApproxRat marked(Rat(2), Rat(1, 10), true);  // never an integer by fiat
  CHECK(marked.is_integer_decide() == false);
  CHECK(marked.phi_decide() == 1);
}

TEST_CASE("exact values decide everything") {
  ApproxRat e(Rat(7, 3));
  CHECK(e.floor_decide() == 2);
  CHECK(e.ceil_decide() == 3);
  CHECK(e.frac_decide().val == Rat(1, 3));
  CHECK(e.phi_decide() == 1);
  CHECK(e.is_integer_decide() == false);
}

TEST_CASE("precision default is clamped") {
  int old = default_precision();
  set_default_precision(3);
  CHECK(default_precision() == 8);
  set_default_precision(old);
  CHECK(default_precision() == old);
}
