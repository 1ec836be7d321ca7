#include "doctest.h"
#include "sympindex/blocks.hpp"
#include "sympindex/errors.hpp"

using namespace sympindex;

namespace {

NormalFormDecomposition mixed() {
  NormalFormDecomposition dec;
  dec.blocks.push_back(NormalFormBlock::simple(BlockKind::E_plus));
  dec.blocks.push_back(NormalFormBlock::simple(BlockKind::F_minus));
  dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(Rat(1, 3))));
  dec.blocks.push_back(NormalFormBlock::hyp(2));
  dec.blocks.push_back(
      NormalFormBlock::n2(BlockKind::N2Star, Angle::rational(Rat(1, 4))));
  return dec;
}

}  // namespace

TEST_CASE("multiplicity counters see each block once") {
  auto dec = mixed();
  dec.validate();
  CHECK(dec.p_plus() == 1);
  CHECK(dec.q_minus() == 1);
  CHECK(dec.r() == 1);
  CHECK(dec.h() == 2);
  CHECK(dec.r_star() == 1);
  CHECK(dec.r_zero() == 0);
  CHECK(dec.d() == 1 + 1 + 1 + 2 + 2);
}

TEST_CASE("angles reject the degenerate circle points") {
  CHECK_THROWS_AS(Angle::rational(Rat(0)), InputError);
  CHECK_THROWS_AS(Angle::rational(Rat(7, 5)), InputError);
  CHECK_NOTHROW(Angle::rational(Rat(2, 5)));
  // 1/2 is a legal circle point but not a rotation block parameter
  CHECK_NOTHROW(Angle::rational(Rat(1, 2)));
  auto half_rot = NormalFormBlock::rot(Angle::rational(Rat(1, 2)));
  CHECK_THROWS_AS(half_rot.validate(), InputError);
}

TEST_CASE("irrational markers keep multiples off the integers") {
  Angle a = Angle::irrational("0.61803398874989484820", "0.0001");
  ApproxRat twelve = a.times(12);
  CHECK(twelve.never_integer);
  CHECK(twelve.is_integer_decide() == false);
  CHECK(a.times(0).val == 0);
}

TEST_CASE("conjugate mirrors the circle point") {
  Angle a = Angle::rational(Rat(1, 3));
  CHECK(a.conjugate().rat() == Rat(2, 3));
  Angle b = Angle::irrational("0.30000000001", "0.000001");
  CHECK(b.conjugate().approx() == Rat(1) - b.approx());
  CHECK(!b.conjugate().is_rational());
}

TEST_CASE("nullity counts kernel dimension at circle points") {
  auto dec = mixed();
  CHECK(dec.nullity_at(CirclePoint::one()) == 1);        // E_plus only
  CHECK(dec.nullity_at(CirclePoint::minus_one()) == 1);  // F_minus only
  CHECK(dec.nullity_at(CirclePoint::at(Angle::rational(Rat(1, 3)))) == 1);
  CHECK(dec.nullity_at(CirclePoint::at(Angle::rational(Rat(1, 4)))) == 1);
  CHECK(dec.nullity_at(CirclePoint::at(Angle::rational(Rat(1, 5)))) == 0);
}

TEST_CASE("irrational ellipticity requires all-rotation irrational blocks") {
  NormalFormDecomposition good;
  good.blocks.push_back(
      NormalFormBlock::rot(Angle::irrational("0.7071067811", "0.0000001")));
  good.blocks.push_back(
      NormalFormBlock::rot(Angle::irrational("0.3183098861", "0.0000001")));
  CHECK(good.is_irrationally_elliptic());

  NormalFormDecomposition rat_rot;
  rat_rot.blocks.push_back(NormalFormBlock::rot(Angle::rational(Rat(1, 3))));
  CHECK(!rat_rot.is_irrationally_elliptic());

  CHECK(!mixed().is_irrationally_elliptic());
}

TEST_CASE("normalized order is permutation insensitive") {
  auto dec = mixed();
  NormalFormDecomposition shuffled;
  for (auto it = dec.blocks.rbegin(); it != dec.blocks.rend(); ++it)
    shuffled.blocks.push_back(*it);
  CHECK(dec.equivalent(shuffled));
  CHECK(!dec.equivalent(NormalFormDecomposition{}));
}

TEST_CASE("diamond sum concatenates and revalidates") {
  NormalFormDecomposition a, b;
  a.blocks.push_back(NormalFormBlock::simple(BlockKind::E_minus));
  b.blocks.push_back(NormalFormBlock::rot(Angle::rational(Rat(1, 6))));
  auto s = diamond_sum(a, b);
  CHECK(s.d() == 2);
  CHECK(s.p_minus() == 1);
  CHECK(s.r() == 1);
}

TEST_CASE("hyp block sizes must be positive") {
  CHECK_THROWS_AS(NormalFormBlock::hyp(0).validate(), InputError);
  CHECK(NormalFormBlock::hyp(3).units() == 3);
}
