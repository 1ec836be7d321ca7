#include <random>

#include "doctest.h"
#include "sympindex/errors.hpp"
#include "sympindex/index_iteration.hpp"
#include "sympindex/splitting.hpp"

using namespace sympindex;

namespace {

NormalFormBlock nth_block(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto angle = [&]() {
    if (pick(0, 2) == 0) {
      std::string approx = "0.41421356237309" + std::to_string(pick(100, 999));
      return Angle::irrational(approx, "0.00000001");
    }
    int q = pick(3, 11);
    Rat v(pick(1, q - 1), q);
    v.canonicalize();
    if (v == Rat(1, 2)) v = Rat(1, q);
    return Angle::rational(v);
  };
  switch (pick(0, 9)) {
    case 0: return NormalFormBlock::simple(BlockKind::E_minus);
    case 1: return NormalFormBlock::simple(BlockKind::E_id);
    case 2: return NormalFormBlock::simple(BlockKind::E_plus);
    case 3: return NormalFormBlock::simple(BlockKind::F_minus);
    case 4: return NormalFormBlock::simple(BlockKind::F_id);
    case 5: return NormalFormBlock::simple(BlockKind::F_plus);
    case 6: return NormalFormBlock::hyp(pick(1, 2));
    case 7:
      return NormalFormBlock::n2(
          pick(0, 1) ? BlockKind::N2Star : BlockKind::N2Zero, angle());
    default: return NormalFormBlock::rot(angle());
  }
}

NormalFormDecomposition random_dec(std::mt19937& rng, int d_max) {
  NormalFormDecomposition dec;
  int target = std::uniform_int_distribution<int>(1, d_max)(rng);
  int d = 0;
  while (d < target) {
    auto b = nth_block(rng);
    if (d + b.units() > target) continue;
    d += b.units();
    dec.blocks.push_back(std::move(b));
  }
  return dec;
}

}  // namespace

TEST_CASE("S plus at one counts the unipotent-down blocks") {
  std::mt19937 rng(101);
  for (int t = 0; t < 3000; ++t) {
    auto dec = random_dec(rng, 5);
    CHECK(S_plus_at_one(dec) == dec.p_minus() + dec.p_zero());
    CHECK(splitting_numbers(dec, CirclePoint::one()).plus == S_plus_at_one(dec));
  }
}

TEST_CASE("splitting numbers are bounded by the nullity") {
  std::mt19937 rng(103);
  for (int t = 0; t < 800; ++t) {
    auto dec = random_dec(rng, 5);
    for (const auto& pt : unit_spectrum(dec)) {
      auto s = splitting_numbers(dec, pt.point);
      Int nu = dec.nullity_at(pt.point);
      CHECK(s.plus <= nu);
      CHECK(s.minus <= nu);
      CHECK(pt.split.plus <= pt.nullity);
      CHECK(pt.split.minus <= pt.nullity);
    }
  }
}

TEST_CASE("conjugate points swap the splitting pair") {
  std::mt19937 rng(107);
  for (int t = 0; t < 800; ++t) {
    auto dec = random_dec(rng, 5);
    for (const auto& pt : spectrum_away_from_one(dec)) {
      if (pt.point.kind != CirclePoint::Kind::Elliptic) continue;
      auto here = splitting_numbers(dec, pt.point);
      auto there =
          splitting_numbers(dec, CirclePoint::at(pt.point.a->conjugate()));
      CHECK(here.plus == there.minus);
      CHECK(here.minus == there.plus);
    }
  }
}

TEST_CASE("iteration formula agrees with its splitting-number form") {
  // mu_-(m) = m (i + S+(1) - C) - (S+(1) + C) + 2 sum S-(t) ceil(m t)
  // on decompositions whose spectrum stays integer-decidable
  std::mt19937 rng(109);
  for (int t = 0; t < 250; ++t) {
    NormalFormDecomposition dec;
    auto pick = [&](int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    int target = pick(1, 4), d = 0;
    while (d < target) {
      auto b = nth_block(rng);
      if (d + b.units() > target) continue;
      d += b.units();
      dec.blocks.push_back(std::move(b));
    }
    IndexProfile p{dec, Int(pick(-3, 6))};
    Int sp = S_plus_at_one(dec), c = C_of(dec);
    for (long m = 1; m <= 30; ++m) {
      Int rhs = Int(m) * (p.base_index + sp - c) - (sp + c);
      bool decidable = true;
      for (const auto& pt : spectrum_away_from_one(dec)) {
        try {
          rhs += 2 * pt.split.minus * pt.turn.scaled(Rat(m)).ceil_decide();
        } catch (const PrecisionExhausted&) {
          decidable = false;
          break;
        }
      }
      if (!decidable) continue;
      CHECK(mu_minus_iter(p, m) == rhs);
    }
  }
}

TEST_CASE("spectrum listing is complete and consistent") {
  NormalFormDecomposition dec;
  dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(Rat(1, 3))));
  dec.blocks.push_back(NormalFormBlock::simple(BlockKind::F_plus));
  dec.blocks.push_back(NormalFormBlock::simple(BlockKind::E_id));
  auto away = spectrum_away_from_one(dec);
  // Rot contributes a and 1-a, F_plus contributes -1; E_id sits at +1
  CHECK(away.size() == 3);
  auto all = unit_spectrum(dec);
  CHECK(all.size() == 4);
  Int total_minus = 0;
  for (const auto& pt : away) total_minus += pt.split.minus;
  CHECK(total_minus == C_of(dec));
}
