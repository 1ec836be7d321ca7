#include "sympindex/splitting.hpp"

#include "sympindex/errors.hpp"

namespace sympindex {

namespace {

/* (S+, S-) of a single block at the eigenvalue one / minus one. */
SplittingPair at_one(const NormalFormBlock& b) {
  switch (b.kind) {
    case BlockKind::E_minus:
    case BlockKind::E_id:
      return {1, 1};
    default:
      return {0, 0};
  }
}

SplittingPair at_minus_one(const NormalFormBlock& b) {
  switch (b.kind) {
    case BlockKind::F_id:
    case BlockKind::F_plus:
      return {1, 1};
    default:
      return {0, 0};
  }
}

/* (S+, S-) of a block at the elliptic position p (throws only if marker
 * separation is genuinely undecidable). */
SplittingPair at_elliptic(const NormalFormBlock& b, const Angle& p) {
  if (!b.has_angle()) return {0, 0};
  const Angle& a = b.ang();
  switch (b.kind) {
    case BlockKind::Rot:
      if (p.same_point(a)) return {0, 1};
      if (p.same_point(a.conjugate())) return {1, 0};
      return {0, 0};
    case BlockKind::N2Star:
      if (p.same_point(a) || p.same_point(a.conjugate())) return {1, 1};
      return {0, 0};
    case BlockKind::N2Zero:
      return {0, 0};
    default:
      return {0, 0};
  }
}

}  // namespace

SplittingPair splitting_numbers(const NormalFormDecomposition& dec,
                                const CirclePoint& omega) {
  SplittingPair s;
  for (const auto& b : dec.blocks) {
    SplittingPair t;
    switch (omega.kind) {
      case CirclePoint::Kind::One: t = at_one(b); break;
      case CirclePoint::Kind::MinusOne: t = at_minus_one(b); break;
      case CirclePoint::Kind::Elliptic: t = at_elliptic(b, *omega.a); break;
    }
    s.plus += t.plus;
    s.minus += t.minus;
  }
  return s;
}

Int C_of(const NormalFormDecomposition& dec) {
  /* each F_id/F_plus: 1; each rotation: 1 (its own side only);
   * each starred 4x4 block: 1 at both sides */
  return Int(dec.q_zero() + dec.q_plus() + dec.r() + 2 * dec.r_star());
}

Int S_plus_at_one(const NormalFormDecomposition& dec) {
  return Int(dec.p_minus() + dec.p_zero());
}

std::vector<EigenAnglePoint> spectrum_away_from_one(
    const NormalFormDecomposition& dec) {
  std::vector<EigenAnglePoint> out;
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    const auto& b = dec.blocks[i];
    switch (b.kind) {
      case BlockKind::F_minus:
      case BlockKind::F_id:
      case BlockKind::F_plus: {
        EigenAnglePoint p;
        p.point = CirclePoint::minus_one();
        p.turn = ApproxRat(Rat(1, 2));
        p.split = at_minus_one(b);
        p.nullity = b.kind == BlockKind::F_id ? 2 : 1;
        p.block_index = i;
        out.push_back(std::move(p));
        break;
      }
      case BlockKind::Rot:
      case BlockKind::N2Star:
      case BlockKind::N2Zero: {
        const Angle& a = b.ang();
        for (int side = 0; side < 2; ++side) {
          Angle pos = side == 0 ? a : a.conjugate();
          EigenAnglePoint p;
          p.point = CirclePoint::at(pos);
          p.turn = pos.value();
          if (b.kind == BlockKind::Rot)
            p.split = side == 0 ? SplittingPair{0, 1} : SplittingPair{1, 0};
          else if (b.kind == BlockKind::N2Star)
            p.split = {1, 1};
          else
            p.split = {0, 0};
          p.nullity = 1;
          p.block_index = i;
          out.push_back(std::move(p));
        }
        break;
      }
      default:
        break;
    }
  }
  return out;
}

std::vector<EigenAnglePoint> unit_spectrum(const NormalFormDecomposition& dec) {
  std::vector<EigenAnglePoint> out;
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    const auto& b = dec.blocks[i];
    if (b.kind == BlockKind::E_minus || b.kind == BlockKind::E_id ||
        b.kind == BlockKind::E_plus) {
      EigenAnglePoint p;
      p.point = CirclePoint::one();
      p.turn = ApproxRat(Rat(0));
      p.split = at_one(b);
      p.nullity = b.kind == BlockKind::E_id ? 2 : 1;
      p.block_index = i;
      out.push_back(std::move(p));
    }
  }
  auto rest = spectrum_away_from_one(dec);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace sympindex
