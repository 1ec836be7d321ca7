#include "sympindex/blocks.hpp"

#include <algorithm>
#include <map>

#include "sympindex/errors.hpp"

namespace sympindex {

const char* block_kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::E_minus: return "E_minus";
    case BlockKind::E_id:    return "E_id";
    case BlockKind::E_plus:  return "E_plus";
    case BlockKind::F_minus: return "F_minus";
    case BlockKind::F_id:    return "F_id";
    case BlockKind::F_plus:  return "F_plus";
    case BlockKind::Rot:     return "Rot";
    case BlockKind::N2Star:  return "N2Star";
    case BlockKind::N2Zero:  return "N2Zero";
    case BlockKind::Hyp2k:   return "Hyp2k";
  }
  throw InputError("unknown block kind");
}

BlockKind block_kind_from_name(const std::string& s) {
  static const std::map<std::string, BlockKind> names = {
      {"E_minus", BlockKind::E_minus}, {"E_id", BlockKind::E_id},
      {"E_plus", BlockKind::E_plus},   {"F_minus", BlockKind::F_minus},
      {"F_id", BlockKind::F_id},       {"F_plus", BlockKind::F_plus},
      {"Rot", BlockKind::Rot},         {"N2Star", BlockKind::N2Star},
      {"N2Zero", BlockKind::N2Zero},   {"Hyp2k", BlockKind::Hyp2k},
  };
  auto it = names.find(s);
  if (it == names.end()) throw InputError("unknown block kind: " + s);
  return it->second;
}

int NormalFormBlock::units() const {
  switch (kind) {
    case BlockKind::N2Star:
    case BlockKind::N2Zero:
      return 2;
    case BlockKind::Hyp2k:
      return k;
    default:
      return 1;
  }
}

bool NormalFormBlock::has_angle() const {
  return kind == BlockKind::Rot || kind == BlockKind::N2Star ||
         kind == BlockKind::N2Zero;
}

const Angle& NormalFormBlock::ang() const {
  if (!has_angle() || !angle)
    throw InputError("block carries no angle");
  return *angle;
}

std::array<Rat, 4> NormalFormBlock::b_matrix() const {
  if (B) return *B;
  return {Rat(0), Rat(1), Rat(-1), Rat(1)};
}

void NormalFormBlock::validate() const {
  if (has_angle()) {
    if (!angle) throw InputError("Rot/N2 block requires an angle");
    if (angle->is_rational() && angle->rat() == Rat(1, 2))
      throw InputError("rotation angle 1/2 belongs to the F blocks");
  } else if (angle) {
    throw InputError("angle given on an angle-free block");
  }
  if (kind == BlockKind::Hyp2k) {
    if (k < 1) throw InputError("Hyp2k needs k >= 1");
  }
  if (kind == BlockKind::N2Star || kind == BlockKind::N2Zero) {
    auto b = b_matrix();
    if (b[1] == b[2])
      throw InputError("N2 block needs b2 != b3");
  } else if (B) {
    throw InputError("B matrix given on a non-N2 block");
  }
}

NormalFormBlock NormalFormBlock::simple(BlockKind k) {
  NormalFormBlock b;
  b.kind = k;
  return b;
}

NormalFormBlock NormalFormBlock::rot(Angle a) {
  NormalFormBlock b;
  b.kind = BlockKind::Rot;
  b.angle = std::move(a);
  return b;
}

NormalFormBlock NormalFormBlock::n2(BlockKind k, Angle a,
                                    std::optional<std::array<Rat, 4>> B) {
  if (k != BlockKind::N2Star && k != BlockKind::N2Zero)
    throw InputError("n2() expects an N2 kind");
  NormalFormBlock b;
  b.kind = k;
  b.angle = std::move(a);
  b.B = std::move(B);
  return b;
}

NormalFormBlock NormalFormBlock::hyp(int k) {
  NormalFormBlock b;
  b.kind = BlockKind::Hyp2k;
  b.k = k;
  return b;
}

CirclePoint CirclePoint::at(Angle ang) {
  if (ang.is_rational() && ang.rat() == Rat(1, 2))
    return minus_one();
  return {Kind::Elliptic, std::move(ang)};
}

std::string CirclePoint::describe() const {
  switch (kind) {
    case Kind::One: return "1";
    case Kind::MinusOne: return "-1";
    case Kind::Elliptic: return "e^(2*pi*i*" + a->describe() + ")";
  }
  return "?";
}

int NormalFormDecomposition::d() const {
  int s = 0;
  for (const auto& b : blocks) s += b.units();
  return s;
}

namespace {
int count_kind(const std::vector<NormalFormBlock>& bs, BlockKind k) {
  int c = 0;
  for (const auto& b : bs)
    if (b.kind == k) ++c;
  return c;
}
}  // namespace

int NormalFormDecomposition::p_minus() const { return count_kind(blocks, BlockKind::E_minus); }
int NormalFormDecomposition::p_zero()  const { return count_kind(blocks, BlockKind::E_id); }
int NormalFormDecomposition::p_plus()  const { return count_kind(blocks, BlockKind::E_plus); }
int NormalFormDecomposition::q_minus() const { return count_kind(blocks, BlockKind::F_minus); }
int NormalFormDecomposition::q_zero()  const { return count_kind(blocks, BlockKind::F_id); }
int NormalFormDecomposition::q_plus()  const { return count_kind(blocks, BlockKind::F_plus); }
int NormalFormDecomposition::r()       const { return count_kind(blocks, BlockKind::Rot); }
int NormalFormDecomposition::r_star()  const { return count_kind(blocks, BlockKind::N2Star); }
int NormalFormDecomposition::r_zero()  const { return count_kind(blocks, BlockKind::N2Zero); }

int NormalFormDecomposition::h() const {
  int c = 0;
  for (const auto& b : blocks)
    if (b.kind == BlockKind::Hyp2k) c += b.k;
  return c;
}

void NormalFormDecomposition::validate() const {
  for (const auto& b : blocks) b.validate();
  int sum = p_minus() + p_zero() + p_plus() + q_minus() + q_zero() + q_plus() +
            r() + 2 * r_star() + 2 * r_zero() + h();
  if (sum != d())
    throw InputError("block multiplicities do not account for the dimension");
}

std::vector<Angle> NormalFormDecomposition::rot_angles() const {
  std::vector<Angle> v;
  for (const auto& b : blocks)
    if (b.kind == BlockKind::Rot) v.push_back(b.ang());
  return v;
}

std::vector<Angle> NormalFormDecomposition::n2star_angles() const {
  std::vector<Angle> v;
  for (const auto& b : blocks)
    if (b.kind == BlockKind::N2Star) v.push_back(b.ang());
  return v;
}

std::vector<Angle> NormalFormDecomposition::n2_angles() const {
  std::vector<Angle> v;
  for (const auto& b : blocks)
    if (b.kind == BlockKind::N2Star || b.kind == BlockKind::N2Zero)
      v.push_back(b.ang());
  return v;
}

Int NormalFormDecomposition::nullity_at(const CirclePoint& omega) const {
  Int nu = 0;
  for (const auto& b : blocks) {
    switch (omega.kind) {
      case CirclePoint::Kind::One:
        if (b.kind == BlockKind::E_id) nu += 2;
        else if (b.kind == BlockKind::E_minus || b.kind == BlockKind::E_plus) nu += 1;
        break;
      case CirclePoint::Kind::MinusOne:
        if (b.kind == BlockKind::F_id) nu += 2;
        else if (b.kind == BlockKind::F_minus || b.kind == BlockKind::F_plus) nu += 1;
        break;
      case CirclePoint::Kind::Elliptic:
        if (b.has_angle()) {
          const Angle& a = b.ang();
          if (omega.a->same_point(a) || omega.a->same_point(a.conjugate()))
            nu += 1;  // geometric multiplicity per matched point
        }
        break;
    }
  }
  return nu;
}

Int NormalFormDecomposition::total_elliptic_multiplicity() const {
  int units = p_minus() + p_zero() + p_plus() + q_minus() + q_zero() +
              q_plus() + r() + 2 * r_star() + 2 * r_zero();
  return Int(2 * units);
}

bool NormalFormDecomposition::is_irrationally_elliptic() const {
  if (blocks.empty()) return false;
  for (const auto& b : blocks) {
    if (b.kind != BlockKind::Rot) return false;
    if (b.ang().is_rational()) return false;
  }
  return true;
}

namespace {
std::string block_sort_key(const NormalFormBlock& b) {
  std::string key = block_kind_name(b.kind);
  key += '|';
  if (b.has_angle()) {
    const Angle& a = b.ang();
    key += a.is_rational() ? "r" : "i";
    key += format_rat(a.approx());
    key += '|';
    key += format_rat(a.gap());
    if (b.kind != BlockKind::Rot) {
      for (const auto& e : b.b_matrix()) {
        key += '|';
        key += format_rat(e);
      }
    }
  } else if (b.kind == BlockKind::Hyp2k) {
    key += std::to_string(b.k);
  }
  return key;
}
}  // namespace

NormalFormDecomposition NormalFormDecomposition::normalized() const {
  NormalFormDecomposition out = *this;
  std::stable_sort(out.blocks.begin(), out.blocks.end(),
                   [](const NormalFormBlock& x, const NormalFormBlock& y) {
                     return block_sort_key(x) < block_sort_key(y);
                   });
  return out;
}

bool NormalFormDecomposition::equivalent(const NormalFormDecomposition& o) const {
  auto a = normalized(), b = o.normalized();
  if (a.blocks.size() != b.blocks.size()) return false;
  for (std::size_t i = 0; i < a.blocks.size(); ++i)
    if (block_sort_key(a.blocks[i]) != block_sort_key(b.blocks[i])) return false;
  return true;
}

NormalFormDecomposition diamond_sum(const NormalFormDecomposition& a,
                                    const NormalFormDecomposition& b) {
  NormalFormDecomposition out = a;
  out.blocks.insert(out.blocks.end(), b.blocks.begin(), b.blocks.end());
  return out;
}

}  // namespace sympindex
