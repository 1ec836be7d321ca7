#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sympindex/angle.hpp"

namespace sympindex {

/* Conjugacy classes of the basic symplectic normal-form blocks.
 *
 *   E_minus = [[1,1],[0,1]]      E_id = I_2        E_plus = [[1,-1],[0,1]]
 *   F_minus = [[-1,1],[0,-1]]    F_id = -I_2       F_plus = [[-1,-1],[0,-1]]
 *   Rot(a)  = rotation by 2*pi*a, a in (0,1) \ {1/2}
 *   N2Star(a), N2Zero(a): 4x4 blocks [[R, B],[0, R]] over a rotation pair,
 *     split by whether their splitting numbers survive (b2 != b3 required)
 *   Hyp2k(k): 2k dimensions of spectrum off the unit circle
 */
enum class BlockKind {
  E_minus,
  E_id,
  E_plus,
  F_minus,
  F_id,
  F_plus,
  Rot,
  N2Star,
  N2Zero,
  Hyp2k,
};

const char* block_kind_name(BlockKind k);
BlockKind block_kind_from_name(const std::string& s);

struct NormalFormBlock {
  BlockKind kind;
  std::optional<Angle> angle;                       // Rot / N2 only
  int k = 1;                                        // Hyp2k only
  std::optional<std::array<Rat, 4>> B;              // N2 override, row-major

  /* dimension in half-plane units (2x2 slices) */
  int units() const;
  bool has_angle() const;
  const Angle& ang() const;
  std::array<Rat, 4> b_matrix() const;              // default [[0,1],[-1,1]]
  void validate() const;

  static NormalFormBlock simple(BlockKind k);
  static NormalFormBlock rot(Angle a);
  static NormalFormBlock n2(BlockKind k, Angle a,
                            std::optional<std::array<Rat, 4>> B = {});
  static NormalFormBlock hyp(int k);
};

/* An eigenvalue position on the unit circle: 1, -1, or a conjugate pair
 * marker e^{+-2*pi*i*a}. The circle point "a" identifies e^{2*pi*i*a}. */
struct CirclePoint {
  enum class Kind { One, MinusOne, Elliptic } kind;
  std::optional<Angle> a;  // Elliptic only, in (0,1) \ {1/2}

  static CirclePoint one() { return {Kind::One, {}}; }
  static CirclePoint minus_one() { return {Kind::MinusOne, {}}; }
  static CirclePoint at(Angle ang);
  std::string describe() const;
};

struct NormalFormDecomposition {
  std::vector<NormalFormBlock> blocks;

  int d() const;  // total units

  /* multiplicity counts in the canonical order */
  int p_minus() const;
  int p_zero() const;
  int p_plus() const;
  int q_minus() const;
  int q_zero() const;
  int q_plus() const;
  int r() const;
  int r_star() const;
  int r_zero() const;
  int h() const;  // hyperbolic units

  void validate() const;

  /* rotation angles (the parameters of the Rot blocks, in block order) */
  std::vector<Angle> rot_angles() const;
  /* angles of the starred 4x4 blocks */
  std::vector<Angle> n2star_angles() const;
  std::vector<Angle> n2_angles() const;  // starred and unstarred

  /* nullity: complex kernel dimension of M - omega*I at a circle point */
  Int nullity_at(const CirclePoint& omega) const;
  Int nu_one() const { return nullity_at(CirclePoint::one()); }

  /* total algebraic multiplicity of the unit-circle spectrum */
  Int total_elliptic_multiplicity() const;

  bool is_irrationally_elliptic() const;

  /* canonical sort for permutation-insensitive comparison */
  NormalFormDecomposition normalized() const;
  bool equivalent(const NormalFormDecomposition& o) const;
};

NormalFormDecomposition diamond_sum(const NormalFormDecomposition& a,
                                    const NormalFormDecomposition& b);

}  // namespace sympindex
