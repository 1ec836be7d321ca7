#pragma once

#include <vector>

#include "sympindex/blocks.hpp"

namespace sympindex {

struct SplittingPair {
  Int plus{0};
  Int minus{0};
};

/* One unit-circle eigenvalue position of a decomposition, with the splitting
 * numbers contributed there and the geometric multiplicity. Elliptic points
 * are listed once per contributing block side (a and 1-a separately). */
struct EigenAnglePoint {
  CirclePoint point;
  /* position as a fraction of a full turn: 0 for +1, 1/2 for -1, else the
   * elliptic angle */
  ApproxRat turn;
  SplittingPair split;
  Int nullity{0};
  std::size_t block_index{0};
};

/* Splitting numbers (S^+, S^-) of the decomposition at a circle point,
 * summed over blocks from the per-block table:
 *
 *   block      at point        (S+, S-)
 *   E_minus    1               (1, 1)
 *   E_id       1               (1, 1)
 *   E_plus     1               (0, 0)
 *   F_minus    -1              (0, 0)
 *   F_id       -1              (1, 1)
 *   F_plus     -1              (1, 1)
 *   Rot(a)     a               (0, 1)
 *   Rot(a)     1-a             (1, 0)
 *   N2Star(a)  a and 1-a       (1, 1)
 *   N2Zero(a)  a and 1-a       (0, 0)
 *   Hyp2k      (none)
 *
 * The table is pinned by requiring that the iteration formula coincide with
 * its splitting-number form
 *
 *   mu_-(Phi^m) = m (mu_-(Phi) + S+(1) - C) - (S+(1) + C)
 *                 + 2 sum_{0<t<1} S-(e^{2 pi i t}) ceil(m t)
 *
 * for every block, which the property tests check directly. */
SplittingPair splitting_numbers(const NormalFormDecomposition& dec,
                                const CirclePoint& omega);

/* Sum of S- over the unit-circle spectrum away from +1. */
Int C_of(const NormalFormDecomposition& dec);

/* S+ at the eigenvalue one: equals p_minus + p_zero. */
Int S_plus_at_one(const NormalFormDecomposition& dec);

/* All unit-circle spectrum positions in (0, 2 pi), i.e. excluding +1,
 * block by block: the -1 positions and both members of each conjugate
 * elliptic pair. Used by window bookkeeping and the v-vector. */
std::vector<EigenAnglePoint> spectrum_away_from_one(
    const NormalFormDecomposition& dec);

/* Same but including the +1 positions (for checks quantified over the whole
 * unit spectrum). */
std::vector<EigenAnglePoint> unit_spectrum(const NormalFormDecomposition& dec);

}  // namespace sympindex
