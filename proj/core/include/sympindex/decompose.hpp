#pragma once

#include "sympindex/blocks.hpp"
#include "sympindex/matrix.hpp"

namespace sympindex {

/* Reads the block decomposition off an exact symplectic matrix with generic
 * spectrum: eigenvalue classes pairwise distinct, +-1 either semisimple or a
 * single 2x2 Jordan cell.  Produces E- and F-kind blocks at +-1, Rot blocks
 * for elliptic pairs (rational angle at the constructible turns,
 * interval-backed irrational Angle otherwise), Hyp2k(1) for real hyperbolic
 * pairs and Hyp2k(2) per complex quadruple.  Repeated elliptic pairs would
 * need the N2 convention the caller must choose, so they raise
 * NonGenericSpectrum.
 *
 * precision_digits controls the decimal accuracy of irrational angles. */
NormalFormDecomposition decompose_numeric(const SymplecticMatrix& M,
                                          int precision_digits);

NormalFormDecomposition decompose_numeric(const SymplecticMatrix& M);

}  // namespace sympindex
