#pragma once

#include <optional>
#include <string>

#include "sympindex/approx.hpp"
#include "sympindex/blocks.hpp"
#include "sympindex/rational.hpp"

namespace sympindex {

/* A linearized return map together with the index of the underlying path.
 * The base index is caller-supplied data: it depends on the path, not just
 * on the endpoint decomposition. */
struct IndexProfile {
  NormalFormDecomposition dec;
  Int base_index = 0;

  void validate() const { dec.validate(); }
};

/* Lower index of the m-th iterate.
 *
 *   mu_minus(m) = m*(i + p_minus + p_zero - r)
 *               + 2*sum_j ceil(m*a_j) - r - p_minus - p_zero
 *               - [m even]*(q_zero + q_plus)
 *               + 2*sum_j phi(m*alpha_j) - 2*r_star
 *
 * a_j runs over rotation angles, alpha_j over N2Star angles, both as
 * fractions of a full turn; phi(x) = ceil(x) - floor(x).
 * Throws PrecisionExhausted if an irrational ceil cannot be decided. */
Int mu_minus_iter(const IndexProfile& p, const Int& m);

/* Nullity of the m-th iterate: dimension of ker(P^m - I). */
Int nu_iter(const IndexProfile& p, const Int& m);

/* Upper index: mu_minus + nu. */
Int mu_plus_iter(const IndexProfile& p, const Int& m);

/* Mean index per iteration: i + p_minus + p_zero - r + 2*sum_j a_j.
 * err() == 0 exactly when every rotation angle is rational. */
ApproxRat mean_index(const IndexProfile& p);

bool mean_index_is_exact(const IndexProfile& p);

/* Iteration inequality  mu_minus(1) - e/2 <= mu_minus(m+1) - mu_plus(m)
 * where e is the total algebraic multiplicity of unit-circle eigenvalues. */
struct GapCheckResult {
  bool ok = true;
  std::optional<Int> first_violation_m;
  /* mu_minus(1) >= d, which upgrades the bound to
   * mu_minus(m+1) >= mu_plus(m) for all m */
  bool corollary_applies = false;
};

GapCheckResult check_gap_inequality(const IndexProfile& p, const Int& m_max);

/* Check mu_minus(m) >= ambient_n - 1 for every m >= 1.  The check is finite:
 * beyond the least m_star with m_star*mean - d >= ambient_n - 1 the envelope
 * |mu_minus(m) - m*mean| <= d guarantees the bound. */
struct ConvexityVerdict {
  bool pass = false;
  Int m_star = 0;
  std::optional<Int> violating_m;
  std::string reason;  // empty on PASS; "MeanIndexNonpositive" or "IndexBelowBound"
};

ConvexityVerdict certify_dynamical_convexity(const IndexProfile& p, int ambient_n);

}  // namespace sympindex
