#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sympindex/index_iteration.hpp"
#include "sympindex/index_jump.hpp"

namespace sympindex {

/* Homology ranks of the ambient degree ladder, defined for k >= n-1:
 *   0 if k = n (mod 2),
 *   2 if k = j(n-1), j > 1, n odd,
 *   2 if k = j(n-1), j > 1 odd, n even,
 *   1 otherwise. */
Int betti(int n, const Int& k);

/* sum_{k=n-1}^{k_top} (-1)^k b_k.  For k_top = 2N + n - 2 with N a multiple
 * of n-1 this telescopes to 2N chi_+ + (-1)^n. */
Int betti_alternating_sum(int n, const Int& k_top);

/* -n/(2n-2) for even n, (n+1)/(2n-2) for odd n. */
Rat chi_plus(int n);

/* Explicit local homology: iterate -> (degree -> dimension).  Degrees with
 * nonzero dimension must sit inside [mu_minus(x^k), mu_plus(x^k)]; iterates
 * absent from the map are treated as not provided, never as zero. */
struct LocalHomologyTable {
  std::map<Int, std::map<Int, Int>> dims;
};

struct OrbitDescriptor {
  std::string label;
  Rat action;
  IndexProfile profile;
  /* nullopt selects the non-degenerate rule: a single generator in degree
   * mu(x^k), legal only at iterates with nu(x^k) = 0. */
  std::optional<LocalHomologyTable> table;

  bool nondegenerate_rule() const { return !table.has_value(); }
  void validate(int ambient_n) const;
};

struct Configuration {
  int ambient_n = 2;
  std::vector<OrbitDescriptor> orbits;

  void validate() const;
};

/* dim of the local homology of x^iterate in one degree, when determinable
 * from the descriptor; nullopt when the data does not decide it (degenerate
 * iterate under the non-degenerate rule, or iterate beyond the table). */
std::optional<Int> local_dimension(const OrbitDescriptor& x,
                                   const Int& iterate, const Int& degree);

/* Alternating sum of local homology dimensions at one iterate. */
Int local_euler(const OrbitDescriptor& x, const Int& k);

/* Least period of k -> (nullity pattern, index parity): 2 * lcm of the
 * rational angle denominators, folded with 2 for the -1 eigenvalues. */
Int euler_period(const OrbitDescriptor& x);

/* (1/T) sum_{k=1..T} chi(x^k), exact. */
Rat mean_euler(const OrbitDescriptor& x);

struct MeanIdentityReport {
  bool exact = true;    // every orbit's mean index is exactly rational
  ApproxRat residual;   // sum_i chi_hat_i / mu_hat_i - chi_plus(n)
  bool holds = false;   // residual is 0 (exact) resp. its interval covers 0
  Rat tolerance = Rat(0);
};

MeanIdentityReport mean_index_identity_check(const Configuration& cfg);

struct MorseReport {
  bool ok = true;
  Int m_top;
  std::map<Int, Int> c;               // degree -> generator count
  std::vector<Int> violated_degrees;  // m with the alternating sum negative
};

/* Accumulates c_k over every (orbit, iterate) whose support window meets
 * [n-1, m_top] and checks, for each m in that range,
 *   sum_{k=n-1}^{m} (-1)^{m-k} (c_k - b_k) >= 0. */
MorseReport morse_check(const Configuration& cfg, const Int& m_top);

/* mu_hat(x^k) is an even integer and the local homology of x^k is nonzero
 * in degree mu_hat(x^k) + n - 1. */
bool sdm_predicate(const OrbitDescriptor& x, const Int& k);

/* nu(x^k) = nu(x). */
bool admissible_iterate(const OrbitDescriptor& x, const Int& k);

enum class VerdictStatus {
  CONSISTENT_AT_DEPTH,
  CONTRADICTION,
  FORCED_INFINITELY_MANY,
  INPUT_ERROR,
};

const char* to_string(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::CONSISTENT_AT_DEPTH;
  Int orbit_lower_bound{0};  // distinct simple orbits certified
  std::vector<std::string> evidence;
};

/* Replays the three-step counting argument against cfg for each tuple:
 * degrees 2N+2k-(n-1) reachable only at 2m_i-th iterates, the Euler-chain
 * forcing of a generator in degree 2N+n-1, and (odd n) the degree-2N
 * dichotomy whose bad branch manufactures an SDM.  Outcomes over the tuple
 * list combine strongest-first: FORCED_INFINITELY_MANY, then a consistent
 * run with its orbit-count lower bound, then CONTRADICTION. */
Verdict replay_theorem_1_1(const Configuration& cfg,
                           const std::vector<JumpTuple>& tuples,
                           const Rat& delta = Rat(1, 40));

/* One orbit's pass through the equality chain
 *   n-1 = sum_{window} S^- - sum_{co-window} S^-
 *       <= sum_{window} nullity <= r + r* + r0 <= n-1
 * evaluated at iterate m with the (0,delta) / (1-delta,1) windows of
 * {m theta/pi}. */
struct EllipticityChain {
  std::string label;
  bool attained = false;      // mu(x^{2m}) = 2N + n - 1
  bool partition_ok = false;  // no S^- weight at {m theta/pi} = 0
  Int window_sum{0};
  Int cowindow_sum{0};
  Int window_nullity{0};
  Int rot_like_count{0};  // r + r* + r0
  bool equality = false;
  bool strict_windows = false;  // every rotation angle inside (0, delta)
  bool irrationally_elliptic = false;
  std::string failure;  // first broken link, empty when the chain closes
};

struct EllipticityReport {
  bool ok = false;
  std::string failure;
  std::string first_label;
  std::string second_label;
  std::vector<EllipticityChain> chains;
  std::vector<std::string> notes;
};

/* Combinatorial core of the chain, driven by a concrete iterate. */
EllipticityChain ellipticity_chain(const OrbitDescriptor& x, const Int& m_i,
                                   const Int& N, const Rat& delta);

/* Finds the orbit whose 2m_i-th iterate attains 2N+n-1 under t, closes the
 * equality chain on it, then repeats under the Delta-complementary tuple
 * t_sym to find a second, distinct one; certifies both irrationally
 * elliptic. */
EllipticityReport replay_theorem_1_3(const Configuration& cfg,
                                     const JumpTuple& t,
                                     const JumpTuple& t_sym,
                                     const Rat& delta = Rat(1, 40));

}  // namespace sympindex
