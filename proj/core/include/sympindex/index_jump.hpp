#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympindex/index_iteration.hpp"
#include "sympindex/splitting.hpp"

namespace sympindex {

/* A tuple (N, m_1..m_q) aligning every profile's iterated indices around 2N:
 *
 *   nu(2m_i +- 1) = nu(1)
 *   mu_minus(2m_i + 1) = 2N + mu_minus(1)
 *   mu_plus(2m_i - 1)  = 2N - mu_minus(1) - 2*S_plus(1) + nu(1)
 *   mu_minus(2m_i)     = 2N - (S_plus(1) + C - 2*Delta_i)
 *
 * Delta_i sums S_minus over eigenvalue angles with {m_i * theta/pi} in
 * (0, delta).  m_i = (floor(N/(M*mean_i)) + chi_i) * M for the recorded
 * vertex chi, M the common multiple clearing every rational theta/pi. */
struct JumpTuple {
  Int N;
  std::vector<Int> m;
  std::vector<int> chi;         // nearest vertex of [0,1]^l, componentwise
  std::vector<Int> delta_list;  // Delta_i per profile
  Rat epsilon;
  Int M_common = 1;
  std::optional<Int> M0;
};

struct SearchConfig {
  Int n_max = 1000000;
  Rat epsilon = Rat(1, 20);
  Rat delta = Rat(1, 40);
  std::optional<Int> m0;  // scan only multiples of m0
  int want = 1;
  int threads = 1;

  void validate() const;
};

/* The simultaneous-approximation vector: one component 1/(M*mean_i) per
 * profile, then one component theta/pi / mean_i per unit of S_minus at each
 * eigenvalue angle.  A tuple exists near every N with {N*v} close to a
 * vertex of the cube. */
struct VVector {
  std::vector<ApproxRat> v;
  Int M_common = 1;
  int l = 0;
};

VVector build_v_vector(const std::vector<IndexProfile>& profiles);

/* Where {m * theta/pi} lands relative to the windows (0,delta) and
 * (1-delta,1).  AtZero covers eigenvalue -1 and exact resonance. */
enum class WindowClass { AtZero, Low, High, Outside };

WindowClass classify_window(const CirclePoint& pt, const Int& m, const Rat& delta);

/* Everything verify_tuple re-derives, itemized so failures can be named. */
struct IdentityReport {
  struct PerProfile {
    bool nu_plus_one_ok = false;   // nu(2m+1) = nu(1)
    bool nu_minus_one_ok = false;  // nu(2m-1) = nu(1)
    bool mu_odd_up_ok = false;     // mu_minus(2m+1) = 2N + mu_minus(1)
    bool mu_odd_down_ok = false;   // mu_plus(2m-1) = 2N - mu_minus(1) - 2S+(1) + nu(1)
    bool mu_even_ok = false;       // mu_minus(2m) = 2N - (S+(1) + C - 2*Delta)
    bool windows_ok = false;       // every {m*theta/pi} in [0,delta) u (1-delta,1)
    bool m_formula_ok = false;     // m = (floor(N/(M*mean)) + chi)*M
    Int delta_recomputed = 0;
  };
  std::vector<PerProfile> per_profile;
  bool m0_divides = true;
  bool delta_matches_stored = true;

  bool ok() const;
  std::vector<std::string> failures() const;
};

/* Scan N = s, 2s, ... <= n_max (s = m0 or 1), accept N whose {N*v} sits
 * within epsilon of a vertex and whose derived m_i satisfy all four
 * identities exactly.  Deterministic regardless of cfg.threads.
 * Throws NoTupleFound (with the best near-miss) when the scan is exhausted;
 * exhaustion bounds nothing — tuples provably exist for larger N. */
std::vector<JumpTuple> find_tuples(const std::vector<IndexProfile>& profiles,
                                   const SearchConfig& cfg);

IdentityReport verify_tuple(const std::vector<IndexProfile>& profiles,
                            const JumpTuple& t, const Rat& delta);

/* A second tuple whose window pattern is complementary:
 * Delta_i + Delta'_i = C(M_i) for every profile.  Enables the index
 * computation mu(2m'_i) = 2N' + C - 2*Delta_i. */
JumpTuple symmetric_tuple(const std::vector<IndexProfile>& profiles,
                          const JumpTuple& t, const SearchConfig& cfg);

/* find_tuples restricted to candidates whose recomputed Delta_i match
 * delta_targets exactly.  Same determinism and exhaustion behavior. */
std::vector<JumpTuple> find_tuples_with_delta(
    const std::vector<IndexProfile>& profiles, const SearchConfig& cfg,
    const std::vector<Int>& delta_targets);

}  // namespace sympindex
