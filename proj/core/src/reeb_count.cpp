#include "sympindex/reeb_count.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "sympindex/errors.hpp"
#include "sympindex/splitting.hpp"

namespace sympindex {

namespace {

bool int_even(const Int& k) { return mpz_even_p(k.get_mpz_t()) != 0; }

std::string istr(const Int& v) { return v.get_str(); }
std::string rstr(const Rat& v) { return v.get_str(); }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

Int betti(int n, const Int& k) {
  if (n < 2) throw InputError("betti: n must be at least 2");
  if (k < n - 1)
    throw DomainBelowMin("betti: degree " + istr(k) + " below n - 1 = " +
                         std::to_string(n - 1));
  if (int_even(k) == (n % 2 == 0)) return 0;
  if (k % (n - 1) == 0) {
    Int j = k / (n - 1);
    if (j > 1 && (n % 2 == 1 || !int_even(j))) return 2;
  }
  return 1;
}

Int betti_alternating_sum(int n, const Int& k_top) {
  if (k_top < n - 1)
    throw DomainBelowMin("betti_alternating_sum: k_top below n - 1");
  Int acc = 0;
  for (Int k = n - 1; k <= k_top; ++k) {
    if (int_even(k))
      acc += betti(n, k);
    else
      acc -= betti(n, k);
  }
  return acc;
}

Rat chi_plus(int n) {
  if (n < 2) throw InputError("chi_plus: n must be at least 2");
  Rat v = (n % 2 == 0) ? Rat(-n, 2 * n - 2) : Rat(n + 1, 2 * n - 2);
  v.canonicalize();
  return v;
}

void OrbitDescriptor::validate(int ambient_n) const {
  if (label.empty()) throw InputError("orbit label must be nonempty");
  if (!(action > 0))
    throw InputError("orbit " + label + ": action must be positive");
  profile.validate();
  if (profile.dec.d() != ambient_n - 1)
    throw InputError("orbit " + label + ": " + std::to_string(profile.dec.d()) +
                     " units, ambient n = " + std::to_string(ambient_n) +
                     " needs n - 1");
  if (!table) return;
  for (const auto& [k, degs] : table->dims) {
    if (k < 1)
      throw InputError("orbit " + label + ": table iterate " + istr(k) +
                       " is not positive");
    Int lo = mu_minus_iter(profile, k);
    Int hi = mu_plus_iter(profile, k);
    for (const auto& [deg, dim] : degs) {
      if (dim < 0)
        throw InputError("orbit " + label + ": negative dimension at iterate " +
                         istr(k));
      if (dim > 0 && (deg < lo || deg > hi))
        throw InputError("orbit " + label + ": iterate " + istr(k) +
                         " carries degree " + istr(deg) +
                         " outside its support window [" + istr(lo) + ", " +
                         istr(hi) + "]");
    }
  }
}

void Configuration::validate() const {
  if (ambient_n < 2) throw InputError("ambient n must be at least 2");
  std::set<std::string> seen;
  for (const auto& x : orbits) {
    x.validate(ambient_n);
    if (!seen.insert(x.label).second)
      throw InputError("duplicate orbit label " + x.label);
  }
}

std::optional<Int> local_dimension(const OrbitDescriptor& x,
                                   const Int& iterate, const Int& degree) {
  if (iterate < 1) throw InputError("iterate must be positive");
  if (x.table) {
    auto it = x.table->dims.find(iterate);
    if (it == x.table->dims.end()) return std::nullopt;
    auto jt = it->second.find(degree);
    return jt == it->second.end() ? Int(0) : jt->second;
  }
  if (nu_iter(x.profile, iterate) != 0) return std::nullopt;
  return Int(mu_minus_iter(x.profile, iterate) == degree ? 1 : 0);
}

Int local_euler(const OrbitDescriptor& x, const Int& k) {
  if (k < 1) throw InputError("iterate must be positive");
  if (x.table) {
    auto it = x.table->dims.find(k);
    if (it == x.table->dims.end())
      throw DegenerateWithoutTable("orbit " + x.label +
                                   ": no local homology recorded at iterate " +
                                   istr(k));
    Int acc = 0;
    for (const auto& [deg, dim] : it->second)
      acc += int_even(deg) ? dim : -dim;
    return acc;
  }
  if (nu_iter(x.profile, k) != 0)
    throw DegenerateWithoutTable("orbit " + x.label + ": iterate " + istr(k) +
                                 " is degenerate, the one-generator rule does "
                                 "not apply");
  return int_even(mu_minus_iter(x.profile, k)) ? Int(1) : Int(-1);
}

Int euler_period(const OrbitDescriptor& x) {
  Int t = 2;
  for (const auto& b : x.profile.dec.blocks)
    if (b.has_angle() && b.ang().is_rational())
      t = lcm_int(t, Int(b.ang().rat().get_den()));
  return t;
}

Rat mean_euler(const OrbitDescriptor& x) {
  Int t = euler_period(x);
  if (x.table)
    for (Int k = 1; k <= t; ++k)
      if (!x.table->dims.count(k))
        throw PeriodUndetermined("orbit " + x.label +
                                 ": table stops before one full period T = " +
                                 istr(t));
  Rat acc = 0;
  for (Int k = 1; k <= t; ++k) acc += Rat(local_euler(x, k));
  return Rat(acc / Rat(t));
}

namespace {

ApproxRat positive_mean(const OrbitDescriptor& x) {
  ApproxRat mean = mean_index(x.profile);
  if (mean.compare(Rat(0)) <= 0)
    throw MeanIndexNonpositive("orbit " + x.label +
                               ": mean index is not positive");
  return mean;
}

/* chi(x^k) summed over k = 1..K, using periodicity of the local data. */
Rat euler_partial_sum(const OrbitDescriptor& x, const Int& K) {
  Int t = euler_period(x);
  Rat chi_hat = mean_euler(x);
  Int full = K / t;
  Int rem = K % t;
  Rat acc = Rat(full * t) * chi_hat;
  for (Int k = 1; k <= rem; ++k) acc += Rat(local_euler(x, k));
  return acc;
}

}  // namespace

MeanIdentityReport mean_index_identity_check(const Configuration& cfg) {
  cfg.validate();
  MeanIdentityReport rep;
  ApproxRat sum{Rat(0)};
  for (const auto& x : cfg.orbits) {
    ApproxRat mean = positive_mean(x);
    if (!mean.exact()) rep.exact = false;
    sum = sum + mean.reciprocal().scaled(mean_euler(x));
  }
  rep.residual = sum - ApproxRat{chi_plus(cfg.ambient_n)};
  rep.tolerance = rep.residual.err;
  Rat mag = rep.residual.val >= 0 ? rep.residual.val : Rat(-rep.residual.val);
  rep.holds = rep.exact ? rep.residual.val == 0 : mag <= rep.residual.err;
  return rep;
}

MorseReport morse_check(const Configuration& cfg, const Int& m_top) {
  cfg.validate();
  MorseReport rep;
  rep.m_top = m_top;
  const int n = cfg.ambient_n;
  const Int floor_deg = n - 1;
  if (m_top < floor_deg) throw DomainBelowMin("m_top below n - 1");
  for (const auto& x : cfg.orbits) {
    ApproxRat mean = positive_mean(x);
    Rat mean_low = mean.val - mean.err;
    Int d = x.profile.dec.d();
    /* mu_minus(x^m) >= m*mean - 2d, so no window reaches m_top past this. */
    for (Int m = 1; Rat(m) * mean_low - Rat(2 * d) <= Rat(m_top); ++m) {
      Int lo = mu_minus_iter(x.profile, m);
      if (lo > m_top) continue;
      Int nu = nu_iter(x.profile, m);
      if (lo + nu < floor_deg) continue;
      if (x.table) {
        auto it = x.table->dims.find(m);
        if (it == x.table->dims.end())
          throw DegenerateWithoutTable(
              "orbit " + x.label + ": iterate " + istr(m) +
              " supports degrees up to " + istr(m_top) +
              " but the table ends earlier");
        for (const auto& [deg, dim] : it->second)
          if (dim > 0 && deg >= floor_deg && deg <= m_top) rep.c[deg] += dim;
      } else {
        if (nu != 0)
          throw DegenerateWithoutTable("orbit " + x.label +
                                       ": degenerate iterate " + istr(m) +
                                       " contributes without a table");
        if (lo >= floor_deg) rep.c[lo] += 1;
      }
    }
  }
  Int t = 0;
  for (Int m = floor_deg; m <= m_top; ++m) {
    auto it = rep.c.find(m);
    Int cm = it == rep.c.end() ? Int(0) : it->second;
    t = cm - betti(n, m) - t;
    if (t < 0) {
      rep.ok = false;
      rep.violated_degrees.push_back(m);
    }
  }
  return rep;
}

bool sdm_predicate(const OrbitDescriptor& x, const Int& k) {
  if (k < 1) throw InputError("iterate must be positive");
  ApproxRat mu_hat_k = mean_index(x.profile).scaled(Rat(k));
  if (!mu_hat_k.is_integer_decide()) return false;
  Int v(mu_hat_k.val.get_num());
  if (!int_even(v)) return false;
  auto dim = local_dimension(x, k, v + Int(x.profile.dec.d()));
  if (!dim)
    throw DegenerateWithoutTable("orbit " + x.label +
                                 ": local homology at iterate " + istr(k) +
                                 " is not determined");
  return *dim > 0;
}

bool admissible_iterate(const OrbitDescriptor& x, const Int& k) {
  if (k < 1) throw InputError("iterate must be positive");
  return nu_iter(x.profile, k) == nu_iter(x.profile, 1);
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::CONSISTENT_AT_DEPTH: return "CONSISTENT_AT_DEPTH";
    case VerdictStatus::CONTRADICTION: return "CONTRADICTION";
    case VerdictStatus::FORCED_INFINITELY_MANY: return "FORCED_INFINITELY_MANY";
    case VerdictStatus::INPUT_ERROR: return "INPUT_ERROR";
  }
  return "?";
}

namespace {

std::string tuple_tag(const JumpTuple& t) {
  std::ostringstream os;
  os << "[N=" << t.N.get_str() << "] ";
  return os.str();
}

int max_matching(const std::vector<std::vector<std::size_t>>& adj,
                 std::size_t right_n) {
  std::vector<int> owner(right_n, -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) -> bool {
    for (std::size_t v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (owner[v] < 0 || augment(static_cast<std::size_t>(owner[v]))) {
        owner[v] = static_cast<int>(u);
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    seen.assign(right_n, 0);
    if (augment(u)) ++matched;
  }
  return matched;
}

struct TupleRun {
  bool forced = false;
  bool contradiction = false;
  bool rejected = false;  // tuple failed re-verification
  Int lower_bound{0};
  std::vector<std::string> ev;
};

TupleRun run_tuple(const Configuration& cfg,
                   const std::vector<IndexProfile>& profiles,
                   const std::vector<ApproxRat>& means, const JumpTuple& t,
                   const Rat& delta) {
  TupleRun out;
  const int n = cfg.ambient_n;
  const std::string pre = tuple_tag(t);
  const Int N = t.N;
  const Int top_deg = 2 * N + (n - 1);

  IdentityReport rep = verify_tuple(profiles, t, delta);
  if (!rep.ok()) {
    out.rejected = true;
    out.ev.push_back(pre + "tuple fails re-verification: " +
                     join(rep.failures()));
    return out;
  }
  out.ev.push_back(pre + "all four iteration identities re-verified");

  /* The verified identities pin the indices bracketing each 2m_i-th
   * iterate; record the displays the localization rests on. */
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    Int up = mu_minus_iter(profiles[i], 2 * t.m[i] + 1);
    Int dn = mu_plus_iter(profiles[i], 2 * t.m[i] - 1);
    if (up < top_deg || dn > 2 * N) {
      out.contradiction = true;
      out.ev.push_back(pre + "orbit " + cfg.orbits[i].label +
                       ": bracketing displays fail, mu_minus(x^{2m+1}) = " +
                       istr(up) + ", mu_plus(x^{2m-1}) = " + istr(dn));
      return out;
    }
  }
  out.ev.push_back(pre +
                   "displays: mu_minus(x^{2m_i+1}) >= 2N + n - 1 and "
                   "mu_plus(x^{2m_i-1}) <= 2N for every orbit");

  /* Forced degrees: the intermediate ladder rungs, then 2N + n - 1. */
  std::vector<Int> degrees;
  std::vector<std::string> tags;
  for (int k = (n + 1) / 2; k <= n - 2; ++k) {
    degrees.push_back(2 * N + 2 * k - (n - 1));
    tags.push_back("intermediate");
  }
  const std::size_t ladder_count = degrees.size();
  degrees.push_back(top_deg);
  tags.push_back("top");

  std::vector<std::vector<std::size_t>> confirmed(degrees.size());
  std::vector<int> unknown(degrees.size(), 0);
  for (std::size_t di = 0; di < degrees.size(); ++di)
    for (std::size_t i = 0; i < cfg.orbits.size(); ++i) {
      auto dim = local_dimension(cfg.orbits[i], 2 * t.m[i], degrees[di]);
      if (!dim)
        ++unknown[di];
      else if (*dim > 0)
        confirmed[di].push_back(i);
    }

  out.ev.push_back(pre + "stage 1: " + std::to_string(ladder_count) +
                   " intermediate degrees forced between 2N and 2N + n - 1");
  for (std::size_t di = 0; di < ladder_count; ++di) {
    if (!confirmed[di].empty()) {
      out.ev.push_back(pre + "degree " + istr(degrees[di]) +
                       " carried by orbit " +
                       cfg.orbits[confirmed[di].front()].label +
                       " at its 2m-th iterate");
    } else if (unknown[di] == 0) {
      out.contradiction = true;
      out.ev.push_back(pre + "stage 1 contradiction: degree " +
                       istr(degrees[di]) + " has rank " +
                       istr(betti(n, degrees[di])) +
                       " but no 2m_i-th iterate supports it");
      return out;
    } else {
      out.ev.push_back(pre + "degree " + istr(degrees[di]) +
                       " undetermined: " + std::to_string(unknown[di]) +
                       " orbit(s) lack local data");
    }
  }

  /* Stage 2: the Euler chain sum_i sum_{k<=2m_i} chi(x_i^k) equals the
   * alternating Betti sum through degree 2N + n - 2 exactly when every
   * generator below the top degree is already accounted for; a match with
   * no carrier for 2N + n - 1 breaks the Morse bound one degree up. */
  bool chain_known = true;
  Rat chain_sum = 0;
  for (std::size_t i = 0; i < cfg.orbits.size(); ++i) {
    try {
      chain_sum += euler_partial_sum(cfg.orbits[i], 2 * t.m[i]);
    } catch (const DegenerateWithoutTable&) {
      chain_known = false;
    } catch (const PeriodUndetermined&) {
      chain_known = false;
    }
  }
  Rat chain_target = Rat(2 * N) * chi_plus(n);
  if (chain_known)
    out.ev.push_back(pre + "Euler chain = " + rstr(chain_sum) +
                     ", 2N chi_+ = " + rstr(chain_target));
  else
    out.ev.push_back(pre + "Euler chain not computable from the given data");

  const auto& top_carriers = confirmed[ladder_count];
  if (!top_carriers.empty()) {
    for (std::size_t i : top_carriers) {
      out.ev.push_back(pre + "stage 2: degree " + istr(top_deg) +
                       " carried by orbit " + cfg.orbits[i].label +
                       " at iterate " + istr(2 * t.m[i]));
      /* closeness of the mean-index multiple to 2N, within 2*M*eps*mean */
      ApproxRat gap = means[i].scaled(Rat(2 * t.m[i])) - ApproxRat{Rat(2 * N)};
      ApproxRat bound = means[i].scaled(Rat(2 * t.M_common) * t.epsilon);
      Rat mag = gap.val >= 0 ? gap.val : Rat(-gap.val);
      bool certified = mag + gap.err < bound.val - bound.err;
      out.ev.push_back(pre + "  mean-index closeness |mu_hat(x^{2m}) - 2N| = " +
                       gap.str() +
                       (certified ? " within 2 M eps mu_hat"
                                  : " (closeness not certified)"));
    }
    out.ev.push_back(pre +
                     "  assumed: that iterate carries nothing outside degree "
                     "2N + n - 1 (external vanishing result)");
  } else if (unknown[ladder_count] == 0 && chain_known &&
             chain_sum == chain_target) {
    out.contradiction = true;
    out.ev.push_back(pre + "stage 2 contradiction: Euler chain matches 2N "
                           "chi_+ so degrees through 2N + n - 2 are saturated, "
                           "yet no orbit carries degree " +
                     istr(top_deg) + "; the alternating bound fails at " +
                     istr(top_deg - 1) + " (boundary defect " +
                     std::string(n % 2 ? "-1" : "+1") + ")");
    return out;
  } else {
    std::string why;
    if (unknown[ladder_count] > 0)
      why = "some local data is missing at the 2m-th iterates";
    else if (!chain_known)
      why = "the Euler chain is unknown";
    else
      why = "the Euler chain differs from 2N chi_+";
    out.ev.push_back(pre + "stage 2 inconclusive: top degree uncarried and " +
                     why);
  }

  /* Stage 3, odd n only: the rank of degree 2N is positive, and the
   * bracketing displays leave just two slots: the 2m_i-th iterate itself or
   * the one directly below it.  The latter manufactures a symmetrically
   * degenerate maximum. */
  if (n % 2 == 1) {
    const Int deg2N = 2 * N;
    struct Hit {
      std::size_t orbit;
      Int iterate;
    };
    std::vector<Hit> hits;
    bool undecided = false;
    for (std::size_t i = 0; i < cfg.orbits.size(); ++i) {
      int probes = 0;
      for (Int m = 2 * t.m[i]; m >= 1; --m, ++probes) {
        if (probes >= 64) {
          undecided = true;
          out.ev.push_back(pre + "stage 3: probe budget exhausted on orbit " +
                           cfg.orbits[i].label);
          break;
        }
        /* below the first iterate with mu_plus < 2N everything stays below */
        if (mu_plus_iter(profiles[i], m) < deg2N) break;
        if (mu_minus_iter(profiles[i], m) > deg2N) continue;
        auto dim = local_dimension(cfg.orbits[i], m, deg2N);
        if (!dim)
          undecided = true;
        else if (*dim > 0)
          hits.push_back({i, m});
      }
    }
    bool at_even = false;
    for (const auto& h : hits) at_even = at_even || h.iterate == 2 * t.m[h.orbit];
    if (at_even) {
      std::vector<std::size_t> carriers;
      for (const auto& h : hits)
        if (h.iterate == 2 * t.m[h.orbit]) carriers.push_back(h.orbit);
      degrees.push_back(deg2N);
      tags.push_back("even-iterate extension");
      confirmed.push_back(carriers);
      unknown.push_back(0);
      out.ev.push_back(pre + "stage 3: degree " + istr(deg2N) +
                       " carried by orbit " + cfg.orbits[carriers.front()].label +
                       " at its 2m-th iterate; the ladder extends, nothing "
                       "degenerate is needed");
    } else if (!hits.empty()) {
      /* every hit sits below 2m_i; walk the forced equalities */
      const Hit& h = hits.front();
      const auto& x = cfg.orbits[h.orbit];
      const auto& p = profiles[h.orbit];
      Int odd_it = 2 * t.m[h.orbit] - 1;
      if (h.iterate != odd_it) {
        out.contradiction = true;
        out.ev.push_back(pre + "stage 3 contradiction: orbit " + x.label +
                         " carries degree " + istr(deg2N) + " at iterate " +
                         istr(h.iterate) +
                         " although mu_plus there lies strictly below 2N");
        return out;
      }
      std::vector<std::string> broken;
      const auto& dec = p.dec;
      if (mu_plus_iter(p, odd_it) != deg2N)
        broken.push_back("mu_plus(x^{2m-1}) != 2N");
      if (dec.p_plus() != n - 1 || dec.p_minus() != 0 || dec.p_zero() != 0)
        broken.push_back("the equality mu_plus(x^{2m-1}) = 2N does not force "
                         "an all-E_plus block list here");
      if (mu_minus_iter(p, 1) != n - 1) broken.push_back("mu_minus(x) != n - 1");
      ApproxRat mh = means[h.orbit];
      if (!mh.exact() || mh.val != Rat(n - 1))
        broken.push_back("mean index != n - 1");
      if (Rat(2 * t.m[h.orbit]) * mh.val != Rat(deg2N))
        broken.push_back("2 m mu_hat != 2N");
      if (!admissible_iterate(x, odd_it))
        broken.push_back("nu(x^{2m-1}) != nu(x)");
      bool sdm = false;
      try {
        sdm = sdm_predicate(x, odd_it);
      } catch (const DegenerateWithoutTable&) {
        broken.push_back("local homology of x^{2m-1} not determined");
      }
      if (!sdm && broken.empty())
        broken.push_back("x^{2m-1} is not a symmetrically degenerate maximum");
      if (broken.empty()) {
        out.forced = true;
        out.ev.push_back(pre + "stage 3: orbit " + x.label +
                         " carries degree 2N only at iterate 2m - 1 = " +
                         istr(odd_it) +
                         "; mu_hat = n - 1 is an even integer, the local "
                         "homology peaks at mu_hat(x^{2m-1}) + n - 1 = 2N, and "
                         "the iterate is admissible");
        out.ev.push_back(pre +
                         "stage 3: a symmetrically degenerate maximum on an "
                         "admissible iterate forces infinitely many orbits "
                         "(external result, consumed as an axiom)");
        return out;
      }
      out.ev.push_back(pre + "stage 3 undecided on orbit " + x.label + ": " +
                       join(broken));
      undecided = true;
    } else if (!undecided) {
      out.contradiction = true;
      out.ev.push_back(pre + "stage 3 contradiction: degree " + istr(deg2N) +
                       " has rank " + istr(betti(n, deg2N)) +
                       " but no admissible slot carries it");
      return out;
    }
    if (undecided)
      out.ev.push_back(pre + "stage 3: left open, some local data missing");
  }

  /* Count distinct orbits over the confirmed carriers. */
  int lb = max_matching(confirmed, cfg.orbits.size());
  out.lower_bound = lb;
  out.ev.push_back(pre + "matching: " + std::to_string(lb) +
                   " distinct orbit(s) pinned to distinct forced degrees");
  return out;
}

}  // namespace

Verdict replay_theorem_1_1(const Configuration& cfg,
                           const std::vector<JumpTuple>& tuples,
                           const Rat& delta) {
  Verdict v;
  try {
    cfg.validate();
    if (cfg.orbits.empty()) {
      v.status = VerdictStatus::CONTRADICTION;
      v.evidence.push_back("degree " + std::to_string(cfg.ambient_n - 1) +
                           " has rank 1 but the configuration is empty");
      return v;
    }
    std::vector<IndexProfile> profiles;
    std::vector<ApproxRat> means;
    for (const auto& x : cfg.orbits) {
      auto cv = certify_dynamical_convexity(x.profile, cfg.ambient_n);
      if (!cv.pass) {
        v.status = VerdictStatus::INPUT_ERROR;
        v.evidence.push_back("orbit " + x.label +
                             " is not dynamically convex: " + cv.reason);
        return v;
      }
      profiles.push_back(x.profile);
      means.push_back(positive_mean(x));
    }
    if (tuples.empty()) {
      v.status = VerdictStatus::INPUT_ERROR;
      v.evidence.push_back("no tuples supplied");
      return v;
    }
    for (const auto& t : tuples)
      if (t.m.size() != profiles.size() ||
          t.delta_list.size() != profiles.size())
        throw InputError("tuple arity does not match the orbit count");

    bool any_forced = false, any_consistent = false, any_contradiction = false;
    bool any_rejected = false;
    Int best_lb = 0;
    for (const auto& t : tuples) {
      TupleRun run = run_tuple(cfg, profiles, means, t, delta);
      for (auto& e : run.ev) v.evidence.push_back(std::move(e));
      if (run.rejected) {
        any_rejected = true;
      } else if (run.forced) {
        any_forced = true;
      } else if (run.contradiction) {
        any_contradiction = true;
      } else {
        any_consistent = true;
        best_lb = std::max(best_lb, run.lower_bound);
      }
    }
    if (any_rejected) {
      v.status = VerdictStatus::INPUT_ERROR;
      v.evidence.push_back("a supplied tuple failed re-verification");
      return v;
    }
    if (any_forced) {
      v.status = VerdictStatus::FORCED_INFINITELY_MANY;
    } else if (any_consistent) {
      v.status = VerdictStatus::CONSISTENT_AT_DEPTH;
      v.orbit_lower_bound = best_lb;
    } else {
      v.status = any_contradiction ? VerdictStatus::CONTRADICTION
                                   : VerdictStatus::CONSISTENT_AT_DEPTH;
    }
    v.evidence.push_back(std::string("verdict: ") + to_string(v.status));
    return v;
  } catch (const InputError& e) {
    return Verdict{VerdictStatus::INPUT_ERROR, Int(0), {e.what()}};
  }
}

EllipticityChain ellipticity_chain(const OrbitDescriptor& x, const Int& m_i,
                                   const Int& N, const Rat& delta) {
  if (m_i < 1) throw InputError("iterate must be positive");
  if (!(delta > 0 && delta < Rat(1, 2)))
    throw InputError("delta must lie in (0, 1/2)");
  EllipticityChain ch;
  ch.label = x.label;
  const auto& dec = x.profile.dec;
  const Int d = dec.d();
  ch.rot_like_count = dec.r() + dec.r_star() + dec.r_zero();

  Int mu_even = mu_minus_iter(x.profile, 2 * m_i);
  Int target = 2 * N + d;
  ch.attained = mu_even == target;

  Int win = 0, cowin = 0, win_nu = 0;
  bool outside = false, zero_weight = false;
  for (const auto& e : spectrum_away_from_one(dec)) {
    switch (classify_window(e.point, m_i, delta)) {
      case WindowClass::AtZero:
        if (e.split.minus > 0) zero_weight = true;
        break;
      case WindowClass::Low:
        win += e.split.minus;
        win_nu += e.nullity;
        break;
      case WindowClass::High:
        cowin += e.split.minus;
        break;
      case WindowClass::Outside:
        outside = true;
        break;
    }
  }
  ch.window_sum = win;
  ch.cowindow_sum = cowin;
  ch.window_nullity = win_nu;
  ch.partition_ok = !outside && !zero_weight;

  auto fail = [&ch](std::string msg) -> EllipticityChain& {
    ch.failure = std::move(msg);
    return ch;
  };
  if (!ch.attained)
    return fail("mu(x^{2m}) = " + istr(mu_even) + ", not 2N + n - 1 = " +
                istr(target));
  Int s_plus = S_plus_at_one(dec);
  if (s_plus != 0)
    return fail("S_plus(1) = " + istr(s_plus) +
                " is nonzero, an eigenvalue-one block blocks the chain");
  if (outside) return fail("an eigenvalue angle escapes both windows");
  if (zero_weight) return fail("an S_minus weight sits at {m theta/pi} = 0");
  if (win - cowin != d)
    return fail("window balance " + istr(win) + " - " + istr(cowin) +
                " differs from n - 1 = " + istr(d));
  if (win > win_nu) return fail("S_minus exceeds the nullity in the window");
  if (win_nu > ch.rot_like_count)
    return fail("window nullity exceeds r + r* + r0");
  if (ch.rot_like_count > d) return fail("r + r* + r0 exceeds n - 1");
  /* both ends of the chain meet at n - 1, so every link is tight */
  ch.equality = true;
  if (cowin != 0 || win != d || win_nu != d || ch.rot_like_count != d)
    return fail("tight chain left slack somewhere");
  if (dec.r() != d || dec.r_star() != 0 || dec.r_zero() != 0)
    return fail("unit count leaves room for a non-rotation block");
  ch.strict_windows = true;
  for (const auto& a : dec.rot_angles())
    if (classify_window(CirclePoint::at(a), m_i, delta) != WindowClass::Low)
      ch.strict_windows = false;
  if (!ch.strict_windows)
    return fail("a rotation angle leaves the (0, delta) window");
  ch.irrationally_elliptic = dec.is_irrationally_elliptic();
  if (!ch.irrationally_elliptic) return fail("a rotation angle is rational");
  return ch;
}

EllipticityReport replay_theorem_1_3(const Configuration& cfg,
                                     const JumpTuple& t,
                                     const JumpTuple& t_sym,
                                     const Rat& delta) {
  cfg.validate();
  EllipticityReport rep;
  const int n = cfg.ambient_n;
  if (cfg.orbits.empty()) {
    rep.failure = "configuration has no orbits";
    return rep;
  }
  const std::size_t q = cfg.orbits.size();
  if (t.m.size() != q || t.delta_list.size() != q || t_sym.m.size() != q ||
      t_sym.delta_list.size() != q)
    throw InputError("tuple arity does not match the orbit count");

  std::vector<IndexProfile> profiles;
  for (const auto& x : cfg.orbits) profiles.push_back(x.profile);
  for (const auto& x : cfg.orbits) {
    auto cv = certify_dynamical_convexity(x.profile, n);
    if (!cv.pass) {
      rep.failure = "orbit " + x.label + " is not dynamically convex: " +
                    cv.reason;
      return rep;
    }
    Int nu1 = nu_iter(x.profile, 1);
    if (nu1 != 0)
      rep.notes.push_back("degeneracy detected: orbit " + x.label +
                          " has nu(x) = " + istr(nu1));
  }

  IdentityReport r1 = verify_tuple(profiles, t, delta);
  if (!r1.ok()) {
    rep.failure = "first tuple fails re-verification: " + join(r1.failures());
    return rep;
  }
  IdentityReport r2 = verify_tuple(profiles, t_sym, delta);
  if (!r2.ok()) {
    rep.failure =
        "companion tuple fails re-verification: " + join(r2.failures());
    return rep;
  }
  for (std::size_t i = 0; i < q; ++i)
    if (t.delta_list[i] + t_sym.delta_list[i] != C_of(profiles[i].dec)) {
      rep.failure = "tuples are not Delta-complementary at orbit " +
                    cfg.orbits[i].label;
      return rep;
    }
  rep.notes.push_back("Delta_i + Delta'_i = C(M_i) for every orbit");

  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < q; ++i) {
    EllipticityChain ch = ellipticity_chain(cfg.orbits[i], t.m[i], t.N, delta);
    rep.chains.push_back(ch);
    if (ch.attained && ch.failure.empty() && !first) first = i;
  }
  if (!first) {
    for (const auto& ch : rep.chains)
      if (ch.attained) {
        rep.failure = "orbit " + ch.label +
                      " attains degree 2N + n - 1 but the equality chain "
                      "breaks: " +
                      ch.failure;
        return rep;
      }
    rep.failure = "no orbit attains degree 2N + n - 1 under the first tuple";
    return rep;
  }
  rep.first_label = cfg.orbits[*first].label;
  rep.notes.push_back("orbit " + rep.first_label +
                      " carries the top degree under the first tuple and is "
                      "irrationally elliptic");

  Int mu_sym = mu_minus_iter(profiles[*first], 2 * t_sym.m[*first]);
  Int expected = 2 * t_sym.N - (n - 1);
  if (mu_sym != expected) {
    rep.failure = "companion display failed: mu(x^{2m'}) = " + istr(mu_sym) +
                  ", expected 2N' - (n - 1) = " + istr(expected);
    return rep;
  }
  rep.notes.push_back("under the companion tuple, orbit " + rep.first_label +
                      " sits at mu = 2N' - (n - 1), strictly below the top "
                      "degree");

  std::optional<std::size_t> second;
  for (std::size_t i = 0; i < q; ++i) {
    if (i == *first) continue;
    EllipticityChain ch =
        ellipticity_chain(cfg.orbits[i], t_sym.m[i], t_sym.N, delta);
    rep.chains.push_back(ch);
    if (ch.attained && ch.failure.empty() && !second) second = i;
  }
  if (!second) {
    for (std::size_t k = q; k < rep.chains.size(); ++k)
      if (rep.chains[k].attained) {
        rep.failure = "orbit " + rep.chains[k].label +
                      " attains the top degree under the companion tuple but "
                      "the equality chain breaks: " +
                      rep.chains[k].failure;
        return rep;
      }
    rep.failure =
        "no second orbit attains the top degree under the companion tuple";
    return rep;
  }
  rep.second_label = cfg.orbits[*second].label;
  rep.notes.push_back("orbit " + rep.second_label +
                      " carries the top degree under the companion tuple and "
                      "is irrationally elliptic");
  rep.ok = true;
  return rep;
}

}  // namespace sympindex
