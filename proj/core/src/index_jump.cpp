#include "sympindex/index_jump.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "sympindex/errors.hpp"

namespace sympindex {

void SearchConfig::validate() const {
  if (n_max < 1) throw InputError("n_max must be positive");
  if (!(epsilon > 0 && epsilon < Rat(1, 2)))
    throw InputError("epsilon must lie in (0, 1/2)");
  if (!(delta > 0 && delta < Rat(1, 2)))
    throw InputError("delta must lie in (0, 1/2)");
  if (!(delta < epsilon)) throw InputError("delta must be smaller than epsilon");
  if (m0 && *m0 < 1) throw InputError("m0 must be positive");
  if (want < 1) throw InputError("want must be positive");
  if (threads < 1) throw InputError("threads must be positive");
}

/* theta/pi is twice the turn fraction of the point. */
WindowClass classify_window(const CirclePoint& pt, const Int& m, const Rat& delta) {
  if (pt.kind == CirclePoint::Kind::MinusOne) return WindowClass::AtZero;
  const Angle& a = *pt.a;
  if (a.is_rational()) {
    Rat f = frac_rat(2 * m * a.rat());
    if (f == 0) return WindowClass::AtZero;
    if (f < delta) return WindowClass::Low;
    if (f > 1 - delta) return WindowClass::High;
    return WindowClass::Outside;
  }
  ApproxRat f = a.times(2 * m).frac_decide();
  if (f.less_than(delta)) return WindowClass::Low;  // irrational, never exactly 0
  if (f.greater_than(1 - delta)) return WindowClass::High;
  return WindowClass::Outside;
}

namespace {

struct ProfileData {
  ApproxRat mean;
  Int mu1, nu1, s_plus, c;
  std::vector<EigenAnglePoint> spectrum;
};

std::vector<ProfileData> analyze(const std::vector<IndexProfile>& profiles) {
  if (profiles.empty()) throw InputError("need at least one profile");
  std::vector<ProfileData> out;
  out.reserve(profiles.size());
  for (const auto& p : profiles) {
    p.validate();
    ProfileData d;
    d.mean = mean_index(p);
    if (d.mean.compare(Rat(0)) <= 0)
      throw MeanIndexNonpositive("tuple search requires every mean index positive");
    d.mu1 = mu_minus_iter(p, 1);
    d.nu1 = nu_iter(p, 1);
    d.s_plus = S_plus_at_one(p.dec);
    d.c = C_of(p.dec);
    d.spectrum = spectrum_away_from_one(p.dec);
    out.push_back(std::move(d));
  }
  return out;
}

Int common_multiple(const std::vector<ProfileData>& data) {
  Int m = 1;
  for (const auto& d : data)
    for (const auto& e : d.spectrum) {
      if (e.point.kind != CirclePoint::Kind::Elliptic) continue;  // -1 has theta/pi = 1
      const Angle& a = *e.point.a;
      if (!a.is_rational()) continue;
      m = lcm_int(m, Rat(2 * a.rat()).get_den());
    }
  return m;
}

VVector assemble_v(const std::vector<ProfileData>& data) {
  VVector vv;
  vv.M_common = common_multiple(data);
  for (const auto& d : data)
    vv.v.push_back(d.mean.scaled(Rat(vv.M_common)).reciprocal());
  for (const auto& d : data) {
    ApproxRat inv_mean = d.mean.reciprocal();
    for (const auto& e : d.spectrum) {
      for (Int rep = 0; rep < e.split.minus; ++rep)
        vv.v.push_back(e.turn.scaled(2) * inv_mean);
    }
  }
  vv.l = static_cast<int>(vv.v.size());
  return vv;
}

Int delta_of(const ProfileData& d, const Int& m, const Rat& delta) {
  Int sum = 0;
  for (const auto& e : d.spectrum)
    if (e.split.minus > 0 &&
        classify_window(e.point, m, delta) == WindowClass::Low)
      sum += e.split.minus;
  return sum;
}

bool windows_hold(const ProfileData& d, const Int& m, const Rat& delta) {
  for (const auto& e : d.spectrum)
    if (classify_window(e.point, m, delta) == WindowClass::Outside) return false;
  return true;
}

IdentityReport check_tuple(const std::vector<IndexProfile>& profiles,
                           const std::vector<ProfileData>& data,
                           const JumpTuple& t, const Rat& delta) {
  IdentityReport rep;
  if (t.m.size() != profiles.size())
    throw InputError("tuple has wrong number of m entries");
  if (t.M0) rep.m0_divides = (t.N % *t.M0 == 0);
  bool deltas_match = true;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const auto& p = profiles[i];
    const auto& d = data[i];
    const Int& m = t.m[i];
    IdentityReport::PerProfile pp;
    if (m < 1) {
      rep.per_profile.push_back(pp);
      deltas_match = false;
      continue;
    }
    Int two_n = 2 * t.N;
    pp.nu_plus_one_ok = nu_iter(p, 2 * m + 1) == d.nu1;
    pp.nu_minus_one_ok = nu_iter(p, 2 * m - 1) == d.nu1;
    pp.mu_odd_up_ok = mu_minus_iter(p, 2 * m + 1) == two_n + d.mu1;
    pp.mu_odd_down_ok =
        mu_plus_iter(p, 2 * m - 1) == two_n - d.mu1 - 2 * d.s_plus + d.nu1;
    pp.delta_recomputed = delta_of(d, m, delta);
    pp.mu_even_ok =
        mu_minus_iter(p, 2 * m) == two_n - (d.s_plus + d.c - 2 * pp.delta_recomputed);
    pp.windows_ok = windows_hold(d, m, delta);
    if (static_cast<std::size_t>(i) < t.chi.size()) {
      Int fl = data[i].mean.scaled(Rat(t.M_common)).reciprocal()
                   .scaled(Rat(t.N)).floor_decide();
      pp.m_formula_ok = (fl + t.chi[i]) * t.M_common == m;
    }
    if (i < t.delta_list.size() && t.delta_list[i] != pp.delta_recomputed)
      deltas_match = false;
    rep.per_profile.push_back(pp);
  }
  rep.delta_matches_stored = deltas_match;
  return rep;
}

struct ScanSetup {
  const std::vector<IndexProfile>* profiles;
  std::vector<ProfileData> data;
  VVector vv;
  Rat epsilon;
  Rat delta;
  Int stride;
  std::optional<Int> m0;
  std::vector<double> v_dbl;
  double eps_dbl = 0;
  bool prefilter = false;
  const std::vector<Int>* delta_req = nullptr;  // companion search
  std::optional<Int> exclude_n;
};

constexpr double kPrefilterSlack = 1e-4;

ScanSetup prepare(const std::vector<IndexProfile>& profiles, const SearchConfig& cfg) {
  cfg.validate();
  ScanSetup s;
  s.profiles = &profiles;
  s.data = analyze(profiles);
  s.vv = assemble_v(s.data);
  s.epsilon = cfg.epsilon;
  s.delta = cfg.delta;
  s.stride = cfg.m0 ? *cfg.m0 : Int(1);
  s.m0 = cfg.m0;
  s.eps_dbl = mpq_get_d(cfg.epsilon.get_mpq_t());
  /* The double pass only ever rejects; its error stays below the slack as
   * long as N*v fits comfortably in the 53-bit mantissa. */
  s.prefilter = cfg.n_max <= 10000000;
  for (const auto& c : s.vv.v) {
    double x = mpq_get_d(c.val.get_mpq_t());
    if (std::fabs(x) > 1e3) s.prefilter = false;
    s.v_dbl.push_back(x);
  }
  return s;
}

bool prefilter_pass(const ScanSetup& s, const Int& n) {
  double nd = mpz_get_d(n.get_mpz_t());
  for (double v : s.v_dbl) {
    double x = nd * v;
    double f = x - std::floor(x);
    double dist = std::min(f, 1.0 - f);
    if (dist >= s.eps_dbl + kPrefilterSlack) return false;
  }
  return true;
}

/* Vertex test and, on success, the fully verified tuple. Near-miss distance
 * (double, for diagnostics only) is written to miss when the test fails. */
std::optional<JumpTuple> try_candidate(const ScanSetup& s, const Int& n,
                                       double* miss) {
  if (s.exclude_n && n == *s.exclude_n) return std::nullopt;
  std::vector<int> chi;
  chi.reserve(s.vv.v.size());
  double worst = 0;
  for (const auto& c : s.vv.v) {
    ApproxRat f = c.scaled(Rat(n)).frac_decide();
    if (f.less_than(s.epsilon)) {
      chi.push_back(0);
      worst = std::max(worst, mpq_get_d(f.val.get_mpq_t()));
    } else if ((ApproxRat(Rat(1)) - f).less_than(s.epsilon)) {
      chi.push_back(1);
      worst = std::max(worst, 1.0 - mpq_get_d(f.val.get_mpq_t()));
    } else {
      double fd = mpq_get_d(f.val.get_mpq_t());
      *miss = std::max(worst, std::min(fd, 1.0 - fd));
      return std::nullopt;
    }
  }
  JumpTuple t;
  t.N = n;
  t.chi = std::move(chi);
  t.epsilon = s.epsilon;
  t.M_common = s.vv.M_common;
  t.M0 = s.m0;
  const auto q = s.data.size();
  for (std::size_t i = 0; i < q; ++i) {
    Int fl = s.vv.v[i].scaled(Rat(n)).floor_decide();
    Int m = (fl + t.chi[i]) * t.M_common;
    if (m < 1) return std::nullopt;
    t.m.push_back(m);
  }
  for (std::size_t i = 0; i < q; ++i) {
    Int d = delta_of(s.data[i], t.m[i], s.delta);
    if (s.delta_req && (*s.delta_req)[i] != d) return std::nullopt;
    t.delta_list.push_back(d);
  }
  IdentityReport rep = check_tuple(*s.profiles, s.data, t, s.delta);
  if (!rep.ok()) return std::nullopt;
  return t;
}

struct ChunkResult {
  std::vector<JumpTuple> tuples;
  double best_miss = 2.0;
};

ChunkResult scan_range(const ScanSetup& s, const Int& first_step,
                       const Int& last_step, int want) {
  ChunkResult res;
  for (Int k = first_step; k <= last_step; ++k) {
    Int n = k * s.stride;
    if (s.prefilter && !prefilter_pass(s, n)) continue;
    double miss = 2.0;
    if (auto t = try_candidate(s, n, &miss)) {
      res.tuples.push_back(std::move(*t));
      if (static_cast<int>(res.tuples.size()) >= want) return res;
    } else {
      res.best_miss = std::min(res.best_miss, miss);
    }
  }
  return res;
}

std::vector<JumpTuple> run_scan(const ScanSetup& s, const Int& n_max, int want,
                                int threads) {
  Int steps = n_max / s.stride;
  std::vector<JumpTuple> found;
  double best_miss = 2.0;
  const Int chunk = 4096;
  Int next = 1;
  while (next <= steps && static_cast<int>(found.size()) < want) {
    int lanes = threads;
    std::vector<ChunkResult> parts(lanes);
    std::vector<std::exception_ptr> errs(lanes);
    std::vector<std::thread> pool;
    for (int w = 0; w < lanes; ++w) {
      Int lo = next + w * chunk;
      if (lo > steps) break;
      Int hi = lo + chunk - 1;
      if (hi > steps) hi = steps;
      auto job = [&, w, lo, hi]() {
        try {
          parts[w] = scan_range(s, lo, hi, want);
        } catch (...) {
          errs[w] = std::current_exception();
        }
      };
      if (threads == 1)
        job();
      else
        pool.emplace_back(job);
    }
    for (auto& th : pool) th.join();
    for (int w = 0; w < lanes; ++w) {
      if (errs[w]) std::rethrow_exception(errs[w]);
      for (auto& t : parts[w].tuples) {
        if (static_cast<int>(found.size()) < want) found.push_back(std::move(t));
      }
      best_miss = std::min(best_miss, parts[w].best_miss);
      if (static_cast<int>(found.size()) >= want) break;
    }
    next += Int(lanes) * chunk;
  }
  if (found.empty()) {
    std::ostringstream os;
    os << "no index-jump tuple with N <= " << n_max.get_str()
       << "; best vertex distance seen ~" << best_miss
       << "; this bounds nothing (valid N are unbounded), raise n_max";
    throw NoTupleFound(os.str());
  }
  return found;
}

}  // namespace

bool IdentityReport::ok() const {
  if (!m0_divides || !delta_matches_stored) return false;
  for (const auto& pp : per_profile)
    if (!(pp.nu_plus_one_ok && pp.nu_minus_one_ok && pp.mu_odd_up_ok &&
          pp.mu_odd_down_ok && pp.mu_even_ok && pp.windows_ok && pp.m_formula_ok))
      return false;
  return !per_profile.empty();
}

std::vector<std::string> IdentityReport::failures() const {
  std::vector<std::string> out;
  if (!m0_divides) out.push_back("N is not a multiple of the required M0");
  if (!delta_matches_stored) out.push_back("stored delta list does not match recomputation");
  for (std::size_t i = 0; i < per_profile.size(); ++i) {
    const auto& pp = per_profile[i];
    auto tag = [&](const char* what) {
      out.push_back("profile " + std::to_string(i) + ": " + what);
    };
    if (!pp.nu_plus_one_ok) tag("nu(2m+1) != nu(1)");
    if (!pp.nu_minus_one_ok) tag("nu(2m-1) != nu(1)");
    if (!pp.mu_odd_up_ok) tag("mu_minus(2m+1) != 2N + mu_minus(1)");
    if (!pp.mu_odd_down_ok) tag("mu_plus(2m-1) != 2N - mu_minus(1) - 2S+(1) + nu(1)");
    if (!pp.mu_even_ok) tag("mu_minus(2m) != 2N - (S+(1) + C - 2*Delta)");
    if (!pp.windows_ok) tag("an eigenvalue angle escapes the [0,delta)/(1-delta,1) windows");
    if (!pp.m_formula_ok) tag("m does not match (floor(N/(M*mean)) + chi)*M");
  }
  return out;
}

VVector build_v_vector(const std::vector<IndexProfile>& profiles) {
  return assemble_v(analyze(profiles));
}

std::vector<JumpTuple> find_tuples(const std::vector<IndexProfile>& profiles,
                                   const SearchConfig& cfg) {
  ScanSetup s = prepare(profiles, cfg);
  return run_scan(s, cfg.n_max, cfg.want, cfg.threads);
}

IdentityReport verify_tuple(const std::vector<IndexProfile>& profiles,
                            const JumpTuple& t, const Rat& delta) {
  auto data = analyze(profiles);
  return check_tuple(profiles, data, t, delta);
}

JumpTuple symmetric_tuple(const std::vector<IndexProfile>& profiles,
                          const JumpTuple& t, const SearchConfig& cfg) {
  ScanSetup s = prepare(profiles, cfg);
  std::vector<Int> targets;
  for (std::size_t i = 0; i < s.data.size(); ++i) {
    if (i >= t.delta_list.size())
      throw InputError("tuple is missing delta entries");
    Int want_delta = s.data[i].c - t.delta_list[i];
    if (want_delta < 0)
      throw NoTupleFound("stored Delta exceeds C; no companion tuple can exist");
    targets.push_back(want_delta);
  }
  s.delta_req = &targets;
  s.exclude_n = t.N;
  return run_scan(s, cfg.n_max, 1, cfg.threads).front();
}

std::vector<JumpTuple> find_tuples_with_delta(
    const std::vector<IndexProfile>& profiles, const SearchConfig& cfg,
    const std::vector<Int>& delta_targets) {
  ScanSetup s = prepare(profiles, cfg);
  if (delta_targets.size() != s.data.size())
    throw InputError("need one Delta target per profile");
  for (std::size_t i = 0; i < delta_targets.size(); ++i)
    if (delta_targets[i] < 0 || delta_targets[i] > s.data[i].c)
      throw InputError("Delta target outside [0, C]");
  s.delta_req = &delta_targets;
  return run_scan(s, cfg.n_max, cfg.want, cfg.threads);
}

}  // namespace sympindex
