/* Acceptance gauntlet: one line per criterion, nonzero exit on any failure.
 * Tolerances are pinned inline; identity checks are exact (==), interval
 * checks carry the declared error bounds and nothing more. */

#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "sympindex/decompose.hpp"
#include "sympindex/errors.hpp"
#include "sympindex/fixtures.hpp"
#include "sympindex/index_iteration.hpp"
#include "sympindex/index_jump.hpp"
#include "sympindex/reeb_count.hpp"
#include "sympindex/splitting.hpp"

using namespace sympindex;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/* Fixed-width LCG so the sampled cases are identical on every platform. */
struct Lcg {
  std::uint64_t s;
  explicit Lcg(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 33;
  }
  int pick(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

Angle random_angle(Lcg& rng, bool allow_irrational) {
  if (allow_irrational && rng.pick(0, 2) == 0) {
    std::string approx = "0.3183098861837906" + std::to_string(rng.pick(100, 999));
    return Angle::irrational(approx, "0.00000001");
  }
  int q = rng.pick(3, 12);
  Rat v(rng.pick(1, q - 1), q);
  v.canonicalize();
  if (v == Rat(1, 2)) v = Rat(1, q);
  return Angle::rational(v);
}

NormalFormBlock random_block(Lcg& rng, bool allow_irrational) {
  switch (rng.pick(0, 9)) {
    case 0: return NormalFormBlock::simple(BlockKind::E_minus);
    case 1: return NormalFormBlock::simple(BlockKind::E_id);
    case 2: return NormalFormBlock::simple(BlockKind::E_plus);
    case 3: return NormalFormBlock::simple(BlockKind::F_minus);
    case 4: return NormalFormBlock::simple(BlockKind::F_id);
    case 5: return NormalFormBlock::simple(BlockKind::F_plus);
    case 6: return NormalFormBlock::hyp(rng.pick(1, 2));
    case 7:
      return NormalFormBlock::n2(
          rng.pick(0, 1) ? BlockKind::N2Star : BlockKind::N2Zero,
          random_angle(rng, allow_irrational));
    default: return NormalFormBlock::rot(random_angle(rng, allow_irrational));
  }
}

IndexProfile random_profile(Lcg& rng, int d_max, bool allow_irrational) {
  IndexProfile p;
  int target = rng.pick(1, d_max), d = 0;
  while (d < target) {
    auto b = random_block(rng, allow_irrational);
    if (d + b.units() > target) continue;
    d += b.units();
    p.dec.blocks.push_back(std::move(b));
  }
  p.base_index = rng.pick(-3, 6);
  return p;
}

/* -------- criterion 1: first-iterate collapse ------------------------- */
bool criterion_1(std::string& note) {
  auto t0 = Clock::now();
  Lcg rng(1001);
  for (int t = 0; t < 10000; ++t) {
    IndexProfile p = random_profile(rng, 5, true);
    if (mu_minus_iter(p, 1) != p.base_index) {
      note = "collapse failed at sample " + std::to_string(t);
      return false;
    }
  }
  double dt = seconds_since(t0);
  note = "10000 decompositions in " + std::to_string(dt) + "s";
  return dt < 10.0;
}

/* -------- criterion 2: crossing-walk oracle --------------------------- */
bool criterion_2(std::string& note) {
  auto t0 = Clock::now();
  std::vector<Rat> roster;
  for (int q = 3; q <= 12; ++q)
    for (int p = 1; p < q; ++p) {
      Rat a(p, q);
      a.canonicalize();
      if (a.get_den() != q || a == Rat(1, 2)) continue;
      roster.push_back(a);
    }
  // every multiset of up to three roster angles
  const int A = static_cast<int>(roster.size());
  long profiles = 0, checks = 0;
  auto run_multiset = [&](const std::vector<int>& idx) -> bool {
    IndexProfile p;
    std::vector<Rat> angles;
    for (int i : idx) {
      angles.push_back(roster[i]);
      p.dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(roster[i])));
    }
    const int r = static_cast<int>(idx.size());
    // incremental crossing walk, one state per block
    std::vector<Rat> frac(angles.size(), Rat(0));
    std::vector<Int> wraps(angles.size(), Int(0));
    for (long m = 1; m <= 200; ++m) {
      Int W = 0;
      for (std::size_t j = 0; j < angles.size(); ++j) {
        frac[j] += angles[j];
        if (frac[j] >= 1) {
          frac[j] -= 1;
          ++wraps[j];
        }
        W += wraps[j] + (frac[j] > 0 ? 1 : 0);
      }
      for (int base = -3; base <= 6; ++base) {
        p.base_index = base;
        Int want = Int(m) * (base - r) + 2 * W - r;
        ++checks;
        if (mu_minus_iter(p, m) != want) return false;
      }
    }
    ++profiles;
    return true;
  };
  for (int i = 0; i < A; ++i) {
    if (!run_multiset({i})) {
      note = "mismatch in a 1-block profile";
      return false;
    }
    for (int j = i; j < A; ++j) {
      if (!run_multiset({i, j})) {
        note = "mismatch in a 2-block profile";
        return false;
      }
      for (int k = j; k < A; ++k)
        if (!run_multiset({i, j, k})) {
          note = "mismatch in a 3-block profile";
          return false;
        }
    }
  }
  double dt = seconds_since(t0);
  note = std::to_string(profiles) + " profiles, " + std::to_string(checks) +
         " exact comparisons in " + std::to_string(dt) + "s";
  return dt < 60.0;
}

/* -------- criterion 3: envelope and formal-iterate means --------------- */
bool criterion_3(std::string& note) {
  auto t0 = Clock::now();
  Lcg rng(3003);
  for (int t = 0; t < 1000; ++t) {
    IndexProfile p = random_profile(rng, 4, true);
    ApproxRat mean = mean_index(p);
    Rat d(p.dec.d());
    for (long m = 1; m <= 1000; ++m) {
      Rat gap = Rat(mu_minus_iter(p, m)) - Rat(m) * mean.val;
      Rat slack = d + Rat(m) * mean.err;  // exact when the mean is exact
      if (gap > slack || gap < -slack) {
        note = "envelope violated at sample " + std::to_string(t) + ", m = " +
               std::to_string(m);
        return false;
      }
    }
  }
  // additivity of the mean under formal iteration, rational case
  Lcg rng2(3103);
  for (int t = 0; t < 300; ++t) {
    IndexProfile p;
    std::vector<Rat> angles;
    int d = rng2.pick(1, 3);
    for (int j = 0; j < d; ++j) {
      int q = rng2.pick(3, 12);
      Rat a(rng2.pick(1, q - 1), q);
      a.canonicalize();
      if (a == Rat(1, 2)) a = Rat(1, q);
      angles.push_back(a);
      p.dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(a)));
    }
    p.base_index = rng2.pick(-3, 6);
    ApproxRat mean = mean_index(p);
    if (!mean.exact()) {
      note = "rational mean not exact";
      return false;
    }
    for (long k = 2; k <= 5; ++k) {
      IndexProfile pk;
      bool in_class = true;
      for (const Rat& a : angles) {
        Rat ak = frac_rat(Rat(k) * a);
        if (ak == 0 || ak == Rat(1, 2)) {
          in_class = false;
          break;
        }
        pk.dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(ak)));
      }
      if (!in_class) continue;
      pk.base_index = mu_minus_iter(p, k);
      if (mean_index(pk).val != Rat(k) * mean.val) {
        note = "k-fold mean not additive at sample " + std::to_string(t);
        return false;
      }
    }
  }
  note = "1000 envelope profiles (m <= 1000) + 300 formal iterates in " +
         std::to_string(seconds_since(t0)) + "s";
  return true;
}

/* -------- criterion 4: gap inequality and its corollary ---------------- */
bool criterion_4(std::string& note) {
  auto t0 = Clock::now();
  Lcg rng(4004);
  for (int t = 0; t < 1000; ++t) {
    IndexProfile p = random_profile(rng, 4, true);
    GapCheckResult res = check_gap_inequality(p, 100);
    if (!res.ok) {
      note = "gap inequality violated at sample " + std::to_string(t);
      return false;
    }
    Int mu1 = mu_minus_iter(p, 1);
    if (mu1 >= p.dec.d()) {
      if (!res.corollary_applies) {
        note = "corollary missed at sample " + std::to_string(t);
        return false;
      }
      for (long m = 1; m <= 100; ++m)
        if (mu_minus_iter(p, m + 1) < mu_plus_iter(p, m)) {
          note = "monotone corollary violated at sample " + std::to_string(t);
          return false;
        }
    }
  }
  note = "1000 profiles, m <= 100, zero violations in " +
         std::to_string(seconds_since(t0)) + "s";
  return true;
}

/* -------- criteria 5 and 6: tuple search, identities, companions ------- */
struct CijOutcome {
  bool found_all = true;
  bool identities = true;
  bool companions = true;
  int collections = 0;
  double dt = 0;
};

CijOutcome run_cij() {
  auto t0 = Clock::now();
  CijOutcome out;
  Lcg rng(5005);
  for (int t = 0; t < 200; ++t) {
    int q_orbits = 1 + t % 4;
    std::vector<IndexProfile> ps;
    while (static_cast<int>(ps.size()) < q_orbits) {
      IndexProfile p;
      int d = rng.pick(1, 4);
      for (int j = 0; j < d; ++j) {
        int den = rng.pick(3, 8);
        Rat a(rng.pick(1, den - 1), den);
        a.canonicalize();
        if (a == Rat(1, 2)) a = Rat(1, den);
        p.dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(a)));
      }
      p.base_index = rng.pick(1, 5);
      if (mean_index(p).val <= 0) continue;
      ps.push_back(std::move(p));
    }
    SearchConfig sc;
    sc.n_max = 1000000;
    sc.epsilon = Rat(1, 20);
    sc.delta = Rat(1, 40);
    sc.want = 1;
    sc.threads = 4;
    std::vector<JumpTuple> ts;
    try {
      ts = find_tuples(ps, sc);
    } catch (const NoTupleFound&) {
      out.found_all = false;
      continue;
    }
    ++out.collections;
    for (const auto& tu : ts) {
      if (tu.N > 1000000) out.identities = false;
      if (!verify_tuple(ps, tu, sc.delta).ok()) out.identities = false;
    }
    try {
      JumpTuple t2 = symmetric_tuple(ps, ts[0], sc);
      for (std::size_t i = 0; i < ps.size(); ++i)
        if (ts[0].delta_list[i] + t2.delta_list[i] != C_of(ps[i].dec))
          out.companions = false;
    } catch (const NoTupleFound&) {
      out.companions = false;
    }
  }
  out.dt = seconds_since(t0);
  return out;
}

/* -------- criterion 7: ladder defect ----------------------------------- */
bool criterion_7(std::string& note) {
  auto t0 = Clock::now();
  for (int n = 2; n <= 6; ++n) {
    Rat cp = chi_plus(n);
    Rat defect = (n % 2 == 0) ? Rat(1) : Rat(-1);
    for (long j = 1; j <= 50; ++j) {
      Int N = Int(j) * (n - 1);
      Rat want = Rat(2) * Rat(N) * cp + defect;
      if (Rat(betti_alternating_sum(n, 2 * N + n - 2)) != want) {
        note = "defect off at n = " + std::to_string(n) + ", j = " +
               std::to_string(j);
        return false;
      }
    }
  }
  double dt = seconds_since(t0);
  note = "n = 2..6, j <= 50, exact, in " + std::to_string(dt) + "s";
  return dt < 1.0;
}

/* -------- criterion 8: desk-scale ellipticity forcing ------------------ */
bool criterion_8(std::string& note) {
  auto t0 = Clock::now();
  std::vector<Angle> roster;
  for (int q = 3; q <= 8; ++q)
    for (int p = 1; p < q; ++p) {
      Rat a(p, q);
      a.canonicalize();
      if (a.get_den() != q || a == Rat(1, 2)) continue;
      roster.push_back(Angle::rational(a));
    }
  roster.push_back(
      Angle::irrational("0.618033988749894848204586834366", "0.000000000001"));

  std::vector<NormalFormBlock> unit1;
  unit1.push_back(NormalFormBlock::simple(BlockKind::E_minus));
  unit1.push_back(NormalFormBlock::simple(BlockKind::E_id));
  unit1.push_back(NormalFormBlock::simple(BlockKind::E_plus));
  unit1.push_back(NormalFormBlock::simple(BlockKind::F_minus));
  unit1.push_back(NormalFormBlock::simple(BlockKind::F_id));
  unit1.push_back(NormalFormBlock::simple(BlockKind::F_plus));
  unit1.push_back(NormalFormBlock::hyp(1));
  for (const auto& a : roster) unit1.push_back(NormalFormBlock::rot(a));

  std::vector<NormalFormDecomposition> decs;
  for (std::size_t i = 0; i < unit1.size(); ++i)
    for (std::size_t j = i; j < unit1.size(); ++j) {
      NormalFormDecomposition dec;
      dec.blocks.push_back(unit1[i]);
      dec.blocks.push_back(unit1[j]);
      decs.push_back(std::move(dec));
    }
  {
    NormalFormDecomposition dec;
    dec.blocks.push_back(NormalFormBlock::hyp(2));
    decs.push_back(std::move(dec));
  }
  for (const auto& a : roster)
    for (auto kind : {BlockKind::N2Star, BlockKind::N2Zero}) {
      NormalFormDecomposition dec;
      dec.blocks.push_back(NormalFormBlock::n2(kind, a));
      decs.push_back(std::move(dec));
    }

  long certified = 0, truths = 0;
  for (const auto& dec : decs) {
    OrbitDescriptor x;
    x.label = "t";
    x.action = Rat(1);
    x.profile.dec = dec;
    x.profile.base_index = 4;
    bool truth = dec.is_irrationally_elliptic();
    if (truth) ++truths;
    bool certified_somewhere = false;
    for (long m = 1; m <= 60; ++m) {
      Int mu;
      try {
        mu = mu_minus_iter(x.profile, 2 * m);
      } catch (const Error&) {
        continue;
      }
      if ((mu - 2) % 2 != 0) continue;  // no integer N puts this at the top
      Int N = (mu - 2) / 2;
      try {
        EllipticityChain ch = ellipticity_chain(x, Int(m), N, Rat(1, 40));
        if (ch.irrationally_elliptic) certified_somewhere = true;
      } catch (const Error&) {
        continue;
      }
      if (certified_somewhere && !truth) {
        note = "unsound certification for a non-elliptic decomposition";
        return false;
      }
    }
    if (truth && !certified_somewhere) {
      note = "missed certification for an all-irrational rotation pair";
      return false;
    }
    if (certified_somewhere) ++certified;
  }
  double dt = seconds_since(t0);
  note = std::to_string(decs.size()) + " decompositions, " +
         std::to_string(certified) + " certified = " + std::to_string(truths) +
         " ground truths, in " + std::to_string(dt) + "s";
  return certified == truths && dt < 120.0;
}

/* -------- criterion 9: end-to-end fixtures ----------------------------- */
bool criterion_9(std::string& note) {
  auto t0 = Clock::now();
  Configuration katok = katok_like_n3();  // regenerated by the in-repo search
  auto ps = std::vector<IndexProfile>{katok.orbits[0].profile,
                                      katok.orbits[1].profile};
  SearchConfig sc;
  sc.n_max = FIXTURE_SCAN_NMAX;
  sc.threads = 4;

  auto grab = [&](Int d1, Int d2) {
    return find_tuples_with_delta(ps, sc, {d1, d2}).at(0);
  };
  JumpTuple ladder = grab(1, 2);
  JumpTuple low = grab(0, 2);
  JumpTuple high = grab(2, 0);

  Verdict v = replay_theorem_1_1(katok, {ladder});
  if (v.status != VerdictStatus::CONSISTENT_AT_DEPTH || v.orbit_lower_bound != 2) {
    note = "two-orbit fixture: counting replay did not reach depth 2";
    return false;
  }
  EllipticityReport er = replay_theorem_1_3(katok, low, high);
  if (!er.ok) {
    note = "two-orbit fixture: ellipticity replay failed: " + er.failure;
    return false;
  }

  Configuration sdm = sdm_forcing_n3();
  SearchConfig sdm_sc;
  sdm_sc.n_max = 64;
  std::vector<IndexProfile> sdm_ps{sdm.orbits[0].profile};
  Verdict v2 = replay_theorem_1_1(sdm, find_tuples(sdm_ps, sdm_sc));
  if (v2.status != VerdictStatus::FORCED_INFINITELY_MANY) {
    note = "forcing fixture did not force";
    return false;
  }
  bool sdm_evidence = false;
  for (const auto& e : v2.evidence)
    if (e.find("admissible") != std::string::npos) sdm_evidence = true;
  if (!sdm_evidence) {
    note = "forcing verdict lacks the degeneracy evidence";
    return false;
  }

  MorseReport mr = morse_check(empty_n3(), Int(10));
  if (mr.ok || mr.violated_degrees.empty() || mr.violated_degrees.front() != 2) {
    note = "empty fixture: expected the first violation at degree 2";
    return false;
  }
  note = "search + replays in " + std::to_string(seconds_since(t0)) + "s";
  return true;
}

/* -------- criterion 10: splitting table checks ------------------------- */
bool criterion_10(std::string& note) {
  auto t0 = Clock::now();
  // per-kind, per-angle: bounds and conjugation symmetry
  std::vector<Angle> angles;
  for (int q = 3; q <= 10; ++q)
    for (int p = 1; p < q; ++p) {
      Rat a(p, q);
      a.canonicalize();
      if (a.get_den() != q || a == Rat(1, 2)) continue;
      angles.push_back(Angle::rational(a));
    }
  angles.push_back(Angle::irrational("0.70710678118654752440", "0.0000000001"));

  std::vector<NormalFormDecomposition> singles;
  for (auto kind : {BlockKind::E_minus, BlockKind::E_id, BlockKind::E_plus,
                    BlockKind::F_minus, BlockKind::F_id, BlockKind::F_plus}) {
    NormalFormDecomposition dec;
    dec.blocks.push_back(NormalFormBlock::simple(kind));
    singles.push_back(std::move(dec));
  }
  {
    NormalFormDecomposition dec;
    dec.blocks.push_back(NormalFormBlock::hyp(1));
    singles.push_back(std::move(dec));
  }
  for (const auto& a : angles) {
    NormalFormDecomposition rot;
    rot.blocks.push_back(NormalFormBlock::rot(a));
    singles.push_back(std::move(rot));
    for (auto kind : {BlockKind::N2Star, BlockKind::N2Zero}) {
      NormalFormDecomposition n2;
      n2.blocks.push_back(NormalFormBlock::n2(kind, a));
      singles.push_back(std::move(n2));
    }
  }
  for (const auto& dec : singles) {
    for (const auto& pt : unit_spectrum(dec)) {
      auto s = splitting_numbers(dec, pt.point);
      Int nu = dec.nullity_at(pt.point);
      if (s.plus > nu || s.minus > nu) {
        note = "splitting number exceeds the nullity";
        return false;
      }
      if (pt.point.kind == CirclePoint::Kind::Elliptic) {
        auto flip = splitting_numbers(dec, CirclePoint::at(pt.point.a->conjugate()));
        if (s.plus != flip.minus || s.minus != flip.plus) {
          note = "conjugation symmetry broken";
          return false;
        }
      }
    }
  }
  // aggregate identity on random decompositions
  Lcg rng(10010);
  for (int t = 0; t < 10000; ++t) {
    IndexProfile p = random_profile(rng, 5, true);
    if (S_plus_at_one(p.dec) != p.dec.p_minus() + p.dec.p_zero()) {
      note = "S+(1) differs from p_minus + p_zero at sample " + std::to_string(t);
      return false;
    }
    auto s = splitting_numbers(p.dec, CirclePoint::one());
    if (s.plus != S_plus_at_one(p.dec)) {
      note = "S+(1) aggregation mismatch at sample " + std::to_string(t);
      return false;
    }
  }
  note = std::to_string(singles.size()) + " single-block tables + 10000 random sums in " +
         std::to_string(seconds_since(t0)) + "s";
  return true;
}

int g_failures = 0;

void report(int id, bool pass, const std::string& note) {
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL");
  if (!note.empty()) std::cout << "  (" << note << ")";
  std::cout << "\n" << std::flush;
  if (!pass) ++g_failures;
}

}  // namespace

int main() {
  std::string note;

  note.clear();
  report(1, criterion_1(note), note);
  note.clear();
  report(2, criterion_2(note), note);
  note.clear();
  report(3, criterion_3(note), note);
  note.clear();
  report(4, criterion_4(note), note);

  CijOutcome cij = run_cij();
  report(5, cij.found_all && cij.identities && cij.dt < 300.0,
         std::to_string(cij.collections) + "/200 collections, identities exact, in " +
             std::to_string(cij.dt) + "s");
  report(6, cij.companions, "companion window patterns complement to C");

  note.clear();
  report(7, criterion_7(note), note);
  note.clear();
  report(8, criterion_8(note), note);
  note.clear();
  report(9, criterion_9(note), note);
  note.clear();
  report(10, criterion_10(note), note);

  if (g_failures) {
    std::cout << g_failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
