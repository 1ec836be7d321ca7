#include "sympindex/fixtures.hpp"

#include "sympindex/errors.hpp"
#include "sympindex/index_jump.hpp"

namespace sympindex {

const Int FIXTURE_SCAN_NMAX = 50000;
const Int FIXTURE_MORSE_TOP = 60;

namespace {

Int pow10(int k) {
  Int v = 1;
  for (int i = 0; i < k; ++i) v *= 10;
  return v;
}

/* (sqrt(5)-1)/2 carried to 70 digits; used to push every searched value off
 * the rationals with small denominator. */
Rat golden() {
  Int sc = pow10(70);
  Int root = sqrt(Int(5) * sc * sc);
  Rat g(root - sc, 2 * sc);
  g.canonicalize();
  return g;
}

/* nearest 60-digit decimal, the precision the JSON files carry */
Rat round60(const Rat& x) {
  Int sc = pow10(60);
  Rat out(floor_rat(x * Rat(sc) + Rat(1, 2)), sc);
  out.canonicalize();
  return out;
}

OrbitDescriptor rot_pair(const std::string& label, const char* action,
                         int base, const Rat& a1, const Rat& a2) {
  static const Rat gap = Rat(1, pow10(50));
  OrbitDescriptor x;
  x.label = label;
  x.action = parse_decimal(action);
  x.profile.base_index = base;
  x.profile.dec.blocks.push_back(
      NormalFormBlock::rot(Angle::irrational_exactish(a1, gap)));
  x.profile.dec.blocks.push_back(
      NormalFormBlock::rot(Angle::irrational_exactish(a2, gap)));
  return x;
}

bool pattern_reachable(const std::vector<IndexProfile>& ps,
                       const std::vector<Int>& deltas) {
  SearchConfig sc;
  sc.n_max = FIXTURE_SCAN_NMAX;
  sc.want = 1;
  sc.threads = 4;
  try {
    find_tuples_with_delta(ps, sc, deltas);
    return true;
  } catch (const NoTupleFound&) {
    return false;
  }
}

}  // namespace

/* Candidate family: orbit one is a near-half split 1/2+eta, 1/2-e-eta with
 * angle sum 1-e, so its iterate ladder walks every level once while
 * k(eta+e) stays below 1/2.  Orbit two gets an equal split c,c with c
 * solved from the mean-index identity, which pins its mean to
 * 2(1-e)/(1-2e).  e is the only searched magnitude: too small and the
 * equal-split windows are too thin for any scan to hit, too large and the
 * first orbit's ladder skips a level inside the Morse range. */
Configuration katok_like_n3() {
  const Rat g = golden();
  const Rat eta = Rat(13, 10000) + g / pow10(5);
  for (int base2 : {2, 4, 6}) {
    for (int step = 1; step <= 8; ++step) {
      const Rat e = Rat(step, 500) + g / pow10(4);
      const Rat mu2 = Rat(2) * (Rat(1) - e) / (Rat(1) - Rat(2) * e);
      const Rat sigma2 = (mu2 - Rat(base2 - 2)) / Rat(2);
      const Rat c = sigma2 / Rat(2);
      if (c <= 0 || c >= 1 || c == Rat(1, 2)) continue;
      const Rat a1 = round60(Rat(1, 2) + eta);
      const Rat a2 = round60(Rat(1, 2) - e - eta);
      if (a2 <= 0) continue;

      Configuration cfg;
      cfg.ambient_n = 3;
      cfg.orbits.push_back(rot_pair("x1", "0.9999", 2, a1, a2));
      cfg.orbits.push_back(rot_pair("x2", "1.0002", base2, round60(c), round60(c)));
      cfg.validate();

      bool dc = true;
      for (const auto& x : cfg.orbits)
        dc = dc && certify_dynamical_convexity(x.profile, cfg.ambient_n).pass;
      if (!dc) continue;
      if (!mean_index_identity_check(cfg).holds) continue;
      if (!morse_check(cfg, FIXTURE_MORSE_TOP).ok) continue;

      std::vector<IndexProfile> ps{cfg.orbits[0].profile, cfg.orbits[1].profile};
      if (!pattern_reachable(ps, {1, 2})) continue;
      if (!pattern_reachable(ps, {0, 2})) continue;
      if (!pattern_reachable(ps, {2, 0})) continue;
      return cfg;
    }
  }
  throw NoTupleFound("fixture grid exhausted without a passing candidate");
}

/* One fully degenerate orbit: two E_plus blocks, so every iterate needs an
 * explicit table.  The table puts the single generator of iterate k at the
 * top of its window, which is also the degenerate-maximum degree
 * mean*k + n - 1.  The base index is searched: the replay only fires when
 * the mean index is an even integer and the first index clears n - 1. */
Configuration sdm_forcing_n3() {
  const int n = 3;
  const int table_span = 16;
  for (int base = 0; base <= 6; ++base) {
    IndexProfile p;
    p.base_index = base;
    p.dec.blocks.push_back(NormalFormBlock::simple(BlockKind::E_plus));
    p.dec.blocks.push_back(NormalFormBlock::simple(BlockKind::E_plus));
    if (!certify_dynamical_convexity(p, n).pass) continue;

    OrbitDescriptor x;
    x.label = "z1";
    x.action = parse_decimal("1.0000");
    x.profile = p;
    LocalHomologyTable table;
    bool fits = true;
    for (int k = 1; k <= table_span && fits; ++k) {
      Int deg = Int(base) * k + (n - 1);
      fits = mu_minus_iter(p, k) <= deg && deg <= mu_plus_iter(p, k);
      table.dims[Int(k)][deg] = 1;
    }
    if (!fits) continue;
    x.table = table;

    Configuration cfg;
    cfg.ambient_n = n;
    cfg.orbits.push_back(x);
    cfg.validate();

    SearchConfig sc;
    sc.n_max = 64;
    sc.want = 1;
    std::vector<JumpTuple> ts;
    try {
      ts = find_tuples({p}, sc);
    } catch (const NoTupleFound&) {
      continue;
    }
    if (replay_theorem_1_1(cfg, ts).status == VerdictStatus::FORCED_INFINITELY_MANY)
      return cfg;
  }
  throw NoTupleFound("no base index forces the degenerate-maximum chain");
}

Configuration empty_n3() {
  Configuration cfg;
  cfg.ambient_n = 3;
  return cfg;
}

std::vector<NamedFixture> builtin_fixtures() {
  return {{"katok-like-n3", katok_like_n3()},
          {"sdm-forcing-n3", sdm_forcing_n3()},
          {"empty", empty_n3()}};
}

}  // namespace sympindex
