#include "doctest.h"
#include "oracles.hpp"
#include "sympindex/errors.hpp"
#include "sympindex/fixtures.hpp"
#include "sympindex/reeb_count.hpp"

using namespace sympindex;

TEST_CASE("betti matches the tabulated ladders") {
  for (int n = 2; n <= 6; ++n)
    for (long k = n - 1; k <= 400; ++k)
      REQUIRE(betti(n, k) == oracles::betti_piecewise(n, k));
  CHECK_THROWS_AS(betti(3, 1), DomainBelowMin);
  CHECK_THROWS_AS(betti(1, 5), InputError);
}

TEST_CASE("alternating sum telescopes to the stated defect") {
  for (int n = 2; n <= 6; ++n) {
    Rat cp = chi_plus(n);
    Int sign = (n % 2 == 0) ? 1 : -1;
    for (long j = 1; j <= 50; ++j) {
      Int N = Int(j) * (n - 1);
      Rat expect = Rat(2) * Rat(N) * cp + Rat(sign);
      CHECK(Rat(betti_alternating_sum(n, 2 * N + n - 2)) == expect);
    }
  }
  // the worked examples; n = 3, N = 10 tops out at degree 2N + n - 2 = 21
  CHECK(betti_alternating_sum(3, 5) == 3);
  CHECK(betti_alternating_sum(4, 8) == -3);
  CHECK(betti_alternating_sum(3, 21) == 19);
}

TEST_CASE("chi_plus closed form") {
  CHECK(chi_plus(3) == 1);
  CHECK(chi_plus(4) == Rat(-2, 3));
  CHECK(chi_plus(2) == -1);
  CHECK(chi_plus(5) == Rat(3, 4));
}

namespace {

OrbitDescriptor rot_orbit(const std::string& label, const Rat& a1,
                          const Rat& a2, const Int& base) {
  OrbitDescriptor x;
  x.label = label;
  x.action = Rat(1);
  x.profile.dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(a1)));
  x.profile.dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(a2)));
  x.profile.base_index = base;
  return x;
}

}  // namespace

TEST_CASE("local euler of a non-degenerate iterate is a single sign") {
  auto x = rot_orbit("x", Rat(1, 5), Rat(2, 7), 2);
  for (long k = 1; k <= 20; ++k) {
    if (nu_iter(x.profile, k) != 0) continue;
    Int mu = mu_minus_iter(x.profile, k);
    Int want = (mu % 2 == 0) ? 1 : -1;
    CHECK(local_euler(x, k) == want);
    CHECK(local_dimension(x, k, mu).value() == 1);
    CHECK(local_dimension(x, k, mu + 1).value() == 0);
  }
}

TEST_CASE("degenerate iterates refuse the non-degenerate rule") {
  auto x = rot_orbit("x", Rat(1, 3), Rat(1, 4), 2);
  CHECK(nu_iter(x.profile, 12) > 0);
  CHECK_THROWS_AS(local_euler(x, 12), DegenerateWithoutTable);
  CHECK(!local_dimension(x, 12, Int(0)).has_value());
}

TEST_CASE("euler period covers the nullity pattern") {
  auto x = rot_orbit("x", Rat(1, 3), Rat(1, 4), 2);
  Int T = euler_period(x);
  CHECK(T % 12 == 0);
  auto y = rot_orbit("y", Rat(1, 5), Rat(2, 5), -1);
  CHECK(euler_period(y) % 5 == 0);
}

TEST_CASE("mean euler averages the sign pattern over one period") {
  // irrational angles: no iterate is ever degenerate, so the one-generator
  // rule applies everywhere and the sign pattern has period 2
  OrbitDescriptor x;
  x.label = "x";
  x.action = Rat(1);
  x.profile.dec.blocks.push_back(NormalFormBlock::rot(Angle::irrational(
      parse_decimal("0.31830988618379067153776752674502"),
      parse_decimal("0.00000000000000000001"))));
  x.profile.dec.blocks.push_back(NormalFormBlock::rot(Angle::irrational(
      parse_decimal("0.41421356237309504880168872420969"),
      parse_decimal("0.00000000000000000001"))));
  x.profile.base_index = 3;
  Int T = euler_period(x);
  CHECK(T == 2);
  Rat acc(0);
  for (Int k = 1; k <= T; ++k) acc += Rat(local_euler(x, k));
  acc /= Rat(T);
  CHECK(mean_euler(x) == acc);
  for (Int k = 1; k <= 20; ++k)
    CHECK(local_euler(x, k) == local_euler(x, k + T));
}

TEST_CASE("sdm predicate needs an even integer mean and a peak") {
  OrbitDescriptor z;
  z.label = "z";
  z.action = Rat(1);
  z.profile.dec.blocks.push_back(NormalFormBlock::simple(BlockKind::E_plus));
  z.profile.dec.blocks.push_back(NormalFormBlock::simple(BlockKind::E_plus));
  z.profile.base_index = 2;
  LocalHomologyTable t;
  t.dims[1][4] = 1;
  z.table = t;
  CHECK(mean_index(z.profile).val == 2);   // mu_hat even integer
  CHECK(sdm_predicate(z, 1));              // peak at mu_hat + n - 1 = 4
  CHECK(admissible_iterate(z, 1));

  OrbitDescriptor w = z;
  w.table->dims[1].clear();
  w.table->dims[1][3] = 1;                 // off-peak
  CHECK(!sdm_predicate(w, 1));
}

TEST_CASE("mean identity holds on the shipped fixture and breaks truncated") {
  Configuration cfg = katok_like_n3();
  auto rep = mean_index_identity_check(cfg);
  CHECK(rep.holds);

  Configuration cut = cfg;
  cut.orbits.pop_back();
  auto rep2 = mean_index_identity_check(cut);
  CHECK(!rep2.holds);

  Configuration none = empty_n3();
  auto rep3 = mean_index_identity_check(none);
  CHECK(!rep3.holds);
  CHECK(rep3.residual.val == -chi_plus(3));
}

TEST_CASE("morse check accepts the fixture and pins the empty violation") {
  Configuration cfg = katok_like_n3();
  auto rep = morse_check(cfg, FIXTURE_MORSE_TOP);
  CHECK(rep.ok);

  Configuration cut = cfg;
  cut.orbits.erase(cut.orbits.begin());
  auto rep2 = morse_check(cut, FIXTURE_MORSE_TOP);
  CHECK(!rep2.ok);

  auto rep3 = morse_check(empty_n3(), Int(10));
  CHECK(!rep3.ok);
  REQUIRE(!rep3.violated_degrees.empty());
  CHECK(rep3.violated_degrees.front() == 2);
}

TEST_CASE("morse check rejects a horizon below the ladder floor") {
  CHECK_THROWS_AS(morse_check(empty_n3(), Int(1)), DomainBelowMin);
}

TEST_CASE("replay rejects non-convex input") {
  Configuration cfg;
  cfg.ambient_n = 3;
  auto x = rot_orbit("low", Rat(1, 5), Rat(2, 7), -4);
  cfg.orbits.push_back(x);
  auto v = replay_theorem_1_1(cfg, {});
  CHECK(v.status == VerdictStatus::INPUT_ERROR);
}
