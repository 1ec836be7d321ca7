#include <random>

#include "doctest.h"
#include "sympindex/errors.hpp"
#include "sympindex/index_jump.hpp"

using namespace sympindex;

namespace {

/* Random all-rotation rational profiles with positive mean index. */
std::vector<IndexProfile> random_collection(std::mt19937& rng, int q_orbits,
                                            int d_max) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  std::vector<IndexProfile> ps;
  while (static_cast<int>(ps.size()) < q_orbits) {
    IndexProfile p;
    int d = pick(1, d_max);
    for (int j = 0; j < d; ++j) {
      int den = pick(3, 8);
      Rat a(pick(1, den - 1), den);
      a.canonicalize();
      if (a == Rat(1, 2)) a = Rat(1, den);
      p.dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(a)));
    }
    p.base_index = pick(1, 5);
    if (mean_index(p).val <= 0) continue;
    ps.push_back(std::move(p));
  }
  return ps;
}

SearchConfig quick_config() {
  SearchConfig sc;
  sc.n_max = 200000;
  sc.want = 1;
  sc.threads = 2;
  return sc;
}

}  // namespace

TEST_CASE("found tuples pass every identity") {
  std::mt19937 rng(707);
  for (int t = 0; t < 12; ++t) {
    auto ps = random_collection(rng, 1 + (t % 3), 3);
    std::vector<JumpTuple> ts;
    try {
      ts = find_tuples(ps, quick_config());
    } catch (const NoTupleFound&) {
      continue;  // small ceiling; the acceptance run uses the full one
    }
    for (const auto& tu : ts) {
      IdentityReport rep = verify_tuple(ps, tu, Rat(1, 40));
      INFO("N = " << tu.N.get_str());
      CHECK(rep.ok());
      for (std::size_t i = 0; i < ps.size(); ++i)
        CHECK(rep.per_profile[i].delta_recomputed == tu.delta_list[i]);
    }
  }
}

TEST_CASE("scan is deterministic across thread counts") {
  std::mt19937 rng(709);
  auto ps = random_collection(rng, 2, 2);
  SearchConfig one = quick_config();
  one.threads = 1;
  one.want = 3;
  SearchConfig four = quick_config();
  four.threads = 4;
  four.want = 3;
  std::vector<JumpTuple> a, b;
  try {
    a = find_tuples(ps, one);
    b = find_tuples(ps, four);
  } catch (const NoTupleFound&) {
    return;
  }
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].N == b[i].N);
    CHECK(a[i].m == b[i].m);
    CHECK(a[i].chi == b[i].chi);
    CHECK(a[i].delta_list == b[i].delta_list);
  }
}

TEST_CASE("tuples come out in increasing N and respect m0") {
  std::mt19937 rng(711);
  auto ps = random_collection(rng, 1, 2);
  SearchConfig sc = quick_config();
  sc.want = 4;
  sc.m0 = 3;
  std::vector<JumpTuple> ts;
  try {
    ts = find_tuples(ps, sc);
  } catch (const NoTupleFound&) {
    return;
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    CHECK(ts[i].N % 3 == 0);
    if (i) CHECK(ts[i - 1].N < ts[i].N);
  }
}

TEST_CASE("symmetric tuple complements the window pattern") {
  std::mt19937 rng(713);
  for (int t = 0; t < 8; ++t) {
    auto ps = random_collection(rng, 1 + (t % 2), 2);
    SearchConfig sc = quick_config();
    std::vector<JumpTuple> ts;
    try {
      ts = find_tuples(ps, sc);
    } catch (const NoTupleFound&) {
      continue;
    }
    JumpTuple t2;
    try {
      t2 = symmetric_tuple(ps, ts[0], sc);
    } catch (const NoTupleFound&) {
      continue;
    }
    REQUIRE(t2.delta_list.size() == ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
      CHECK(ts[0].delta_list[i] + t2.delta_list[i] == C_of(ps[i].dec));
    CHECK(verify_tuple(ps, t2, sc.delta).ok());
  }
}

TEST_CASE("delta-restricted search honors its targets") {
  IndexProfile p;
  p.dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(Rat(1, 3))));
  p.dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(Rat(1, 4))));
  p.base_index = 3;
  SearchConfig sc = quick_config();
  for (Int want : {Int(0), Int(2)}) {
    std::vector<JumpTuple> ts;
    try {
      ts = find_tuples_with_delta({p}, sc, {want});
    } catch (const NoTupleFound&) {
      continue;
    }
    CHECK(ts[0].delta_list[0] == want);
    CHECK(verify_tuple({p}, ts[0], sc.delta).ok());
  }
}

TEST_CASE("window classification splits the circle correctly") {
  // windows live on the doubled coordinate {2 m a}
  // a = 1/5, m = 1: {2/5} sits between the delta = 1/4 windows
  auto pt = CirclePoint::at(Angle::rational(Rat(1, 5)));
  CHECK(classify_window(pt, 1, Rat(1, 4)) == WindowClass::Outside);
  // a = 1/10: {1/5} < 1/4, low window
  CHECK(classify_window(CirclePoint::at(Angle::rational(Rat(1, 10))), 1,
                        Rat(1, 4)) == WindowClass::Low);
  // a = 2/5: {4/5} > 3/4, high window
  CHECK(classify_window(CirclePoint::at(Angle::rational(Rat(2, 5))), 1,
                        Rat(1, 4)) == WindowClass::High);
  // resonance: 2 m a integral
  CHECK(classify_window(CirclePoint::at(Angle::rational(Rat(1, 5))), 5,
                        Rat(1, 4)) == WindowClass::AtZero);
  // eigenvalue -1 lands at zero every even iterate
  CHECK(classify_window(CirclePoint::minus_one(), 2, Rat(1, 4)) ==
        WindowClass::AtZero);
}

TEST_CASE("search config validation") {
  SearchConfig sc;
  sc.epsilon = Rat(0);
  CHECK_THROWS_AS(sc.validate(), InputError);
  sc = SearchConfig{};
  sc.n_max = 0;
  CHECK_THROWS_AS(sc.validate(), InputError);
  sc = SearchConfig{};
  sc.want = 0;
  CHECK_THROWS_AS(sc.validate(), InputError);
}

TEST_CASE("exhausted scans throw with a near-miss message") {
  IndexProfile p;
  p.dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(Rat(1, 3))));
  p.base_index = 1;
  SearchConfig sc;
  sc.n_max = 2;  // nothing fits this low
  sc.epsilon = Rat(1, 1000);
  sc.delta = Rat(1, 2000);
  CHECK_THROWS_AS(find_tuples({p}, sc), NoTupleFound);
}
