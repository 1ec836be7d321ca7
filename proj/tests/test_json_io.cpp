#include "doctest.h"
#include "sympindex/errors.hpp"
#include "sympindex/fixtures.hpp"
#include "sympindex/json_io.hpp"

using namespace sympindex;

namespace {

NormalFormDecomposition sample_dec() {
  NormalFormDecomposition dec;
  dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(Rat(2, 5))));
  dec.blocks.push_back(
      NormalFormBlock::rot(Angle::irrational("0.31830988618", "0.0000001")));
  dec.blocks.push_back(NormalFormBlock::simple(BlockKind::F_plus));
  dec.blocks.push_back(NormalFormBlock::hyp(2));
  dec.blocks.push_back(
      NormalFormBlock::n2(BlockKind::N2Star, Angle::rational(Rat(1, 3))));
  return dec;
}

}  // namespace

TEST_CASE("decomposition round-trips byte-identically") {
  auto dec = sample_dec();
  std::string one = decomposition_to_json(dec);
  auto back = decomposition_from_json(one);
  CHECK(back.equivalent(dec));
  CHECK(decomposition_to_json(back) == one);
}

TEST_CASE("profile round-trips with its base index") {
  IndexProfile p{sample_dec(), Int(-2)};
  std::string s = profile_to_json(p);
  IndexProfile q = profile_from_json(s);
  CHECK(q.base_index == -2);
  CHECK(q.dec.equivalent(p.dec));
  CHECK(profile_to_json(q) == s);
}

TEST_CASE("tuple round-trips and rebinds") {
  JumpTuple t;
  t.N = 123456;
  t.m = {Int(10), Int(20)};
  t.chi = {0, 1};
  t.delta_list = {Int(1), Int(0)};
  t.epsilon = Rat(1, 20);
  std::string s = tuple_to_json(t);
  JumpTuple u = tuples_from_json("[" + s + "]").at(0);
  CHECK(u.N == t.N);
  CHECK(u.m == t.m);
  CHECK(u.chi == t.chi);
  CHECK(u.delta_list == t.delta_list);
  CHECK(u.epsilon == t.epsilon);
  CHECK(tuple_to_json(u) == s);
}

TEST_CASE("configuration round-trips including homology tables") {
  Configuration cfg;
  cfg.ambient_n = 3;
  OrbitDescriptor x;
  x.label = "a";
  x.action = parse_decimal("1.25");
  x.profile.dec.blocks.push_back(
      NormalFormBlock::simple(BlockKind::E_plus));
  x.profile.dec.blocks.push_back(
      NormalFormBlock::simple(BlockKind::E_plus));
  x.profile.base_index = 2;
  LocalHomologyTable tab;
  tab.dims[1][4] = 1;
  tab.dims[2][6] = 2;
  x.table = tab;
  cfg.orbits.push_back(x);
  std::string s = config_to_json(cfg);
  Configuration back = config_from_json(s);
  CHECK(back.ambient_n == 3);
  REQUIRE(back.orbits.size() == 1);
  CHECK(back.orbits[0].label == "a");
  CHECK(back.orbits[0].action == Rat(5, 4));
  REQUIRE(back.orbits[0].table.has_value());
  CHECK(back.orbits[0].table->dims.at(1).at(4) == 1);
  CHECK(back.orbits[0].table->dims.at(2).at(6) == 2);
  CHECK(config_to_json(back) == s);
}

TEST_CASE("fixture configurations survive the round trip") {
  for (const auto& f : builtin_fixtures()) {
    std::string s = config_to_json(f.cfg);
    Configuration back = config_from_json(s);
    CHECK(config_to_json(back) == s);
    CHECK(back.orbits.size() == f.cfg.orbits.size());
  }
}

TEST_CASE("legacy block name is accepted on input") {
  std::string doc = R"({
  "d": 1,
  "blocks": [
    {
      "kind": "Hyp2k",
      "k": 1
    }
  ]
})";
  auto dec = decomposition_from_json(doc);
  CHECK(dec.h() == 1);
  // canonical writer emits the short name
  CHECK(decomposition_to_json(dec).find("\"Hyp\"") != std::string::npos);
}

TEST_CASE("malformed documents raise input errors") {
  CHECK_THROWS_AS(decomposition_from_json("{"), InputError);
  CHECK_THROWS_AS(decomposition_from_json("{\"d\": 1, \"blocks\": []}"),
                  InputError);
  CHECK_THROWS_AS(config_from_json("{\"n\": 3}"), InputError);
  CHECK_THROWS_AS(profile_from_json("{\"base_index\": 1}"), InputError);
}

TEST_CASE("matrix documents parse into exact entries") {
  std::string doc = R"({
  "d": 1,
  "entries": [
    ["0", "-1"],
    ["1", "0"]
  ]
})";
  SymplecticMatrix M = matrix_from_json(doc);
  CHECK(M.M.at(0, 1) == Rat(-1));
  CHECK(M.M.at(1, 0) == Rat(1));
  CHECK(matrix_from_json(matrix_to_json(M)).M.at(0, 1) == Rat(-1));
}
