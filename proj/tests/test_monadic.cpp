#include <doctest.h>

#include "rigidity/json_io.hpp"
#include "rigidity/monadic.hpp"

using namespace rigidity;

namespace {

const ExtNat omega = ExtNat::infinity();

MonadicProfile classes(std::vector<AtomClass> cs) {
  MonadicProfile p;
  p.classes = std::move(cs);
  return p;
}

} // namespace

TEST_CASE("named-family profiles reproduce the published degree patterns") {
  for (std::uint64_t n = 1; n <= 3; ++n) {
    // n atoms, each infinitely named plus one unnamed element.
    Tetrad t = profile_tetrad(classes({{omega, ExtNat(1), ExtNat(n), true}}));
    CHECK(t.e_sem == ExtNat(0));
    CHECK(t.e_synt == ExtNat(n));
    CHECK(t.a_sem == ExtNat(0));
    CHECK(t.a_synt.is_infinite());
    CHECK(cor25_case(t) == 3);
  }
  for (std::uint64_t m = 1; m <= 3; ++m)
    for (std::uint64_t n = 1; n <= 3; ++n) {
      MonadicProfile p = classes({{omega, ExtNat(m + 1), ExtNat(1), true}});
      if (n > 1)
        p.classes.push_back({omega, ExtNat(1), ExtNat(n - 1), true});
      Tetrad t = profile_tetrad(p);
      CHECK(t.e_sem == ExtNat(m));
      CHECK(t.e_synt == ExtNat(m + n));
      CHECK(t.a_sem.is_infinite());
      CHECK(t.a_synt.is_infinite());
      CHECK(cor25_case(t) == 4);
    }
}

TEST_CASE("finite profiles collapse and match their truncations") {
  Tetrad t = profile_tetrad(classes({{ExtNat(0), ExtNat(3), ExtNat(1), true}}));
  CHECK(t.to_string() == "(2,2,2,2)");
  FiniteStructure s = truncate(classes({{ExtNat(0), ExtNat(3), ExtNat(1), true}}), {});
  CHECK(tetrad(s).to_string() == "(2,2,2,2)");

  std::vector<MonadicProfile> finite_profiles{
      classes({{ExtNat(1), ExtNat(0), ExtNat(2), true}}),
      classes({{ExtNat(1), ExtNat(2), ExtNat(2), true}}),
      classes({{ExtNat(2), ExtNat(0), ExtNat(1), true},
               {ExtNat(0), ExtNat(2), ExtNat(1), true},
               {ExtNat(1), ExtNat(1), ExtNat(1), true}}),
      classes({{ExtNat(0), ExtNat(1), ExtNat(3), true}}),
  };
  for (const auto &p : finite_profiles) {
    FiniteStructure fs = truncate(p, {});
    Tetrad tp = profile_tetrad(p);
    CHECK(tp.to_string() == tetrad(fs).to_string());
    ExtNat ip = profile_ind(p);
    CHECK(ip == ExtNat(rigidity_index(fs, {})));
  }
}

TEST_CASE("profile index") {
  CHECK(profile_ind(classes({{ExtNat(0), omega, ExtNat(3), true}})) == ExtNat(0));
  for (std::uint64_t n = 1; n <= 4; ++n)
    CHECK(profile_ind(classes({{ExtNat(0), ExtNat(n), omega, true}})) == ExtNat(n));
  MonadicProfile flag;
  flag.unbounded_finite_family = true;
  CHECK(profile_ind(flag).is_infinite());
  CHECK(profile_ind(classes({{omega, ExtNat(0), omega, true}})) == ExtNat(1));
  // Constants contribute 1 even next to infinite unnamed parts.
  CHECK(profile_ind(classes({{ExtNat(2), omega, ExtNat(1), true}})) == ExtNat(1));
}

TEST_CASE("profile tetrad rejects the unbounded family") {
  MonadicProfile flag;
  flag.unbounded_finite_family = true;
  CHECK_THROWS(profile_tetrad(flag));
}

TEST_CASE("realize_pair round-trips over the grid") {
  std::vector<ExtNat> grid{ExtNat(0), ExtNat(1), ExtNat(2), ExtNat(3),
                           ExtNat(4), ExtNat(5), omega};
  for (ExtNat mu : grid)
    for (ExtNat nu : grid) {
      if (!(mu <= nu))
        continue;
      MonadicProfile p = realize_pair(mu, nu);
      Tetrad t = profile_tetrad(p);
      CHECK(t.e_sem == mu);
      CHECK(t.e_synt == nu);
      CHECK(cor25_case(t) >= 1);
    }
  CHECK_THROWS(realize_pair(ExtNat(3), ExtNat(1)));
  // Spot shapes from the construction.
  MonadicProfile p00 = realize_pair(ExtNat(0), ExtNat(0));
  REQUIRE(p00.classes.size() == 1);
  CHECK(p00.classes[0].c == ExtNat(1));
  CHECK(p00.classes[0].u == ExtNat(0));
  MonadicProfile p25 = realize_pair(ExtNat(2), ExtNat(5));
  CHECK(profile_tetrad(p25).to_string() == "(2,5,INF,INF)");
  CHECK(profile_tetrad(realize_pair(ExtNat(0), omega)).to_string() ==
        "(0,INF,0,INF)");
}

TEST_CASE("truncation substitutes omegas and reports divergence") {
  // Collapsing infinitely many constants to 5 makes the last element
  // definable, so the synt degree drops from 1 to 0.
  MonadicProfile p = classes({{omega, ExtNat(1), ExtNat(1), true}});
  CHECK(profile_tetrad(p).e_synt == ExtNat(1));
  TruncationCaps caps;
  caps.c = 5;
  FiniteStructure fs = truncate(p, caps);
  CHECK(fs.n == 6);
  Tetrad t = tetrad(fs);
  CHECK(t.e_sem == ExtNat(0));
  CHECK(t.e_synt == ExtNat(0));

  CHECK_THROWS(truncate(p, {})); // missing substitute for c
  MonadicProfile flag;
  flag.unbounded_finite_family = true;
  CHECK_THROWS(truncate(flag, {}));
}

TEST_CASE("sem degrees survive truncation when unnamed parts are finite") {
  std::vector<MonadicProfile> ps{
      classes({{omega, ExtNat(3), ExtNat(2), true},
               {ExtNat(1), ExtNat(1), ExtNat(1), true}}),
      classes({{omega, ExtNat(1), ExtNat(3), true}}),
      classes({{omega, ExtNat(2), ExtNat(1), true},
               {omega, ExtNat(0), ExtNat(1), true},
               {ExtNat(0), ExtNat(2), ExtNat(2), true}}),
      classes({{omega, ExtNat(1), omega, true}}),
  };
  for (const auto &p : ps)
    for (std::uint64_t csub : {1, 2, 4}) {
      TruncationCaps caps;
      caps.c = csub;
      caps.mult = 3;
      FiniteStructure fs = truncate(p, caps);
      CHECK(profile_tetrad(p).e_sem == tetrad(fs).e_sem);
    }
}

TEST_CASE("profile validation") {
  CHECK_THROWS(validate_profile(MonadicProfile{}));
  CHECK_THROWS(profile_tetrad(classes({{ExtNat(1), ExtNat(0), ExtNat(0), true}})));
  CHECK_THROWS(profile_tetrad(classes({{ExtNat(0), ExtNat(0), ExtNat(1), true}})));
  // definable=false needs an infinite profile.
  CHECK_THROWS(profile_tetrad(classes({{ExtNat(0), ExtNat(2), ExtNat(1), false}})));
  // ... and is honored when the profile is infinite.
  Tetrad t = profile_tetrad(classes({{ExtNat(0), ExtNat(1), ExtNat(1), false},
                                     {ExtNat(0), omega, ExtNat(1), true}}));
  CHECK(t.e_synt.is_infinite());
}

TEST_CASE("profile json round trip") {
  MonadicProfile p = classes({{omega, ExtNat(2), ExtNat(3), false}});
  p.unbounded_finite_family = false;
  auto j = profile_to_json(p);
  CHECK(j.dump() ==
        R"({"classes":[{"c":"omega","u":2,"mult":3,"definable":false}],"unbounded_finite_family":false})");
  MonadicProfile back = profile_from_json(j);
  CHECK(profile_to_json(back) == j);
  CHECK_THROWS(profile_from_json(nlohmann::json::parse(R"({"classes":[{"c":-1,"u":0}]})")));
}

TEST_CASE("cor25 shapes cover exactly the admissible forms") {
  CHECK(cor25_case(Tetrad{ExtNat(0), ExtNat(0), ExtNat(0), ExtNat(0)}) == 1);
  CHECK(cor25_case(Tetrad{ExtNat(2), ExtNat(2), ExtNat(4), ExtNat(4)}) == 2);
  CHECK(cor25_case(Tetrad{ExtNat(0), ExtNat(3), ExtNat(0), omega}) == 3);
  CHECK(cor25_case(Tetrad{ExtNat(1), omega, omega, omega}) == 4);
  CHECK(cor25_case(Tetrad{ExtNat(1), ExtNat(2), ExtNat(3), ExtNat(4)}) == 0);
}
