#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rigidity/aut_search.hpp"
#include "rigidity/corpus.hpp"

using namespace rigidity;

TEST_CASE("automorphism groups of the fixture families") {
  CHECK(automorphism_group(gen_family("empty", {4})).order().to_string() == "24");
  CHECK(automorphism_group(gen_family("cycle", {3})).order().to_string() == "3");
  CHECK(automorphism_group(gen_family("eqrel", {2, 2})).order().to_string() == "8");
  CHECK(automorphism_group(gen_family("eqrel", {2, 3})).order().to_string() == "12");
  // |GL(2,3)| = (9-1)(9-3)
  CHECK(automorphism_group(gen_family("vecspace", {3, 2})).order().to_string() ==
        "48");
  CHECK(automorphism_group(gen_family("vecspace", {2, 2})).order().to_string() ==
        "6");
}

TEST_CASE("aut orbits of eqrel(2,3) are the blocks") {
  PermGroup g = automorphism_group(gen_family("eqrel", {2, 3}));
  CHECK(g.orbits() == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});
  CHECK(automorphism_group(gen_family("cycle", {3})).fixed_points().empty());
}

TEST_CASE("brute force oracle") {
  FiniteStructure one;
  one.n = 1;
  auto only = brute_force_automorphisms(one);
  REQUIRE(only.size() == 1);
  CHECK(only[0].is_identity());

  CHECK(brute_force_automorphisms(gen_family("empty", {3})).size() == 6);

  auto rots = brute_force_automorphisms(gen_family("cycle", {4}));
  REQUIRE(rots.size() == 4);
  std::set<std::vector<int>> expect{{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1},
                                    {3, 0, 1, 2}};
  for (const auto &p : rots)
    CHECK(expect.count(p.images()) == 1);

  CHECK_THROWS(brute_force_automorphisms(gen_family("empty", {9})));
}

TEST_CASE("brute force backends agree") {
  for (auto s : {gen_family("cycle", {6}), gen_family("eqrel", {2, 3}),
                 gen_family("empty", {5})}) {
    auto serial = brute_force_automorphisms(s, EnumBackend::serial);
    auto parallel = brute_force_automorphisms(s, EnumBackend::parallel);
    CHECK(serial.size() == parallel.size());
    CHECK(serial == parallel);
    // Output sorted lexicographically by image array.
    for (std::size_t i = 1; i < serial.size(); ++i)
      CHECK(serial[i - 1].images() < serial[i].images());
  }
}

TEST_CASE("search agrees with the oracle across small families") {
  std::vector<FiniteStructure> corpus;
  for (int n = 1; n <= 6; ++n)
    corpus.push_back(gen_family("empty", {n}));
  for (int n = 3; n <= 6; ++n)
    corpus.push_back(gen_family("cycle", {n}));
  for (auto sizes : {std::vector<int>{1, 2}, {2, 2}, {3, 3}, {1, 1, 2}, {2, 4}})
    corpus.push_back(gen_family("eqrel", sizes));
  for (auto sizes : {std::vector<int>{1, 1}, {1, 2, 3}, {2, 2}})
    corpus.push_back(gen_family("atoms", sizes));
  corpus.push_back(gen_family("vecspace", {2, 2}));

  for (const auto &s : corpus) {
    auto brute = brute_force_automorphisms(s);
    PermGroup g = automorphism_group(s);
    CHECK(g.order().to_string() == std::to_string(brute.size()));
    for (const auto &p : brute)
      CHECK(g.contains(p));
  }
}

TEST_CASE("search agrees with the oracle on seeded random structures") {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    FiniteStructure s;
    s.n = 2 + static_cast<int>(rng.below(5));
    std::vector<std::vector<int>> tuples;
    for (int i = 0; i < s.n; ++i)
      for (int j = 0; j < s.n; ++j)
        if (rng.below(10) < 3)
          tuples.push_back({i, j});
    s.add_symbol("Q", 2, std::move(tuples));
    auto brute = brute_force_automorphisms(s);
    PermGroup g = automorphism_group(s);
    CHECK(g.order().to_string() == std::to_string(brute.size()));
    for (const auto &p : brute)
      CHECK(g.contains(p));
  }
}

TEST_CASE("constants are fixed after encoding") {
  FiniteStructure s = gen_family("empty", {5});
  s.named = {1, 3};
  PermGroup g = automorphism_group(encode_constants(s).structure);
  auto fixed = g.fixed_points();
  CHECK(std::find(fixed.begin(), fixed.end(), 1) != fixed.end());
  CHECK(std::find(fixed.begin(), fixed.end(), 3) != fixed.end());
  CHECK(g.order().to_string() == "6"); // S_3 on the other points
}

TEST_CASE("relabeling conjugates the group") {
  Rng rng(5);
  FiniteStructure s = gen_family("eqrel", {2, 3});
  std::vector<int> pi{4, 2, 0, 3, 1};
  FiniteStructure t;
  t.n = s.n;
  std::vector<std::vector<int>> tuples;
  for (const auto &tp : s.interp[0])
    tuples.push_back({pi[tp[0]], pi[tp[1]]});
  t.add_symbol("E", 2, std::move(tuples));
  CHECK(automorphism_group(s).order() == automorphism_group(t).order());
}

TEST_CASE("color refinement") {
  FiniteStructure e = gen_family("empty", {4});
  Coloring c = color_refine(e, uniform_coloring(4));
  CHECK(c.num_colors == 1);

  FiniteStructure cyc = gen_family("cycle", {3});
  CHECK(color_refine(cyc, uniform_coloring(3)).num_colors == 1);

  FiniteStructure eq = gen_family("eqrel", {2, 3});
  Coloring r = color_refine(eq, uniform_coloring(5));
  CHECK(r.num_colors == 2);
  CHECK(r.color[0] == r.color[1]);
  CHECK(r.color[2] == r.color[3]);
  CHECK(r.color[3] == r.color[4]);
  CHECK(r.color[0] != r.color[2]);
}

TEST_CASE("refinement is invariant under automorphisms") {
  FiniteStructure s = gen_family("eqrel", {1, 2, 2});
  Coloring c = color_refine(s, uniform_coloring(s.n));
  for (const auto &p : brute_force_automorphisms(s))
    for (int x = 0; x < s.n; ++x)
      CHECK(c.color[p(x)] == c.color[x]);
}

TEST_CASE("search requires encoded constants") {
  FiniteStructure s = gen_family("empty", {3});
  s.named = {0};
  CHECK_THROWS(automorphism_group(s));
}
