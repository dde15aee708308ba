#include <doctest.h>

#include "oracles.hpp"
#include "rigidity/corpus.hpp"
#include "rigidity/perm_group.hpp"

using namespace rigidity;

namespace {

Perm cyc(int n, std::vector<int> cycle) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i)
    img[i] = i;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    img[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return Perm(img);
}

Perm random_perm(int n, Rng &rng) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i)
    img[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(img[i], img[rng.below(i + 1)]);
  return Perm(img);
}

} // namespace

TEST_CASE("group_from_generators basic orders") {
  PermGroup trivial(3);
  CHECK(trivial.order().is_one());
  CHECK(trivial.contains(Perm(3)));
  CHECK(!trivial.contains(cyc(3, {0, 1})));

  PermGroup swap2(2, {cyc(2, {0, 1})});
  CHECK(swap2.order().to_string() == "2");

  // Transposition and 4-cycle generate the whole symmetric group; the
  // brute-force closure is the oracle.
  std::vector<Perm> gens{cyc(4, {0, 1}), cyc(4, {0, 1, 2, 3})};
  PermGroup s4(4, gens);
  auto closure = oracle::closure(4, gens);
  CHECK(closure.size() == 24);
  CHECK(s4.order().to_string() == std::to_string(closure.size()));
}

TEST_CASE("degree mismatch rejected") {
  CHECK_THROWS(PermGroup(3, {cyc(4, {0, 1})}));
}

TEST_CASE("pointwise stabilizer") {
  std::vector<Perm> gens{cyc(3, {0, 1}), cyc(3, {0, 1, 2})};
  PermGroup s3(3, gens);
  CHECK(s3.order().to_string() == "6");

  PermGroup stab0 = s3.pointwise_stabilizer({0});
  auto expect = oracle::stabilizer(oracle::closure(3, gens), {0});
  CHECK(expect.size() == 2);
  CHECK(stab0.order().to_string() == std::to_string(expect.size()));
  for (const auto &p : expect)
    CHECK(stab0.contains(p));

  CHECK(s3.pointwise_stabilizer({}).order().to_string() == "6");
  PermGroup trivial(4);
  CHECK(trivial.pointwise_stabilizer({1, 2}).order().is_one());
  CHECK_THROWS(s3.pointwise_stabilizer({7}));
}

TEST_CASE("fixed points") {
  PermGroup trivial(4);
  CHECK(trivial.fixed_points() == std::vector<int>{0, 1, 2, 3});
  PermGroup g(3, {cyc(3, {0, 1})});
  CHECK(g.fixed_points() == std::vector<int>{2});
}

TEST_CASE("orbits") {
  PermGroup trivial(3);
  CHECK(trivial.orbits() ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
  PermGroup g(3, {cyc(3, {0, 1})});
  CHECK(g.orbits() == std::vector<std::vector<int>>{{0, 1}, {2}});
}

TEST_CASE("random subgroups at small degree agree with brute-force closure") {
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + static_cast<int>(rng.below(5)); // 3..7
    std::vector<Perm> gens;
    int k = 1 + static_cast<int>(rng.below(2));
    for (int i = 0; i < k; ++i)
      gens.push_back(random_perm(n, rng));
    PermGroup g(n, gens);
    auto closure = oracle::closure(n, gens);
    CHECK(g.order().to_string() == std::to_string(closure.size()));
    for (const auto &p : closure)
      CHECK(g.contains(p));
    // Non-members rejected.
    for (int i = 0; i < 5; ++i) {
      Perm p = random_perm(n, rng);
      bool in_closure = false;
      for (const auto &q : closure)
        if (q == p)
          in_closure = true;
      CHECK(g.contains(p) == in_closure);
    }
    // Stabilizer order divides group order.
    std::vector<int> a{0};
    auto view = g.pointwise_stabilizer_view(a);
    CHECK(g.order().divisible_by(view.order));
    // Orbit sizes sum to n and divide the order via orbit-stabilizer.
    std::size_t total = 0;
    for (const auto &orbit : g.orbits()) {
      total += orbit.size();
      auto stab = g.pointwise_stabilizer_view({orbit.front()});
      CHECK(BigUint(orbit.size()) * stab.order == g.order());
    }
    CHECK(total == static_cast<std::size_t>(n));
  }
}

TEST_CASE("iterated pointwise stabilizers compose") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 5 + static_cast<int>(rng.below(3));
    std::vector<Perm> gens{random_perm(n, rng), random_perm(n, rng)};
    PermGroup g(n, gens);
    std::vector<int> a{0, 2}, b{1};
    PermGroup joint = g.pointwise_stabilizer({0, 1, 2});
    PermGroup nested = g.pointwise_stabilizer(a).pointwise_stabilizer(b);
    CHECK(joint.order() == nested.order());
    for (const auto &p : oracle::closure(n, nested.generators()))
      CHECK(joint.contains(p));
  }
}
