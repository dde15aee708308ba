#include <doctest.h>

#include <map>
#include <set>

#include "rigidity/harness.hpp"
#include "rigidity/json_io.hpp"

using namespace rigidity;

namespace {

// Trimmed corpus so the unit suite stays fast; the full default corpus runs
// in the acceptance binary.
Corpus small_corpus(std::uint64_t seed) {
  Corpus full = default_corpus(seed);
  Corpus c;
  c.seed = seed;
  std::vector<std::string> keep{
      "empty(1)", "empty(2)", "empty(3)",  "cycle(3)",     "cycle(4)",
      "eqrel(2)", "eqrel(2,1)", "eqrel(2,2)", "atoms(1)",   "atoms(1,1)",
      "atoms(1,1,1)", "atoms(2,1)", "vecspace(2,2)", "rand#0", "rand#1",
      "rand#2"};
  for (const auto &name : keep)
    for (const auto &ns : full.structures)
      if (ns.name == name)
        c.structures.push_back(ns);
  auto idx = [&](const std::string &name) {
    for (std::size_t i = 0; i < c.structures.size(); ++i)
      if (c.structures[i].name == name)
        return static_cast<int>(i);
    throw std::logic_error("missing " + name);
  };
  for (auto [a, b] : std::vector<std::pair<const char *, const char *>>{
           {"empty(1)", "empty(1)"},
           {"empty(2)", "empty(2)"},
           {"cycle(3)", "empty(1)"},
           {"empty(2)", "cycle(3)"},
           {"eqrel(2,1)", "atoms(1,1)"},
           {"empty(3)", "eqrel(2,2)"},
           {"rand#0", "rand#1"}})
    c.union_pairs.push_back({idx(a), idx(b)});
  for (auto [a, b] : std::vector<std::pair<const char *, const char *>>{
           {"empty(2)", "empty(2)"},
           {"empty(2)", "cycle(3)"},
           {"empty(1)", "cycle(3)"},
           {"empty(1)", "eqrel(2,2)"},
           {"empty(1)", "empty(3)"},
           {"empty(2)", "atoms(1,1)"},
           {"empty(3)", "atoms(1)"},
           {"cycle(4)", "atoms(1,1,1)"},
           {"cycle(3)", "empty(2)"}})
    c.comp_pairs.push_back({idx(a), idx(b)});
  c.profiles = full.profiles;
  return c;
}

const CheckReport *find_report(const std::vector<CheckReport> &reports,
                               const std::string &claim,
                               const std::string &instance_substr) {
  for (const auto &r : reports)
    if (r.claim == claim && r.instance.find(instance_substr) != std::string::npos)
      return &r;
  return nullptr;
}

} // namespace

TEST_CASE("enumerate_unary lists cell-size vectors") {
  auto one = enumerate_unary(2, 1);
  REQUIRE(one.size() == 5); // (1,0),(0,1),(2,0),(1,1),(0,2)
  std::set<std::pair<std::size_t, int>> seen;
  for (const auto &s : one) {
    CHECK(validate(s).empty());
    seen.insert({s.interp[0].size(), s.n});
  }
  CHECK(seen == std::set<std::pair<std::size_t, int>>{
                    {0, 1}, {1, 1}, {0, 2}, {1, 2}, {2, 2}});
  CHECK(enumerate_unary(1, 2).size() == 4); // one element in any of 4 cells
  CHECK_THROWS(enumerate_unary(11, 1));
  CHECK_THROWS(enumerate_unary(4, 5));
}

TEST_CASE("default corpus is deterministic and within caps") {
  Corpus a = default_corpus(1);
  Corpus b = default_corpus(1);
  REQUIRE(a.structures.size() == b.structures.size());
  CHECK(a.structures.size() >= 100);
  for (std::size_t i = 0; i < a.structures.size(); ++i) {
    CHECK(a.structures[i].name == b.structures[i].name);
    CHECK(structure_to_json(a.structures[i].s) ==
          structure_to_json(b.structures[i].s));
    CHECK(validate(a.structures[i].s).empty());
  }
  CHECK(a.union_pairs.size() >= 100);
  CHECK(a.union_pairs == b.union_pairs);
  CHECK(a.comp_pairs == b.comp_pairs);
  for (auto [i, j] : a.comp_pairs)
    CHECK(a.structures[i].s.n * a.structures[j].s.n <= 16);
  Corpus other = default_corpus(2);
  bool differs = false;
  for (std::size_t i = 0; i < a.structures.size(); ++i)
    if (structure_to_json(a.structures[i].s) !=
        structure_to_json(other.structures[i].s))
      differs = true;
  CHECK(differs);
}

TEST_CASE("suite passes on the trimmed corpus and hits the published instances") {
  Corpus corpus = small_corpus(1);
  auto reports = run_suite({"all"}, corpus);
  SuiteSummary sum = summarize(reports);
  CHECK(sum.fail == 0);
  CHECK(sum.pass > 0);

  const CheckReport *dis1 =
      find_report(reports, "THM_DIS_1", "dunion(empty(2),empty(2)) s=sem");
  REQUIRE(dis1);
  CHECK(dis1->expected == nlohmann::ordered_json(2));
  CHECK(dis1->computed == nlohmann::ordered_json(2));
  CHECK(dis1->verdict == Verdict::pass);

  const CheckReport *wreath =
      find_report(reports, "PROP_WREATH", "compose(empty(2),empty(2))");
  REQUIRE(wreath);
  CHECK(wreath->expected == nlohmann::ordered_json("8"));
  CHECK(wreath->verdict == Verdict::pass);

  const CheckReport *b =
      find_report(reports, "THM_COMP3_b", "compose(empty(2),empty(2)) s=sem");
  REQUIRE(b);
  CHECK(b->expected == nlohmann::ordered_json(3));
  CHECK(b->verdict == Verdict::pass);

  // Case c needs an infinite outer factor: never applicable here.
  for (const auto &r : reports)
    if (r.claim == "THM_COMP3_c")
      CHECK(r.verdict == Verdict::not_applicable);

  // The suspected-value suites surface as findings, not failures.
  const CheckReport *nprime = find_report(reports, "FINDING_EX28_NPRIME", "");
  REQUIRE(nprime);
  CHECK(nprime->verdict == Verdict::finding);
  const CheckReport *naive =
      find_report(reports, "FINDING_DIS3_NAIVE", "dunion(cycle(3),empty(1))");
  REQUIRE(naive);
  CHECK(naive->verdict == Verdict::finding);
  CHECK(naive->expected == nlohmann::ordered_json(3));
  CHECK(naive->computed == nlohmann::ordered_json(2));
  const CheckReport *shared = find_report(reports, "FINDING_WREATH_SHARED", "");
  REQUIRE(shared);
  CHECK(shared->verdict == Verdict::finding);
  CHECK(shared->computed == nlohmann::ordered_json("72"));

  // Additivity holds on finite structures; it reports but must agree.
  for (const auto &r : reports)
    if (r.claim == "PROP_DEGA_4")
      CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("reports are canonically ordered and byte-deterministic") {
  Corpus corpus = small_corpus(7);
  auto r1 = run_suite({"all"}, corpus);
  auto r2 = run_suite({"all"}, corpus);
  auto j1 = report_json(corpus, r1);
  auto j2 = report_json(corpus, r2);
  CHECK(j1.dump(2) == j2.dump(2));
  for (std::size_t i = 1; i < r1.size(); ++i)
    CHECK(std::tie(r1[i - 1].claim, r1[i - 1].instance) <=
          std::tie(r1[i].claim, r1[i].instance));
  CHECK(j1.contains("seed"));
  CHECK(j1["summary"].contains("pass"));
  CHECK(j1["summary"].contains("fail"));
  CHECK(j1["summary"].contains("na"));
  REQUIRE(!j1["reports"].empty());
  for (const char *field : {"claim", "quote", "instance", "expected", "computed",
                            "verdict"})
    CHECK(j1["reports"][0].contains(field));
}

TEST_CASE("every gating claim has three applicable instances in the default corpus") {
  Corpus corpus = default_corpus(1);
  auto reports = run_suite({"all"}, corpus);
  CHECK(summarize(reports).fail == 0);
  std::map<std::string, int> applicable;
  for (const auto &r : reports)
    if (r.verdict != Verdict::not_applicable)
      ++applicable[r.claim];
  for (const auto &claim : all_claims()) {
    if (claim == "THM_COMP3_c") {
      // Side condition needs an infinite outer factor; check the discipline
      // instead: it must still be reported, always as not-applicable.
      bool any = false;
      for (const auto &r : reports)
        if (r.claim == claim) {
          any = true;
          CHECK(r.verdict == Verdict::not_applicable);
        }
      CHECK(any);
      continue;
    }
    if (claim.rfind("FINDING_", 0) == 0)
      continue; // extra surfacing checks, not part of the gating list
    CHECK_MESSAGE(applicable[claim] >= 3, claim);
  }
  int dis1 = 0;
  for (const auto &r : reports)
    if (r.claim == "THM_DIS_1")
      ++dis1;
  CHECK(dis1 >= 200); // two modes per pair, >= 100 pairs
}

TEST_CASE("claim selection is validated") {
  Corpus corpus = small_corpus(1);
  CHECK_THROWS(run_suite({"NO_SUCH_CLAIM"}, corpus));
  auto reports = run_suite({"INEQ_2"}, corpus);
  for (const auto &r : reports)
    CHECK(r.claim == "INEQ_2");
  CHECK(!reports.empty());
}
