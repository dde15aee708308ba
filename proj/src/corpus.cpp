#include "rigidity/corpus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rigidity {

namespace {

std::string join(const std::vector<int> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

// Integer partitions of total, parts descending, lexicographically.
void partitions_of(int total, int max_part, std::vector<int> &cur,
                   std::vector<std::vector<int>> &out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(total, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_of(total - part, part, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions_up_to(int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (int t = 1; t <= max_total; ++t)
    partitions_of(t, t, cur, out);
  return out;
}

FiniteStructure random_structure(Rng &rng) {
  FiniteStructure s;
  s.n = 2 + static_cast<int>(rng.below(5)); // 2..6
  int rels = 1 + static_cast<int>(rng.below(2));
  for (int r = 0; r < rels; ++r) {
    std::vector<std::vector<int>> tuples;
    for (int i = 0; i < s.n; ++i)
      for (int j = 0; j < s.n; ++j)
        if (rng.below(10) < 3)
          tuples.push_back({i, j});
    s.add_symbol("Q" + std::to_string(r), 2, std::move(tuples));
  }
  return s;
}

} // namespace

Corpus default_corpus(std::uint64_t seed) {
  Corpus corpus;
  corpus.seed = seed;
  auto add = [&](std::string name, FiniteStructure s) {
    corpus.structures.push_back({std::move(name), std::move(s)});
    return static_cast<int>(corpus.structures.size()) - 1;
  };

  for (int n = 1; n <= 5; ++n)
    add("empty(" + std::to_string(n) + ")", gen_family("empty", {n}));
  for (int n = 3; n <= 6; ++n)
    add("cycle(" + std::to_string(n) + ")", gen_family("cycle", {n}));
  for (const auto &p : partitions_up_to(6))
    add("eqrel(" + join(p) + ")", gen_family("eqrel", p));
  for (const auto &p : partitions_up_to(6))
    add("atoms(" + join(p) + ")", gen_family("atoms", p));
  for (auto [q, d] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}})
    add("vecspace(" + std::to_string(q) + "," + std::to_string(d) + ")",
        gen_family("vecspace", {q, d}));

  Rng rng(seed);
  for (int i = 0; i < 50; ++i)
    add("rand#" + std::to_string(i), random_structure(rng));

  auto index_of = [&](const std::string &name) {
    for (std::size_t i = 0; i < corpus.structures.size(); ++i)
      if (corpus.structures[i].name == name)
        return static_cast<int>(i);
    throw std::logic_error("corpus: missing " + name);
  };

  // Pairs called out by the checks, then a deterministic fill.
  std::set<std::pair<int, int>> upairs;
  auto add_union = [&](int i, int j) {
    if (upairs.insert({i, j}).second)
      corpus.union_pairs.push_back({i, j});
  };
  add_union(index_of("empty(1)"), index_of("empty(1)"));
  add_union(index_of("empty(2)"), index_of("empty(2)"));
  add_union(index_of("cycle(3)"), index_of("empty(1)"));
  add_union(index_of("empty(1)"), index_of("cycle(5)"));
  add_union(index_of("atoms(1,1)"), index_of("empty(1)"));
  for (std::size_t i = 0;
       i < corpus.structures.size() && corpus.union_pairs.size() < 130; ++i)
    for (std::size_t j = i;
         j < corpus.structures.size() && corpus.union_pairs.size() < 130; ++j) {
      if (corpus.structures[i].s.n + corpus.structures[j].s.n > 10)
        continue;
      add_union(static_cast<int>(i), static_cast<int>(j));
    }

  std::set<std::pair<int, int>> cpairs;
  auto add_comp = [&](int i, int j) {
    if (cpairs.insert({i, j}).second)
      corpus.comp_pairs.push_back({i, j});
  };
  add_comp(index_of("empty(2)"), index_of("empty(2)"));
  add_comp(index_of("empty(2)"), index_of("cycle(3)"));
  for (const char *n : {"empty(2)", "empty(3)", "cycle(3)", "eqrel(2,2)"})
    add_comp(index_of("empty(1)"), index_of(n));
  add_comp(index_of("empty(2)"), index_of("atoms(1,1)"));
  add_comp(index_of("empty(3)"), index_of("atoms(1)"));
  add_comp(index_of("cycle(4)"), index_of("atoms(1,1,1)"));
  add_comp(index_of("cycle(3)"), index_of("empty(2)"));
  for (std::size_t i = 0;
       i < corpus.structures.size() && corpus.comp_pairs.size() < 90; ++i)
    for (std::size_t j = 0;
         j < corpus.structures.size() && corpus.comp_pairs.size() < 90; ++j) {
      if (corpus.structures[i].s.n * corpus.structures[j].s.n > 16)
        continue;
      add_comp(static_cast<int>(i), static_cast<int>(j));
    }

  const ExtNat omega = ExtNat::infinity();
  auto add_profile = [&](std::string name, MonadicProfile p) {
    corpus.profiles.push_back({std::move(name), std::move(p)});
  };
  for (int n = 1; n <= 3; ++n) {
    MonadicProfile p;
    p.classes.push_back({omega, ExtNat(1), ExtNat(std::uint64_t(n)), true});
    add_profile("N(" + std::to_string(n) + ")", std::move(p));
  }
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      MonadicProfile p;
      p.classes.push_back({omega, ExtNat(std::uint64_t(m) + 1), ExtNat(1), true});
      if (n > 1)
        p.classes.push_back({omega, ExtNat(1), ExtNat(std::uint64_t(n) - 1), true});
      add_profile("N_{" + std::to_string(m) + "," + std::to_string(n) + "}",
                  std::move(p));
    }
  add_profile("allnamed", MonadicProfile{{{omega, ExtNat(0), omega, true}}, false});
  add_profile("fin(0,3)", MonadicProfile{{{ExtNat(0), ExtNat(3), ExtNat(1), true}}, false});
  add_profile("fin(1,2)x2", MonadicProfile{{{ExtNat(1), ExtNat(2), ExtNat(2), true}}, false});
  add_profile("fin-mixed",
              MonadicProfile{{{ExtNat(2), ExtNat(0), ExtNat(1), true},
                              {ExtNat(0), ExtNat(2), ExtNat(1), true},
                              {ExtNat(1), ExtNat(1), ExtNat(1), true}},
                             false});
  add_profile("inf-sem", MonadicProfile{{{ExtNat(0), omega, ExtNat(1), true}}, false});

  return corpus;
}

std::vector<FiniteStructure> enumerate_unary(int max_size, int max_preds) {
  if (max_size < 1 || max_size > 10)
    throw std::invalid_argument("enumerate_unary: max size cap is 10");
  if (max_preds < 1 || max_preds > 4)
    throw std::invalid_argument("enumerate_unary: max predicate cap is 4");
  int cells = 1 << max_preds;
  std::vector<FiniteStructure> out;

  // Compositions of t into `cells` ordered non-negative parts, totals 1..k.
  std::vector<int> sizes(cells, 0);
  auto emit = [&]() {
    FiniteStructure s;
    s.n = 0;
    std::vector<std::vector<std::vector<int>>> preds(max_preds);
    for (int cell = 0; cell < cells; ++cell)
      for (int e = 0; e < sizes[cell]; ++e) {
        int elem = s.n++;
        for (int b = 0; b < max_preds; ++b)
          if (cell & (1 << b))
            preds[b].push_back({elem});
      }
    for (int b = 0; b < max_preds; ++b)
      s.add_symbol("P" + std::to_string(b), 1, std::move(preds[b]));
    out.push_back(std::move(s));
  };
  std::size_t guard = std::size_t(1) << 20;
  auto rec = [&](auto &&self, int cell, int remaining, bool used) -> void {
    if (cell == cells - 1) {
      if (remaining == 0 && !used)
        return;
      sizes[cell] = remaining;
      if (out.size() >= guard)
        throw std::runtime_error("enumerate_unary: output guard exceeded");
      emit();
      sizes[cell] = 0;
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      sizes[cell] = take;
      self(self, cell + 1, remaining - take, used || take > 0);
      sizes[cell] = 0;
    }
  };
  for (int total = 1; total <= max_size; ++total)
    rec(rec, 0, total, false);
  return out;
}

} // namespace rigidity
