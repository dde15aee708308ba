#include "rigidity/aut_search.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

#include <omp.h>

#include "rigidity/config.hpp"

namespace rigidity {

namespace {

// Per-element incidence index: (symbol, position, tuple index), built once.
struct IncidenceIndex {
  struct Entry {
    int sym;
    int pos;
    int tuple;
  };
  std::vector<std::vector<Entry>> by_element;

  explicit IncidenceIndex(const FiniteStructure &s) : by_element(s.n) {
    for (std::size_t r = 0; r < s.interp.size(); ++r)
      for (std::size_t t = 0; t < s.interp[r].size(); ++t) {
        const auto &tuple = s.interp[r][t];
        for (std::size_t j = 0; j < tuple.size(); ++j)
          by_element[tuple[j]].push_back(
              {static_cast<int>(r), static_cast<int>(j), static_cast<int>(t)});
      }
  }
};

Coloring refine_once(const FiniteStructure &s, const IncidenceIndex &index,
                     const Coloring &c) {
  // Key per element: old color followed by the sorted incidence records
  // (symbol, position, colors of the tuple entries in order).
  std::vector<std::pair<std::vector<int>, int>> keyed(s.n);
  for (int x = 0; x < s.n; ++x) {
    std::vector<std::vector<int>> records;
    records.reserve(index.by_element[x].size());
    for (const auto &e : index.by_element[x]) {
      const auto &tuple = s.interp[e.sym][e.tuple];
      std::vector<int> rec;
      rec.reserve(tuple.size() + 2);
      rec.push_back(e.sym);
      rec.push_back(e.pos);
      for (int v : tuple)
        rec.push_back(c.color[v]);
      records.push_back(std::move(rec));
    }
    std::sort(records.begin(), records.end());
    std::vector<int> key{c.color[x]};
    for (const auto &rec : records) {
      key.push_back(-1); // record separator
      key.insert(key.end(), rec.begin(), rec.end());
    }
    keyed[x] = {std::move(key), x};
  }
  std::map<std::vector<int>, std::vector<int>> groups;
  for (auto &[key, x] : keyed)
    groups[key].push_back(x);
  Coloring out;
  out.color.assign(s.n, 0);
  int next = 0;
  for (auto &[key, members] : groups) {
    for (int x : members)
      out.color[x] = next;
    ++next;
  }
  out.num_colors = next;
  return out;
}

Coloring refine_with_index(const FiniteStructure &s, const IncidenceIndex &index,
                           Coloring c) {
  for (;;) {
    Coloring next = refine_once(s, index, c);
    if (next.num_colors == c.num_colors)
      return next;
    c = std::move(next);
  }
}

Coloring individualize(const Coloring &c, int v) {
  Coloring out = c;
  out.color[v] = out.num_colors;
  out.num_colors += 1;
  return out;
}

bool is_discrete(const Coloring &c) {
  return c.num_colors == static_cast<int>(c.color.size());
}

std::vector<int> histogram(const Coloring &c) {
  std::vector<int> h(c.num_colors, 0);
  for (int col : c.color)
    ++h[col];
  return h;
}

// Smallest non-singleton class; ties by smallest color id. -1 if discrete.
int select_target_color(const Coloring &c) {
  std::vector<int> h = histogram(c);
  int best = -1;
  for (int col = 0; col < c.num_colors; ++col)
    if (h[col] >= 2 && (best < 0 || h[col] < h[best]))
      best = col;
  return best;
}

std::vector<int> elements_by_color(const Coloring &c) {
  std::vector<int> out(c.num_colors, -1);
  for (int x = 0; x < static_cast<int>(c.color.size()); ++x)
    out[c.color[x]] = x;
  return out;
}

struct NodeInvariant {
  std::vector<int> hist;
  int target_color = -1;
  bool operator==(const NodeInvariant &o) const {
    return hist == o.hist && target_color == o.target_color;
  }
};

class AutSearch {
public:
  explicit AutSearch(const FiniteStructure &s) : s_(s), index_(s) {}

  PermGroup run() {
    Coloring root = refine_with_index(s_, index_, uniform_coloring(s_.n));
    std::vector<int> prefix;
    dfs(root, prefix);
    return PermGroup(s_.n, found_);
  }

private:
  const FiniteStructure &s_;
  IncidenceIndex index_;
  std::vector<Perm> found_;
  std::vector<NodeInvariant> ref_path_;
  std::vector<int> ref_leaf_; // color -> element at the first leaf
  bool have_ref_leaf_ = false;
  std::size_t group_version_ = 0;
  std::unique_ptr<PermGroup> cached_group_;
  std::size_t cached_version_ = SIZE_MAX;

  const PermGroup &current_group() {
    if (!cached_group_ || cached_version_ != group_version_) {
      cached_group_ = std::make_unique<PermGroup>(s_.n, found_);
      cached_version_ = group_version_;
    }
    return *cached_group_;
  }

  void record_automorphism(const Coloring &leaf) {
    std::vector<int> here = elements_by_color(leaf);
    std::vector<int> img(s_.n);
    for (int col = 0; col < leaf.num_colors; ++col)
      img[ref_leaf_[col]] = here[col];
    Perm p(std::move(img));
    if (p.is_identity() || !is_automorphism(s_, p))
      return;
    if (!found_.empty() && current_group().contains(p))
      return;
    found_.push_back(std::move(p));
    ++group_version_;
  }

  void dfs(const Coloring &c, std::vector<int> &prefix) {
    std::size_t depth = prefix.size();
    if (is_discrete(c)) {
      if (!have_ref_leaf_) {
        ref_leaf_ = elements_by_color(c);
        have_ref_leaf_ = true;
      } else {
        record_automorphism(c);
      }
      return;
    }
    int target = select_target_color(c);
    NodeInvariant inv{histogram(c), target};
    if (!have_ref_leaf_) {
      ref_path_.push_back(inv);
    } else {
      if (depth >= ref_path_.size() || !(ref_path_[depth] == inv))
        return; // cannot correspond to the reference branch
    }
    std::vector<int> cell;
    for (int x = 0; x < s_.n; ++x)
      if (c.color[x] == target)
        cell.push_back(x);

    // Orbit pruning state for this node, rebuilt when the group grows.
    std::vector<int> tried;
    std::vector<int> orbit_id;
    std::size_t orbit_version = SIZE_MAX;
    auto prunable = [&](int v) {
      if (tried.empty() || found_.empty())
        return false;
      if (orbit_version != group_version_) {
        PermGroup stab = current_group().pointwise_stabilizer(prefix);
        orbit_id.assign(s_.n, -1);
        auto orbits = stab.orbits();
        for (std::size_t i = 0; i < orbits.size(); ++i)
          for (int x : orbits[i])
            orbit_id[x] = static_cast<int>(i);
        orbit_version = group_version_;
      }
      for (int t : tried)
        if (orbit_id[t] == orbit_id[v])
          return true;
      return false;
    };

    for (int v : cell) {
      if (prunable(v)) {
        tried.push_back(v);
        continue;
      }
      Coloring child = refine_with_index(s_, index_, individualize(c, v));
      prefix.push_back(v);
      dfs(child, prefix);
      prefix.pop_back();
      tried.push_back(v);
    }
  }
};

void require_encoded(const FiniteStructure &s) {
  if (!s.named.empty())
    throw std::invalid_argument(
        "automorphism search requires constants encoded as unary predicates");
}

// Permutations of 0..n-1 with img[0] fixed, lexicographic, filtered.
void collect_with_first(const FiniteStructure &s, int first,
                        std::vector<Perm> &out) {
  int n = s.n;
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != first)
      rest.push_back(v);
  std::vector<int> img(n);
  do {
    img[0] = first;
    std::copy(rest.begin(), rest.end(), img.begin() + 1);
    Perm p(img);
    if (is_automorphism(s, p))
      out.push_back(std::move(p));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

} // namespace

Coloring uniform_coloring(int n) {
  Coloring c;
  c.color.assign(n, 0);
  c.num_colors = 1;
  return c;
}

Coloring color_refine(const FiniteStructure &s, const Coloring &init) {
  if (static_cast<int>(init.color.size()) != s.n)
    throw std::invalid_argument("color_refine: coloring size mismatch");
  IncidenceIndex index(s);
  return refine_with_index(s, index, init);
}

bool is_automorphism(const FiniteStructure &s, const Perm &p) {
  if (p.degree() != s.n)
    return false;
  for (int c : s.named)
    if (p(c) != c)
      return false;
  for (std::size_t r = 0; r < s.interp.size(); ++r)
    for (const auto &t : s.interp[r])
      if (!s.tuple_in(static_cast<int>(r), p.apply_tuple(t)))
        return false;
  return true;
}

PermGroup automorphism_group(const FiniteStructure &s) {
  require_valid(s);
  require_encoded(s);
  if (s.n > universe_cap())
    throw std::invalid_argument("automorphism_group: universe cap exceeded");
  AutSearch search(s);
  return search.run();
}

std::vector<Perm> brute_force_automorphisms(const FiniteStructure &s,
                                            EnumBackend backend) {
  require_valid(s);
  if (s.n > 8)
    throw std::invalid_argument("brute_force_automorphisms: n > 8 refused");
  int n = s.n;
  if (backend == EnumBackend::serial) {
    std::vector<Perm> out;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
      Perm p(img);
      if (is_automorphism(s, p))
        out.push_back(std::move(p));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }
  // Parallel over the image of 0; per-bucket results are already in
  // lexicographic order, buckets concatenate in order.
  std::vector<std::vector<Perm>> buckets(n);
#pragma omp parallel for schedule(dynamic)
  for (int first = 0; first < n; ++first)
    collect_with_first(s, first, buckets[first]);
  std::vector<Perm> out;
  for (auto &b : buckets)
    for (auto &p : b)
      out.push_back(std::move(p));
  return out;
}

} // namespace rigidity
