// Independent oracles for cross-validating the engines: exhaustive
// enumeration and plain set filtering only, no stabilizer chains, no
// refinement, no subset-scan kernels.
#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "rigidity/perm.hpp"
#include "rigidity/structure.hpp"

namespace oracle {

using rigidity::FiniteStructure;
using rigidity::Perm;

// Closure of a generator set under composition (BFS).
inline std::vector<Perm> closure(int n, const std::vector<Perm> &gens) {
  std::set<std::vector<int>> seen;
  std::vector<Perm> out{Perm(n)};
  seen.insert(Perm(n).images());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto &g : gens) {
      Perm h = g.compose(out[i]);
      if (seen.insert(h.images()).second)
        out.push_back(std::move(h));
    }
  std::sort(out.begin(), out.end(),
            [](const Perm &a, const Perm &b) { return a.images() < b.images(); });
  return out;
}

inline bool preserves(const FiniteStructure &s, const Perm &p) {
  for (int c : s.named)
    if (p(c) != c)
      return false;
  for (std::size_t r = 0; r < s.interp.size(); ++r) {
    std::set<std::vector<int>> tuples(s.interp[r].begin(), s.interp[r].end());
    for (const auto &t : s.interp[r]) {
      std::vector<int> img(t.size());
      for (std::size_t i = 0; i < t.size(); ++i)
        img[i] = p(t[i]);
      if (!tuples.count(img))
        return false;
    }
  }
  return true;
}

inline std::vector<Perm> automorphisms(const FiniteStructure &s) {
  std::vector<Perm> out;
  std::vector<int> img(s.n);
  std::iota(img.begin(), img.end(), 0);
  do {
    Perm p(img);
    if (preserves(s, p))
      out.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline std::vector<Perm> stabilizer(const std::vector<Perm> &auts,
                                    const std::vector<int> &a) {
  std::vector<Perm> out;
  for (const auto &p : auts) {
    bool fixes = true;
    for (int x : a)
      if (p(x) != x) {
        fixes = false;
        break;
      }
    if (fixes)
      out.push_back(p);
  }
  return out;
}

inline std::vector<int> fixed_points(const std::vector<Perm> &perms, int n) {
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    bool fixed = true;
    for (const auto &p : perms)
      if (p(x) != x) {
        fixed = false;
        break;
      }
    if (fixed)
      out.push_back(x);
  }
  return out;
}

inline std::vector<int> mask_elements(unsigned long long mask) {
  std::vector<int> out;
  for (int b = 0; mask; ++b, mask >>= 1)
    if (mask & 1)
      out.push_back(b);
  return out;
}

inline bool sem_rigid(const std::vector<Perm> &auts, const std::vector<int> &a) {
  return stabilizer(auts, a).size() == 1;
}

inline bool synt_rigid(const FiniteStructure &s, const std::vector<Perm> &auts,
                       const std::vector<int> &a) {
  return static_cast<int>(fixed_points(stabilizer(auts, a), s.n).size()) == s.n;
}

struct OracleTetrad {
  int e_sem, e_synt, a_sem, a_synt;
};

// Full subset enumeration; usable up to n ~ 8.
inline OracleTetrad tetrad(const FiniteStructure &s) {
  auto auts = automorphisms(s);
  int n = s.n;
  auto degree = [&](bool forall, bool synt) {
    for (int k = 0; k <= n; ++k) {
      bool all = true, some = false;
      for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        if (__builtin_popcountll(mask) != k)
          continue;
        auto a = mask_elements(mask);
        bool ok = synt ? synt_rigid(s, auts, a) : sem_rigid(auts, a);
        all = all && ok;
        some = some || ok;
      }
      if ((forall && all) || (!forall && some))
        return k;
    }
    return n;
  };
  return {degree(false, false), degree(false, true), degree(true, false),
          degree(true, true)};
}

inline unsigned long long ind(const FiniteStructure &s, const std::vector<int> &a) {
  auto stab = stabilizer(automorphisms(s), a);
  unsigned long long best = 0;
  for (int x = 0; x < s.n; ++x) {
    std::set<int> orbit;
    for (const auto &p : stab)
      orbit.insert(p(x));
    best = std::max<unsigned long long>(best, orbit.size());
  }
  return best;
}

} // namespace oracle
