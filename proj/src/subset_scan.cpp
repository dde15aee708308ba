#include "rigidity/subset_scan.hpp"

#include <atomic>
#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include <omp.h>

namespace rigidity::scan {

namespace {

constexpr std::uint64_t kEnumerationGuard = std::uint64_t(1) << 22;

// Advances a strictly increasing index vector to the next k-combination of
// 0..n-1 in lexicographic order; false when exhausted.
bool next_combination(std::vector<int> &idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j)
        idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

} // namespace

bool set_lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b)
    return false;
  std::uint64_t diff = a ^ b;
  std::uint64_t low = diff & (~diff + 1);
  return (a & low) != 0;
}

std::uint64_t mask_of(const std::vector<int> &elements) {
  std::uint64_t m = 0;
  for (int e : elements)
    m |= std::uint64_t(1) << e;
  return m;
}

std::vector<int> elements_of(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(__builtin_ctzll(mask));
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t binomial_clamped(int n, int k, std::uint64_t limit) {
  if (k < 0 || k > n)
    return 0;
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) {
    c = c * static_cast<std::uint64_t>(n - i) / (i + 1);
    if (c > limit)
      return limit + 1;
  }
  return c;
}

std::vector<std::uint64_t> k_subsets(int n, int k) {
  if (n < 0 || n > 64)
    throw std::invalid_argument("k_subsets: need 0 <= n <= 64");
  if (k < 0 || k > n)
    return {};
  std::uint64_t count = binomial_clamped(n, k, kEnumerationGuard);
  if (count > kEnumerationGuard)
    throw std::runtime_error("k_subsets: candidate count exceeds scan guard");
  std::vector<std::uint64_t> out;
  out.reserve(count);
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i)
    idx[i] = i;
  do {
    std::uint64_t m = 0;
    for (int e : idx)
      m |= std::uint64_t(1) << e;
    out.push_back(m);
  } while (next_combination(idx, n));
  return out;
}

std::optional<std::uint64_t> least_satisfying_serial(int n, int k,
                                                     const MaskPredicate &pred) {
  if (k < 0 || k > n)
    return std::nullopt;
  if (k == 0)
    return pred(0) ? std::optional<std::uint64_t>(0) : std::nullopt;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i)
    idx[i] = i;
  do {
    std::uint64_t m = 0;
    for (int e : idx)
      m |= std::uint64_t(1) << e;
    if (pred(m))
      return m;
  } while (next_combination(idx, n));
  return std::nullopt;
}

std::vector<std::uint64_t> orbit_representatives(int n, int k,
                                                 const std::vector<Perm> &gens) {
  auto all = k_subsets(n, k);
  if (gens.empty())
    return all;
  std::vector<std::uint64_t> reps;
  std::unordered_set<std::uint64_t> visited;
  visited.reserve(all.size() * 2);
  std::vector<std::uint64_t> queue;
  for (std::uint64_t m : all) {
    if (visited.count(m))
      continue;
    // m is the scan-least member of a fresh orbit: mark the whole orbit.
    reps.push_back(m);
    queue.clear();
    queue.push_back(m);
    visited.insert(m);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto &g : gens) {
        std::uint64_t im = g.apply_mask(queue[i]);
        if (visited.insert(im).second)
          queue.push_back(im);
      }
  }
  return reps;
}

std::optional<std::uint64_t>
least_satisfying_parallel(const std::vector<std::uint64_t> &sorted_candidates,
                          const MaskPredicate &pred) {
  const std::size_t count = sorted_candidates.size();
  std::atomic<std::size_t> best{count};
  std::atomic<bool> failed{false};
  std::string error;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < count; ++i) {
    if (failed.load(std::memory_order_relaxed))
      continue;
    if (i >= best.load(std::memory_order_relaxed))
      continue;
    bool hit = false;
    try {
      hit = pred(sorted_candidates[i]);
    } catch (const std::exception &e) {
#pragma omp critical
      {
        failed.store(true);
        if (error.empty())
          error = e.what();
      }
      continue;
    }
    if (hit) {
      std::size_t cur = best.load(std::memory_order_relaxed);
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  if (failed.load())
    throw std::runtime_error("subset scan predicate failed: " + error);
  std::size_t idx = best.load();
  if (idx == count)
    return std::nullopt;
  return sorted_candidates[idx];
}

std::optional<std::uint64_t> least_satisfying(int n, int k,
                                              const std::vector<Perm> &gens,
                                              const MaskPredicate &pred,
                                              const Options &opts) {
  if (!opts.orbit_prune || gens.empty()) {
    std::uint64_t count = binomial_clamped(n, k, kEnumerationGuard);
    if (count > kEnumerationGuard)
      throw std::runtime_error("subset scan: candidate count exceeds guard");
    if (!opts.parallel || count < opts.parallel_threshold)
      return least_satisfying_serial(n, k, pred);
    return least_satisfying_parallel(k_subsets(n, k), pred);
  }
  auto reps = orbit_representatives(n, k, gens);
  if (!opts.parallel || reps.size() < opts.parallel_threshold) {
    for (std::uint64_t m : reps)
      if (pred(m))
        return m;
    return std::nullopt;
  }
  return least_satisfying_parallel(reps, pred);
}

} // namespace rigidity::scan
