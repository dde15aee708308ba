#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rigidity/perm.hpp"

namespace rigidity::scan {

/// Element sets are bitmasks over 0..n-1 (n <= 64). The scan order is
/// lexicographic on the sorted element sequence: {0,3} before {1,2}.
bool set_lex_less(std::uint64_t a, std::uint64_t b);

std::uint64_t mask_of(const std::vector<int> &elements);
std::vector<int> elements_of(std::uint64_t mask);

/// Number of k-subsets, clamped to limit+1 when it exceeds `limit`.
std::uint64_t binomial_clamped(int n, int k, std::uint64_t limit);

/// All k-subsets of 0..n-1 in scan order. Throws when the count exceeds the
/// internal guard (the scans are desk-scale by design).
std::vector<std::uint64_t> k_subsets(int n, int k);

using MaskPredicate = std::function<bool(std::uint64_t)>;

/// Serial reference kernel: walks every k-subset in scan order and returns
/// the first one satisfying the predicate. Kept as the baseline the
/// optimized kernels are tested and benchmarked against.
std::optional<std::uint64_t> least_satisfying_serial(int n, int k,
                                                     const MaskPredicate &pred);

/// Lexicographically least member of each orbit of k-subsets under the group
/// generated by `gens`, in scan order. For predicates invariant under the
/// group, scanning these is equivalent to scanning everything.
std::vector<std::uint64_t> orbit_representatives(int n, int k,
                                                 const std::vector<Perm> &gens);

struct Options {
  bool parallel = true;
  bool orbit_prune = true;
  /// Candidate counts below this run serially even when parallel is on.
  std::size_t parallel_threshold = 512;
};

/// OpenMP kernel over an explicit sorted candidate list: deterministic
/// lex-min reduction, with chunks skipped once a smaller hit is known.
std::optional<std::uint64_t>
least_satisfying_parallel(const std::vector<std::uint64_t> &sorted_candidates,
                          const MaskPredicate &pred);

/// Dispatcher: orbit-pruned candidates (when enabled and `gens` nonempty),
/// then the parallel or serial kernel per `opts`. Always returns the same
/// mask as the serial reference for group-invariant predicates.
std::optional<std::uint64_t> least_satisfying(int n, int k,
                                              const std::vector<Perm> &gens,
                                              const MaskPredicate &pred,
                                              const Options &opts);

} // namespace rigidity::scan
