#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rigidity/monadic_types.hpp"
#include "rigidity/structure.hpp"

namespace rigidity {

/// Deterministic PRNG (splitmix64); std distributions are not portable
/// across standard libraries, reports must be byte-identical per seed.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

struct NamedStructure {
  std::string name;
  FiniteStructure s;
};

struct NamedProfile {
  std::string name;
  MonadicProfile p;
};

/// Seeded check corpus: generator families, random structures, operand pair
/// lists (unions by sum, compositions by product), and a profile grid.
struct Corpus {
  std::uint64_t seed = 1;
  std::vector<NamedStructure> structures;
  std::vector<std::pair<int, int>> union_pairs; // indices into structures
  std::vector<std::pair<int, int>> comp_pairs;
  std::vector<NamedProfile> profiles;
};

Corpus default_corpus(std::uint64_t seed);

/// One representative per isomorphism class of unary structures: the vector
/// of cell sizes over the 2^p predicate patterns, totals 1..k.
std::vector<FiniteStructure> enumerate_unary(int max_size, int max_preds);

} // namespace rigidity
