#pragma once

#include <vector>

#include "rigidity/perm.hpp"
#include "rigidity/perm_group.hpp"
#include "rigidity/structure.hpp"

namespace rigidity {

/// Element coloring; color ids contiguous from 0, refinement never merges.
struct Coloring {
  std::vector<int> color;
  int num_colors = 1;
};

Coloring uniform_coloring(int n);

/// Coarsest stable refinement of `init` under iterated splitting by multisets
/// of colored relational incidences. Automorphism-invariant.
Coloring color_refine(const FiniteStructure &s, const Coloring &init);

/// Aut(s) found by individualization-refinement backtracking with orbit
/// pruning against the group discovered so far. Requires constants already
/// encoded (empty named list).
PermGroup automorphism_group(const FiniteStructure &s);

enum class EnumBackend { serial, parallel };

/// Exhaustive oracle: every permutation preserving all relations (and fixing
/// named constants), sorted lexicographically by image array. Refuses n > 8.
std::vector<Perm> brute_force_automorphisms(const FiniteStructure &s,
                                            EnumBackend backend = EnumBackend::serial);

bool is_automorphism(const FiniteStructure &s, const Perm &p);

} // namespace rigidity
