#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rigidity/structure.hpp"

namespace rigidity {

struct UnionLayout {
  int n1 = 0, n2 = 0; // operand universe sizes; offsets are 0 and n1
  std::string p1_name, p2_name;
  /// (old name, new name) for symbols renamed to keep the languages disjoint.
  std::vector<std::pair<std::string, std::string>> renames2;
};

struct UnionResult {
  FiniteStructure structure;
  UnionLayout layout;
};

/// Disjoint union: first operand on 0..n1-1, second shifted by n1, fresh
/// unary markers for the two parts. Colliding symbol names in the second
/// operand are renamed (suffix "_2", recorded in the layout).
UnionResult disjoint_union(const FiniteStructure &s1, const FiniteStructure &s2);

struct CompositionLayout {
  int m = 0, n = 0;   // |M| copies of an |N|-element structure
  std::string e_name; // fresh copy-equivalence symbol
  int pair(int a, int b) const { return a * n + b; }
  int copy_of(int x) const { return x / n; }
  int inner_of(int x) const { return x % n; }
};

struct CompositionResult {
  FiniteStructure structure;
  CompositionLayout layout;
};

/// Composition M[N]: every element of M replaced by a copy of N, under the
/// pairing (a,b) -> a*|N|+b. Symbols only in M read first coordinates;
/// symbols only in N require equal first coordinates; shared symbols (equal
/// arity required) take the union of both readings. A fresh binary E with
/// the copies as classes is always added.
CompositionResult compose(const FiniteStructure &m, const FiniteStructure &n);

/// compose() after renaming n's colliding symbols (suffix "_c"). Shared-name
/// semantics is deliberate in compose(); pair corpora use this variant so the
/// copies retain the inner structure.
CompositionResult compose_disjoint(const FiniteStructure &m,
                                   const FiniteStructure &n);

} // namespace rigidity
