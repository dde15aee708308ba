#pragma once

#include <vector>

#include "rigidity/extnat.hpp"

namespace rigidity {

/// One shape of atom in a unary-predicate structure: c constant-named
/// elements and u unnamed elements per atom, repeated mult times.
/// `definable` records whether the atom set is isolated by finitely many
/// predicates (default true; set false only for atoms needing infinitely
/// many predicates, which requires an infinite profile).
struct AtomClass {
  ExtNat c;
  ExtNat u;
  ExtNat mult = 1;
  bool definable = true;
};

/// Symbolic description of a (possibly infinite) unary-predicate structure.
/// `unbounded_finite_family` models an infinite family of atoms with
/// unboundedly large finite unnamed parts (index omega, no tetrad).
struct MonadicProfile {
  std::vector<AtomClass> classes;
  bool unbounded_finite_family = false;
};

} // namespace rigidity
