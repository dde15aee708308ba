#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigidity/aut_search.hpp"
#include "rigidity/extnat.hpp"
#include "rigidity/perm_group.hpp"
#include "rigidity/structure.hpp"
#include "rigidity/subset_scan.hpp"

namespace rigidity {

enum class Quantifier { exists, forall };
enum class Mode { semantic, syntactic };

std::string to_string(Quantifier q);
std::string to_string(Mode m);

struct WitnessReport {
  ExtNat degree;
  /// exists: a least rigidifying set of size `degree`; forall: a least
  /// non-rigidifying set of size degree-1, absent when degree is 0.
  std::optional<std::vector<int>> witness;
  Quantifier quantifier = Quantifier::exists;
  Mode mode = Mode::semantic;
};

/// The quadruple (exists-sem, exists-synt, forall-sem, forall-synt).
struct Tetrad {
  ExtNat e_sem, e_synt, a_sem, a_synt;

  /// Throws unless e_sem<=e_synt, a_sem<=a_synt, e_sem<=a_sem, e_synt<=a_synt.
  void check() const;
  std::string to_string() const;
  bool operator==(const Tetrad &o) const = default;
};

/// Shared analysis context for one structure: constants encoded once, the
/// automorphism group computed once, degree scans on top. Pure queries; one
/// analysis instance is meant to be driven from a single thread, distinct
/// instances are independent.
class StructureAnalysis {
public:
  explicit StructureAnalysis(const FiniteStructure &s, scan::Options opts = {});

  const FiniteStructure &encoded() const { return encoded_; }
  const PermGroup &aut() const { return aut_; }

  std::vector<int> dcl(const std::vector<int> &a) const;
  bool sem_rigid(const std::vector<int> &a) const;
  bool synt_rigid(const std::vector<int> &a) const;

  WitnessReport degree(Quantifier q, Mode m) const;
  Tetrad tetrad() const;

  /// Max orbit size of the pointwise stabilizer of `a` (>= 1).
  std::uint64_t rigidity_index(const std::vector<int> &a) const;

  /// Minimal-cardinality superset of `a` that rigidifies; least such set.
  std::vector<int> rigiditize(const std::vector<int> &a) const;

private:
  FiniteStructure original_;
  FiniteStructure encoded_;
  scan::Options opts_;
  PermGroup aut_;

  std::vector<int> checked_set(const std::vector<int> &a) const;
  bool rigidifies(Mode m, std::uint64_t mask) const;
  WitnessReport exists_degree(Mode m) const;
  WitnessReport forall_degree(Mode m, const WitnessReport &exists) const;
};

// One-shot conveniences over StructureAnalysis.
std::vector<int> dcl(const FiniteStructure &s, const std::vector<int> &a);
bool is_sem_rigid(const FiniteStructure &s, const std::vector<int> &a);
bool is_synt_rigid(const FiniteStructure &s, const std::vector<int> &a);
WitnessReport degree(const FiniteStructure &s, Quantifier q, Mode m,
                     scan::Options opts = {});
Tetrad tetrad(const FiniteStructure &s, scan::Options opts = {});

/// Degree of the expansion of `s` by constants `a`.
WitnessReport relative_degree(const FiniteStructure &s, const std::vector<int> &a,
                              Quantifier q, Mode m, scan::Options opts = {});
Tetrad relative_tetrad(const FiniteStructure &s, const std::vector<int> &a,
                       scan::Options opts = {});

std::vector<int> rigiditize(const FiniteStructure &s, const std::vector<int> &a,
                            scan::Options opts = {});
std::uint64_t rigidity_index(const FiniteStructure &s, const std::vector<int> &a);

/// The expansion used by the relative-degree operations.
FiniteStructure expand_by_constants(const FiniteStructure &s,
                                    const std::vector<int> &a);

} // namespace rigidity
