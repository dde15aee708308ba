#pragma once

#include <optional>

#include "rigidity/degrees.hpp"
#include "rigidity/monadic_types.hpp"
#include "rigidity/structure.hpp"

namespace rigidity {

/// Throws on malformed profiles (mult = 0, empty atoms, definable=false on an
/// all-finite profile, no classes without the unbounded flag).
void validate_profile(const MonadicProfile &p);

bool profile_is_finite(const MonadicProfile &p);
ExtNat profile_total_size(const MonadicProfile &p);

/// Symbolic tetrad. Per atom instance the exists-sem contribution is
/// (u-1)^+; the exists-synt contribution stays (u-1)^+ only when the atom is
/// definable and carries finitely many constants, and is u otherwise (one
/// new name needed per unnamed element over infinitely many constants).
/// Forall degrees by classification: 0 with a zero exists degree, total-1
/// for finite profiles, infinite otherwise.
Tetrad profile_tetrad(const MonadicProfile &p);

/// Sup of solution-set sizes of algebraic 1-types: any constant contributes
/// 1, each finite unnamed part u contributes u, the unbounded-family flag
/// contributes omega; 0 when nothing is algebraic.
ExtNat profile_ind(const MonadicProfile &p);

/// Profile with exists-sem degree mu and exists-synt degree nu (mu <= nu).
MonadicProfile realize_pair(ExtNat mu, ExtNat nu);

struct TruncationCaps {
  std::optional<std::uint64_t> c;
  std::optional<std::uint64_t> u;
  std::optional<std::uint64_t> mult;
};

/// Finite structure realizing the profile with every omega replaced by its
/// substitute: one unary predicate per atom instance, constants as singleton
/// predicates. Exact for all-finite profiles.
FiniteStructure truncate(const MonadicProfile &p, const TruncationCaps &caps);

/// Which of the four admissible unary-language tetrad shapes `t` matches:
/// 1 rigid, 2 finite, 3 sem-rigid-only, 4 infinite non-rigid; 0 if none.
int cor25_case(const Tetrad &t);

} // namespace rigidity
