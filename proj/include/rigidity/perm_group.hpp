#pragma once

#include <vector>

#include "rigidity/biguint.hpp"
#include "rigidity/perm.hpp"

namespace rigidity {

/// Permutation group given by generators, backed by a stabilizer chain
/// (deterministic Schreier-Sims: base points are the smallest moved points,
/// orbits explored in FIFO order). Immutable once built; queries are safe to
/// call concurrently.
class PermGroup {
public:
  /// Builds the group; `base_prefix` forces the chain base to start with the
  /// given points (used for pointwise stabilizers).
  explicit PermGroup(int degree, std::vector<Perm> generators = {},
                     std::vector<int> base_prefix = {});

  int degree() const { return degree_; }
  const BigUint &order() const { return order_; }
  bool is_trivial() const { return order_.is_one(); }

  const std::vector<Perm> &generators() const { return input_gens_; }
  /// All strong generators (they generate the group).
  std::vector<Perm> strong_generators() const;
  std::vector<int> base() const;

  bool contains(const Perm &p) const;

  /// Subgroup fixing every point of `points` pointwise, with its own chain.
  PermGroup pointwise_stabilizer(const std::vector<int> &points) const;

  /// Order and generators of the pointwise stabilizer read off one base
  /// change, without building the subgroup's own chain. The cheap form the
  /// degree scans hammer on.
  struct StabilizerView {
    BigUint order;
    std::vector<Perm> generators;
  };
  StabilizerView pointwise_stabilizer_view(const std::vector<int> &points) const;

  /// Points fixed by every group element.
  std::vector<int> fixed_points() const;

  /// Orbit partition, each orbit sorted, orbits ordered by smallest element.
  std::vector<std::vector<int>> orbits() const;

private:
  struct Level {
    int base_point;
    std::vector<int> orbit;        // discovery order, orbit[0] == base_point
    std::vector<int> position;     // point -> index in orbit, -1 if absent
    std::vector<Perm> transversal; // transversal[i] maps base_point to orbit[i]
  };

  int degree_;
  std::vector<Perm> input_gens_;
  std::vector<std::pair<Perm, int>> strong_; // (generator, depth): fixes base[0..depth-1]
  std::vector<Level> levels_;
  BigUint order_;

  void insert_generator(const Perm &g);
  void rebuild_orbit(int level);
  void verify_chain();
  // Sifts g through levels starting at `level`; returns the residue and the
  // level where sifting stopped.
  std::pair<Perm, int> sift(Perm g, int level) const;
  std::vector<Perm> level_generators(int level) const;
};

} // namespace rigidity
