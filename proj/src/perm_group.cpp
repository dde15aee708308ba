#include "rigidity/perm_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rigidity {

PermGroup::PermGroup(int degree, std::vector<Perm> generators,
                     std::vector<int> base_prefix)
    : degree_(degree), input_gens_(std::move(generators)) {
  if (degree_ < 0)
    throw std::invalid_argument("PermGroup: negative degree");
  for (const auto &g : input_gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("PermGroup: generator degree mismatch");
  std::sort(base_prefix.begin(), base_prefix.end());
  base_prefix.erase(std::unique(base_prefix.begin(), base_prefix.end()),
                    base_prefix.end());
  for (int b : base_prefix) {
    if (b < 0 || b >= degree_)
      throw std::invalid_argument("PermGroup: base point out of range");
    levels_.push_back(Level{b, {}, {}, {}});
  }
  for (std::size_t i = 0; i < levels_.size(); ++i)
    rebuild_orbit(static_cast<int>(i));
  for (const auto &g : input_gens_)
    insert_generator(g);
  verify_chain();
  order_ = BigUint(1);
  for (const auto &lvl : levels_)
    order_ = order_ * BigUint(lvl.orbit.size());
}

std::vector<Perm> PermGroup::level_generators(int level) const {
  std::vector<Perm> out;
  for (const auto &[g, depth] : strong_)
    if (depth >= level)
      out.push_back(g);
  return out;
}

void PermGroup::insert_generator(const Perm &g) {
  if (g.is_identity())
    return;
  // depth = number of leading base points fixed by g
  int depth = 0;
  while (depth < static_cast<int>(levels_.size()) &&
         g(levels_[depth].base_point) == levels_[depth].base_point)
    ++depth;
  if (depth == static_cast<int>(levels_.size()))
    levels_.push_back(Level{g.smallest_moved(), {}, {}, {}});
  strong_.emplace_back(g, depth);
  for (int l = 0; l <= depth; ++l)
    rebuild_orbit(l);
}

void PermGroup::rebuild_orbit(int level) {
  Level &lvl = levels_[level];
  auto gens = level_generators(level);
  lvl.orbit.clear();
  lvl.position.assign(degree_, -1);
  lvl.transversal.clear();
  lvl.orbit.push_back(lvl.base_point);
  lvl.position[lvl.base_point] = 0;
  lvl.transversal.push_back(Perm(degree_));
  for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
    int x = lvl.orbit[i];
    for (const auto &s : gens) {
      int y = s(x);
      if (lvl.position[y] < 0) {
        lvl.position[y] = static_cast<int>(lvl.orbit.size());
        lvl.orbit.push_back(y);
        lvl.transversal.push_back(s.compose(lvl.transversal[i]));
      }
    }
  }
}

std::pair<Perm, int> PermGroup::sift(Perm g, int level) const {
  for (int l = level; l < static_cast<int>(levels_.size()); ++l) {
    if (g.is_identity())
      return {g, l};
    const Level &lvl = levels_[l];
    int x = g(lvl.base_point);
    if (lvl.position[x] < 0)
      return {g, l};
    g = lvl.transversal[lvl.position[x]].inverse().compose(g);
  }
  return {g, static_cast<int>(levels_.size())};
}

void PermGroup::verify_chain() {
  // Schreier generator check at each level, deepest first; any nontrivial
  // residue becomes a new strong generator and restarts at its level.
  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    auto gens = level_generators(i);
    Level &lvl = levels_[i];
    for (std::size_t xi = 0; xi < lvl.orbit.size() && !restart; ++xi) {
      for (const auto &s : gens) {
        const Perm &u_x = lvl.transversal[xi];
        int sx = s(lvl.orbit[xi]);
        const Perm &u_sx = lvl.transversal[lvl.position[sx]];
        Perm schreier = u_sx.inverse().compose(s.compose(u_x));
        if (schreier.is_identity())
          continue;
        auto [residue, drop] = sift(std::move(schreier), i + 1);
        if (residue.is_identity())
          continue;
        if (drop == static_cast<int>(levels_.size()))
          levels_.push_back(Level{residue.smallest_moved(), {}, {}, {}});
        strong_.emplace_back(residue, drop);
        for (int l = i + 1; l <= drop; ++l)
          rebuild_orbit(l);
        i = drop;
        restart = true;
        break;
      }
    }
    if (!restart)
      --i;
  }
}

std::vector<Perm> PermGroup::strong_generators() const {
  std::vector<Perm> out;
  out.reserve(strong_.size());
  for (const auto &[g, depth] : strong_)
    out.push_back(g);
  return out;
}

std::vector<int> PermGroup::base() const {
  std::vector<int> out;
  for (const auto &lvl : levels_)
    out.push_back(lvl.base_point);
  return out;
}

bool PermGroup::contains(const Perm &p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("PermGroup::contains: degree mismatch");
  auto [residue, level] = sift(p, 0);
  (void)level;
  return residue.is_identity();
}

PermGroup::StabilizerView
PermGroup::pointwise_stabilizer_view(const std::vector<int> &points) const {
  for (int p : points)
    if (p < 0 || p >= degree_)
      throw std::invalid_argument("pointwise_stabilizer: point out of range");
  if (points.empty())
    return {order_, strong_generators()};
  // Change base so the requested points come first; the chain levels past the
  // prefix describe exactly the pointwise stabilizer.
  PermGroup rebased(degree_, strong_generators(), points);
  std::vector<int> prefix = points;
  std::sort(prefix.begin(), prefix.end());
  prefix.erase(std::unique(prefix.begin(), prefix.end()), prefix.end());
  StabilizerView view;
  view.order = BigUint(1);
  for (std::size_t l = prefix.size(); l < rebased.levels_.size(); ++l)
    view.order = view.order * BigUint(rebased.levels_[l].orbit.size());
  for (const auto &[g, depth] : rebased.strong_)
    if (depth >= static_cast<int>(prefix.size()))
      view.generators.push_back(g);
  return view;
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<int> &points) const {
  if (points.empty())
    return *this;
  auto view = pointwise_stabilizer_view(points);
  PermGroup out(degree_, std::move(view.generators));
  if (out.order() != view.order)
    throw std::logic_error("pointwise_stabilizer: chain orders disagree");
  return out;
}

std::vector<int> PermGroup::fixed_points() const {
  std::vector<int> out;
  for (int x = 0; x < degree_; ++x) {
    bool fixed = true;
    for (const auto &g : input_gens_)
      if (g(x) != x) {
        fixed = false;
        break;
      }
    if (fixed)
      out.push_back(x);
  }
  return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(degree_, false);
  for (int start = 0; start < degree_; ++start) {
    if (seen[start])
      continue;
    std::vector<int> orbit{start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto &g : input_gens_) {
        int y = g(orbit[i]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

} // namespace rigidity
