#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigidity {

/// Permutation of 0..n-1 in image notation.
class Perm {
public:
  explicit Perm(int n) : img_(n) {
    for (int i = 0; i < n; ++i)
      img_[i] = i;
  }

  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw std::invalid_argument("Perm: images are not a permutation");
      seen[v] = true;
    }
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int> &images() const { return img_; }

  /// (this o inner)(x) = this(inner(x)); inner acts first.
  Perm compose(const Perm &inner) const {
    Perm out(degree());
    for (int i = 0; i < degree(); ++i)
      out.img_[i] = img_[inner.img_[i]];
    return out;
  }

  Perm inverse() const {
    Perm out(degree());
    for (int i = 0; i < degree(); ++i)
      out.img_[img_[i]] = i;
    return out;
  }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i)
        return false;
    return true;
  }

  /// Smallest point moved, or -1 for the identity.
  int smallest_moved() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i)
        return i;
    return -1;
  }

  std::vector<int> apply_tuple(const std::vector<int> &t) const {
    std::vector<int> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      out[i] = img_[t[i]];
    return out;
  }

  /// Image of an element set given as a bitmask (degree <= 64).
  std::uint64_t apply_mask(std::uint64_t mask) const {
    std::uint64_t out = 0;
    while (mask) {
      int b = __builtin_ctzll(mask);
      mask &= mask - 1;
      out |= std::uint64_t(1) << img_[b];
    }
    return out;
  }

  friend bool operator==(const Perm &a, const Perm &b) { return a.img_ == b.img_; }
  friend bool operator<(const Perm &a, const Perm &b) { return a.img_ < b.img_; }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < degree(); ++i) {
      if (i)
        s += ",";
      s += std::to_string(img_[i]);
    }
    return s + "]";
  }

private:
  std::vector<int> img_;
};

} // namespace rigidity
