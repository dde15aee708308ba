#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rigidity {

/// Natural number extended with a single infinite value. Used both for
/// degrees of rigidity (printed INF) and for symbolic cardinalities in
/// monadic profiles (printed omega). Addition and multiplication absorb
/// infinity, except 0 * inf = 0 (an empty contribution repeated infinitely
/// often is still empty).
class ExtNat {
public:
  constexpr ExtNat() : v_(0) {}
  constexpr ExtNat(std::uint64_t v) : v_(v) { // NOLINT: implicit by design
    if (v == kInf)
      throw std::invalid_argument("ExtNat: finite value out of range");
  }

  static constexpr ExtNat infinity() {
    ExtNat e;
    e.v_ = kInf;
    return e;
  }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr bool is_zero() const { return v_ == 0; }

  constexpr std::uint64_t value() const {
    if (is_infinite())
      throw std::logic_error("ExtNat: value() on infinity");
    return v_;
  }

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.is_infinite() || b.is_infinite())
      return infinity();
    return ExtNat(a.v_ + b.v_);
  }

  friend constexpr ExtNat operator*(ExtNat a, ExtNat b) {
    if (a.is_zero() || b.is_zero())
      return ExtNat(0);
    if (a.is_infinite() || b.is_infinite())
      return infinity();
    return ExtNat(a.v_ * b.v_);
  }

  /// (x - 1)^+ : predecessor clamped at 0; infinity stays infinite.
  constexpr ExtNat dec_clamped() const {
    if (is_infinite())
      return infinity();
    return ExtNat(v_ > 0 ? v_ - 1 : 0);
  }

  friend constexpr bool operator==(ExtNat a, ExtNat b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(ExtNat a, ExtNat b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(ExtNat a, ExtNat b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(ExtNat a, ExtNat b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(ExtNat a, ExtNat b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(ExtNat a, ExtNat b) { return a.v_ >= b.v_; }

  std::string to_string(const char *inf_word = "INF") const {
    return is_infinite() ? std::string(inf_word) : std::to_string(v_);
  }

private:
  static constexpr std::uint64_t kInf = UINT64_MAX;
  std::uint64_t v_;
};

} // namespace rigidity
