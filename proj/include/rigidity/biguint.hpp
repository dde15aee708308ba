#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rigidity {

/// Arbitrary-precision unsigned integer, base 10^9 limbs. Group orders grow
/// past 64 bits already at degree ~21, so exact orders need this.
class BigUint {
public:
  BigUint() = default;
  BigUint(std::uint64_t v); // NOLINT: implicit by design

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

  BigUint operator+(const BigUint &rhs) const;
  BigUint operator*(const BigUint &rhs) const;
  BigUint &operator*=(std::uint64_t v);

  /// this^e by square-and-multiply; 0^0 = 1.
  BigUint pow(std::uint64_t e) const;

  /// Quotient and remainder; throws on division by zero.
  std::pair<BigUint, BigUint> divmod(const BigUint &d) const;
  bool divisible_by(const BigUint &d) const;

  int compare(const BigUint &rhs) const;
  bool operator==(const BigUint &rhs) const { return compare(rhs) == 0; }
  bool operator!=(const BigUint &rhs) const { return compare(rhs) != 0; }
  bool operator<(const BigUint &rhs) const { return compare(rhs) < 0; }
  bool operator<=(const BigUint &rhs) const { return compare(rhs) <= 0; }

  std::string to_string() const;

  /// Value as uint64 if it fits, otherwise nullopt-like flag via `ok`.
  std::uint64_t to_u64(bool &ok) const;

private:
  static constexpr std::uint32_t kBase = 1000000000u;
  std::vector<std::uint32_t> limbs_; // little-endian, no trailing zeros
  void trim();
  BigUint mul_small(std::uint32_t v) const;
};

} // namespace rigidity
