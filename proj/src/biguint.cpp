#include "rigidity/biguint.hpp"

#include <algorithm>
#include <stdexcept>

namespace rigidity {

BigUint::BigUint(std::uint64_t v) {
  while (v > 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
    v /= kBase;
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0)
    limbs_.pop_back();
}

BigUint BigUint::operator+(const BigUint &rhs) const {
  BigUint out;
  const auto &a = limbs_;
  const auto &b = rhs.limbs_;
  std::size_t len = std::max(a.size(), b.size());
  out.limbs_.resize(len, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < len; ++i) {
    std::uint64_t s = carry;
    if (i < a.size())
      s += a[i];
    if (i < b.size())
      s += b[i];
    out.limbs_[i] = static_cast<std::uint32_t>(s % kBase);
    carry = s / kBase;
  }
  if (carry)
    out.limbs_.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

BigUint BigUint::operator*(const BigUint &rhs) const {
  if (is_zero() || rhs.is_zero())
    return BigUint();
  BigUint out;
  out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] +
                          static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] +
                          carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    std::size_t k = i + rhs.limbs_.size();
    while (carry) {
      std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
      ++k;
    }
  }
  out.trim();
  return out;
}

BigUint BigUint::mul_small(std::uint32_t v) const {
  if (v == 0 || is_zero())
    return BigUint();
  BigUint out;
  out.limbs_.resize(limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * v + carry;
    out.limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
    carry = cur / kBase;
  }
  while (carry) {
    out.limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
    carry /= kBase;
  }
  return out;
}

BigUint &BigUint::operator*=(std::uint64_t v) {
  *this = *this * BigUint(v);
  return *this;
}

BigUint BigUint::pow(std::uint64_t e) const {
  BigUint result(1);
  BigUint base = *this;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

int BigUint::compare(const BigUint &rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i])
      return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::pair<BigUint, BigUint> BigUint::divmod(const BigUint &d) const {
  if (d.is_zero())
    throw std::invalid_argument("BigUint: division by zero");
  if (compare(d) < 0)
    return {BigUint(), *this};
  BigUint quotient;
  quotient.limbs_.assign(limbs_.size(), 0);
  BigUint rem;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    // rem = rem * base + limb_i
    rem.limbs_.insert(rem.limbs_.begin(), limbs_[i]);
    rem.trim();
    // largest digit q with d * q <= rem
    std::uint32_t lo = 0, hi = kBase - 1, q = 0;
    while (lo <= hi) {
      std::uint32_t mid = lo + (hi - lo) / 2;
      if (d.mul_small(mid).compare(rem) <= 0) {
        q = mid;
        lo = mid + 1;
      } else {
        if (mid == 0)
          break;
        hi = mid - 1;
      }
    }
    quotient.limbs_[i] = q;
    if (q > 0) {
      // rem -= d * q (non-negative by construction)
      BigUint sub = d.mul_small(q);
      std::int64_t borrow = 0;
      for (std::size_t j = 0; j < rem.limbs_.size(); ++j) {
        std::int64_t cur = static_cast<std::int64_t>(rem.limbs_[j]) - borrow -
                           (j < sub.limbs_.size() ? sub.limbs_[j] : 0);
        if (cur < 0) {
          cur += kBase;
          borrow = 1;
        } else {
          borrow = 0;
        }
        rem.limbs_[j] = static_cast<std::uint32_t>(cur);
      }
      rem.trim();
    }
  }
  quotient.trim();
  return {quotient, rem};
}

bool BigUint::divisible_by(const BigUint &d) const {
  return divmod(d).second.is_zero();
}

std::string BigUint::to_string() const {
  if (limbs_.empty())
    return "0";
  std::string out = std::to_string(limbs_.back());
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

std::uint64_t BigUint::to_u64(bool &ok) const {
  ok = true;
  std::uint64_t v = 0;
  if (limbs_.size() > 3) {
    ok = false;
    return 0;
  }
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (v > (UINT64_MAX - limbs_[i]) / kBase) {
      ok = false;
      return 0;
    }
    v = v * kBase + limbs_[i];
  }
  return v;
}

} // namespace rigidity
