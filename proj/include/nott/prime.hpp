#pragma once

#include <cstdint>

namespace nott {

/// A small prime 2 <= p <= 31 together with p^2, the modulus of character values.
class Prime {
 public:
  static constexpr int kMax = 31;

  /// Throws UsageError unless p is a prime in [2, kMax].
  explicit Prime(int p);

  int value() const noexcept { return p_; }
  int square() const noexcept { return psq_; }

  /// Least non-negative residue mod p.
  int reduce(std::int64_t x) const noexcept {
    const auto r = static_cast<int>(x % p_);
    return r < 0 ? r + p_ : r;
  }

  /// Least non-negative residue mod p^2.
  int reduce_sq(std::int64_t x) const noexcept {
    const auto r = static_cast<int>(x % psq_);
    return r < 0 ? r + psq_ : r;
  }

  bool divides(std::int64_t x) const noexcept { return x % p_ == 0; }

  /// Inverse of x mod p. Throws DomainError if p | x.
  int inverse(std::int64_t x) const;

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  int p_;
  int psq_;
};

bool is_prime(std::int64_t n) noexcept;

/// p^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t p, int e) noexcept;

}  // namespace nott
