#include "nott/prime.hpp"

#include <limits>
#include <string>

#include "nott/errors.hpp"

namespace nott {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t saturating_pow(std::uint64_t p, int e) noexcept {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= p;
  }
  return r;
}

Prime::Prime(int p) : p_(p), psq_(p * p) {
  if (p < 2 || p > kMax || !is_prime(p)) {
    throw UsageError("p must be a prime in [2, " + std::to_string(kMax) + "], got " +
                     std::to_string(p));
  }
}

int Prime::inverse(std::int64_t x) const {
  const int a = reduce(x);
  if (a == 0) throw DomainError("no inverse of a multiple of p");
  // Fermat: a^(p-2).
  int r = 1;
  for (int i = 0; i < p_ - 2; ++i) r = r * a % p_;
  return r;
}

}  // namespace nott
