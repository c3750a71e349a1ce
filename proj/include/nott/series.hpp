#pragma once

// Truncated power series over F_p: principal units, Nottingham group elements,
// and the E_j = 1 + t^j coordinates of a unit.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nott/prime.hpp"

namespace nott {

/// A principal unit 1 + a_1 t + ... + a_N t^N over F_p. N is the precision:
/// the highest tracked degree.
class UnitSeries {
 public:
  /// The unit 1 at precision N.
  UnitSeries(Prime prime, int precision);

  /// 1 + a_1 t + ... + a_N t^N; `tail` holds a_1..a_N as arbitrary integers
  /// (reduced mod p). Its length is the precision.
  UnitSeries(Prime prime, std::span<const int> tail);

  /// E_j = 1 + t^j truncated at N.
  static UnitSeries basis(Prime prime, int j, int precision);

  const Prime& prime() const noexcept { return prime_; }
  int precision() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of t^k for 0 <= k <= N.
  int coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

  /// All coefficients, index 0 (always 1) through N.
  std::span<const std::uint8_t> coeffs() const noexcept { return coeffs_; }

  bool is_one() const noexcept;

  /// The same unit with all degrees above n dropped; n <= precision().
  UnitSeries truncated(int n) const;

  /// Lowest k >= 1 with a_k != 0, or 0 for the unit 1.
  int valuation() const noexcept;

  friend bool operator==(const UnitSeries&, const UnitSeries&) = default;

 private:
  Prime prime_;
  std::vector<std::uint8_t> coeffs_;
};

UnitSeries unit_mul(const UnitSeries& a, const UnitSeries& b);
inline UnitSeries operator*(const UnitSeries& a, const UnitSeries& b) { return unit_mul(a, b); }

UnitSeries unit_inverse(const UnitSeries& a);

/// a^e for any integer e; negative powers go through the multiplicative inverse.
UnitSeries unit_pow(const UnitSeries& a, std::int64_t e);

/// The unique factorization a = prod_k (1 + t^k)^{n_k} with n_k in {1, ..., p-1},
/// obtained by stripping the lowest-degree term. Returns the (k, n_k) pairs.
std::vector<std::pair<int, int>> unit_factors(const UnitSeries& a);

/// u(t) = t * unit(t), known modulo t^{N+2}.
class NottinghamElt {
 public:
  explicit NottinghamElt(UnitSeries unit) : unit_(std::move(unit)) {}

  static NottinghamElt identity(Prime prime, int precision) {
    return NottinghamElt(UnitSeries(prime, precision));
  }

  const Prime& prime() const noexcept { return unit_.prime(); }
  int precision() const noexcept { return unit_.precision(); }

  /// u(t) / t.
  const UnitSeries& unit() const noexcept { return unit_; }

  bool is_identity() const noexcept { return unit_.is_one(); }

  NottinghamElt truncated(int n) const { return NottinghamElt(unit_.truncated(n)); }

  friend bool operator==(const NottinghamElt&, const NottinghamElt&) = default;

 private:
  UnitSeries unit_;
};

/// w(t) = u(v(t)).
NottinghamElt nott_compose(const NottinghamElt& u, const NottinghamElt& v);

/// The compositional inverse, by degreewise back-substitution.
NottinghamElt nott_inverse(const NottinghamElt& u);

/// f(u(t)) at u's precision. Requires f.precision() >= u.precision().
UnitSeries unit_subst(const UnitSeries& f, const NottinghamElt& u);

/// Exponents e_j mod p^2 over the p-coprime indices j <= bound.
class ExponentVector {
 public:
  ExponentVector(Prime prime, int bound);

  const Prime& prime() const noexcept { return prime_; }
  int bound() const noexcept { return static_cast<int>(exps_.size()) - 1; }

  /// e_j; zero for p | j and for j outside [1, bound].
  int at(int j) const noexcept;

  /// Sets e_j to value mod p^2. Throws UsageError if p | j or j is out of range.
  void set(int j, std::int64_t value);
  void add(int j, std::int64_t value) { set(j, at(j) + value); }

  /// Nonzero (j, e_j) pairs in increasing j.
  std::vector<std::pair<int, int>> entries() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  Prime prime_;
  std::vector<int> exps_;
};

/// Greedy lowest-degree-first decomposition f = prod E_j^{e_j} modulo U_{m+1},
/// exponents mod p^2. Requires f.precision() >= m.
ExponentVector unit_decompose(const UnitSeries& f, int m);

/// prod E_j^{e_j} at precision N, exponents taken in [0, p^2). Requires N >= e.bound().
UnitSeries unit_recompose(const ExponentVector& e, int precision);

namespace detail {

/// In-place greedy strip of the residual 1 + r_1 t + ... + r_m t^m (entries
/// mod p, r[0] == 1). Calls sink(j, exponent) for every contribution with
/// nonzero exponent mod p^2. Leaves r == 1.
template <class Sink>
void strip_residual(const Prime& prime, std::span<int> r, Sink&& sink) {
  const int p = prime.value();
  const int m = static_cast<int>(r.size()) - 1;
  for (int k = 1; k <= m; ++k) {
    const int c = r[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    int base = k;
    int scale = 1;
    while (base % p == 0 && scale < prime.square()) {
      base /= p;
      scale *= p;
    }
    if (scale < prime.square()) sink(base, c * scale);
    // Divide by (1 + t^k) c times: r'_d = r_d - r'_{d-k}.
    for (int rep = 0; rep < c; ++rep) {
      for (int d = k; d <= m; ++d) {
        int v = r[static_cast<std::size_t>(d)] - r[static_cast<std::size_t>(d - k)];
        if (v < 0) v += p;
        r[static_cast<std::size_t>(d)] = v;
      }
    }
  }
}

}  // namespace detail

}  // namespace nott
