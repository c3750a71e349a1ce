#include "nott/series.hpp"

#include <algorithm>
#include <string>

#include "nott/errors.hpp"

namespace nott {

namespace {

void require_same(const UnitSeries& a, const UnitSeries& b, const char* op) {
  if (a.prime() != b.prime() || a.precision() != b.precision()) {
    throw UsageError(std::string(op) + ": operands differ in prime or precision");
  }
}

// Truncated product of two coefficient vectors of equal length.
std::vector<int> mul_truncated(std::span<const int> a, std::span<const int> b, int p) {
  const std::size_t n = a.size();
  std::vector<int> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  return out;
}

std::vector<int> widen(const UnitSeries& a) {
  return {a.coeffs().begin(), a.coeffs().end()};
}

UnitSeries from_full(Prime prime, const std::vector<int>& full) {
  return UnitSeries(prime, std::span<const int>(full).subspan(1));
}

}  // namespace

UnitSeries::UnitSeries(Prime prime, int precision) : prime_(prime) {
  if (precision < 0) throw UsageError("precision must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(precision) + 1, 0);
  coeffs_[0] = 1;
}

UnitSeries::UnitSeries(Prime prime, std::span<const int> tail) : prime_(prime) {
  coeffs_.reserve(tail.size() + 1);
  coeffs_.push_back(1);
  for (int a : tail) coeffs_.push_back(static_cast<std::uint8_t>(prime_.reduce(a)));
}

UnitSeries UnitSeries::basis(Prime prime, int j, int precision) {
  if (j < 1) throw UsageError("basis index must be positive");
  UnitSeries e(prime, precision);
  if (j <= precision) e.coeffs_[static_cast<std::size_t>(j)] = 1;
  return e;
}

bool UnitSeries::is_one() const noexcept {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](auto c) { return c == 0; });
}

UnitSeries UnitSeries::truncated(int n) const {
  if (n < 0 || n > precision()) throw UsageError("cannot truncate above the precision");
  UnitSeries out = *this;
  out.coeffs_.resize(static_cast<std::size_t>(n) + 1);
  return out;
}

int UnitSeries::valuation() const noexcept {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return static_cast<int>(k);
  }
  return 0;
}

UnitSeries unit_mul(const UnitSeries& a, const UnitSeries& b) {
  require_same(a, b, "unit_mul");
  return from_full(a.prime(), mul_truncated(widen(a), widen(b), a.prime().value()));
}

UnitSeries unit_inverse(const UnitSeries& a) {
  const int n = a.precision();
  std::vector<int> b(static_cast<std::size_t>(n) + 1, 0);
  b[0] = 1;
  for (int k = 1; k <= n; ++k) {
    int s = 0;
    for (int i = 1; i <= k; ++i) s += a.coeff(i) * b[static_cast<std::size_t>(k - i)];
    b[static_cast<std::size_t>(k)] = a.prime().reduce(-s);
  }
  return from_full(a.prime(), b);
}

UnitSeries unit_pow(const UnitSeries& a, std::int64_t e) {
  UnitSeries base = e < 0 ? unit_inverse(a) : a;
  // Magnitude without overflow at INT64_MIN.
  auto n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  UnitSeries result(a.prime(), a.precision());
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

std::vector<std::pair<int, int>> unit_factors(const UnitSeries& a) {
  std::vector<int> r = widen(a);
  std::vector<std::pair<int, int>> out;
  const int p = a.prime().value();
  const int n = a.precision();
  for (int k = 1; k <= n; ++k) {
    const int c = r[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    out.emplace_back(k, c);
    for (int rep = 0; rep < c; ++rep) {
      for (int d = k; d <= n; ++d) {
        int v = r[static_cast<std::size_t>(d)] - r[static_cast<std::size_t>(d - k)];
        if (v < 0) v += p;
        r[static_cast<std::size_t>(d)] = v;
      }
    }
  }
  return out;
}

UnitSeries unit_subst(const UnitSeries& f, const NottinghamElt& u) {
  if (f.prime() != u.prime()) throw UsageError("unit_subst: primes differ");
  if (f.precision() < u.precision()) {
    throw UsageError("unit_subst: series precision below the group element precision");
  }
  const int p = f.prime().value();
  const int n = u.precision();
  const std::vector<int> unit = widen(u.unit());
  // f(u) = sum_k f_k t^k unit^k; power holds unit^k.
  std::vector<int> out(static_cast<std::size_t>(n) + 1, 0);
  out[0] = 1;
  std::vector<int> power(static_cast<std::size_t>(n) + 1, 0);
  power[0] = 1;
  for (int k = 1; k <= n; ++k) {
    power = mul_truncated(power, unit, p);
    const int fk = f.coeff(k);
    if (fk == 0) continue;
    for (int d = 0; d + k <= n; ++d) {
      out[static_cast<std::size_t>(d + k)] =
          (out[static_cast<std::size_t>(d + k)] + fk * power[static_cast<std::size_t>(d)]) % p;
    }
  }
  return from_full(f.prime(), out);
}

NottinghamElt nott_compose(const NottinghamElt& u, const NottinghamElt& v) {
  require_same(u.unit(), v.unit(), "nott_compose");
  // u(v(t)) = v(t) * unit_u(v(t)) = t * unit_v * unit_u(v).
  return NottinghamElt(v.unit() * unit_subst(u.unit(), v));
}

NottinghamElt nott_inverse(const NottinghamElt& u) {
  const int n = u.precision();
  const Prime prime = u.prime();
  // Find w = t * W with W * unit_u(t W) = 1. The degree-k coefficient of that
  // product is W_k plus terms in W_0..W_{k-1}.
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= n; ++k) {
    const NottinghamElt trial{UnitSeries(prime, w)};
    const UnitSeries g = trial.unit() * unit_subst(u.unit(), trial);
    w[static_cast<std::size_t>(k - 1)] = prime.reduce(-g.coeff(k));
  }
  return NottinghamElt(UnitSeries(prime, w));
}

ExponentVector::ExponentVector(Prime prime, int bound) : prime_(prime) {
  if (bound < 0) throw UsageError("bound must be non-negative");
  exps_.assign(static_cast<std::size_t>(bound) + 1, 0);
}

int ExponentVector::at(int j) const noexcept {
  if (j < 1 || j > bound()) return 0;
  return exps_[static_cast<std::size_t>(j)];
}

void ExponentVector::set(int j, std::int64_t value) {
  if (j < 1 || j > bound()) throw UsageError("exponent index out of range");
  if (prime_.divides(j)) throw UsageError("exponent index divisible by p");
  exps_[static_cast<std::size_t>(j)] = prime_.reduce_sq(value);
}

std::vector<std::pair<int, int>> ExponentVector::entries() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= bound(); ++j) {
    if (exps_[static_cast<std::size_t>(j)] != 0) out.emplace_back(j, exps_[static_cast<std::size_t>(j)]);
  }
  return out;
}

ExponentVector unit_decompose(const UnitSeries& f, int m) {
  if (m < 0 || f.precision() < m) {
    throw UsageError("unit_decompose: series precision " + std::to_string(f.precision()) +
                     " below bound " + std::to_string(m));
  }
  std::vector<int> r(f.coeffs().begin(), f.coeffs().begin() + m + 1);
  ExponentVector e(f.prime(), m);
  detail::strip_residual(f.prime(), r, [&](int j, int v) { e.add(j, v); });
  return e;
}

UnitSeries unit_recompose(const ExponentVector& e, int precision) {
  if (precision < e.bound()) throw UsageError("unit_recompose: precision below bound");
  UnitSeries out(e.prime(), precision);
  for (const auto& [j, x] : e.entries()) {
    out = out * unit_pow(UnitSeries::basis(e.prime(), j, precision), x);
  }
  return out;
}

}  // namespace nott
