#include "nott/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "nott/errors.hpp"

namespace nott {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Prefix-pruned scan over a in F_p^m; see equivalence_search.
class Scanner {
 public:
  Scanner(const Character& chi, const Character& psi, Equivalence kind)
      : chi_(chi),
        psi_(psi),
        prime_(chi.prime()),
        strict_(kind == Equivalence::strict),
        l_(break_sequence(chi).l),
        m_(chi.bound()),
        residual_(static_cast<std::size_t>(m_) + 1) {}

  int depth() const { return m_; }

  // Conditions fully determined by a_1..a_k (a[0..k-1]).
  bool admissible(const std::vector<int>& a, int k) {
    const int j = m_ - k;
    if (j >= 1 && !prime_.divides(j) && value_at(a, j, k) != psi_.coeff(j)) return false;
    if (strict_ && k == l_ && !prime_.divides(kernel_digit(a))) return false;
    return true;
  }

  // Depth-first over a_{k+1}..a_m in increasing order; a_1..a_k already admissible.
  bool descend(std::vector<int>& a, int k) {
    if (k == m_) return true;
    for (int v = 0; v < prime_.value(); ++v) {
      a[static_cast<std::size_t>(k)] = v;
      if (admissible(a, k + 1) && descend(a, k + 1)) return true;
    }
    a[static_cast<std::size_t>(k)] = 0;
    return false;
  }

  NottinghamElt element(const std::vector<int>& a) const {
    return NottinghamElt(UnitSeries(prime_, a));
  }

 private:
  // chi(1 + t^j (1 + a_1 t + ... + a_k t^k)^j), with j + k == m.
  int value_at(const std::vector<int>& a, int j, int k) {
    const int p = prime_.value();
    const auto n = static_cast<std::size_t>(k) + 1;
    std::vector<int> base(n, 0);
    base[0] = 1;
    for (std::size_t d = 1; d < n; ++d) base[d] = a[d - 1];
    std::vector<int> power(n, 0);
    power[0] = 1;
    auto mul = [&](const std::vector<int>& x, const std::vector<int>& y) {
      std::vector<int> out(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t s = 0; i + s < n; ++s) out[i + s] = (out[i + s] + x[i] * y[s]) % p;
      }
      return out;
    };
    for (unsigned e = static_cast<unsigned>(j); e > 0; e >>= 1U) {
      if (e & 1U) power = mul(power, base);
      if (e > 1) base = mul(base, base);
    }
    std::fill(residual_.begin(), residual_.end(), 0);
    residual_[0] = 1;
    for (std::size_t d = 0; d < n; ++d) residual_[static_cast<std::size_t>(j) + d] = power[d];
    return detail::eval_residual(chi_, residual_);
  }

  // chi(1 + a_1 t + ... + a_l t^l) mod p; higher a_k only shift it by multiples of p.
  int kernel_digit(const std::vector<int>& a) {
    std::fill(residual_.begin(), residual_.end(), 0);
    residual_[0] = 1;
    for (int d = 1; d <= l_; ++d) residual_[static_cast<std::size_t>(d)] = a[static_cast<std::size_t>(d - 1)];
    return detail::eval_residual(chi_, residual_);
  }

  const Character& chi_;
  const Character& psi_;
  Prime prime_;
  bool strict_;
  int l_;
  int m_;
  std::vector<int> residual_;
};

// Fixes a_1..a_depth to the base-p digits of `index` (a_1 most significant)
// and checks each level on the way down.
bool seed_prefix(Scanner& scan, std::vector<int>& a, std::uint64_t index, int depth, int p) {
  for (int k = depth; k >= 1; --k) {
    a[static_cast<std::size_t>(k - 1)] = static_cast<int>(index % static_cast<std::uint64_t>(p));
    index /= static_cast<std::uint64_t>(p);
  }
  for (int k = 0; k <= depth; ++k) {
    if (!scan.admissible(a, k)) return false;
  }
  return true;
}

void require_budget(Prime prime, int m, const SearchOptions& options) {
  const std::uint64_t cost = search_space_size(prime, m);
  if (cost > options.budget) throw BudgetExceeded(cost, options.budget);
}

std::optional<NottinghamElt> parallel_scan(const Character& chi, const Character& psi,
                                           Equivalence kind, int jobs) {
  const int p = chi.prime().value();
  const int m = chi.bound();
  int depth = 0;
  std::uint64_t tasks = 1;
  while (depth < m && tasks < static_cast<std::uint64_t>(jobs) * 8) {
    ++depth;
    tasks *= static_cast<std::uint64_t>(p);
  }
  std::vector<std::optional<std::vector<int>>> found(tasks);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{tasks};
  auto worker = [&] {
    Scanner scan(chi, psi, kind);
    std::vector<int> a(static_cast<std::size_t>(m), 0);
    for (;;) {
      const std::uint64_t t = next.fetch_add(1);
      if (t >= tasks) return;
      if (t > best.load()) continue;  // an earlier prefix already succeeded
      std::fill(a.begin(), a.end(), 0);
      if (!seed_prefix(scan, a, t, depth, p) || !scan.descend(a, depth)) continue;
      found[t] = a;
      std::uint64_t cur = best.load();
      while (t < cur && !best.compare_exchange_weak(cur, t)) {
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  const std::uint64_t b = best.load();
  if (b == tasks) return std::nullopt;
  return NottinghamElt(UnitSeries(chi.prime(), *found[b]));
}

}  // namespace

std::uint64_t search_space_size(Prime prime, int m) noexcept {
  return saturating_pow(static_cast<std::uint64_t>(prime.value()), m);
}

std::optional<NottinghamElt> equivalence_search(const Character& chi, const Character& psi,
                                                Equivalence kind, const SearchOptions& options) {
  if (chi.prime() != psi.prime()) throw UsageError("equivalence search: primes differ");
  const TypeLM type = break_sequence(chi);
  if (break_sequence(psi) != type) return std::nullopt;
  require_budget(chi.prime(), type.m, options);

  std::optional<NottinghamElt> u;
  if (options.jobs > 1) {
    u = parallel_scan(chi, psi, kind, options.jobs);
  } else {
    Scanner scan(chi, psi, kind);
    std::vector<int> a(static_cast<std::size_t>(type.m), 0);
    if (scan.admissible(a, 0) && scan.descend(a, 0)) u = scan.element(a);
  }
  if (!u) return std::nullopt;
  const WitnessCheck check = check_witness(chi, psi, *u);
  const bool ok = check == WitnessCheck::ok ||
                  (kind == Equivalence::weak && check == WitnessCheck::kernel_violation);
  if (!ok) {
    throw std::logic_error("equivalence search produced an invalid witness (" + to_string(check) +
                           ")");
  }
  return u;
}

std::optional<Witness> strict_equiv_search(const Character& chi, const Character& psi,
                                           const SearchOptions& options) {
  auto u = equivalence_search(chi, psi, Equivalence::strict, options);
  if (!u) return std::nullopt;
  return make_witness(chi, std::move(*u));
}

std::optional<NottinghamElt> weak_equiv_search(const Character& chi, const Character& psi,
                                               const SearchOptions& options) {
  return equivalence_search(chi, psi, Equivalence::weak, options);
}

std::string to_string(CountMethod method) {
  return method == CountMethod::canonical_reduce ? "canonical-reduce" : "oracle-partition";
}

std::string to_string(Equivalence kind) {
  return kind == Equivalence::strict ? "strict" : "weak";
}

ClassReport partition_reduced_forms(Prime prime, int l, int m, const SearchOptions& options,
                                    Equivalence kind) {
  const auto start = Clock::now();
  ClassReport report;
  report.p = prime.value();
  report.l = l;
  report.m = m;
  report.bound = bound_B(prime, l, m).value;
  report.method = CountMethod::oracle_partition;
  report.kind = kind;
  report.search_space_size = search_space_size(prime, m);
  require_budget(prime, m, options);

  for (ReducedForm& form : enumerate_reduced_forms(prime, l, m)) {
    const Character chi = form.to_character();
    bool placed = false;
    for (ClassEntry& cls : report.classes) {
      ++report.searches;
      if (auto u = equivalence_search(cls.representative, chi, kind, options)) {
        cls.members.push_back({std::move(form), std::move(*u)});
        placed = true;
        break;
      }
    }
    if (!placed) {
      ClassEntry cls{chi, {}};
      cls.members.push_back({std::move(form), NottinghamElt::identity(prime, m)});
      report.classes.push_back(std::move(cls));
    }
  }
  report.class_count = report.classes.size();
  report.runtime_ms = elapsed_ms(start);
  return report;
}

ClassReport classify(Prime prime, int l, int m, CountMethod method, const SearchOptions& options) {
  if (method == CountMethod::oracle_partition) {
    return partition_reduced_forms(prime, l, m, options);
  }
  const auto start = Clock::now();
  if (l >= prime.value()) {
    throw DomainError("canonical-reduce counting needs l < p (reduced forms are not unique otherwise)");
  }
  ClassReport report;
  report.p = prime.value();
  report.l = l;
  report.m = m;
  report.bound = bound_B(prime, l, m).value;
  report.method = CountMethod::canonical_reduce;

  // Upper estimate of the character count: p^2 choices below l, p - 1 or so above.
  std::uint64_t space = 1;
  for (int j = 1; j <= m; ++j) {
    if (prime.divides(j)) continue;
    const std::uint64_t choices = j <= l ? static_cast<std::uint64_t>(prime.square())
                                         : static_cast<std::uint64_t>(prime.value());
    space = space > std::numeric_limits<std::uint64_t>::max() / choices
                ? std::numeric_limits<std::uint64_t>::max()
                : space * choices;
  }
  report.search_space_size = space;
  if (space > options.budget) throw BudgetExceeded(space, options.budget);

  std::set<Character> forms;
  for_each_character(prime, l, m, [&](const Character& chi) {
    ++report.searches;
    forms.insert(reduce(chi).form.to_character());
  });
  for (const Character& chi : forms) {
    ClassEntry cls{chi, {}};
    cls.members.push_back({*ReducedForm::from_character(chi), NottinghamElt::identity(prime, m)});
    report.classes.push_back(std::move(cls));
  }
  report.class_count = report.classes.size();
  report.runtime_ms = elapsed_ms(start);
  return report;
}

std::uint64_t count_classes(Prime prime, int l, int m, CountMethod method,
                            const SearchOptions& options) {
  return classify(prime, l, m, method, options).class_count;
}

BoundB bound_B(Prime prime, int l, int m) {
  if (!validate_type(prime, l, m)) {
    throw DomainError("<" + std::to_string(l) + "," + std::to_string(m) +
                      "> is not a valid type for p = " + std::to_string(prime.value()));
  }
  BoundB b;
  for (int j = m - l; j <= m - 1; ++j) {
    if (!prime.divides(j)) ++b.k;
  }
  b.epsilon = prime.divides(m) ? 1 : 2;
  const auto p = static_cast<std::uint64_t>(prime.value());
  const std::uint64_t pk = saturating_pow(p, b.k);
  const std::uint64_t pe = saturating_pow(p - 1, b.epsilon);
  if (pk == std::numeric_limits<std::uint64_t>::max() ||
      pk > std::numeric_limits<std::uint64_t>::max() / pe) {
    throw DomainError("B(p, l, m) does not fit in 64 bits");
  }
  b.value = pk * pe;
  return b;
}

std::uint64_t legacy_counts(Prime prime, int m, LegacyCount which) {
  const auto p = static_cast<std::uint64_t>(prime.value());
  if (which == LegacyCount::d_m) return p - 1;
  // Both tables share one shape once q = p.
  if (prime.divides(m)) return p * (p - 1);
  if (prime.reduce(m) == 1) return (p - 1) * (p - 1);
  return p * (p - 1) * (p - 1);
}

bool power_conjugacy_predicate(Prime prime, int l, int m, std::int64_t n) {
  if (!validate_type(prime, l, m)) {
    throw DomainError("<" + std::to_string(l) + "," + std::to_string(m) +
                      "> is not a valid type for p = " + std::to_string(prime.value()));
  }
  const bool exceptional = prime.value() == 2 && m == 2 * l;
  return prime.reduce(n) == 1 && !exceptional;
}

PowerConjugacy power_conjugacy_oracle(const Character& chi, std::int64_t n,
                                      const SearchOptions& options) {
  break_sequence(chi);
  if (chi.prime().divides(n)) throw DomainError("power_conjugacy_oracle: p divides n");
  const Character psi = scalar_mul(n, chi);
  if (psi == chi) throw DomainError("power_conjugacy_oracle: n chi == chi, so u^n == u");
  PowerConjugacy out;
  out.witness = strict_equiv_search(chi, psi, options);
  out.conjugate = out.witness.has_value();
  return out;
}

}  // namespace nott
