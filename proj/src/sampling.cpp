#include "nott/sampling.hpp"

#include <limits>
#include <set>

#include "nott/errors.hpp"

namespace nott {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

UnitSeries random_unit(Prime prime, int precision, Rng& rng) {
  std::vector<int> tail(static_cast<std::size_t>(precision));
  for (int& a : tail) a = uniform(rng, 0, prime.value() - 1);
  return UnitSeries(prime, tail);
}

NottinghamElt random_element(Prime prime, int precision, Rng& rng) {
  return NottinghamElt(random_unit(prime, precision, rng));
}

std::vector<TypeLM> valid_types(Prime prime, int max_l, int max_m) {
  std::vector<TypeLM> out;
  for (int l = 1; l <= max_l; ++l) {
    for (int m = 1; m <= max_m; ++m) {
      if (validate_type(prime, l, m)) out.push_back({l, m});
    }
  }
  return out;
}

TypeLM random_type(Prime prime, int max_m, Rng& rng) {
  const auto types = valid_types(prime, max_m, max_m);
  if (types.empty()) throw UsageError("no valid type with m <= " + std::to_string(max_m));
  return types[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(types.size()) - 1))];
}

Character random_character(Prime prime, TypeLM type, Rng& rng) {
  if (!validate_type(prime, type.l, type.m)) throw DomainError("invalid type");
  const int p = prime.value();
  std::vector<std::pair<int, int>> entries;
  for (int j = 1; j <= type.m; ++j) {
    if (prime.divides(j)) continue;
    int c = 0;
    if (j < type.l) {
      c = uniform(rng, 0, prime.square() - 1);
    } else if (j == type.l) {
      c = uniform(rng, 0, p - 1) * p + uniform(rng, 1, p - 1);
    } else if (j == type.m) {
      c = p * uniform(rng, 1, p - 1);
    } else {
      c = p * uniform(rng, 0, p - 1);
    }
    entries.emplace_back(j, c);
  }
  return Character(prime, entries);
}

std::uint64_t character_count(Prime prime, TypeLM type) noexcept {
  const auto p = static_cast<std::uint64_t>(prime.value());
  std::uint64_t n = 1;
  for (int j = 1; j <= type.m; ++j) {
    if (prime.divides(j)) continue;
    std::uint64_t choices = p;
    if (j < type.l) choices = p * p;
    if (j == type.l) choices = p * (p - 1);
    if (j == type.m && j != type.l) choices = p - 1;
    if (n > std::numeric_limits<std::uint64_t>::max() / choices) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    n *= choices;
  }
  return n;
}

std::vector<Character> sample_characters(Prime prime, TypeLM type, std::size_t count, Rng& rng) {
  if (character_count(prime, type) <= count) return enumerate_characters(prime, type.l, type.m);
  std::set<Character> seen;
  std::vector<Character> out;
  while (out.size() < count) {
    Character chi = random_character(prime, type, rng);
    if (seen.insert(chi).second) out.push_back(std::move(chi));
  }
  return out;
}

}  // namespace nott
