#pragma once

// Seeded random instances for property trials.

#include <cstdint>
#include <random>
#include <vector>

#include "nott/character.hpp"
#include "nott/series.hpp"

namespace nott {

using Rng = std::mt19937_64;

UnitSeries random_unit(Prime prime, int precision, Rng& rng);
NottinghamElt random_element(Prime prime, int precision, Rng& rng);

/// Every valid <l, m> with l <= max_l and m <= max_m, ordered by (l, m).
std::vector<TypeLM> valid_types(Prime prime, int max_l, int max_m);

/// A uniformly chosen valid type with m <= max_m. Requires max_m >= p.
TypeLM random_type(Prime prime, int max_m, Rng& rng);

/// A uniformly random character of exact type <l, m>.
Character random_character(Prime prime, TypeLM type, Rng& rng);

/// Number of characters of exact type <l, m>, saturating.
std::uint64_t character_count(Prime prime, TypeLM type) noexcept;

/// min(count, character_count) distinct characters of the type: all of them,
/// in order, when there are at most `count`; otherwise a random sample.
std::vector<Character> sample_characters(Prime prime, TypeLM type, std::size_t count, Rng& rng);

}  // namespace nott
