#pragma once

// Characters U_1 -> Z/p^2 Z, stored by their values c_j = chi(E_j) on the
// basis units E_j = 1 + t^j, p not dividing j.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nott/prime.hpp"
#include "nott/series.hpp"

namespace nott {

/// Break sequence <l, m> of a surjective character.
struct TypeLM {
  int l = 0;
  int m = 0;

  friend bool operator==(const TypeLM&, const TypeLM&) = default;
};

class Character {
 public:
  /// The zero character.
  explicit Character(Prime prime) : prime_(prime) {}

  /// From (j, c_j) pairs. Values are reduced mod p^2; repeated indices add.
  /// Throws UsageError for j < 1 or p | j.
  Character(Prime prime, std::span<const std::pair<int, int>> entries);
  Character(Prime prime, std::initializer_list<std::pair<int, int>> entries)
      : Character(prime, std::span<const std::pair<int, int>>(entries.begin(), entries.size())) {}
  Character(Prime prime, const std::map<int, int>& entries);

  const Prime& prime() const noexcept { return prime_; }

  /// c_j in [0, p^2); zero outside the support.
  int coeff(int j) const noexcept {
    return j >= 1 && j < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(j)]
                                                           : 0;
  }

  /// Largest j with c_j != 0, or 0.
  int max_support() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Largest j with c_j a unit mod p, or 0.
  int max_unit_index() const noexcept;

  /// Smallest b such that the character vanishes on U_{b+1}:
  /// max(max_support, p * max_unit_index).
  int bound() const noexcept;

  /// Surjective onto Z/p^2 Z: some c_j is a unit.
  bool is_surjective() const noexcept { return max_unit_index() > 0; }

  /// Nonzero (j, c_j) pairs, increasing j.
  std::vector<std::pair<int, int>> entries() const;

  /// "5:1,15:2"; empty for the zero character.
  std::string literal() const;

  /// "p=2; 5:1,15:2".
  std::string text() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.prime_ == b.prime_ && a.coeffs_ == b.coeffs_;
  }

  /// Lexicographic on (c_1, c_2, ...), missing entries read as 0.
  friend std::strong_ordering operator<=>(const Character& a, const Character& b);

 private:
  void trim();

  Prime prime_;
  std::vector<std::uint16_t> coeffs_{0};  // index 0 unused
};

/// Digits of the standard expansion c_i = x_i + p a_i (i <= l), c_j = p a_j (j > l).
struct StandardExpansion {
  TypeLM type;
  std::map<int, int> x;  // nonzero digits only
  std::map<int, int> a;  // nonzero digits only
};

/// x_l Z_l + sum_{m-l <= j <= m, p !| j} b_j p Z_j.
struct ReducedForm {
  Prime prime;
  TypeLM type;
  int x_l = 0;
  std::map<int, int> b;  // every index of the window, zero digits included

  Character to_character() const;

  /// The form whose character is `chi`, if `chi` is reduced.
  static std::optional<ReducedForm> from_character(const Character& chi);

  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

/// chi(f) = sum_j e_j c_j, e = unit_decompose(f, chi.bound()).
/// Throws UsageError if f.precision() < chi.bound().
int char_eval(const Character& chi, const UnitSeries& f);

/// The character f -> chi(f o u). Throws UsageError if u.precision() < chi.bound().
Character char_act(const NottinghamElt& u, const Character& chi);

/// Throws DomainError for a non-surjective character.
TypeLM break_sequence(const Character& chi);

StandardExpansion standard_expansion(const Character& chi);

/// As above but against a claimed type; throws DomainError on any mismatch,
/// in particular a unit coefficient above the claimed l.
StandardExpansion standard_expansion(const Character& chi, TypeLM claimed);

/// Whether <l, m> is the break sequence of some character over F_p.
bool validate_type(Prime prime, int l, int m) noexcept;

bool is_reduced(const Character& chi);

/// Visits every character of exact type <l, m> in lexicographic order.
/// Throws DomainError for an invalid type.
void for_each_character(Prime prime, int l, int m, const std::function<void(const Character&)>& fn);

std::vector<Character> enumerate_characters(Prime prime, int l, int m);

/// All reduced forms of type <l, m>, ordered by their characters.
std::vector<ReducedForm> enumerate_reduced_forms(Prime prime, int l, int m);

/// n * chi; surjectivity is not re-checked.
Character scalar_mul(std::int64_t n, const Character& chi);

/// Parses "5:1,15:2" against p. Values must lie in [0, p^2) and indices be
/// p-coprime. Throws ParseError with the offending byte offset.
Character parse_character_literal(std::string_view text, Prime prime);

/// Parses "p=2; 5:1,15:2".
Character parse_character_text(std::string_view text);

namespace detail {

/// chi evaluated on the unit whose coefficients (index 0 == 1) are in r,
/// with r.size() == chi.bound() + 1. Consumes r.
int eval_residual(const Character& chi, std::span<int> r);

}  // namespace detail

}  // namespace nott
