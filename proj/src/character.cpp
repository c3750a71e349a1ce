#include "nott/character.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "nott/errors.hpp"

namespace nott {

Character::Character(Prime prime, std::span<const std::pair<int, int>> entries) : prime_(prime) {
  for (const auto& [j, c] : entries) {
    if (j < 1) throw UsageError("character index must be positive, got " + std::to_string(j));
    if (prime_.divides(j)) {
      throw UsageError("character index " + std::to_string(j) + " is divisible by p");
    }
    if (static_cast<std::size_t>(j) >= coeffs_.size()) coeffs_.resize(static_cast<std::size_t>(j) + 1, 0);
    auto& slot = coeffs_[static_cast<std::size_t>(j)];
    slot = static_cast<std::uint16_t>(prime_.reduce_sq(std::int64_t{slot} + c));
  }
  trim();
}

Character::Character(Prime prime, const std::map<int, int>& entries)
    : Character(prime, std::vector<std::pair<int, int>>(entries.begin(), entries.end())) {}

void Character::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

int Character::max_unit_index() const noexcept {
  for (int j = max_support(); j >= 1; --j) {
    if (!prime_.divides(coeffs_[static_cast<std::size_t>(j)])) return j;
  }
  return 0;
}

int Character::bound() const noexcept {
  return std::max(max_support(), prime_.value() * max_unit_index());
}

std::vector<std::pair<int, int>> Character::entries() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= max_support(); ++j) {
    if (coeffs_[static_cast<std::size_t>(j)] != 0) out.emplace_back(j, coeffs_[static_cast<std::size_t>(j)]);
  }
  return out;
}

std::string Character::literal() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, c] : entries()) {
    if (!first) os << ',';
    os << j << ':' << c;
    first = false;
  }
  return os.str();
}

std::string Character::text() const {
  return "p=" + std::to_string(prime_.value()) + "; " + literal();
}

std::strong_ordering operator<=>(const Character& a, const Character& b) {
  if (auto c = a.prime_.value() <=> b.prime_.value(); c != 0) return c;
  const int n = std::max(a.max_support(), b.max_support());
  for (int j = 1; j <= n; ++j) {
    if (auto c = a.coeff(j) <=> b.coeff(j); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Character ReducedForm::to_character() const {
  std::vector<std::pair<int, int>> entries{{type.l, x_l}};
  for (const auto& [j, digit] : b) entries.emplace_back(j, prime.value() * digit);
  return Character(prime, entries);
}

std::optional<ReducedForm> ReducedForm::from_character(const Character& chi) {
  if (!is_reduced(chi)) return std::nullopt;
  const Prime& prime = chi.prime();
  const int p = prime.value();
  const TypeLM type = break_sequence(chi);
  ReducedForm form{prime, type, 0, {}};
  const int c_l = chi.coeff(type.l);
  form.x_l = c_l % p;
  for (int j = type.m - type.l; j <= type.m; ++j) {
    if (prime.divides(j)) continue;
    form.b[j] = (j == type.l ? c_l : chi.coeff(j)) / p;
  }
  return form;
}

namespace detail {

int eval_residual(const Character& chi, std::span<int> r) {
  std::int64_t acc = 0;
  strip_residual(chi.prime(), r, [&](int j, int e) { acc += std::int64_t{e} * chi.coeff(j); });
  return chi.prime().reduce_sq(acc);
}

}  // namespace detail

int char_eval(const Character& chi, const UnitSeries& f) {
  if (f.prime() != chi.prime()) throw UsageError("char_eval: primes differ");
  const int m = chi.bound();
  if (f.precision() < m) {
    throw UsageError("char_eval: series precision " + std::to_string(f.precision()) +
                     " below character bound " + std::to_string(m));
  }
  std::vector<int> r(f.coeffs().begin(), f.coeffs().begin() + m + 1);
  return detail::eval_residual(chi, r);
}

Character char_act(const NottinghamElt& u, const Character& chi) {
  if (u.prime() != chi.prime()) throw UsageError("char_act: primes differ");
  const int m = chi.bound();
  if (u.precision() < m) {
    throw UsageError("char_act: group element precision " + std::to_string(u.precision()) +
                     " below character bound " + std::to_string(m));
  }
  const Prime& prime = chi.prime();
  const UnitSeries unit = u.unit().truncated(m);

  // E_j o u = 1 + t^j unit^j; power holds unit^j.
  std::vector<std::pair<int, int>> out;
  UnitSeries power(prime, m);
  std::vector<int> r(static_cast<std::size_t>(m) + 1);
  for (int j = 1; j <= m; ++j) {
    power = power * unit;
    if (prime.divides(j)) continue;
    std::fill(r.begin(), r.end(), 0);
    r[0] = 1;
    for (int d = 0; d + j <= m; ++d) r[static_cast<std::size_t>(d + j)] = power.coeff(d);
    out.emplace_back(j, detail::eval_residual(chi, r));
  }
  return Character(prime, out);
}

TypeLM break_sequence(const Character& chi) {
  const int l = chi.max_unit_index();
  if (l == 0) throw DomainError("character " + chi.text() + " is not surjective");
  return {l, chi.bound()};
}

StandardExpansion standard_expansion(const Character& chi, TypeLM claimed) {
  const Prime& prime = chi.prime();
  const int p = prime.value();
  for (int j = claimed.l + 1; j <= chi.max_support(); ++j) {
    if (!prime.divides(chi.coeff(j))) {
      throw DomainError("unit coefficient at " + std::to_string(j) + " above claimed l = " +
                        std::to_string(claimed.l));
    }
  }
  const TypeLM actual = break_sequence(chi);
  if (actual != claimed) {
    throw DomainError("character " + chi.text() + " has type <" + std::to_string(actual.l) + "," +
                      std::to_string(actual.m) + ">, not the claimed <" +
                      std::to_string(claimed.l) + "," + std::to_string(claimed.m) + ">");
  }
  StandardExpansion out{actual, {}, {}};
  for (const auto& [j, c] : chi.entries()) {
    if (c % p != 0) out.x[j] = c % p;
    if (c / p != 0) out.a[j] = c / p;
  }
  return out;
}

StandardExpansion standard_expansion(const Character& chi) {
  return standard_expansion(chi, break_sequence(chi));
}

bool validate_type(Prime prime, int l, int m) noexcept {
  const int p = prime.value();
  if (l < 1 || prime.divides(l)) return false;
  if (m < p * l) return false;
  if (m > p * l && prime.divides(m)) return false;
  return true;
}

bool is_reduced(const Character& chi) {
  if (!chi.is_surjective()) return false;
  const auto [l, m] = break_sequence(chi);
  const int p = chi.prime().value();
  for (const auto& [j, c] : chi.entries()) {
    const bool in_window = j >= m - l && j <= m;
    if (j == l) {
      // Outside the window the coefficient at l is the bare digit x_l.
      if (!in_window && c >= p) return false;
    } else if (!in_window) {
      return false;
    }
  }
  return p * l == m || chi.coeff(m) != 0;
}

void for_each_character(Prime prime, int l, int m, const std::function<void(const Character&)>& fn) {
  if (!validate_type(prime, l, m)) {
    throw DomainError("<" + std::to_string(l) + "," + std::to_string(m) +
                      "> is not a valid type for p = " + std::to_string(prime.value()));
  }
  const int p = prime.value();
  // Per-index value lists; the odometer runs with the highest index fastest so
  // the visit order is lexicographic in (c_1, c_2, ...).
  std::vector<int> index;
  std::vector<std::vector<int>> values;
  for (int j = 1; j <= m; ++j) {
    if (prime.divides(j)) continue;
    std::vector<int> vs;
    for (int c = 0; c < prime.square(); ++c) {
      const bool unit = c % p != 0;
      if (j < l || (j == l && unit) || (j > l && !unit && (j != m || c != 0))) vs.push_back(c);
    }
    index.push_back(j);
    values.push_back(std::move(vs));
  }
  std::vector<std::size_t> pos(index.size(), 0);
  std::vector<std::pair<int, int>> entries(index.size());
  for (;;) {
    for (std::size_t i = 0; i < index.size(); ++i) entries[i] = {index[i], values[i][pos[i]]};
    Character chi(prime, entries);
    if (break_sequence(chi) == TypeLM{l, m}) fn(chi);
    std::size_t i = index.size();
    while (i > 0) {
      --i;
      if (++pos[i] < values[i].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
    if (index.empty()) return;
  }
}

std::vector<Character> enumerate_characters(Prime prime, int l, int m) {
  std::vector<Character> out;
  for_each_character(prime, l, m, [&](const Character& chi) { out.push_back(chi); });
  return out;
}

std::vector<ReducedForm> enumerate_reduced_forms(Prime prime, int l, int m) {
  if (!validate_type(prime, l, m)) {
    throw DomainError("<" + std::to_string(l) + "," + std::to_string(m) +
                      "> is not a valid type for p = " + std::to_string(prime.value()));
  }
  const int p = prime.value();
  std::vector<int> window;
  for (int j = m - l; j <= m; ++j) {
    if (!prime.divides(j)) window.push_back(j);
  }
  std::vector<ReducedForm> out;
  std::vector<int> digits(window.size(), 0);
  const auto lowest = [&](std::size_t i) { return window[i] == m ? 1 : 0; };
  for (std::size_t i = 0; i < window.size(); ++i) digits[i] = lowest(i);
  for (;;) {
    for (int x = 1; x < p; ++x) {
      ReducedForm form{prime, {l, m}, x, {}};
      for (std::size_t i = 0; i < window.size(); ++i) form.b[window[i]] = digits[i];
      out.push_back(std::move(form));
    }
    std::size_t i = 0;
    while (i < window.size()) {
      if (++digits[i] < p) break;
      digits[i] = lowest(i);
      ++i;
    }
    if (i == window.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const ReducedForm& a, const ReducedForm& b) {
    return a.to_character() < b.to_character();
  });
  return out;
}

Character scalar_mul(std::int64_t n, const Character& chi) {
  const int k = chi.prime().reduce_sq(n);
  std::vector<std::pair<int, int>> entries;
  for (const auto& [j, c] : chi.entries()) entries.emplace_back(j, k * c);
  return Character(chi.prime(), entries);
}

namespace {

class CharacterParser {
 public:
  CharacterParser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::pair<long, std::size_t> number() {
    skip_ws();
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 1'000'000'000L) fail("number too large");
      v = v * 10 + (text_[pos_++] - '0');
    }
    if (pos_ == start) fail("expected a non-negative integer");
    return {v, start};
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, base_ + at);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

Character parse_entries(std::string_view text, Prime prime, std::size_t base) {
  CharacterParser in(text, base);
  std::vector<std::pair<int, int>> entries;
  std::vector<bool> seen;
  if (in.at_end()) return Character(prime);
  do {
    const auto [j, j_at] = in.number();
    if (j < 1) in.fail("index must be positive", j_at);
    if (prime.divides(j)) in.fail("index " + std::to_string(j) + " is divisible by p", j_at);
    in.expect(':');
    const auto [c, c_at] = in.number();
    if (c >= prime.square()) {
      in.fail("value " + std::to_string(c) + " out of range [0, " +
                  std::to_string(prime.square()) + ")",
              c_at);
    }
    if (static_cast<std::size_t>(j) >= seen.size()) seen.resize(static_cast<std::size_t>(j) + 1);
    if (seen[static_cast<std::size_t>(j)]) in.fail("duplicate index " + std::to_string(j), j_at);
    seen[static_cast<std::size_t>(j)] = true;
    entries.emplace_back(static_cast<int>(j), static_cast<int>(c));
  } while (in.accept(','));
  if (!in.at_end()) in.fail("unexpected trailing input");
  return Character(prime, entries);
}

}  // namespace

Character parse_character_literal(std::string_view text, Prime prime) {
  return parse_entries(text, prime, 0);
}

Character parse_character_text(std::string_view text) {
  CharacterParser in(text, 0);
  in.expect('p');
  in.expect('=');
  const auto [p, p_at] = in.number();
  if (p > Prime::kMax || !is_prime(p)) in.fail("p must be a prime <= 31", p_at);
  in.expect(';');
  return parse_entries(text.substr(in.pos()), Prime(static_cast<int>(p)), in.pos());
}

}  // namespace nott
