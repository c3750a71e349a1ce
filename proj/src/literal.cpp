#include "nott/literal.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <vector>

#include "nott/errors.hpp"

namespace nott {

namespace {

// A general truncated series c_0 + c_1 t + ... + c_{n-1} t^{n-1} over F_p.
using Poly = std::vector<int>;

class SeriesParser {
 public:
  SeriesParser(std::string_view text, Prime prime, int length)
      : text_(text), prime_(prime), length_(static_cast<std::size_t>(length)) {}

  Poly parse() {
    Poly v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == 't' || std::isdigit(static_cast<unsigned char>(c));
  }

  Poly constant(std::int64_t c) const {
    Poly v(length_, 0);
    if (!v.empty()) v[0] = prime_.reduce(c);
    return v;
  }

  Poly add(const Poly& a, const Poly& b, int sign) const {
    Poly out(length_);
    for (std::size_t i = 0; i < length_; ++i) out[i] = prime_.reduce(a[i] + sign * b[i]);
    return out;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    Poly out(length_, 0);
    for (std::size_t i = 0; i < length_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; i + j < length_; ++j) {
        out[i + j] = (out[i + j] + a[i] * b[j]) % prime_.value();
      }
    }
    return out;
  }

  Poly inverse(const Poly& a, std::size_t at) const {
    if (a.empty() || a[0] == 0) {
      throw ParseError("negative power of a series without constant term", at);
    }
    const int c0inv = prime_.inverse(a[0]);
    Poly b(length_, 0);
    b[0] = c0inv;
    for (std::size_t k = 1; k < length_; ++k) {
      std::int64_t s = 0;
      for (std::size_t i = 1; i <= k; ++i) s += a[i] * b[k - i];
      b[k] = prime_.reduce(-s * c0inv);
    }
    return b;
  }

  Poly power(Poly base, std::int64_t e, std::size_t at) const {
    if (e < 0) {
      base = inverse(base, at);
      e = -e;
    }
    Poly result = constant(1);
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      e >>= 1;
      if (e > 0) base = mul(base, base);
    }
    return result;
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail("integer too large");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  // expr := ['-'] term (('+' | '-') term)*
  Poly expr() {
    int sign = 1;
    if (peek('-')) {
      ++pos_;
      sign = -1;
    }
    Poly v = add(constant(0), term(), sign);
    while (peek('+') || peek('-')) {
      const int s = text_[pos_] == '+' ? 1 : -1;
      ++pos_;
      v = add(v, term(), s);
    }
    return v;
  }

  // term := factor (['*'] factor)*
  Poly term() {
    Poly v = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v = mul(v, factor());
      } else if (starts_factor()) {
        v = mul(v, factor());
      } else {
        return v;
      }
    }
  }

  // factor := primary ['^' ['-'] integer]
  Poly factor() {
    const std::size_t at = pos_;
    Poly v = primary();
    if (peek('^')) {
      ++pos_;
      bool negative = false;
      if (peek('-')) {
        ++pos_;
        negative = true;
      }
      const std::int64_t e = integer();
      v = power(std::move(v), negative ? -e : e, at);
    }
    return v;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 't') {
      ++pos_;
      Poly v(length_, 0);
      if (length_ > 1) v[1] = 1;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(integer());
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Prime prime_;
  std::size_t length_;
  std::size_t pos_ = 0;
};

}  // namespace

UnitSeries parse_unit(std::string_view text, Prime prime, int precision) {
  if (precision < 0) throw UsageError("precision must be non-negative");
  const Poly v = SeriesParser(text, prime, precision + 1).parse();
  if (v[0] != 1) throw ParseError("a principal unit must have constant term 1", 0);
  return UnitSeries(prime, std::span<const int>(v).subspan(1));
}

NottinghamElt parse_nottingham(std::string_view text, Prime prime, int precision) {
  if (precision < 0) throw UsageError("precision must be non-negative");
  const Poly v = SeriesParser(text, prime, precision + 2).parse();
  if (v[0] != 0 || v[1] != 1) {
    throw ParseError("a Nottingham element must have the form t + (higher terms)", 0);
  }
  return NottinghamElt(UnitSeries(prime, std::span<const int>(v).subspan(2)));
}

std::string format_unit(const UnitSeries& f) {
  std::ostringstream os;
  os << '1';
  for (int k = 1; k <= f.precision(); ++k) {
    const int c = f.coeff(k);
    if (c == 0) continue;
    os << '+';
    if (c != 1) os << c << '*';
    os << 't';
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

std::string format_product(const NottinghamElt& u) {
  std::ostringstream os;
  os << 't';
  for (const auto& [k, n] : unit_factors(u.unit())) {
    os << "*(1+t";
    if (k != 1) os << '^' << k;
    os << ")^" << n;
  }
  return os.str();
}

}  // namespace nott
