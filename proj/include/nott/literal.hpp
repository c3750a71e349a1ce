#pragma once

// Text forms of series and group elements.
//
//   unit:           "1+t^3+t^4", "1+2*t", "(1+t)^-1"
//   group element:  "t*(1+t^3+t^4)*(1+t^15)^2", "t", "t+t^2"
//
// The grammar is ordinary arithmetic over F_p[[t]]: integers (reduced mod p),
// the variable t, + - * ^, parentheses, and juxtaposition ("2t^3", "t(1+t)").
// Exponents are integers; negative exponents need a nonzero constant term.

#include <string>
#include <string_view>

#include "nott/prime.hpp"
#include "nott/series.hpp"

namespace nott {

/// Parses a principal unit at the given precision. Throws ParseError.
UnitSeries parse_unit(std::string_view text, Prime prime, int precision);

/// Parses u(t) = t * (unit) at the given precision. Throws ParseError.
NottinghamElt parse_nottingham(std::string_view text, Prime prime, int precision);

/// "1+t^3+2*t^4"; "1" for the unit 1.
std::string format_unit(const UnitSeries& f);

/// Product form "t*(1+t^2)^1*(1+t^4)^2" from the canonical factorization
/// u/t = prod (1 + t^k)^{n_k}, 0 < n_k < p. The identity prints as "t".
std::string format_product(const NottinghamElt& u);

}  // namespace nott
