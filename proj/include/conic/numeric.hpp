#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <utility>

namespace conic {

// Unbounded integers and exact rationals. mpq_rational keeps values
// canonical: lowest terms, positive denominator.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Floor division (round toward negative infinity); b != 0.
Int floor_div(const Int& a, const Int& b);

// Canonical representative of a mod p in [0, p); p > 0.
Int mod_floor(const Int& a, const Int& p);

// Floor of the square root; n >= 0.
Int isqrt(const Int& n);

// True iff n is a perfect square; fills root with the nonnegative root.
bool is_square(const Int& n, Int* root = nullptr);

// True iff q is the square of a rational; fills root with the nonnegative root.
bool rat_is_square(const Rat& q, Rat* root = nullptr);

Int pow10(unsigned k);
Int pow_int(const Int& base, std::uint64_t exp);

Int rat_floor(const Rat& q);
int rat_sign(const Rat& q);
Rat rat_abs(const Rat& q);

// n = f^2 * t with t free of square factors (trial division plus a final
// perfect-square extraction); n > 0. Returns {f, t}.
std::pair<Int, Int> extract_square(const Int& n);

// Deterministic primality test (Miller-Rabin against a fixed witness set,
// exact for anything this library will meet).
bool is_prime(const Int& n);

// Decimal rendering of an exact rational, truncated toward zero after
// `frac_digits` fractional digits. Exactly representable values stop early
// ("12/5" -> "2.4"); truncated ones carry all requested digits.
std::string to_decimal_trunc(const Rat& v, unsigned frac_digits);

// Truncation (toward zero) to `sig` significant decimal digits, as an exact
// rational. trunc_sig(19/72, 5) == 26388/100000.
Rat trunc_sig(const Rat& v, unsigned sig);

// Parses "p/q", integer, or decimal ("-3.25") text into an exact rational.
Rat parse_rat(const std::string& text);

std::string rat_str(const Rat& v);  // "p/q", or "p" when the denominator is 1

}  // namespace conic
