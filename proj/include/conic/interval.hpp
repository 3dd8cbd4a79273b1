#pragma once

#include <optional>
#include <string>

#include "conic/numeric.hpp"

namespace conic {

// Closed interval [lo, hi] with exact rational endpoints. Ring operations
// are exact (no rounding), so widths only come from the seeds (pi, sqrt)
// and from interval growth itself.
struct RatInterval {
    Rat lo, hi;

    RatInterval() = default;
    RatInterval(Rat l, Rat h);

    static RatInterval point(const Rat& v) { return RatInterval(v, v); }

    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }

    // Largest |x| over the interval.
    Rat sup_abs() const;

    // Definite sign: +1, -1, or 0 for the point interval [0,0];
    // nullopt when the interval straddles zero with nonzero width.
    std::optional<int> sign() const;
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator/(const RatInterval& a, const RatInterval& b);  // 0 not in b

RatInterval abs_iv(const RatInterval& a);

// Two-sided bounds on sqrt(v) with error < 10^-prec; v >= 0.
Rat sqrt_lower(const Rat& v, unsigned prec);
Rat sqrt_upper(const Rat& v, unsigned prec);
RatInterval sqrt_iv(const RatInterval& a, unsigned prec);

// pi bracketed by exact rationals, width < 10^-prec (Machin's formula with
// alternating-series tail bounds).
RatInterval pi_interval(unsigned prec);

// Decimal rendering of the midpoint, truncated after frac_digits digits.
std::string iv_decimal(const RatInterval& a, unsigned frac_digits);

}  // namespace conic
