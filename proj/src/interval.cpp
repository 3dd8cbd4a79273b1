#include "conic/interval.hpp"

#include <algorithm>

#include "conic/errors.hpp"

namespace conic {

RatInterval::RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) raise(errc::invalid_argument, "interval endpoints out of order");
}

Rat RatInterval::sup_abs() const { return std::max(rat_abs(lo), rat_abs(hi)); }

std::optional<int> RatInterval::sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (lo == 0 && hi == 0) return 0;
    return std::nullopt;
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo + b.lo, a.hi + b.hi);
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo - b.hi, a.hi - b.lo);
}

RatInterval operator-(const RatInterval& a) { return RatInterval(-a.hi, -a.lo); }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return RatInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                       std::max(std::max(p1, p2), std::max(p3, p4)));
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero())
        raise(errc::division_by_zero, "interval division by an interval containing zero");
    RatInterval inv(Rat(1) / b.hi, Rat(1) / b.lo);
    return a * inv;
}

RatInterval abs_iv(const RatInterval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    return RatInterval(Rat(0), a.sup_abs());
}

Rat sqrt_lower(const Rat& v, unsigned prec) {
    if (v < 0) raise(errc::invalid_argument, "sqrt of negative value");
    if (v == 0) return Rat(0);
    // sqrt(p/q) = sqrt(p*q)/q; scale by 10^(2*prec) and take integer roots.
    Int scale = pow10(prec);
    Int n = num(v) * den(v) * scale * scale;
    Int s = isqrt(n);
    return Rat(s, den(v) * scale);
}

Rat sqrt_upper(const Rat& v, unsigned prec) {
    if (v < 0) raise(errc::invalid_argument, "sqrt of negative value");
    if (v == 0) return Rat(0);
    Int scale = pow10(prec);
    Int n = num(v) * den(v) * scale * scale;
    Int s = isqrt(n);
    if (s * s == n) return Rat(s, den(v) * scale);
    return Rat(s + 1, den(v) * scale);
}

RatInterval sqrt_iv(const RatInterval& a, unsigned prec) {
    if (a.lo < 0) raise(errc::invalid_argument, "sqrt of interval reaching below zero");
    return RatInterval(sqrt_lower(a.lo, prec), sqrt_upper(a.hi, prec));
}

namespace {

// Scaled integer bounds on atan(1/x): returns [A_lo, A_hi] with
// A_lo <= atan(1/x)*scale <= A_hi. Alternating series; each floor-divided
// term is off by less than 1, so the running count of terms bounds the
// accumulated slop.
std::pair<Int, Int> atan_inv_scaled(const Int& x, const Int& scale) {
    Int acc = 0;
    Int xpow = x;  // x^(2k+1)
    Int x2 = x * x;
    Int k = 0;
    Int terms = 0;
    for (;;) {
        Int term = scale / ((2 * k + 1) * xpow);
        if (term == 0) break;
        if (k % 2 == 0)
            acc += term;
        else
            acc -= term;
        ++terms;
        xpow *= x2;
        ++k;
    }
    // tail < first dropped term < 1 at this point
    Int slop = terms + 1;
    return {acc - slop, acc + slop};
}

}  // namespace

RatInterval pi_interval(unsigned prec) {
    // pi = 16*atan(1/5) - 4*atan(1/239), computed with a few guard digits.
    unsigned work = prec + 4;
    Int scale = pow10(work);
    auto [a5_lo, a5_hi] = atan_inv_scaled(Int(5), scale);
    auto [a239_lo, a239_hi] = atan_inv_scaled(Int(239), scale);
    Int lo = 16 * a5_lo - 4 * a239_hi;
    Int hi = 16 * a5_hi - 4 * a239_lo;
    return RatInterval(Rat(lo, scale), Rat(hi, scale));
}

std::string iv_decimal(const RatInterval& a, unsigned frac_digits) {
    return to_decimal_trunc(a.mid(), frac_digits);
}

}  // namespace conic
