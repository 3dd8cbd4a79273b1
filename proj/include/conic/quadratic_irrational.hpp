#pragma once

#include <string>
#include <variant>

#include "conic/interval.hpp"
#include "conic/numeric.hpp"

namespace conic {

/// Value u + v*sqrt(t) in the real quadratic extension Q(sqrt(t));
/// closed under the field operations for a fixed radicand t > 0.
/// v may be zero (a plain rational seen inside the extension).
struct QExt {
    Rat u, v;
    Int t;

    bool is_rational() const { return v == 0; }
    bool is_zero() const { return u == 0 && v == 0; }
};

QExt qext_of(const Rat& r, const Int& t);
QExt operator+(const QExt& a, const QExt& b);
QExt operator-(const QExt& a, const QExt& b);
QExt operator-(const QExt& a);
QExt operator*(const QExt& a, const QExt& b);
QExt operator/(const QExt& a, const QExt& b);
bool operator==(const QExt& a, const QExt& b);

// sqrt of a nonnegative rational expressed inside some Q(sqrt(t)):
// sqrt(p/q) = (f/q') * sqrt(t) with t squarefree after extraction.
// Perfect squares come back with t = 1 (i.e. rational).
QExt sqrt_rat_qext(const Rat& c);

/// Canonical quadratic irrational r + s*sqrt(t): s != 0, t > 0 and not a
/// perfect square (square factors of t are pulled into s on construction).
class QuadraticIrrational {
public:
    QuadraticIrrational(Rat r, Rat s, Int t);

    const Rat& rational_part() const { return r_; }
    const Rat& coeff() const { return s_; }
    const Int& radicand() const { return t_; }

    RatInterval to_interval(unsigned prec) const;
    std::string str() const;  // "r + s*sqrt(t)"

    // Reciprocal form "P/(Q + S*sqrt(t))" with integer P, Q, S — the shape
    // the value takes before rationalizing the denominator.
    std::string reciprocal_str() const;

    // Value equality (independent of how the radicand was factored).
    bool operator==(const QuadraticIrrational& o) const;
    bool operator!=(const QuadraticIrrational& o) const { return !(*this == o); }

private:
    Rat r_, s_;
    Int t_;
};

/// A ratio limit: exact rational when the radical cancels, quadratic
/// irrational otherwise.
using LimitValue = std::variant<Rat, QuadraticIrrational>;

LimitValue limit_from_qext(const QExt& v);
RatInterval limit_interval(const LimitValue& v, unsigned prec);
std::string limit_str(const LimitValue& v);

}  // namespace conic
