#pragma once

#include <string>
#include <variant>

#include "conic/interval.hpp"
#include "conic/numeric.hpp"

namespace conic {

enum class FieldKind { rational, prime, real };

/// Names the active coefficient field: exact rationals, an odd prime field
/// F_p, or reals at a fixed working precision (decimal digits, >= 16).
class FieldSpec {
public:
    static FieldSpec rationals();
    static FieldSpec prime_field(const Int& p);  // p an odd prime
    static FieldSpec reals(unsigned digits);     // digits >= 16

    FieldKind kind() const { return kind_; }
    const Int& prime() const;
    unsigned digits() const;

    // Tolerance for real-kind equality: 10^-(digits - guard), guard = 8.
    Rat tolerance() const;
    // Precision used when materializing constants (pi, sqrt) for this spec.
    unsigned working_precision() const;

    bool operator==(const FieldSpec& o) const;
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
    std::string str() const;  // "rational", "fp:7", "real:60"

    // Parses "rational" | "fp:<p>" | "real:<digits>".
    static FieldSpec parse(const std::string& text);

private:
    FieldSpec(FieldKind k, Int p, unsigned digits) : kind_(k), p_(std::move(p)), digits_(digits) {}

    FieldKind kind_;
    Int p_;
    unsigned digits_;
};

/// An element of the field named by a FieldSpec. Rational values are stored
/// in lowest terms with positive denominator; prime-field values as the
/// canonical representative in [0, p); real values as an exact rational
/// interval bracketing the number. Immutable after construction.
class FieldValue {
public:
    FieldValue() : spec_(FieldSpec::rationals()), v_(Rat(0)) {}

    static FieldValue rational(Rat v);
    static FieldValue mod_p(Int v, const Int& p);
    static FieldValue real(RatInterval iv, unsigned digits);

    static FieldValue zero(const FieldSpec& spec);
    static FieldValue one(const FieldSpec& spec);
    static FieldValue from_int(long v, const FieldSpec& spec);
    static FieldValue from_rat(const Rat& v, const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    FieldKind kind() const { return spec_.kind(); }

    const Rat& as_rat() const;           // rational kind
    const Int& residue() const;          // prime kind
    const RatInterval& interval() const; // real kind

    friend FieldValue operator+(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator-(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator*(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator/(const FieldValue& a, const FieldValue& b);
    FieldValue operator-() const;
    FieldValue inverse() const;

    // Exact for rational/prime kinds; |a-b| <= spec.tolerance() for reals.
    bool operator==(const FieldValue& o) const;
    bool operator!=(const FieldValue& o) const { return !(*this == o); }

    // Zero test used for division guards: exact kinds compare against 0;
    // a real is "zero" when its interval cannot be separated from 0.
    bool is_zero() const;

    // Definite sign for ordered kinds (+1/0/-1). Prime kind raises
    // unordered-field; an inconclusive real interval raises
    // precision-exhausted.
    int sign() const;

    std::string str() const;
    std::string decimal(unsigned digits) const;  // ordered kinds

private:
    FieldValue(FieldSpec spec, std::variant<Rat, Int, RatInterval> v)
        : spec_(std::move(spec)), v_(std::move(v)) {}

    static void require_same(const FieldValue& a, const FieldValue& b);

    FieldSpec spec_;
    std::variant<Rat, Int, RatInterval> v_;
};

/// The pair (h, d) defining the conic x^2 + hxy - dy^2 = 1 together with
/// the cached discriminant delta = h^2 + 4d.
class ConicParams {
public:
    ConicParams(FieldValue h, FieldValue d);

    const FieldValue& h() const { return h_; }
    const FieldValue& d() const { return d_; }
    const FieldValue& delta() const { return delta_; }
    const FieldSpec& spec() const { return h_.spec(); }

    bool operator==(const ConicParams& o) const { return h_ == o.h_ && d_ == o.d_; }
    bool operator!=(const ConicParams& o) const { return !(*this == o); }
    std::string str() const;

private:
    FieldValue h_, d_, delta_;
};

enum class ConicClass { ellipse, parabola, hyperbola };
const char* conic_class_name(ConicClass c);

// True iff x^2 - hx - d has no root in the (exact) field, i.e. iff
// delta = h^2 + 4d is not a square there. Real kind raises analytic-field:
// classify by the sign of delta via conic_class instead.
bool poly_irreducible(const ConicParams& params);

// Sign of delta over an ordered field: hyperbola (+), parabola (0),
// ellipse (-). Prime fields raise unordered-field.
ConicClass conic_class(const ConicParams& params);

// Parses a scalar in the textual syntax: integers "-3", rationals "p/q",
// prime-field elements "k mod p" (or a bare integer, reduced), decimal
// strings, and for the real kind the named constants "pi" and "sqrt:k".
FieldValue parse_scalar(const std::string& text, const FieldSpec& spec);

}  // namespace conic
