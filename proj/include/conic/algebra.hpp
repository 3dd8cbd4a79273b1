#pragma once

#include "conic/field.hpp"

namespace conic {

/// Element a + b*x of the algebra A = F[x]/(x^2 - hx - d). Every (a, b)
/// pair is a valid element; only inversion can fail (zero norm, possible
/// when the polynomial is reducible and A has zero divisors).
struct AlgebraElement {
    FieldValue a, b;
    ConicParams params;

    AlgebraElement(FieldValue a_, FieldValue b_, ConicParams params_)
        : a(std::move(a_)), b(std::move(b_)), params(std::move(params_)) {}

    static AlgebraElement one(const ConicParams& params);

    bool operator==(const AlgebraElement& o) const { return a == o.a && b == o.b; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
    std::string str() const;  // "a + b*x"
};

// (a+bx)(u+vx) = (au + bvd) + (bu + av + bvh)x
AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v);

// a + bx  ->  (a + hb) - bx
AlgebraElement conj(const AlgebraElement& u);

FieldValue norm(const AlgebraElement& u);   // a^2 + hab - db^2
FieldValue trace(const AlgebraElement& u);  // 2a + hb

// conj(u) / norm(u); raises non-invertible on zero norm.
AlgebraElement inverse(const AlgebraElement& u);

AlgebraElement parse_algebra(const std::string& text, const ConicParams& params);

}  // namespace conic
