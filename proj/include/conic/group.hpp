#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "conic/field.hpp"

namespace conic {

/// A point of E(h,d) = { (x,y) : x^2 + hxy - dy^2 = 1 }. Construction
/// validates the conic equation (exactly over exact fields, to the
/// comparison tolerance over the reals), so instances are on-curve by
/// construction.
class ConicPoint {
public:
    ConicPoint(FieldValue x, FieldValue y, ConicParams params);

    static ConicPoint identity(const ConicParams& params);

    const FieldValue& x() const { return x_; }
    const FieldValue& y() const { return y_; }
    const ConicParams& params() const { return params_; }

    bool operator==(const ConicPoint& o) const { return x_ == o.x_ && y_ == o.y_; }
    bool operator!=(const ConicPoint& o) const { return !(*this == o); }
    std::string str() const;  // "(x, y)"

private:
    // Group operations work on raw coordinates internally (closure is
    // proven); every value handed out still passes through the validating
    // constructor, so the invariant is unforgeable from outside.
    FieldValue x_, y_;
    ConicParams params_;
};

// Evaluates x^2 + hxy - dy^2 and compares to 1 (used by the validator and
// the property suites).
bool on_conic(const FieldValue& x, const FieldValue& y, const ConicParams& params);

/// Element of P = F union {alpha}: the parameter line of the conic. alpha
/// is the identity of the product and equal only to itself.
class ParamValue {
public:
    static ParamValue alpha() { return ParamValue(); }
    static ParamValue finite(FieldValue m) { return ParamValue(std::move(m)); }

    bool is_alpha() const { return !m_.has_value(); }
    const FieldValue& value() const;

    bool operator==(const ParamValue& o) const;
    bool operator!=(const ParamValue& o) const { return !(*this == o); }
    std::string str() const;  // "m" or "alpha"

private:
    ParamValue() = default;
    explicit ParamValue(FieldValue m) : m_(std::move(m)) {}
    std::optional<FieldValue> m_;
};

// (x,y) * (u,v) = (xu + yvd, yu + xv + yvh)
ConicPoint mul(const ConicPoint& p, const ConicPoint& q);

// (x,y)^-1 = (x + hy, -y)
ConicPoint inverse(const ConicPoint& p);

// n-fold product by binary squaring, O(log |n|) group operations; n = 0
// gives (1,0), n < 0 inverts first.
ConicPoint pow(const ConicPoint& p, std::int64_t n);

// Parametrization: m -> ((m^2+d)/(m^2+hm-d), (2m+h)/(m^2+hm-d)),
// alpha -> (1,0). Raises parametrization-pole when m^2+hm-d = 0 (possible
// only when x^2-hx-d is reducible).
ConicPoint eps(const ParamValue& m, const ConicParams& params);

// Inverse parametrization: y != 0 -> (1+x)/y; (1,0) -> alpha;
// (-1,0) -> -h/2.
ParamValue tau(const ConicPoint& p);

// a . b = (d + ab)/(h + a + b), with alpha the identity and a . b = alpha
// when a + b = -h.
ParamValue mul(const ParamValue& a, const ParamValue& b, const ConicParams& params);

// Inverse under the parametric product: finite a -> -h - a; alpha -> alpha.
ParamValue inverse(const ParamValue& a, const ConicParams& params);

ConicPoint parse_point(const std::string& text, const ConicParams& params);
ParamValue parse_param(const std::string& text, const FieldSpec& spec);

}  // namespace conic
