#include "conic/group.hpp"

#include "conic/errors.hpp"

namespace conic {

namespace {
void require_same(const ConicParams& a, const ConicParams& b) {
    if (a != b)
        raise(errc::parameter_mismatch, "points over different conics: " + a.str() + " vs " + b.str());
}
}  // namespace

bool on_conic(const FieldValue& x, const FieldValue& y, const ConicParams& params) {
    FieldValue lhs = x * x + params.h() * x * y - params.d() * y * y;
    return lhs == FieldValue::one(params.spec());
}

ConicPoint::ConicPoint(FieldValue x, FieldValue y, ConicParams params)
    : x_(std::move(x)), y_(std::move(y)), params_(std::move(params)) {
    if (!on_conic(x_, y_, params_))
        raise(errc::not_on_conic,
              "(" + x_.str() + ", " + y_.str() + ") does not satisfy " + params_.str());
}

ConicPoint ConicPoint::identity(const ConicParams& params) {
    return ConicPoint(FieldValue::one(params.spec()), FieldValue::zero(params.spec()), params);
}

std::string ConicPoint::str() const { return "(" + x_.str() + ", " + y_.str() + ")"; }

const FieldValue& ParamValue::value() const {
    if (is_alpha()) raise(errc::invalid_argument, "alpha has no finite value");
    return *m_;
}

bool ParamValue::operator==(const ParamValue& o) const {
    if (is_alpha() || o.is_alpha()) return is_alpha() == o.is_alpha();
    return *m_ == *o.m_;
}

std::string ParamValue::str() const { return is_alpha() ? "alpha" : m_->str(); }

ConicPoint mul(const ConicPoint& p, const ConicPoint& q) {
    require_same(p.params(), q.params());
    const FieldValue& h = p.params().h();
    const FieldValue& d = p.params().d();
    FieldValue x = p.x() * q.x() + p.y() * q.y() * d;
    FieldValue y = p.y() * q.x() + p.x() * q.y() + p.y() * q.y() * h;
    return ConicPoint(std::move(x), std::move(y), p.params());  // closure asserted
}

ConicPoint inverse(const ConicPoint& p) {
    return ConicPoint(p.x() + p.params().h() * p.y(), -p.y(), p.params());
}

ConicPoint pow(const ConicPoint& p, std::int64_t n) {
    const ConicParams& params = p.params();
    if (n == 0) return ConicPoint::identity(params);

    ConicPoint base = p;
    std::uint64_t mag;
    if (n < 0) {
        base = inverse(p);
        mag = n == INT64_MIN ? (std::uint64_t(1) << 63) : static_cast<std::uint64_t>(-n);
    } else {
        mag = static_cast<std::uint64_t>(n);
    }

    const FieldValue& h = params.h();
    const FieldValue& d = params.d();
    FieldValue rx = FieldValue::one(params.spec()), ry = FieldValue::zero(params.spec());
    FieldValue bx = base.x(), by = base.y();
    while (mag > 0) {
        if (mag & 1) {
            FieldValue nx = rx * bx + ry * by * d;
            ry = ry * bx + rx * by + ry * by * h;
            rx = std::move(nx);
        }
        mag >>= 1;
        if (mag > 0) {
            FieldValue nx = bx * bx + by * by * d;
            by = by * bx + bx * by + by * by * h;
            bx = std::move(nx);
        }
    }
    return ConicPoint(std::move(rx), std::move(ry), params);  // validates closure
}

ConicPoint eps(const ParamValue& m, const ConicParams& params) {
    if (m.is_alpha()) return ConicPoint::identity(params);
    const FieldValue& v = m.value();
    FieldValue denom = v * v + params.h() * v - params.d();
    if (denom.is_zero())
        raise(errc::parametrization_pole,
              "m = " + v.str() + " is a root of m^2 + hm - d (reducible polynomial)");
    FieldValue x = (v * v + params.d()) / denom;
    FieldValue y = (v + v + params.h()) / denom;
    return ConicPoint(std::move(x), std::move(y), params);
}

ParamValue tau(const ConicPoint& p) {
    const FieldSpec& spec = p.params().spec();
    if (!p.y().is_zero())
        return ParamValue::finite((FieldValue::one(spec) + p.x()) / p.y());
    FieldValue one = FieldValue::one(spec);
    if (p.x() == one) return ParamValue::alpha();
    if (p.x() != -one)
        raise(errc::precision_exhausted, "y = 0 but x is not +-1: " + p.str());
    FieldValue two = FieldValue::from_int(2, spec);
    return ParamValue::finite(-p.params().h() / two);
}

ParamValue mul(const ParamValue& a, const ParamValue& b, const ConicParams& params) {
    if (a.is_alpha()) return b;
    if (b.is_alpha()) return a;
    const FieldValue& av = a.value();
    const FieldValue& bv = b.value();
    FieldValue denom = params.h() + av + bv;
    if (denom.is_zero()) return ParamValue::alpha();
    return ParamValue::finite((params.d() + av * bv) / denom);
}

ParamValue inverse(const ParamValue& a, const ConicParams& params) {
    if (a.is_alpha()) return ParamValue::alpha();
    return ParamValue::finite(-params.h() - a.value());
}

ConicPoint parse_point(const std::string& text, const ConicParams& params) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    auto comma = text.find(',');
    if (open == std::string::npos || close == std::string::npos || comma == std::string::npos ||
        !(open < comma && comma < close))
        raise(errc::invalid_argument, "expected '(x, y)': '" + text + "'");
    FieldValue x = parse_scalar(text.substr(open + 1, comma - open - 1), params.spec());
    FieldValue y = parse_scalar(text.substr(comma + 1, close - comma - 1), params.spec());
    return ConicPoint(std::move(x), std::move(y), params);
}

ParamValue parse_param(const std::string& text, const FieldSpec& spec) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "alpha") return ParamValue::alpha();
    return ParamValue::finite(parse_scalar(text, spec));
}

}  // namespace conic
