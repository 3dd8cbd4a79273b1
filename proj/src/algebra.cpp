#include "conic/algebra.hpp"

#include "conic/errors.hpp"

namespace conic {

namespace {
void require_same(const AlgebraElement& u, const AlgebraElement& v) {
    if (u.params != v.params)
        raise(errc::parameter_mismatch,
              "algebra elements over different conics: " + u.params.str() + " vs " + v.params.str());
}
}  // namespace

AlgebraElement AlgebraElement::one(const ConicParams& params) {
    return AlgebraElement(FieldValue::one(params.spec()), FieldValue::zero(params.spec()), params);
}

std::string AlgebraElement::str() const { return a.str() + " + " + b.str() + "*x"; }

AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v) {
    require_same(u, v);
    const FieldValue& h = u.params.h();
    const FieldValue& d = u.params.d();
    FieldValue a = u.a * v.a + u.b * v.b * d;
    FieldValue b = u.b * v.a + u.a * v.b + u.b * v.b * h;
    return AlgebraElement(std::move(a), std::move(b), u.params);
}

AlgebraElement conj(const AlgebraElement& u) {
    return AlgebraElement(u.a + u.params.h() * u.b, -u.b, u.params);
}

FieldValue norm(const AlgebraElement& u) {
    return u.a * u.a + u.params.h() * u.a * u.b - u.params.d() * u.b * u.b;
}

FieldValue trace(const AlgebraElement& u) {
    return u.a + u.a + u.params.h() * u.b;
}

AlgebraElement inverse(const AlgebraElement& u) {
    FieldValue n = norm(u);
    if (n.is_zero())
        raise(errc::non_invertible, "zero-norm element (zero divisor): " + u.str());
    FieldValue ninv = n.inverse();
    AlgebraElement c = conj(u);
    return AlgebraElement(c.a * ninv, c.b * ninv, u.params);
}

AlgebraElement parse_algebra(const std::string& text, const ConicParams& params) {
    // Accepts "a + b*x" / "a - b*x" / "a + b·x"; scalars in field syntax.
    auto xpos = text.rfind("*x");
    std::size_t cut = std::string::npos;
    std::size_t mark = xpos;
    if (mark == std::string::npos) {
        auto mid = text.rfind("\xc2\xb7x");  // middle dot, UTF-8
        if (mid != std::string::npos) mark = mid;
    }
    if (mark == std::string::npos)
        raise(errc::invalid_argument, "expected 'a + b*x': '" + text + "'");
    // Split at the sign separating the two terms: last top-level " + " or " - ".
    for (std::size_t i = mark; i > 0; --i) {
        char c = text[i - 1];
        if ((c == '+' || c == '-') && i >= 2 && text[i - 2] == ' ') {
            cut = i - 1;
            break;
        }
    }
    if (cut == std::string::npos)
        raise(errc::invalid_argument, "expected 'a + b*x': '" + text + "'");
    std::string a_text = text.substr(0, cut);
    std::string b_text = text.substr(cut + 1, mark - cut - 1);
    FieldValue a = parse_scalar(a_text, params.spec());
    FieldValue b = parse_scalar(b_text, params.spec());
    if (text[cut] == '-') b = -b;
    return AlgebraElement(std::move(a), std::move(b), params);
}

}  // namespace conic
