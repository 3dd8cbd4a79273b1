#include "conic/field.hpp"

#include <cctype>

#include "conic/errors.hpp"

namespace conic {

namespace {
constexpr unsigned kEqualityGuardDigits = 8;
constexpr unsigned kWorkingMarginDigits = 12;
}  // namespace

FieldSpec FieldSpec::rationals() { return FieldSpec(FieldKind::rational, Int(0), 0); }

FieldSpec FieldSpec::prime_field(const Int& p) {
    if (p == 2)
        raise(errc::invalid_argument,
              "characteristic 2 is not supported (trace and parametrization divide by 2)");
    if (!is_prime(p)) raise(errc::invalid_argument, "fp modulus must be an odd prime: " + p.str());
    return FieldSpec(FieldKind::prime, p, 0);
}

FieldSpec FieldSpec::reals(unsigned digits) {
    if (digits < 16) raise(errc::invalid_argument, "real field needs at least 16 digits");
    return FieldSpec(FieldKind::real, Int(0), digits);
}

const Int& FieldSpec::prime() const {
    if (kind_ != FieldKind::prime) raise(errc::invalid_argument, "spec is not a prime field");
    return p_;
}

unsigned FieldSpec::digits() const {
    if (kind_ != FieldKind::real) raise(errc::invalid_argument, "spec is not a real field");
    return digits_;
}

Rat FieldSpec::tolerance() const {
    return Rat(1, pow10(digits() - kEqualityGuardDigits));
}

unsigned FieldSpec::working_precision() const { return digits() + kWorkingMarginDigits; }

bool FieldSpec::operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && digits_ == o.digits_;
}

std::string FieldSpec::str() const {
    switch (kind_) {
        case FieldKind::rational: return "rational";
        case FieldKind::prime: return "fp:" + p_.str();
        case FieldKind::real: return "real:" + std::to_string(digits_);
    }
    return "?";
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "rational" || text == "q" || text == "Q") return rationals();
    if (text.rfind("fp:", 0) == 0) return prime_field(Int(text.substr(3)));
    if (text.rfind("real:", 0) == 0) {
        int d = std::stoi(text.substr(5));
        if (d < 0) raise(errc::invalid_argument, "negative precision");
        return reals(static_cast<unsigned>(d));
    }
    raise(errc::invalid_argument, "bad field spec '" + text + "' (rational | fp:<p> | real:<digits>)");
}

FieldValue FieldValue::rational(Rat v) {
    return FieldValue(FieldSpec::rationals(), std::move(v));
}

FieldValue FieldValue::mod_p(Int v, const Int& p) {
    FieldSpec spec = FieldSpec::prime_field(p);
    return FieldValue(std::move(spec), mod_floor(v, p));
}

FieldValue FieldValue::real(RatInterval iv, unsigned digits) {
    return FieldValue(FieldSpec::reals(digits), std::move(iv));
}

FieldValue FieldValue::zero(const FieldSpec& spec) { return from_int(0, spec); }
FieldValue FieldValue::one(const FieldSpec& spec) { return from_int(1, spec); }

FieldValue FieldValue::from_int(long v, const FieldSpec& spec) {
    return from_rat(Rat(v), spec);
}

FieldValue FieldValue::from_rat(const Rat& v, const FieldSpec& spec) {
    switch (spec.kind()) {
        case FieldKind::rational: return rational(v);
        case FieldKind::prime: {
            // p/q mod p' via modular inverse of the denominator.
            FieldValue n = FieldValue(spec, mod_floor(num(v), spec.prime()));
            if (den(v) == 1) return n;
            FieldValue d = FieldValue(spec, mod_floor(den(v), spec.prime()));
            return n / d;
        }
        case FieldKind::real: return FieldValue(spec, RatInterval::point(v));
    }
    raise(errc::invalid_argument, "bad field kind");
}

const Rat& FieldValue::as_rat() const {
    if (kind() != FieldKind::rational) raise(errc::invalid_argument, "value is not rational-kind");
    return std::get<Rat>(v_);
}

const Int& FieldValue::residue() const {
    if (kind() != FieldKind::prime) raise(errc::invalid_argument, "value is not prime-kind");
    return std::get<Int>(v_);
}

const RatInterval& FieldValue::interval() const {
    if (kind() != FieldKind::real) raise(errc::invalid_argument, "value is not real-kind");
    return std::get<RatInterval>(v_);
}

void FieldValue::require_same(const FieldValue& a, const FieldValue& b) {
    if (a.spec_ != b.spec_)
        raise(errc::parameter_mismatch,
              "field mismatch: " + a.spec_.str() + " vs " + b.spec_.str());
}

FieldValue operator+(const FieldValue& a, const FieldValue& b) {
    FieldValue::require_same(a, b);
    switch (a.kind()) {
        case FieldKind::rational: return FieldValue(a.spec_, Rat(a.as_rat() + b.as_rat()));
        case FieldKind::prime:
            return FieldValue(a.spec_, mod_floor(a.residue() + b.residue(), a.spec_.prime()));
        case FieldKind::real: return FieldValue(a.spec_, a.interval() + b.interval());
    }
    raise(errc::invalid_argument, "bad field kind");
}

FieldValue operator-(const FieldValue& a, const FieldValue& b) { return a + (-b); }

FieldValue operator*(const FieldValue& a, const FieldValue& b) {
    FieldValue::require_same(a, b);
    switch (a.kind()) {
        case FieldKind::rational: return FieldValue(a.spec_, Rat(a.as_rat() * b.as_rat()));
        case FieldKind::prime:
            return FieldValue(a.spec_, mod_floor(a.residue() * b.residue(), a.spec_.prime()));
        case FieldKind::real: return FieldValue(a.spec_, a.interval() * b.interval());
    }
    raise(errc::invalid_argument, "bad field kind");
}

FieldValue operator/(const FieldValue& a, const FieldValue& b) { return a * b.inverse(); }

FieldValue FieldValue::operator-() const {
    switch (kind()) {
        case FieldKind::rational: return FieldValue(spec_, Rat(-as_rat()));
        case FieldKind::prime: return FieldValue(spec_, mod_floor(-residue(), spec_.prime()));
        case FieldKind::real: return FieldValue(spec_, -interval());
    }
    raise(errc::invalid_argument, "bad field kind");
}

FieldValue FieldValue::inverse() const {
    if (is_zero()) raise(errc::division_by_zero, "inverse of zero");
    switch (kind()) {
        case FieldKind::rational: return FieldValue(spec_, Rat(1 / as_rat()));
        case FieldKind::prime: {
            const Int& p = spec_.prime();
            Int e = p - 2;
            Int inv = powm(residue(), e, p);  // p prime, residue nonzero
            return FieldValue(spec_, inv);
        }
        case FieldKind::real: {
            const RatInterval& iv = interval();
            return FieldValue(spec_, RatInterval(Rat(1) / iv.hi, Rat(1) / iv.lo));
        }
    }
    raise(errc::invalid_argument, "bad field kind");
}

bool FieldValue::operator==(const FieldValue& o) const {
    require_same(*this, o);
    switch (kind()) {
        case FieldKind::rational: return as_rat() == o.as_rat();
        case FieldKind::prime: return residue() == o.residue();
        case FieldKind::real: {
            RatInterval diff = interval() - o.interval();
            return diff.sup_abs() <= spec_.tolerance();
        }
    }
    return false;
}

bool FieldValue::is_zero() const {
    switch (kind()) {
        case FieldKind::rational: return as_rat() == 0;
        case FieldKind::prime: return residue() == 0;
        case FieldKind::real: return interval().contains_zero();
    }
    return false;
}

int FieldValue::sign() const {
    switch (kind()) {
        case FieldKind::rational: return rat_sign(as_rat());
        case FieldKind::prime:
            raise(errc::unordered_field, "prime fields are unordered");
        case FieldKind::real: {
            auto s = interval().sign();
            if (!s)
                raise(errc::precision_exhausted,
                      "interval straddles zero; sign undecidable at this precision");
            return *s;
        }
    }
    raise(errc::invalid_argument, "bad field kind");
}

std::string FieldValue::str() const {
    switch (kind()) {
        case FieldKind::rational: return rat_str(as_rat());
        case FieldKind::prime: return residue().str() + " mod " + spec_.prime().str();
        case FieldKind::real: return iv_decimal(interval(), spec_.digits());
    }
    return "?";
}

std::string FieldValue::decimal(unsigned digits) const {
    switch (kind()) {
        case FieldKind::rational: return to_decimal_trunc(as_rat(), digits);
        case FieldKind::prime: raise(errc::unordered_field, "no decimal form over a prime field");
        case FieldKind::real: return iv_decimal(interval(), digits);
    }
    return "?";
}

ConicParams::ConicParams(FieldValue h, FieldValue d)
    : h_(std::move(h)), d_(std::move(d)), delta_(h_ * h_ + (d_ + d_ + d_ + d_)) {
    if (h_.spec() != d_.spec())
        raise(errc::parameter_mismatch, "h and d must live in the same field");
}

std::string ConicParams::str() const {
    return "E(" + h_.str() + ", " + d_.str() + ") over " + spec().str();
}

const char* conic_class_name(ConicClass c) {
    switch (c) {
        case ConicClass::ellipse: return "ellipse";
        case ConicClass::parabola: return "parabola";
        case ConicClass::hyperbola: return "hyperbola";
    }
    return "?";
}

bool poly_irreducible(const ConicParams& params) {
    switch (params.spec().kind()) {
        case FieldKind::rational:
            // Irreducible over Q iff delta is not the square of a rational.
            return !rat_is_square(params.delta().as_rat());
        case FieldKind::prime: {
            const Int& p = params.spec().prime();
            Int delta = params.delta().residue();
            if (delta == 0) return false;  // double root h/2
            // Euler's criterion: non-residue <=> delta^((p-1)/2) = -1.
            Int exp = (p - 1) / 2;
            Int e = powm(delta, exp, p);
            return e == p - 1;
        }
        case FieldKind::real:
            raise(errc::analytic_field,
                  "analytic field: irreducible iff delta < 0; use conic_class");
    }
    raise(errc::invalid_argument, "bad field kind");
}

ConicClass conic_class(const ConicParams& params) {
    if (params.spec().kind() == FieldKind::prime)
        raise(errc::unordered_field, "unordered field: no conic class");
    int s = params.delta().sign();
    if (s > 0) return ConicClass::hyperbola;
    if (s < 0) return ConicClass::ellipse;
    return ConicClass::parabola;
}

FieldValue parse_scalar(const std::string& text, const FieldSpec& spec) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) || spec.kind() == FieldKind::prime)
            s += c;

    switch (spec.kind()) {
        case FieldKind::rational: return FieldValue::rational(parse_rat(s));
        case FieldKind::prime: {
            auto pos = s.find(" mod ");
            if (pos != std::string::npos) {
                std::string ptext;
                for (char c : s.substr(pos + 5))
                    if (!std::isspace(static_cast<unsigned char>(c))) ptext += c;
                Int p(ptext);
                if (p != spec.prime())
                    raise(errc::parameter_mismatch,
                          "modulus " + p.str() + " does not match field " + spec.str());
                s = s.substr(0, pos);
            }
            std::string compact;
            for (char c : s)
                if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
            return FieldValue::from_rat(parse_rat(compact), spec);
        }
        case FieldKind::real: {
            unsigned prec = spec.working_precision();
            if (s == "pi") return FieldValue::real(pi_interval(prec), spec.digits());
            if (s.rfind("sqrt:", 0) == 0) {
                Int k(s.substr(5));
                if (k <= 0) raise(errc::invalid_argument, "sqrt:k needs k > 0");
                Rat kr(k);
                return FieldValue::real(
                    RatInterval(sqrt_lower(kr, prec), sqrt_upper(kr, prec)), spec.digits());
            }
            return FieldValue::real(RatInterval::point(parse_rat(s)), spec.digits());
        }
    }
    raise(errc::invalid_argument, "bad field kind");
}

}  // namespace conic
