#include "conic/quadratic_irrational.hpp"

#include "conic/errors.hpp"

namespace conic {

namespace {
void require_same_radicand(const QExt& a, const QExt& b) {
    // Rational values embed in any extension; otherwise radicands must agree.
    if (a.v != 0 && b.v != 0 && a.t != b.t)
        raise(errc::parameter_mismatch,
              "mixed radicands: sqrt(" + a.t.str() + ") vs sqrt(" + b.t.str() + ")");
}

Int common_t(const QExt& a, const QExt& b) { return a.v != 0 ? a.t : b.t; }
}  // namespace

QExt qext_of(const Rat& r, const Int& t) { return QExt{r, Rat(0), t}; }

QExt operator+(const QExt& a, const QExt& b) {
    require_same_radicand(a, b);
    return QExt{a.u + b.u, a.v + b.v, common_t(a, b)};
}

QExt operator-(const QExt& a, const QExt& b) {
    require_same_radicand(a, b);
    return QExt{a.u - b.u, a.v - b.v, common_t(a, b)};
}

QExt operator-(const QExt& a) { return QExt{-a.u, -a.v, a.t}; }

QExt operator*(const QExt& a, const QExt& b) {
    require_same_radicand(a, b);
    Int t = common_t(a, b);
    return QExt{a.u * b.u + a.v * b.v * Rat(t), a.u * b.v + a.v * b.u, t};
}

QExt operator/(const QExt& a, const QExt& b) {
    require_same_radicand(a, b);
    if (b.is_zero()) raise(errc::division_by_zero, "division by zero in Q(sqrt(t))");
    Int t = common_t(a, b);
    // 1/(u + v sqrt(t)) = (u - v sqrt(t)) / (u^2 - v^2 t)
    Rat n = b.u * b.u - b.v * b.v * Rat(t);
    if (n == 0) raise(errc::division_by_zero, "zero-norm denominator (t is a square?)");
    QExt conj{b.u, -b.v, t};
    QExt prod = a * conj;
    return QExt{prod.u / n, prod.v / n, t};
}

bool operator==(const QExt& a, const QExt& b) {
    if (a.v == 0 || b.v == 0) return a.u == b.u && a.v == b.v;
    return a.u == b.u && a.v == b.v && a.t == b.t;
}

QExt sqrt_rat_qext(const Rat& c) {
    if (c < 0) raise(errc::invalid_argument, "sqrt of negative rational");
    if (c == 0) return QExt{Rat(0), Rat(0), Int(1)};
    // sqrt(p/q) = sqrt(p*q)/q = (f/q) sqrt(t) after pulling square factors.
    Int pq = num(c) * den(c);
    auto [f, t] = extract_square(pq);
    if (t == 1) return QExt{Rat(f, den(c)), Rat(0), Int(1)};
    return QExt{Rat(0), Rat(f, den(c)), t};
}

QuadraticIrrational::QuadraticIrrational(Rat r, Rat s, Int t)
    : r_(std::move(r)), s_(std::move(s)), t_(std::move(t)) {
    if (s_ == 0) raise(errc::invalid_argument, "coefficient s must be nonzero");
    if (t_ <= 0) raise(errc::invalid_argument, "radicand must be positive");
    auto [f, reduced] = extract_square(t_);
    s_ *= Rat(f);
    t_ = reduced;
    if (t_ == 1)
        raise(errc::invalid_argument, "radicand is a perfect square; the value is rational");
}

RatInterval QuadraticIrrational::to_interval(unsigned prec) const {
    Rat tr(t_);
    RatInterval root(sqrt_lower(tr, prec), sqrt_upper(tr, prec));
    return RatInterval::point(r_) + RatInterval::point(s_) * root;
}

std::string QuadraticIrrational::str() const {
    std::string out;
    if (r_ != 0) out += rat_str(r_) + (s_ > 0 ? " + " : " - ");
    else if (s_ < 0) out += "-";
    Rat as = rat_abs(s_);
    if (as != 1) out += rat_str(as) + "*";
    out += "sqrt(" + t_.str() + ")";
    return out;
}

std::string QuadraticIrrational::reciprocal_str() const {
    // v = 1/(u + w sqrt(t)) where (u, w) = conj(v)/N(v); clear denominators.
    QExt self{r_, s_, t_};
    QExt inv = qext_of(Rat(1), t_) / self;
    Int l = lcm(den(inv.u), den(inv.v));
    Int q = num(inv.u) * (l / den(inv.u));
    Int s = num(inv.v) * (l / den(inv.v));
    // Keep the leading denominator positive.
    if (q < 0 || (q == 0 && s < 0)) {
        l = -l;
        q = -q;
        s = -s;
    }
    std::string tail = s < 0 ? " - " : " + ";
    Int as = abs(s);
    std::string coeff = as == 1 ? "" : as.str() + "*";
    return l.str() + "/(" + q.str() + tail + coeff + "sqrt(" + t_.str() + "))";
}

bool QuadraticIrrational::operator==(const QuadraticIrrational& o) const {
    // r + s sqrt(t) = r' + s' sqrt(t') iff the rational parts agree and the
    // radical parts have equal squares and signs.
    return r_ == o.r_ && rat_sign(s_) == rat_sign(o.s_) &&
           s_ * s_ * Rat(t_) == o.s_ * o.s_ * Rat(o.t_);
}

LimitValue limit_from_qext(const QExt& v) {
    if (v.is_rational()) return v.u;
    return QuadraticIrrational(v.u, v.v, v.t);
}

RatInterval limit_interval(const LimitValue& v, unsigned prec) {
    if (std::holds_alternative<Rat>(v)) return RatInterval::point(std::get<Rat>(v));
    return std::get<QuadraticIrrational>(v).to_interval(prec);
}

std::string limit_str(const LimitValue& v) {
    if (std::holds_alternative<Rat>(v)) return rat_str(std::get<Rat>(v));
    return std::get<QuadraticIrrational>(v).str();
}

}  // namespace conic
