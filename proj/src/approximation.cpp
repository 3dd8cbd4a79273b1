#include "conic/approximation.hpp"

#include <algorithm>
#include <cctype>

#include "conic/errors.hpp"

namespace conic {

RealNumber RealNumber::rational(Rat v) {
    RealNumber r;
    r.kind_ = Kind::rational;
    r.rat_ = std::move(v);
    return r;
}

RealNumber RealNumber::quadratic(QuadraticIrrational q) {
    RealNumber r;
    r.kind_ = Kind::quadratic;
    r.quad_ = std::move(q);
    return r;
}

RealNumber RealNumber::interval(RatInterval iv) {
    RealNumber r;
    r.kind_ = Kind::interval;
    r.iv_ = std::move(iv);
    return r;
}

const Rat& RealNumber::rat() const {
    if (kind_ != Kind::rational) raise(errc::invalid_argument, "not a rational target");
    return rat_;
}

const QuadraticIrrational& RealNumber::quad() const {
    if (kind_ != Kind::quadratic) raise(errc::invalid_argument, "not a quadratic target");
    return *quad_;
}

const RatInterval& RealNumber::iv() const {
    if (kind_ != Kind::interval) raise(errc::invalid_argument, "not an interval target");
    return iv_;
}

RatInterval RealNumber::approx(unsigned prec) const {
    switch (kind_) {
        case Kind::rational: return RatInterval::point(rat_);
        case Kind::quadratic: return quad_->to_interval(prec);
        case Kind::interval: return iv_;
    }
    raise(errc::invalid_argument, "bad real kind");
}

std::string RealNumber::str() const {
    switch (kind_) {
        case Kind::rational: return rat_str(rat_);
        case Kind::quadratic: return quad_->str();
        case Kind::interval: return iv_decimal(iv_, 24) + "...";
    }
    return "?";
}

RealNumber parse_real_target(const std::string& text, unsigned prec) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "pi") return RealNumber::interval(pi_interval(prec));
    if (s.rfind("sqrt:", 0) == 0) {
        Int k(s.substr(5));
        if (k <= 0) raise(errc::invalid_argument, "sqrt:k needs k > 0");
        QExt root = sqrt_rat_qext(Rat(k));
        if (root.is_rational()) return RealNumber::rational(root.u);
        return RealNumber::quadratic(QuadraticIrrational(root.u, root.v, root.t));
    }
    if (s.rfind("rat:", 0) == 0) return RealNumber::rational(parse_rat(s.substr(4)));
    return RealNumber::rational(parse_rat(s));
}

// ---------------------------------------------------------------------------
// Continued fractions

std::vector<std::pair<Int, Int>> cf_convergents(const std::vector<Int>& digits) {
    if (digits.empty()) raise(errc::invalid_argument, "expansion has no digits");
    std::vector<std::pair<Int, Int>> out;
    out.reserve(digits.size());
    Int p_prev = 1, p_prev2 = 0;  // p_{-1}, p_{-2}
    Int q_prev = 0, q_prev2 = 1;  // q_{-1}, q_{-2}
    for (const Int& a : digits) {
        Int p = a * p_prev + p_prev2;
        Int q = a * q_prev + q_prev2;
        out.emplace_back(p, q);
        p_prev2 = std::move(p_prev);
        p_prev = p;
        q_prev2 = std::move(q_prev);
        q_prev = q;
    }
    return out;
}

namespace {

CFExpansion cf_of_rational(const Rat& v, std::size_t max_digits) {
    CFExpansion e;
    Int n = num(v), d = den(v);
    while (e.digits.size() < max_digits) {
        Int a = floor_div(n, d);
        e.digits.push_back(a);
        Int r = n - a * d;
        if (r == 0) {
            e.terminated = true;
            break;
        }
        n = std::move(d);
        d = std::move(r);
    }
    e.reliable_count = e.digits.size();
    return e;
}

// Exact floor of (P + sqrt(D)) / Q for nonsquare D > 0, Q != 0.
Int quad_floor(const Int& P, const Int& D, const Int& Q) {
    Int s = isqrt(D);
    // value >= t  <=>  sqrt(D) >= tQ - P   (Q > 0)
    //             <=>  sqrt(D) <= tQ - P   (Q < 0)
    auto value_ge = [&](const Int& t) {
        Int e = t * Q - P;
        if (Q > 0) return e <= 0 || D > e * e;  // sqrt(D) irrational: never equal
        return e >= 0 && D < e * e;
    };
    Int a = Q > 0 ? floor_div(P + s, Q) : floor_div(P + s + 1, Q);
    while (value_ge(a + 1)) ++a;
    while (!value_ge(a)) --a;
    return a;
}

CFExpansion cf_of_quadratic(const QuadraticIrrational& qi, std::size_t max_digits) {
    // alpha = (A + B sqrt(t)) / C with integers; normalize to B > 0 by
    // flipping all signs, then to Q | (D - P^2) by the standard scaling.
    Int rd = den(qi.rational_part()), sd = den(qi.coeff());
    Int m = lcm(rd, sd);
    Int A = num(qi.rational_part()) * (m / rd);
    Int B = num(qi.coeff()) * (m / sd);
    Int C = m;
    if (B < 0) {
        A = -A;
        B = -B;
        C = -C;
    }
    Int P = A;
    Int D = B * B * qi.radicand();
    Int Q = C;
    if ((D - P * P) % Q != 0) {
        Int aq = abs(Q);
        P *= aq;
        D *= Q * Q;
        Q *= aq;
    }

    CFExpansion e;
    while (e.digits.size() < max_digits) {
        Int a = quad_floor(P, D, Q);
        e.digits.push_back(a);
        Int Pn = a * Q - P;
        Int num_next = D - Pn * Pn;
        if (num_next % Q != 0)
            raise(errc::invalid_argument, "quadratic CF state lost divisibility");
        Int Qn = num_next / Q;
        P = std::move(Pn);
        Q = std::move(Qn);
    }
    e.reliable_count = e.digits.size();
    return e;
}

CFExpansion cf_of_interval(const RatInterval& target, std::size_t max_digits) {
    CFExpansion e;
    RatInterval iv = target;
    while (e.digits.size() < max_digits) {
        Int flo = rat_floor(iv.lo);
        Int fhi = rat_floor(iv.hi);
        if (flo != fhi) break;  // digit ambiguous at this precision
        e.digits.push_back(flo);
        RatInterval frac = iv - RatInterval::point(Rat(flo));
        if (frac.lo <= 0) break;  // cannot certify the reciprocal
        iv = RatInterval(Rat(1) / frac.hi, Rat(1) / frac.lo);
    }
    e.reliable_count = e.digits.size();
    return e;
}

}  // namespace

CFExpansion cf_expand(const RealNumber& target, std::size_t max_digits, const FieldSpec& spec) {
    if (max_digits == 0) raise(errc::invalid_argument, "need max_digits >= 1");
    CFExpansion e;
    switch (target.kind()) {
        case RealNumber::Kind::rational: e = cf_of_rational(target.rat(), max_digits); break;
        case RealNumber::Kind::quadratic: e = cf_of_quadratic(target.quad(), max_digits); break;
        case RealNumber::Kind::interval:
            if (spec.kind() != FieldKind::real)
                raise(errc::invalid_argument,
                      "interval targets need a real field spec for the working precision");
            e = cf_of_interval(target.iv(), max_digits);
            break;
    }
    if (!e.digits.empty()) e.convergents = cf_convergents(e.digits);
    return e;
}

// ---------------------------------------------------------------------------
// Ratio limits

LimitValue recurrence_ratio_limit(const RecurrenceLimitSpec& s) {
    if (s.c <= 0)
        raise(errc::no_real_dominant_root, "c <= 0: no real distinct characteristic roots");
    if (s.w == 0)
        raise(errc::no_real_dominant_root, "w = 0: roots of equal magnitude, no dominant root");
    QExt root = sqrt_rat_qext(s.c);
    // Dominant root is w + sqrt(c) for w > 0, w - sqrt(c) for w < 0.
    if (s.w < 0) root = -root;
    if (root.is_rational()) {
        Rat a1 = s.a1 - s.a0 * s.w + s.a0 * root.u;
        Rat b1 = s.b1 - s.b0 * s.w + s.b0 * root.u;
        if (b1 == 0)
            raise(errc::degenerate_limit, "dominant coefficient of the b-sequence is zero");
        return Rat(a1 / b1);
    }
    const Int& t = root.t;
    QExt a1{s.a1 - s.a0 * s.w, s.a0 * root.v, t};
    QExt b1{s.b1 - s.b0 * s.w, s.b0 * root.v, t};
    if (b1.is_zero())
        raise(errc::degenerate_limit, "dominant coefficient of the b-sequence is zero");
    return limit_from_qext(a1 / b1);
}

LimitValue point_ratio_limit(const ConicPoint& p) {
    if (p.params().spec().kind() != FieldKind::rational)
        raise(errc::invalid_argument, "closed-form ratio limit needs a rational point");
    const Rat& x = p.x().as_rat();
    const Rat& y = p.y().as_rat();
    const Rat& h = p.params().h().as_rat();
    Rat tr = 2 * x + h * y;
    if (rat_abs(tr) <= 2)
        raise(errc::no_convergence,
              "|2x + hy| <= 2: complex characteristic roots, y_n/x_n does not converge");
    Rat w = tr / 2;
    Rat c = w * w - 1;
    return recurrence_ratio_limit(RecurrenceLimitSpec{Rat(0), y, Rat(1), x, w, c});
}

// ---------------------------------------------------------------------------
// Auxiliary irrational and approximation streams

const char* rationality_name(Rationality r) {
    switch (r) {
        case Rationality::rational: return "rational";
        case Rationality::irrational: return "irrational";
        case Rationality::unknown: return "unknown";
    }
    return "?";
}

namespace {

AuxiliaryRoot root_from_qext(const QExt& v) {
    if (v.is_rational())
        return AuxiliaryRoot{RealNumber::rational(v.u), Rationality::rational};
    return AuxiliaryRoot{RealNumber::quadratic(QuadraticIrrational(v.u, v.v, v.t)),
                         Rationality::irrational};
}

AuxiliaryRoots solve_with_rational_beta(const Rat& h, const Rat& d, const Rat& beta) {
    if (beta == 0) raise(errc::invalid_argument, "beta must be nonzero");
    Rat disc = 1 + beta * h - beta * beta * d;
    if (disc < 0)
        raise(errc::no_real_solution,
              "discriminant 1 + beta*h - beta^2*d = " + rat_str(disc) + " < 0");
    Rat rho;
    if (rat_is_square(disc, &rho))
        raise(errc::not_irrational, "both roots (1 +- " + rat_str(rho) + ")/" + rat_str(beta) +
                                        " are rational; the method needs an irrational root");
    QExt sq = sqrt_rat_qext(disc);
    QExt b = qext_of(beta, sq.t);
    QExt one = qext_of(Rat(1), sq.t);
    return AuxiliaryRoots{root_from_qext((one + sq) / b), root_from_qext((one - sq) / b)};
}

AuxiliaryRoots solve_with_quadratic_beta(const Rat& h, const Rat& d, const QuadraticIrrational& q,
                                         unsigned prec) {
    const Int& t = q.radicand();
    QExt b{q.rational_part(), q.coeff(), t};
    QExt one = qext_of(Rat(1), t);
    QExt disc = one + b * qext_of(h, t) - b * b * qext_of(d, t);
    if (disc.v == 0) {
        const Rat& u = disc.u;
        if (u < 0)
            raise(errc::no_real_solution,
                  "discriminant 1 + beta*h - beta^2*d = " + rat_str(u) + " < 0");
        Rat rho;
        if (rat_is_square(u, &rho)) {
            // sqrt(disc) rational: both roots stay inside Q(sqrt(t)).
            QExt rp = qext_of(rho, t);
            return AuxiliaryRoots{root_from_qext((one + rp) / b), root_from_qext((one - rp) / b)};
        }
        Rat ut = u * Rat(t);
        Rat g;
        if (rat_is_square(ut, &g)) {
            // sqrt(u) = (g/t) sqrt(t) lives in Q(sqrt(t)) too.
            QExt su{Rat(0), g / Rat(t), t};
            return AuxiliaryRoots{root_from_qext((one + su) / b), root_from_qext((one - su) / b)};
        }
        // sqrt(u) is in neither Q nor Q(sqrt(t)); the roots are irrational
        // (a rational root would force sqrt(u) into Q(sqrt(t))).
        RatInterval biv = q.to_interval(prec);
        RatInterval squ(sqrt_lower(u, prec), sqrt_upper(u, prec));
        RatInterval one_iv = RatInterval::point(Rat(1));
        return AuxiliaryRoots{
            AuxiliaryRoot{RealNumber::interval((one_iv + squ) / biv), Rationality::irrational},
            AuxiliaryRoot{RealNumber::interval((one_iv - squ) / biv), Rationality::irrational}};
    }
    // Irrational discriminant: nested radical, handled numerically.
    RatInterval biv = q.to_interval(prec);
    RatInterval disc_iv = RatInterval::point(Rat(1)) + biv * RatInterval::point(h) -
                          biv * biv * RatInterval::point(d);
    auto sign = disc_iv.sign();
    if (sign && *sign < 0)
        raise(errc::no_real_solution, "discriminant 1 + beta*h - beta^2*d < 0");
    if (!sign || *sign == 0)
        raise(errc::precision_exhausted, "cannot separate the discriminant from zero");
    RatInterval squ = sqrt_iv(disc_iv, prec);
    RatInterval one_iv = RatInterval::point(Rat(1));
    return AuxiliaryRoots{
        AuxiliaryRoot{RealNumber::interval((one_iv + squ) / biv), Rationality::unknown},
        AuxiliaryRoot{RealNumber::interval((one_iv - squ) / biv), Rationality::unknown}};
}

AuxiliaryRoots solve_with_interval_beta(const Rat& h, const Rat& d, const RatInterval& beta,
                                        unsigned prec) {
    if (beta.contains_zero())
        raise(errc::invalid_argument, "beta must be separated from zero");
    RatInterval one_iv = RatInterval::point(Rat(1));
    RatInterval disc = one_iv + beta * RatInterval::point(h) - beta * beta * RatInterval::point(d);
    auto sign = disc.sign();
    if (sign && *sign < 0)
        raise(errc::no_real_solution, "discriminant 1 + beta*h - beta^2*d < 0");
    if (!sign || *sign == 0)
        raise(errc::precision_exhausted, "cannot separate the discriminant from zero");
    RatInterval squ = sqrt_iv(disc, prec);
    return AuxiliaryRoots{
        AuxiliaryRoot{RealNumber::interval((one_iv + squ) / beta), Rationality::unknown},
        AuxiliaryRoot{RealNumber::interval((one_iv - squ) / beta), Rationality::unknown}};
}

}  // namespace

AuxiliaryRoots solve_auxiliary(const Rat& h, const Rat& d, const RealNumber& beta, unsigned prec) {
    switch (beta.kind()) {
        case RealNumber::Kind::rational: return solve_with_rational_beta(h, d, beta.rat());
        case RealNumber::Kind::quadratic: return solve_with_quadratic_beta(h, d, beta.quad(), prec);
        case RealNumber::Kind::interval: return solve_with_interval_beta(h, d, beta.iv(), prec);
    }
    raise(errc::invalid_argument, "bad real kind");
}

namespace {

unsigned precision_for(const FieldSpec& spec) {
    return spec.kind() == FieldKind::real ? spec.working_precision() : 48;
}

}  // namespace

ApproxResult approx_over_conic(const Rat& h, const Rat& d, const RealNumber& beta,
                               std::size_t steps, const FieldSpec& spec, RootSign sign) {
    unsigned prec = precision_for(spec);
    AuxiliaryRoots roots = solve_auxiliary(h, d, beta, prec);
    ApproxResult result;
    result.root = sign == RootSign::plus ? roots.plus : roots.minus;
    if (result.root.rationality == Rationality::rational)
        raise(errc::not_irrational,
              "auxiliary root " + result.root.value.str() + " is rational; its continued "
              "fraction terminates and yields no approximation sequence");

    result.expansion = cf_expand(result.root.value, steps + 6, spec);
    RatInterval beta_iv = beta.approx(prec);

    std::optional<Rat> prev_err;
    std::size_t got = 0;
    for (std::size_t i = 0; i < result.expansion.convergents.size() && got < steps; ++i) {
        const auto& [p, q] = result.expansion.convergents[i];
        Rat m(p, q);
        ApproxStep step;
        step.index = i;
        step.p = p;
        step.q = q;
        Rat denom = m * m + h * m - d;
        if (denom == 0) {
            step.note = "parametrization pole: m^2 + hm - d = 0";
            result.steps.push_back(std::move(step));
            continue;
        }
        step.x = (m * m + d) / denom;
        step.y = (2 * m + h) / denom;
        // Exact closure: the parametrization lands on the conic identically.
        if (step.x * step.x + h * step.x * step.y - d * step.y * step.y != 1)
            raise(errc::not_on_conic, "parametrized point left the conic");
        if (step.x == 0) {
            step.note = "ratio pole: x = 0";
            result.steps.push_back(std::move(step));
            continue;
        }
        step.ratio = step.y / step.x;
        step.abs_error = abs_iv(RatInterval::point(*step.ratio) - beta_iv);
        Rat err_mid = step.abs_error.mid();
        if (prev_err && err_mid > *prev_err) ++result.error_increases;
        prev_err = err_mid;
        result.steps.push_back(std::move(step));
        ++got;
    }
    result.complete = got == steps;
    return result;
}

PythResult pythagorean_stream(const RealNumber& beta, std::size_t steps, const FieldSpec& spec,
                              RootSign sign) {
    unsigned prec = precision_for(spec);
    AuxiliaryRoots roots = solve_auxiliary(Rat(0), Rat(-1), beta, prec);
    PythResult result;
    result.root = sign == RootSign::plus ? roots.plus : roots.minus;
    if (result.root.rationality == Rationality::rational)
        raise(errc::not_irrational,
              "auxiliary root " + result.root.value.str() + " is rational; its continued "
              "fraction terminates and yields no approximation sequence");

    result.expansion = cf_expand(result.root.value, steps + 6, spec);
    RatInterval beta_iv = beta.approx(prec);

    std::size_t got = 0;
    for (std::size_t i = 0; i < result.expansion.convergents.size() && got < steps; ++i) {
        const auto& [p, q] = result.expansion.convergents[i];
        PythStep step;
        step.index = i;
        step.p = p;
        step.q = q;
        Int raw_a = p * p - q * q;
        if (raw_a == 0) {
            step.note = "ratio pole: p = q";
            result.steps.push_back(std::move(step));
            continue;
        }
        Int a0 = abs(raw_a);
        Int b0 = 2 * p * q;
        Int c0 = p * p + q * q;
        Int g = gcd(a0, b0);  // 1 or 2 for coprime p, q
        g = gcd(g, c0);
        step.a = a0 / g;
        step.b = b0 / g;
        step.c = c0 / g;
        if (step.a * step.a + step.b * step.b != step.c * step.c)
            raise(errc::invalid_argument, "triple lost the Pythagorean identity");
        if (g == 2) {
            step.halved = true;
            step.note = "common factor 2 removed from (" + a0.str() + ", " + b0.str() + ", " +
                        c0.str() + ")";
        }
        step.ratio = Rat(b0, raw_a);
        step.abs_error = abs_iv(RatInterval::point(*step.ratio) - beta_iv);
        result.steps.push_back(std::move(step));
        ++got;
    }
    result.complete = got == steps;
    return result;
}

}  // namespace conic
