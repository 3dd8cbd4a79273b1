#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "conic/errors.hpp"
#include "conic/group.hpp"

using namespace conic;

namespace {

ConicParams make_params(const Rat& h, const Rat& d) {
    return ConicParams(FieldValue::rational(h), FieldValue::rational(d));
}

ConicPoint pt(const Rat& x, const Rat& y, const ConicParams& params) {
    return ConicPoint(FieldValue::rational(x), FieldValue::rational(y), params);
}

ParamValue finite(const Rat& m) { return ParamValue::finite(FieldValue::rational(m)); }

const ConicParams kPaper = make_params(Rat(-13, 4), Rat(2));
const ConicParams kCircle = make_params(Rat(0), Rat(-1));

}  // namespace

TEST_CASE("product reproduces the power list of the (4,1) point") {
    ConicPoint base = pt(Rat(4), Rat(1), kPaper);
    ConicPoint p2 = mul(base, base);
    CHECK(p2 == pt(Rat(18), Rat(19, 4), kPaper));
    ConicPoint p3 = mul(p2, base);
    CHECK(p3 == pt(Rat(163, 2), Rat(345, 16), kPaper));

    CHECK(mul(ConicPoint::identity(kPaper), p3) == p3);
}

TEST_CASE("inverse") {
    ConicPoint base = pt(Rat(4), Rat(1), kPaper);
    ConicPoint inv = inverse(base);
    CHECK(inv == pt(Rat(3, 4), Rat(-1), kPaper));  // (4 + (-13/4), -1), still on the conic
    CHECK(mul(base, inv) == ConicPoint::identity(kPaper));

    CHECK(inverse(ConicPoint::identity(kPaper)) == ConicPoint::identity(kPaper));

    ConicPoint c = pt(Rat(3, 5), Rat(4, 5), kCircle);
    CHECK(inverse(c) == pt(Rat(3, 5), Rat(-4, 5), kCircle));
}

TEST_CASE("pow reproduces the power list and handles edge exponents") {
    ConicPoint base = pt(Rat(4), Rat(1), kPaper);
    CHECK(pow(base, 4) == pt(Rat(2953, 8), Rat(6251, 64), kPaper));
    CHECK(pow(base, 5) == pt(Rat(53499, 32), Rat(113249, 256), kPaper));
    CHECK(pow(base, 0) == ConicPoint::identity(kPaper));
    CHECK(pow(base, 1) == base);
    CHECK(pow(base, -1) == inverse(base));
    CHECK(pow(base, -3) == inverse(pow(base, 3)));
}

TEST_CASE("pow equals the naive fold for |n| <= 64") {
    std::mt19937_64 gen(99);
    std::uniform_int_distribution<long> mdist(-6, 6), ndist(-64, 64);
    for (int i = 0; i < 40; ++i) {
        Rat m(mdist(gen), 1 + i % 3);
        ConicPoint p = [&]() {
            for (;;) {
                try {
                    return eps(finite(m), kPaper);
                } catch (const error&) {
                    m += 1;
                }
            }
        }();
        long n = ndist(gen);
        ConicPoint fast = pow(p, n);
        ConicPoint acc = ConicPoint::identity(kPaper);
        ConicPoint step = n >= 0 ? p : inverse(p);
        for (long k = 0; k < std::abs(n); ++k) acc = mul(acc, step);
        CHECK(fast == acc);
    }
}

TEST_CASE("eps examples") {
    CHECK(eps(finite(Rat(5)), kPaper) == pt(Rat(4), Rat(1), kPaper));
    CHECK(eps(ParamValue::alpha(), kPaper) == ConicPoint::identity(kPaper));

    // circle: m = p/q lands on ((p^2-q^2)/(p^2+q^2), 2pq/(p^2+q^2))
    std::mt19937_64 gen(3);
    std::uniform_int_distribution<long> dist(1, 30);
    for (int i = 0; i < 25; ++i) {
        Int p(dist(gen)), q(dist(gen));
        ConicPoint e = eps(finite(Rat(p, q)), kCircle);
        CHECK(e.x().as_rat() == Rat(p * p - q * q, p * p + q * q));
        CHECK(e.y().as_rat() == Rat(2 * p * q, p * p + q * q));
    }

    // reducible case has poles: m = 1 is a root of m^2 - 1
    ConicParams reducible = make_params(Rat(0), Rat(1));
    CHECK_THROWS_AS(eps(finite(Rat(1)), reducible), error);
    try {
        eps(finite(Rat(1)), reducible);
    } catch (const error& e) {
        CHECK(e.code() == errc::parametrization_pole);
    }
}

TEST_CASE("tau examples") {
    CHECK(tau(pt(Rat(4), Rat(1), kPaper)) == finite(Rat(5)));
    CHECK(tau(ConicPoint::identity(kPaper)).is_alpha());
    CHECK(tau(pt(Rat(-1), Rat(0), kPaper)) == finite(Rat(13, 8)));  // -h/2
}

TEST_CASE("tau and eps are mutually inverse") {
    std::mt19937_64 gen(17);
    std::uniform_int_distribution<long> dist(-12, 12);
    for (int i = 0; i < 60; ++i) {
        Rat m(dist(gen), 1 + std::abs(dist(gen)) % 4);
        CHECK(tau(eps(finite(m), kPaper)) == finite(m));
    }
    CHECK(tau(eps(ParamValue::alpha(), kPaper)).is_alpha());
    ConicPoint p = pt(Rat(18), Rat(19, 4), kPaper);
    CHECK(eps(tau(p), kPaper) == p);
}

TEST_CASE("parametric product") {
    CHECK(mul(finite(Rat(5)), finite(Rat(5)), kPaper) == finite(Rat(4)));
    CHECK(mul(ParamValue::alpha(), finite(Rat(7, 3)), kPaper) == finite(Rat(7, 3)));
    CHECK(mul(finite(Rat(5)), finite(Rat(-7, 4)), kPaper).is_alpha());

    // cross-check 5 . 5 = tau((4,1)^2)
    ConicPoint sq = pow(pt(Rat(4), Rat(1), kPaper), 2);
    CHECK(tau(sq) == finite(Rat(4)));
}

TEST_CASE("parametric inverse") {
    CHECK(inverse(finite(Rat(5)), kPaper) == finite(Rat(-7, 4)));
    CHECK(inverse(ParamValue::alpha(), kPaper).is_alpha());
    CHECK(inverse(finite(Rat(3, 7)), kCircle) == finite(Rat(-3, 7)));  // h = 0 negates
    CHECK(mul(finite(Rat(5)), inverse(finite(Rat(5)), kPaper), kPaper).is_alpha());
}

TEST_CASE("construction validates the conic equation") {
    CHECK_THROWS_AS(pt(Rat(2), Rat(1), kCircle), error);
    try {
        pt(Rat(2), Rat(1), kCircle);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_on_conic);
    }
    // real kind validates to tolerance
    FieldSpec spec = FieldSpec::reals(20);
    ConicParams circle(parse_scalar("0", spec), parse_scalar("-1", spec));
    ConicPoint ok(parse_scalar("0.6", spec), parse_scalar("0.8", spec), circle);
    CHECK(ok.x() == parse_scalar("3/5", spec));
    CHECK_THROWS_AS(ConicPoint(parse_scalar("0.6", spec), parse_scalar("0.9", spec), circle),
                    error);
}

TEST_CASE("parameter mismatch is rejected") {
    ConicPoint a = pt(Rat(4), Rat(1), kPaper);
    ConicPoint b = pt(Rat(3, 5), Rat(4, 5), kCircle);
    CHECK_THROWS_AS(mul(a, b), error);
}

TEST_CASE("point and param parsing") {
    ConicPoint p = parse_point("(4, 1)", kPaper);
    CHECK(p == pt(Rat(4), Rat(1), kPaper));
    CHECK(parse_param("alpha", kPaper.spec()).is_alpha());
    CHECK(parse_param("-7/4", kPaper.spec()) == finite(Rat(-7, 4)));
    CHECK_THROWS_AS(parse_point("(2, 1)", kCircle), error);
    CHECK_THROWS_AS(parse_point("4, 1", kPaper), error);
}
