#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "conic/algebra.hpp"
#include "conic/errors.hpp"

using namespace conic;

namespace {

ConicParams make_params(const Rat& h, const Rat& d) {
    return ConicParams(FieldValue::rational(h), FieldValue::rational(d));
}

AlgebraElement elem(const Rat& a, const Rat& b, const ConicParams& params) {
    return AlgebraElement(FieldValue::rational(a), FieldValue::rational(b), params);
}

// Independent oracle: multiply the polynomials (a0 + a1 x)(b0 + b1 x) and
// reduce the x^2 term with x^2 = hx + d.
AlgebraElement poly_reduce_mul(const AlgebraElement& u, const AlgebraElement& v) {
    Rat a0 = u.a.as_rat(), a1 = u.b.as_rat();
    Rat b0 = v.a.as_rat(), b1 = v.b.as_rat();
    Rat h = u.params.h().as_rat(), d = u.params.d().as_rat();
    Rat c0 = a0 * b0, c1 = a0 * b1 + a1 * b0, c2 = a1 * b1;
    return AlgebraElement(FieldValue::rational(c0 + c2 * d), FieldValue::rational(c1 + c2 * h),
                          u.params);
}

}  // namespace

TEST_CASE("product examples") {
    ConicParams golden = make_params(Rat(1), Rat(1));
    AlgebraElement one_plus_x = elem(Rat(1), Rat(1), golden);
    AlgebraElement sq = mul(one_plus_x, one_plus_x);
    CHECK(sq == elem(Rat(2), Rat(3), golden));
    CHECK(sq == poly_reduce_mul(one_plus_x, one_plus_x));

    AlgebraElement any = elem(Rat(5, 3), Rat(-7, 2), golden);
    CHECK(mul(AlgebraElement::one(golden), any) == any);

    CHECK(mul(one_plus_x, elem(Rat(2), Rat(-1), golden)) == elem(Rat(1), Rat(0), golden));
}

TEST_CASE("conjugate examples") {
    ConicParams golden = make_params(Rat(1), Rat(1));
    CHECK(conj(elem(Rat(1), Rat(1), golden)) == elem(Rat(2), Rat(-1), golden));
    CHECK(conj(elem(Rat(9, 4), Rat(0), golden)) == elem(Rat(9, 4), Rat(0), golden));
    ConicParams h0 = make_params(Rat(0), Rat(2));
    CHECK(conj(elem(Rat(3), Rat(5), h0)) == elem(Rat(3), Rat(-5), h0));
}

TEST_CASE("norm and trace examples") {
    ConicParams golden = make_params(Rat(1), Rat(1));
    AlgebraElement u = elem(Rat(1), Rat(1), golden);
    CHECK(norm(u).as_rat() == 1);
    CHECK(trace(u).as_rat() == 3);
    CHECK(norm(AlgebraElement::one(golden)).as_rat() == 1);
    CHECK(trace(AlgebraElement::one(golden)).as_rat() == 2);

    // the (4,1) point of Example 1 is a unit of its algebra
    ConicParams paper = make_params(Rat(-13, 4), Rat(2));
    CHECK(norm(elem(Rat(4), Rat(1), paper)).as_rat() == 1);

    // u * conj(u) = N(u) * 1
    AlgebraElement prod = mul(u, conj(u));
    CHECK(prod.a == norm(u));
    CHECK(prod.b.is_zero());
}

TEST_CASE("inverse examples") {
    ConicParams golden = make_params(Rat(1), Rat(1));
    CHECK(inverse(elem(Rat(1), Rat(1), golden)) == elem(Rat(2), Rat(-1), golden));
    CHECK(inverse(AlgebraElement::one(golden)) == AlgebraElement::one(golden));

    // x^2 - 1 is reducible: 1 + x is a zero divisor
    ConicParams reducible = make_params(Rat(0), Rat(1));
    AlgebraElement zero_div = elem(Rat(1), Rat(1), reducible);
    CHECK(norm(zero_div).is_zero());
    CHECK_THROWS_AS(inverse(zero_div), error);
    try {
        inverse(zero_div);
    } catch (const error& e) {
        CHECK(e.code() == errc::non_invertible);
    }
}

TEST_CASE("parameter mismatch") {
    ConicParams a = make_params(Rat(1), Rat(1));
    ConicParams b = make_params(Rat(0), Rat(2));
    CHECK_THROWS_AS(mul(AlgebraElement::one(a), AlgebraElement::one(b)), error);
}

TEST_CASE("ring properties on random elements") {
    std::mt19937_64 gen(424242);
    std::uniform_int_distribution<long> dist(-9, 9);
    auto rnd = [&]() { return Rat(dist(gen), 1 + std::abs(dist(gen)) % 4); };

    FieldSpec fp = FieldSpec::prime_field(Int(23));
    for (int i = 0; i < 1200; ++i) {
        bool use_fp = i % 2 == 0;
        FieldSpec spec = use_fp ? fp : FieldSpec::rationals();
        ConicParams params(FieldValue::from_rat(rnd(), spec), FieldValue::from_rat(rnd(), spec));
        auto value = [&]() { return FieldValue::from_rat(rnd(), spec); };
        AlgebraElement u(value(), value(), params);
        AlgebraElement v(value(), value(), params);
        AlgebraElement w(value(), value(), params);

        CHECK(norm(mul(u, v)) == norm(u) * norm(v));
        CHECK(mul(u, v) == mul(v, u));
        CHECK(mul(mul(u, v), w) == mul(u, mul(v, w)));
        CHECK(conj(conj(u)) == u);
        CHECK(conj(mul(u, v)) == mul(conj(u), conj(v)));

        AlgebraElement nu = mul(u, conj(u));
        CHECK(nu.a == norm(u));
        CHECK(nu.b.is_zero());

        if (!use_fp) CHECK(mul(u, v) == poly_reduce_mul(u, v));

        if (!norm(u).is_zero()) CHECK(mul(u, inverse(u)) == AlgebraElement::one(params));
    }
}
