#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "conic/errors.hpp"
#include "conic/redei.hpp"

using namespace conic;

namespace {

RedeiContext rational_ctx(const Rat& h, const Rat& d, const Rat& z) {
    return RedeiContext{FieldValue::rational(h), FieldValue::rational(d),
                        FieldValue::rational(z)};
}

// Independent 2x2 oracle on plain rationals.
using Mat = std::array<Rat, 4>;
Mat mat_mul(const Mat& a, const Mat& b) {
    return Mat{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
               a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

TEST_CASE("nd_pair matches a hand-multiplied matrix cube") {
    // M = [[z+h, d], [1, z]] at (h,d,z) = (0,2,1)
    Mat m{Rat(1), Rat(2), Rat(1), Rat(1)};
    Mat m3 = mat_mul(mat_mul(m, m), m);
    CHECK(m3[3] == 7);  // N_3
    CHECK(m3[2] == 5);  // D_3

    RedeiContext ctx = rational_ctx(Rat(0), Rat(2), Rat(1));
    for (RedeiStrategy s :
         {RedeiStrategy::matrix, RedeiStrategy::recurrence, RedeiStrategy::addition}) {
        RedeiPair p = nd_pair(ctx, 3, s);
        CHECK(p.num.as_rat() == 7);
        CHECK(p.den.as_rat() == 5);
    }
}

TEST_CASE("nd_pair small indices") {
    RedeiContext ctx = rational_ctx(Rat(0), Rat(2), Rat(1));
    RedeiPair p0 = nd_pair(ctx, 0);
    CHECK(p0.num.as_rat() == 1);
    CHECK(p0.den.as_rat() == 0);

    // N_2 = 2z*z - (z^2 - d)*1 = 3, D_2 = 2z = 2
    RedeiPair p2 = nd_pair(ctx, 2);
    CHECK(p2.num.as_rat() == 3);
    CHECK(p2.den.as_rat() == 2);
}

TEST_CASE("nd_add") {
    RedeiContext ctx = rational_ctx(Rat(0), Rat(2), Rat(1));
    RedeiPair p1 = nd_pair(ctx, 1);
    CHECK(p1.num.as_rat() == 1);
    CHECK(p1.den.as_rat() == 1);
    RedeiPair p2 = nd_pair(ctx, 2);

    RedeiPair sum = nd_add(p1, p2);
    CHECK(sum.n == 3);
    CHECK(sum.num.as_rat() == 7);
    CHECK(sum.den.as_rat() == 5);

    RedeiPair with_zero = nd_add(p2, nd_pair(ctx, 0));
    CHECK(with_zero.num == p2.num);
    CHECK(with_zero.den == p2.den);

    RedeiPair doubled = nd_add(p1, p1);
    CHECK(doubled.num.as_rat() == 3);
    CHECK(doubled.den.as_rat() == 2);

    RedeiContext other = rational_ctx(Rat(1), Rat(2), Rat(1));
    CHECK_THROWS_AS(nd_add(p1, nd_pair(other, 1)), error);
}

TEST_CASE("redei_q examples") {
    RedeiContext ctx = rational_ctx(Rat(0), Rat(2), Rat(1));
    CHECK(redei_q(ctx, 2) == ParamValue::finite(FieldValue::rational(Rat(3, 2))));
    CHECK(redei_q(ctx, 0).is_alpha());

    // Q_1 = z for assorted contexts
    std::mt19937_64 gen(5);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int i = 0; i < 20; ++i) {
        Rat z(dist(gen), 1 + i % 3);
        RedeiContext c = rational_ctx(Rat(dist(gen)), Rat(dist(gen)), z);
        CHECK(redei_q(c, 1) == ParamValue::finite(FieldValue::rational(z)));
    }

    // multiplicativity: Q_2 evaluated at Q_2(0,2,1) = 3/2 equals Q_4(0,2,1)
    RedeiContext inner = rational_ctx(Rat(0), Rat(2), Rat(3, 2));
    ParamValue composed = redei_q(inner, 2);
    CHECK(composed == ParamValue::finite(FieldValue::rational(Rat(17, 12))));
    CHECK(composed == redei_q(ctx, 4));
}

TEST_CASE("alpha when D_n vanishes over a finite field") {
    // D_2 = 2z + h; pick h = -2z mod p
    Int p(5);
    RedeiContext ctx{FieldValue::mod_p(Int(1), p), FieldValue::mod_p(Int(3), p),
                     FieldValue::mod_p(Int(2), p)};  // 2z + h = 5 = 0 mod 5
    CHECK(redei_q(ctx, 2).is_alpha());
    ParamValue q3 = redei_q(ctx, 3);
    CHECK_FALSE(q3.is_alpha());
}

TEST_CASE("determinant sign: N^2 + hND - dD^2 = (z^2+hz-d)^n") {
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<long> dist(-5, 5);
    for (int i = 0; i < 30; ++i) {
        RedeiContext ctx = rational_ctx(Rat(dist(gen), 1 + i % 2), Rat(dist(gen)),
                                        Rat(dist(gen), 1 + i % 3));
        FieldValue det = ctx.det();
        FieldValue det_pow = FieldValue::one(ctx.z.spec());
        auto sweep = nd_prefix(ctx, 40);
        for (std::size_t n = 0; n < sweep.size(); ++n) {
            FieldValue lhs = sweep[n].num * sweep[n].num + ctx.h * sweep[n].num * sweep[n].den -
                             ctx.d * sweep[n].den * sweep[n].den;
            CHECK(lhs == det_pow);
            det_pow = det_pow * det;
        }
    }
}

TEST_CASE("strategies agree up to n = 1024") {
    std::vector<RedeiContext> ctxs;
    ctxs.push_back(rational_ctx(Rat(1), Rat(-1), Rat(2)));
    Int p(13);
    ctxs.push_back(RedeiContext{FieldValue::mod_p(Int(4), p), FieldValue::mod_p(Int(9), p),
                                FieldValue::mod_p(Int(11), p)});
    Int p2(7);
    ctxs.push_back(RedeiContext{FieldValue::mod_p(Int(3), p2), FieldValue::mod_p(Int(5), p2),
                                FieldValue::mod_p(Int(2), p2)});

    for (const RedeiContext& ctx : ctxs) {
        auto sweep = nd_prefix(ctx, 1025);
        RedeiPair acc = nd_pair(ctx, 0, RedeiStrategy::addition);
        RedeiPair one{1, ctx.z, FieldValue::one(ctx.z.spec()), ctx};
        std::mt19937_64 gen(2024);
        std::uniform_int_distribution<std::size_t> pick(0, 1024);
        for (int k = 0; k < 48; ++k) {
            std::size_t n = pick(gen);
            RedeiPair m = nd_pair(ctx, n, RedeiStrategy::matrix);
            CHECK(m.num == sweep[n].num);
            CHECK(m.den == sweep[n].den);
        }
        for (std::size_t n = 0; n <= 1024; ++n) {
            CHECK(acc.num == sweep[n].num);
            CHECK(acc.den == sweep[n].den);
            if (n < 1024) acc = nd_add(acc, one);
        }
    }
}

TEST_CASE("recurrence spec matches its defining equations") {
    RecurrenceSpec w{FieldValue::rational(Rat(1)), FieldValue::rational(Rat(1)),
                     FieldValue::rational(Rat(1)), FieldValue::rational(Rat(-1))};
    // Fibonacci: t^2 - t - 1
    auto fib = recurrence_prefix(w, 12);
    CHECK(fib[10].as_rat() == 89);
    CHECK(recurrence_term(w, 11) == fib[11]);
    CHECK(recurrence_term(w, 0) == w.a0);
    CHECK(recurrence_term(w, 1) == w.a1);
}

TEST_CASE("addition law as group law including alpha cases") {
    RedeiContext ctx = rational_ctx(Rat(1), Rat(3), Rat(-2));
    ConicParams params(ctx.h, ctx.d);
    auto sweep = nd_prefix(ctx, 65);
    auto q_of = [&](std::size_t n) { return redei_q_of_pair(sweep[n]); };
    std::mt19937_64 gen(8);
    std::uniform_int_distribution<std::size_t> pick(0, 32);
    for (int i = 0; i < 60; ++i) {
        std::size_t n = pick(gen), m = pick(gen);
        CHECK(q_of(n + m) == mul(q_of(n), q_of(m), params));
    }
}
