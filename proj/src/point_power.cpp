#include "conic/point_power.hpp"

#include <cassert>

#include "conic/errors.hpp"

namespace conic {

RedeiContext fg_context(const ConicPoint& p) {
    const FieldValue& h = p.params().h();
    const FieldValue& x = p.x();
    const FieldValue& y = p.y();
    FieldValue one = FieldValue::one(p.params().spec());
    return RedeiContext{h * y, x * x + h * x * y - one, x};
}

PointPowerPair fg_pair(const ConicPoint& p, std::uint64_t n, RedeiStrategy strategy) {
    RedeiPair nd = nd_pair(fg_context(p), n, strategy);
    FieldValue f = nd.num;
    FieldValue g = p.y() * nd.den;
    // The pair is a point of the same conic.
    ConicPoint check(f, g, p.params());
#ifndef NDEBUG
    ConicPoint direct = pow(p, static_cast<std::int64_t>(n));
    assert(check == direct);
#endif
    return PointPowerPair{n, std::move(f), std::move(g)};
}

ParamValue q_param(const ConicPoint& p, std::uint64_t n) {
    if (p.y().is_zero())
        raise(errc::division_by_zero,
              "base point has y = 0 (x = +-1); apply tau to the power directly");
    if (n == 0) return ParamValue::alpha();

    const FieldSpec& spec = p.params().spec();
    RedeiPair nd = nd_pair(fg_context(p), n);
    FieldValue denom = p.y() * nd.den;
    if (denom.is_zero()) {
        // pow(p, n) landed on (+-1, 0); fall back to the tau clauses.
        FieldValue one = FieldValue::one(spec);
        if (nd.num == one) return ParamValue::alpha();
        FieldValue two = FieldValue::from_int(2, spec);
        return ParamValue::finite(-p.params().h() / two);
    }
    return ParamValue::finite((FieldValue::one(spec) + nd.num) / denom);
}

bool q_halving_check(const ConicPoint& p, std::uint64_t n) {
    if (n == 0) raise(errc::invalid_argument, "halving check needs n >= 1");
    if (p.y().is_zero())
        raise(errc::division_by_zero, "base point has y = 0; halving identity needs y != 0");
    PointPowerPair half = fg_pair(p, n);
    if (half.g.is_zero())
        raise(errc::degenerate_denominator, "G_n = 0: F_n/G_n undefined");
    PointPowerPair full = fg_pair(p, 2 * n);
    if (full.g.is_zero())
        raise(errc::degenerate_denominator, "G_2n = 0: q_2n has no finite value");
    ParamValue lhs = q_param(p, 2 * n);
    ParamValue rhs = ParamValue::finite(half.f / half.g);
    return lhs == rhs;
}

}  // namespace conic
