#include "conic/redei.hpp"

#include "conic/errors.hpp"

namespace conic {

FieldValue recurrence_term(const RecurrenceSpec& spec, std::uint64_t n) {
    if (n == 0) return spec.a0;
    if (n == 1) return spec.a1;
    FieldValue prev = spec.a0, cur = spec.a1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        FieldValue next = spec.r * cur - spec.k * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<FieldValue> recurrence_prefix(const RecurrenceSpec& spec, std::size_t count) {
    std::vector<FieldValue> out;
    out.reserve(count);
    if (count > 0) out.push_back(spec.a0);
    if (count > 1) out.push_back(spec.a1);
    for (std::size_t i = 2; i < count; ++i)
        out.push_back(spec.r * out[i - 1] - spec.k * out[i - 2]);
    return out;
}

StepMatrix StepMatrix::base(const RedeiContext& ctx) {
    const FieldSpec& spec = ctx.z.spec();
    return StepMatrix{ctx.z + ctx.h, ctx.d, FieldValue::one(spec), ctx.z};
}

StepMatrix StepMatrix::identity(const FieldSpec& spec) {
    FieldValue one = FieldValue::one(spec), zero = FieldValue::zero(spec);
    return StepMatrix{one, zero, zero, one};
}

StepMatrix StepMatrix::mul(const StepMatrix& o) const {
    return StepMatrix{m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                      m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
}

StepMatrix StepMatrix::pow(std::uint64_t n, const FieldSpec& spec) const {
    StepMatrix result = identity(spec);
    StepMatrix b = *this;
    while (n > 0) {
        if (n & 1) result = result.mul(b);
        n >>= 1;
        if (n > 0) b = b.mul(b);
    }
    return result;
}

RedeiStrategy parse_strategy(const std::string& text) {
    if (text == "matrix") return RedeiStrategy::matrix;
    if (text == "recurrence") return RedeiStrategy::recurrence;
    if (text == "naive" || text == "addition") return RedeiStrategy::addition;
    raise(errc::invalid_argument, "bad strategy '" + text + "' (matrix | recurrence | naive)");
}

const char* strategy_name(RedeiStrategy s) {
    switch (s) {
        case RedeiStrategy::matrix: return "matrix";
        case RedeiStrategy::recurrence: return "recurrence";
        case RedeiStrategy::addition: return "naive";
    }
    return "?";
}

namespace {

RedeiPair pair_from_matrix(const RedeiContext& ctx, std::uint64_t n) {
    const FieldSpec& spec = ctx.z.spec();
    StepMatrix m = StepMatrix::base(ctx).pow(n, spec);
    FieldValue big_n = m.m11, big_d = m.m10;
    // Shape invariant of M^n; cheap relative to the powering itself.
    if (m.m00 != big_n + ctx.h * big_d || m.m01 != ctx.d * big_d)
        raise(errc::invalid_argument, "step-matrix power lost its (N, D) shape");
    return RedeiPair{n, std::move(big_n), std::move(big_d), ctx};
}

RedeiPair pair_from_recurrence(const RedeiContext& ctx, std::uint64_t n) {
    const FieldSpec& spec = ctx.z.spec();
    FieldValue r = ctx.z + ctx.z + ctx.h;
    FieldValue k = ctx.det();
    RecurrenceSpec nspec{FieldValue::one(spec), ctx.z, r, k};
    RecurrenceSpec dspec{FieldValue::zero(spec), FieldValue::one(spec), r, k};
    return RedeiPair{n, recurrence_term(nspec, n), recurrence_term(dspec, n), ctx};
}

RedeiPair pair_index_zero(const RedeiContext& ctx) {
    const FieldSpec& spec = ctx.z.spec();
    return RedeiPair{0, FieldValue::one(spec), FieldValue::zero(spec), ctx};
}

RedeiPair pair_from_addition(const RedeiContext& ctx, std::uint64_t n) {
    RedeiPair acc = pair_index_zero(ctx);
    if (n == 0) return acc;
    const FieldSpec& spec = ctx.z.spec();
    RedeiPair one{1, ctx.z, FieldValue::one(spec), ctx};
    for (std::uint64_t i = 0; i < n; ++i) acc = nd_add(acc, one);
    return acc;
}

}  // namespace

RedeiPair nd_pair(const RedeiContext& ctx, std::uint64_t n, RedeiStrategy strategy) {
    switch (strategy) {
        case RedeiStrategy::matrix: return pair_from_matrix(ctx, n);
        case RedeiStrategy::recurrence: return pair_from_recurrence(ctx, n);
        case RedeiStrategy::addition: return pair_from_addition(ctx, n);
    }
    raise(errc::invalid_argument, "bad strategy");
}

RedeiPair nd_add(const RedeiPair& p, const RedeiPair& q) {
    if (p.ctx != q.ctx)
        raise(errc::parameter_mismatch, "pairs come from different (h, d, z) contexts");
    FieldValue n = p.num * q.num + p.ctx.d * p.den * q.den;
    FieldValue d = p.den * q.num + p.ctx.h * p.den * q.den + p.num * q.den;
    return RedeiPair{p.n + q.n, std::move(n), std::move(d), p.ctx};
}

std::vector<RedeiPair> nd_prefix(const RedeiContext& ctx, std::size_t count) {
    const FieldSpec& spec = ctx.z.spec();
    FieldValue r = ctx.z + ctx.z + ctx.h;
    FieldValue k = ctx.det();
    auto ns = recurrence_prefix(RecurrenceSpec{FieldValue::one(spec), ctx.z, r, k}, count);
    auto ds = recurrence_prefix(RecurrenceSpec{FieldValue::zero(spec), FieldValue::one(spec), r, k},
                                count);
    std::vector<RedeiPair> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(RedeiPair{i, ns[i], ds[i], ctx});
    return out;
}

ParamValue redei_q_of_pair(const RedeiPair& p) {
    if (p.den.is_zero()) return ParamValue::alpha();
    return ParamValue::finite(p.num / p.den);
}

ParamValue redei_q(const RedeiContext& ctx, std::uint64_t n, RedeiStrategy strategy) {
    return redei_q_of_pair(nd_pair(ctx, n, strategy));
}

}  // namespace conic
