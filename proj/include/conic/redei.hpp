#pragma once

#include <cstdint>
#include <vector>

#include "conic/field.hpp"
#include "conic/group.hpp"

namespace conic {

/// Linear recurrent sequence W(a0, a1, r, k): term(0) = a0, term(1) = a1,
/// term(n) = r*term(n-1) - k*term(n-2) (characteristic polynomial
/// t^2 - rt + k).
struct RecurrenceSpec {
    FieldValue a0, a1, r, k;
};

FieldValue recurrence_term(const RecurrenceSpec& spec, std::uint64_t n);
std::vector<FieldValue> recurrence_prefix(const RecurrenceSpec& spec, std::size_t count);

/// The (h, d, z) context shared by a family of N_n, D_n values.
struct RedeiContext {
    FieldValue h, d, z;

    bool operator==(const RedeiContext& o) const { return h == o.h && d == o.d && z == o.z; }
    bool operator!=(const RedeiContext& o) const { return !(*this == o); }

    FieldValue det() const { return z * z + h * z - d; }  // det of the step matrix
};

/// (N_n, D_n) with N from W(1, z, 2z+h, z^2+hz-d) and D from
/// W(0, 1, 2z+h, z^2+hz-d); satisfies N^2 + hND - dD^2 = (z^2+hz-d)^n.
struct RedeiPair {
    std::uint64_t n;
    FieldValue num, den;  // N_n, D_n
    RedeiContext ctx;
};

/// The 2x2 matrix [[z+h, d], [1, z]]; its n-th power has the shape
/// [[N_n + h D_n, d D_n], [D_n, N_n]] (asserted after every powering).
struct StepMatrix {
    FieldValue m00, m01, m10, m11;

    static StepMatrix base(const RedeiContext& ctx);
    static StepMatrix identity(const FieldSpec& spec);
    StepMatrix mul(const StepMatrix& o) const;
    StepMatrix pow(std::uint64_t n, const FieldSpec& spec) const;
};

enum class RedeiStrategy {
    matrix,      // binary powering of the step matrix, O(log n)
    recurrence,  // direct unrolling of the two W sequences, O(n)
    addition,    // repeated application of the index-addition formula, O(n)
};

RedeiStrategy parse_strategy(const std::string& text);
const char* strategy_name(RedeiStrategy s);

RedeiPair nd_pair(const RedeiContext& ctx, std::uint64_t n,
                  RedeiStrategy strategy = RedeiStrategy::matrix);

// Index addition: N_{n+m} = N_n N_m + d D_n D_m,
// D_{n+m} = D_n N_m + h D_n D_m + N_n D_m. Contexts must match.
RedeiPair nd_add(const RedeiPair& p, const RedeiPair& q);

// All pairs for n = 0..count-1 in one O(count) sweep.
std::vector<RedeiPair> nd_prefix(const RedeiContext& ctx, std::size_t count);

// Generalized Redei rational function Q_n = N_n/D_n as a parametric value:
// alpha when D_n = 0 (in particular Q_0 = alpha), finite(N_n/D_n) otherwise.
ParamValue redei_q(const RedeiContext& ctx, std::uint64_t n,
                   RedeiStrategy strategy = RedeiStrategy::matrix);
ParamValue redei_q_of_pair(const RedeiPair& p);

}  // namespace conic
