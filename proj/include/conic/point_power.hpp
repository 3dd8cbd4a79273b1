#pragma once

#include <cstdint>

#include "conic/group.hpp"
#include "conic/redei.hpp"

namespace conic {

/// Coordinates of (x,y)^n: F from W(1, x, 2x+hy, 1), G from
/// W(0, y, 2x+hy, 1). The pair is itself a conic point
/// (F^2 + hFG - dG^2 = 1).
struct PointPowerPair {
    std::uint64_t n;
    FieldValue f, g;
};

// The (h', d', z') = (hy, x^2 + hxy - 1, x) context whose N, D sequences
// realize F and G: F_n = N_n, G_n = y * D_n. The substitution eliminates d.
RedeiContext fg_context(const ConicPoint& p);

// (F_n, G_n) = coordinates of pow(p, n); computed through the N, D
// machinery, validated on-conic, and (in debug builds) cross-checked
// against the group exponentiation.
PointPowerPair fg_pair(const ConicPoint& p, std::uint64_t n,
                       RedeiStrategy strategy = RedeiStrategy::matrix);

// q_n = (1 + N_n(hy, x^2+hxy-1, x)) / (y * D_n(...)) = tau(pow(p, n)).
// Requires y != 0 (for a (+-1, 0) base use tau directly); n = 0 gives
// alpha.
ParamValue q_param(const ConicPoint& p, std::uint64_t n);

// Halving identity q_{2n} = F_n/G_n, exposed as a named check. Requires
// y != 0, n >= 1 and nonzero denominators (degenerate-denominator
// otherwise).
bool q_halving_check(const ConicPoint& p, std::uint64_t n);

}  // namespace conic
