#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conic/field.hpp"
#include "conic/group.hpp"
#include "conic/quadratic_irrational.hpp"

namespace conic {

/// A real number given exactly (rational or quadratic irrational) or as an
/// exact rational interval evaluated at some working precision. Exact kinds
/// expand through integer-only algorithms; interval kinds through interval
/// tracking with certified digit emission.
class RealNumber {
public:
    enum class Kind { rational, quadratic, interval };

    RealNumber() = default;  // rational zero

    static RealNumber rational(Rat v);
    static RealNumber quadratic(QuadraticIrrational q);
    static RealNumber interval(RatInterval iv);

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ != Kind::interval; }

    const Rat& rat() const;
    const QuadraticIrrational& quad() const;
    const RatInterval& iv() const;

    // Rational interval bracketing the value; prec applies to exact kinds
    // that need a radical evaluated.
    RatInterval approx(unsigned prec) const;

    std::string str() const;

private:
    Kind kind_ = Kind::rational;
    Rat rat_{0};
    std::optional<QuadraticIrrational> quad_;
    RatInterval iv_;
};

// Parses a real-value description: "pi", "sqrt:<k>", "rat:<p>/<q>",
// or a decimal/integer/fraction literal. prec is the working precision
// for constants that need evaluating.
RealNumber parse_real_target(const std::string& text, unsigned prec);

/// Continued fraction expansion [a0, a1, ...] with its convergents.
/// reliable_count marks how many leading digits are certified at the
/// working precision (always all of them for exact targets); terminated
/// means the target was rational and the expansion is complete.
struct CFExpansion {
    std::vector<Int> digits;
    std::vector<std::pair<Int, Int>> convergents;  // (p_k, q_k)
    std::size_t reliable_count = 0;
    bool terminated = false;
};

// Expands the target, emitting at most max_digits partial quotients.
// Exact targets use integer-only algorithms (Euclid; the (P, Q) state
// recurrence for quadratic irrationals). Interval targets emit a digit only
// while both endpoints share the same floor; running out of certainty ends
// the expansion early (reliable_count < max_digits), it does not throw.
CFExpansion cf_expand(const RealNumber& target, std::size_t max_digits, const FieldSpec& spec);

// p_k = a_k p_{k-1} + p_{k-2}, q_k = a_k q_{k-1} + q_{k-2}, seeded with
// (1, 0) and (0, 1).
std::vector<std::pair<Int, Int>> cf_convergents(const std::vector<Int>& digits);

/// Two sequences W(a0, a1, 2w, w^2-c) and W(b0, b1, 2w, w^2-c) whose ratio
/// converges to a closed form built from the dominant root w ± sqrt(c).
struct RecurrenceLimitSpec {
    Rat a0, a1, b0, b1, w, c;
};

// lim a_n/b_n = (a1 - a0 w + a0 sqrt(c)) / (b1 - b0 w + b0 sqrt(c)) for
// w > 0; the conjugate form (sqrt -> -sqrt) for w < 0. Requires c > 0 and
// w != 0 (no-real-dominant-root) and a nonzero dominant coefficient for
// the b sequence (degenerate-limit).
LimitValue recurrence_ratio_limit(const RecurrenceLimitSpec& s);

// lim y_n/x_n for (x_n, y_n) = p^n over a rational conic:
// 2y / (sqrt(h^2y^2 + 4hxy + 4x^2 - 4) - hy) for 2x + hy > 2, conjugate
// variant for 2x + hy < -2. Raises no-convergence when |2x + hy| <= 2.
LimitValue point_ratio_limit(const ConicPoint& p);

enum class Rationality { rational, irrational, unknown };
const char* rationality_name(Rationality r);

struct AuxiliaryRoot {
    RealNumber value;
    Rationality rationality;
};

struct AuxiliaryRoots {
    AuxiliaryRoot plus, minus;  // (1 + sqrt(disc))/beta and (1 - sqrt(disc))/beta
};

// Solves g(alpha)/f(alpha) = beta for the standard parametrization of
// E(h,d): the quadratic beta a^2 - 2a + (beta d - h) = 0, giving
// alpha = (1 +- sqrt(1 + beta h - beta^2 d)) / beta. Raises
// no-real-solution when the discriminant is negative and not-irrational
// when both roots are rational.
AuxiliaryRoots solve_auxiliary(const Rat& h, const Rat& d, const RealNumber& beta, unsigned prec);

enum class RootSign { plus, minus };

/// One convergent mapped to a rational point of the conic.
struct ApproxStep {
    std::size_t index;        // convergent index
    Int p, q;                 // convergent p/q
    Rat x, y;                 // eps(p/q), exact
    std::optional<Rat> ratio; // y/x; empty on a flagged pole step
    RatInterval abs_error;    // |ratio - beta| (when ratio is present)
    std::string note;         // nonempty on flagged steps
};

struct ApproxResult {
    AuxiliaryRoot root;
    CFExpansion expansion;
    std::vector<ApproxStep> steps;
    bool complete = true;              // produced the requested ratio count
    std::size_t error_increases = 0;   // tail-monotonicity monitor
};

// Expands the auxiliary irrational of beta and maps each convergent through
// eps to an exact rational point on E(h,d); collects `steps` ratio-bearing
// rows (pole steps are flagged and skipped, not counted).
ApproxResult approx_over_conic(const Rat& h, const Rat& d, const RealNumber& beta,
                               std::size_t steps, const FieldSpec& spec,
                               RootSign sign = RootSign::plus);

/// One convergent mapped to a primitive Pythagorean triple.
struct PythStep {
    std::size_t index;
    Int p, q;
    Int a, b, c;              // a^2 + b^2 = c^2, primitive
    std::optional<Rat> ratio; // 2pq/(p^2 - q^2), lowest terms, signed
    RatInterval abs_error;
    bool halved = false;      // raw triple had the common factor 2
    std::string note;
};

struct PythResult {
    AuxiliaryRoot root;
    CFExpansion expansion;
    std::vector<PythStep> steps;
    bool complete = true;
};

// The circle specialization (h, d) = (0, -1): convergents (p, q) become
// triples (|p^2-q^2|, 2pq, p^2+q^2) divided by their common factor (1 or 2).
PythResult pythagorean_stream(const RealNumber& beta, std::size_t steps, const FieldSpec& spec,
                              RootSign sign = RootSign::plus);

}  // namespace conic
