#pragma once

#include <stdexcept>
#include <string>

namespace conic {

// Error codes used across the library. CLI exit codes map from these:
// usage/invalid_argument -> 1, precision_exhausted -> 3, everything else -> 2.
enum class errc {
    parameter_mismatch,      // operands built over different fields / conics
    non_invertible,          // zero-norm element (zero divisor in A)
    unordered_field,         // sign/ordering requested over a prime field
    analytic_field,          // irreducibility query over the reals
    parametrization_pole,    // eps(m) hit a root of m^2 + hm - d
    division_by_zero,
    not_on_conic,            // point failed x^2 + hxy - dy^2 = 1
    no_real_dominant_root,   // recurrence limit with c <= 0 or w = 0
    degenerate_limit,        // dominant-root coefficient of b-sequence is 0
    no_convergence,          // point power ratio with |2x + hy| <= 2
    no_real_solution,        // negative discriminant in solve_auxiliary
    not_irrational,          // auxiliary root is rational; CF terminates
    degenerate_denominator,  // G_n = 0 in the halving identity
    invalid_argument,
    precision_exhausted,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw error(code, what);
}

}  // namespace conic
