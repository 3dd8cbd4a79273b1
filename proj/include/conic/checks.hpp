#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace conic {

struct PropertyResult {
    std::string name;
    std::size_t samples = 0;
    std::size_t failures = 0;
    std::string detail;  // first failure, for diagnosis

    bool passed() const { return failures == 0; }
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> results;

    bool ok() const {
        for (const auto& r : results)
            if (!r.passed()) return false;
        return true;
    }
};

// Seeded, deterministic property suites. `samples` scales the random
// sampling; fixed exhaustive parts (small prime fields) always run whole.
SuiteReport run_group_suite(std::uint64_t seed, std::size_t samples);
SuiteReport run_redei_suite(std::uint64_t seed, std::size_t samples);
SuiteReport run_power_suite(std::uint64_t seed, std::size_t samples);
SuiteReport run_approx_suite(std::uint64_t seed, std::size_t samples);

std::vector<SuiteReport> run_suites(const std::string& which, std::uint64_t seed,
                                    std::size_t samples);

}  // namespace conic
