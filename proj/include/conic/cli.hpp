#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conic/field.hpp"
#include "conic/format.hpp"
#include "conic/redei.hpp"

namespace conic::cli {

enum class Command { power, redei, approximate, pythagorean, check };

/// A fully parsed invocation. Scalar-valued flags stay textual here and are
/// parsed against the field spec by the command that consumes them, so one
/// request type covers every subcommand.
struct CommandRequest {
    Command cmd = Command::power;
    FieldSpec field = FieldSpec::rationals();
    std::optional<std::string> h, d, x, y, z;
    std::optional<std::string> beta;
    std::int64_t steps = 0;
    OutputFormat format = OutputFormat::tsv;
    unsigned digits = 10;
    std::uint64_t seed = 1;
    std::size_t samples = 500;
    RedeiStrategy strategy = RedeiStrategy::matrix;
    std::string suite = "all";  // check only
};

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Exit codes: 0 ok, 1 usage, 2 domain error, 3 precision exhausted.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitPrecision = 3;

// Parses argv (without the program name). Throws error(invalid_argument)
// on usage problems; --help requests fill help_text and return nullopt.
std::optional<CommandRequest> parse_args(const std::vector<std::string>& args,
                                         std::string* help_text);

RunResult run(const CommandRequest& request);

}  // namespace conic::cli
