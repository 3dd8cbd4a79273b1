#include <iostream>
#include <string>
#include <vector>

#include "conic/cli.hpp"
#include "conic/errors.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string help;
    try {
        auto request = conic::cli::parse_args(args, &help);
        if (!request) {
            std::cout << help;
            return conic::cli::kExitOk;
        }
        conic::cli::RunResult result = conic::cli::run(*request);
        std::cout << result.out;
        std::cerr << result.err;
        return result.exit_code;
    } catch (const conic::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == conic::errc::invalid_argument ? conic::cli::kExitUsage
                                                         : conic::cli::kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return conic::cli::kExitUsage;
    }
}
