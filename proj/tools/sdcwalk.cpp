// Command-line front end: parse flags, run one experiment, print the JSON
// summary on stdout. Exit codes: 0 ok, 1 usage, 2 runtime/validation, 3 I/O.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "sdcwalk/errors.hpp"
#include "sdcwalk/harness/output.hpp"
#include "sdcwalk/harness/run_spec.hpp"
#include "sdcwalk/harness/runner.hpp"

int main(int argc, char** argv) {
    using namespace sdcwalk;
    std::optional<std::string> threads_env;
    if (const char* env = std::getenv("SDCWALK_THREADS")) threads_env = env;

    harness::RunSpec spec;
    try {
        spec = harness::parse_config(argc, argv, threads_env);
    } catch (const harness::UsageError& e) {
        (e.exit_code() == 0 ? std::cout : std::cerr) << e.what() << (e.exit_code() == 0 ? "" : "\n");
        return e.exit_code();
    }

    try {
        std::cout << harness::run(spec).dump(2) << '\n';
    } catch (const harness::IoError& e) {
        std::cerr << "sdcwalk: " << e.what() << '\n';
        return 3;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "sdcwalk: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "sdcwalk: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
