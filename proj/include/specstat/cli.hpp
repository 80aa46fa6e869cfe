#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace specstat {

/// Invalid command line; the driver maps this to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    enum class Command {
        goe_closed,
        goe_mc,
        expectation,
        variance,
        decay_study,
        convergence_study,
        trace_eval,
    };
    Command command = Command::goe_closed;

    std::string family = "fejer";
    double beta = 1.0;
    double normalization = 1.0;
    double L = 10.0;
    double tau = 0.0;
    std::int64_t genus = 0;  // 0: large-genus limit
    std::int64_t k_budget = 400;
    double envelope_c = 1.0;

    int dim = 1000;
    int samples = 400;
    std::uint64_t seed = 42;
    double bulk_fraction = 0.5;

    std::vector<double> taus;  // decay-study
    std::vector<double> Ls;    // convergence-study

    std::string spectrum_path;
    std::string eigenvalues_path;
    std::string output_path;  // empty: stdout; relative paths honor SPECSTAT_OUTPUT_DIR
    std::string format = "csv";
};

/// Parses argv (without the program name).  Unknown flags are rejected.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes the configured pipeline; returns 0 on success.  Numerical
/// failures surface as exceptions which the driver maps to exit code 1.
int run(const RunConfig& cfg);

}  // namespace specstat
