#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "summa/mellin.hpp"
#include "summa/report.hpp"
#include "summa/zeta.hpp"

namespace summa {

// Deterministic 64-bit linear congruential sampler; doubles use the top 53
// bits. Identical seeds reproduce identical sample grids bit-for-bit.
class SampleGenerator {
public:
    explicit SampleGenerator(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double next_unit(); // in [0, 1)
    // Uniform in (lo, hi), rejecting points within 1e-6 of an integer so
    // integer-endpoint ambiguities are excluded by construction.
    double next_noninteger(double lo, double hi);

private:
    std::uint64_t state_;
};

// SUMMA_CACHE_DIR, or empty when caching is disabled.
std::string cache_directory();

// Zero tables for the verification families: computed on demand, and when a
// cache directory is configured, persisted/reused through the text format of
// save_zeros/load_zeros.
ZeroTable zeros_to_height(double t_max, double precision = 1.0e-9);
ZeroTable zeros_for_count(std::int64_t k_zeros, double precision = 1.0e-9);

struct RunConfig {
    std::string command;
    // shared numerics
    std::int64_t n_sieve = 0; // 0: derived from the other inputs
    double t_zeros = 100.0;
    double zero_precision = 1.0e-9;
    TruncationSpec truncation{100, 10, 1, true};
    QuadratureSpec quadrature;
    std::int64_t sample_count = 1;
    std::uint64_t seed = 1;
    std::string output_path; // report destination; empty = stdout
    ReportFormat format = ReportFormat::csv;
    // family selectors and knobs
    std::string kind = "mobius";
    std::string theorem;    // verify-integrals / verify-residues selector
    std::string which;      // report-identities selector
    std::string zeros_path; // preexisting zero cache to load instead of computing
    std::string cache_out;  // `zeros` subcommand: where to save the table
    double w = 1.0;
    double x = 2.5;
    double y = 0.0; // 0: family default
    double s_re = 0.0, s_im = 0.0;
    double tail_tol = 1.0e-6;
    double m_power = 1.0; // divergence family exponent offset
    std::int64_t k_partial = 40; // series depth for the Neumann family
    std::int64_t mesh = 10000;
    double y_min = 10.0, y_max = 1000.0;
    std::int64_t points = 20;
};

struct RunResult {
    std::vector<ReportRow> rows;
    int exit_code; // 0 = all assertions hold, 2 = some assertion failed
};

// Executes one verification family. Configuration problems (unknown command,
// bad parameters, unreachable tolerances) surface as exceptions, which the
// CLI maps to exit status 3. Finding-only families never produce exit 2.
RunResult run(const RunConfig& config);

// Formula-to-command coverage map for --list.
std::string command_listing();

} // namespace summa
