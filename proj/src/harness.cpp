#include "summa/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>

#include "summa/errors.hpp"
#include "summa/expansions.hpp"
#include "summa/volterra.hpp"

namespace summa {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string kind_suffix(const ArithmeticTable& table) {
    return std::string(":") + kind_name(table.kind());
}

std::int64_t sieve_size_for(double upper, std::int64_t configured) {
    if (configured > 0) return configured;
    return std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(upper)));
}

int exit_code_for(const std::vector<ReportRow>& rows) {
    for (const ReportRow& row : rows)
        if (row.status == "fail") return 2;
    return 0;
}

ZeroTable obtain_zeros(const RunConfig& config, std::int64_t needed_count) {
    if (!config.zeros_path.empty()) {
        ZeroTable table = load_zeros(config.zeros_path);
        if (needed_count > static_cast<std::int64_t>(table.ordinates.size()))
            throw SizingError("zero cache " + config.zeros_path + " holds only " +
                              std::to_string(table.ordinates.size()) + " ordinates");
        return table;
    }
    return zeros_for_count(needed_count, config.zero_precision);
}

// --- families ---------------------------------------------------------------

std::vector<ReportRow> family_sieve(const RunConfig& config) {
    const std::int64_t n = config.n_sieve > 0 ? config.n_sieve : 1000;
    const ArithmeticTable table = sieve(kind_from_name(config.kind), n);
    std::int64_t nonzero = 0;
    for (std::int64_t i = 1; i <= n; ++i)
        if (table.raw(i) != 0.0) ++nonzero;

    ReportRow counts;
    counts.identifier = "sieve_nonzero" + kind_suffix(table);
    counts.params = {{"N", static_cast<double>(n)}};
    counts.lhs = static_cast<double>(nonzero);
    counts.rhs = 0.0;
    counts.residual = counts.lhs;
    counts.truncation.n_terms = n;
    counts.status = "finding";

    ReportRow summatory = counts;
    summatory.identifier = "sieve_summatory" + kind_suffix(table);
    summatory.lhs = dirichlet_polynomial(table, 0.0, static_cast<double>(n));
    summatory.residual = summatory.lhs;
    return {counts, summatory};
}

std::vector<ReportRow> family_zeros(const RunConfig& config) {
    if (config.cache_out.empty())
        throw ParseError("zeros: an --out cache path is required");
    const ZeroTable table = find_zeros(config.t_zeros, config.zero_precision);
    save_zeros(config.cache_out, table);

    ReportRow row;
    row.identifier = "zero_scan";
    row.params = {{"T", config.t_zeros}, {"precision", config.zero_precision}};
    row.lhs = static_cast<double>(table.ordinates.size());
    row.rhs = std::round(riemann_siegel_theta(config.t_zeros) / kPi + 1.0);
    row.residual = row.lhs - row.rhs;
    row.truncation.n_terms = static_cast<std::int64_t>(table.ordinates.size());
    row.status = std::abs(row.residual) <= 1.0 ? "pass" : "fail";
    return {row};
}

std::vector<ReportRow> family_volterra(const RunConfig& config) {
    const double range_top = config.y > 0.0 ? config.y : 1000.0;
    const std::int64_t n = sieve_size_for(range_top, config.n_sieve);
    const ArithmeticTable table = sieve(kind_from_name(config.kind), n);
    const bool exploratory = config.w < 1.0;
    const VolterraInstance inst = make_volterra_instance(table, config.w, exploratory);

    std::vector<double> samples;
    if (config.y > 0.0) {
        samples.push_back(config.y);
    } else {
        SampleGenerator gen(config.seed);
        for (std::int64_t i = 0; i < config.sample_count; ++i)
            samples.push_back(gen.next_noninteger(1.0, static_cast<double>(n)));
    }

    std::vector<ReportRow> rows;
    for (double y : samples) {
        ReportRow row;
        row.identifier = "volterra_residual" + kind_suffix(table);
        row.params = {{"w", config.w}, {"y", y}};
        row.lhs = dirichlet_polynomial(table, config.w, y);
        row.rhs = forcing_term(inst, y) + step_integral(table, config.w, y) / y;
        row.residual = row.lhs - row.rhs;
        row.truncation.n_terms = n;
        const bool integer_point = std::floor(y) == y;
        if (integer_point)
            row.status = "warning"; // identity defect a(y)/y^w at integer points
        else if (exploratory)
            row.status = "finding";
        else
            row.status = std::abs(row.residual) < 1.0e-12 ? "pass" : "fail";
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ReportRow> family_neumann(const RunConfig& config) {
    const double y = config.y > 0.0 ? config.y : 50.5;
    const std::int64_t n = sieve_size_for(y, config.n_sieve);
    const ArithmeticTable table = sieve(kind_from_name(config.kind), n);
    const VolterraInstance inst = make_volterra_instance(table, config.w, config.w < 1.0);
    const double direct = dirichlet_polynomial(table, config.w, y);
    // Floating-point floor: once the series has converged to roundoff the
    // mathematical tail bound keeps shrinking but the summation noise cannot.
    const double noise = 1.0e-13 * (1.0 + std::abs(direct));

    std::vector<ReportRow> rows;
    double partial = 0.0;
    for (std::int64_t k = 0; k <= config.k_partial; ++k) {
        partial += neumann_term_closed(inst, y, k);
        const double bound = neumann_remainder_bound(inst, y, k);
        ReportRow row;
        row.identifier = "neumann_partial" + kind_suffix(table);
        row.params = {{"w", config.w}, {"y", y}, {"k", static_cast<double>(k)}};
        row.lhs = direct;
        row.rhs = partial;
        row.residual = row.lhs - row.rhs;
        row.truncation.n_terms = k;
        row.status = std::abs(row.residual) <= bound + noise ? "pass" : "fail";
        rows.push_back(std::move(row));
    }

    {
        ReportRow row;
        row.identifier = "neumann_convergence" + kind_suffix(table);
        row.params = {{"w", config.w}, {"y", y},
                      {"k", static_cast<double>(config.k_partial)}};
        row.lhs = direct;
        row.rhs = partial;
        row.residual = row.lhs - row.rhs;
        row.truncation.n_terms = config.k_partial;
        if (y <= 100.0 && config.k_partial >= 40)
            row.status = std::abs(row.residual) < 1.0e-8 ? "pass" : "fail";
        else
            row.status = "finding";
        rows.push_back(std::move(row));
    }

    const double quad_tol =
        config.mesh >= 10000 ? 1.0e-4
                             : 1.0e-4 * std::pow(1.0e4 / static_cast<double>(config.mesh), 2);
    for (std::int64_t k = 0; k <= std::min<std::int64_t>(3, config.k_partial); ++k) {
        ReportRow row;
        row.identifier = "neumann_quadrature" + kind_suffix(table);
        row.params = {{"w", config.w}, {"y", y}, {"k", static_cast<double>(k)}};
        row.lhs = neumann_term_closed(inst, y, k);
        row.rhs = neumann_term_quadrature(inst, y, k, config.mesh);
        row.residual = row.lhs - row.rhs;
        row.truncation.n_terms = config.mesh;
        row.status = std::abs(row.residual) <= quad_tol ? "pass" : "fail";
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ReportRow> family_bvp(const RunConfig& config) {
    std::vector<double> samples;
    double top = config.x;
    if (config.sample_count > 1) {
        SampleGenerator gen(config.seed);
        const double hi = config.n_sieve > 0 ? static_cast<double>(config.n_sieve) : 1000.0;
        for (std::int64_t i = 0; i < config.sample_count; ++i)
            samples.push_back(gen.next_noninteger(1.0, hi));
        top = hi;
    } else {
        samples.push_back(config.x);
    }
    const std::int64_t n = sieve_size_for(top, config.n_sieve);
    const ArithmeticTable table = sieve(ArithmeticKind::mobius, n);
    const VolterraInstance inst = make_volterra_instance(table, config.w, config.w < 1.0);

    std::vector<ReportRow> rows;
    for (double x : samples) {
        std::vector<ReportRow> pair = bvp_integrated_check(inst, x);
        rows.insert(rows.end(), pair.begin(), pair.end());
    }
    return rows;
}

void push_complex_rows(std::vector<ReportRow>& rows, const std::string& base,
                       std::vector<std::pair<std::string, double>> params, Complex lhs,
                       Complex rhs, double tolerance, std::int64_t n_terms) {
    const bool both_parts = params.size() >= 2 && params[1].first == "s_im" &&
                            params[1].second != 0.0;
    const int parts = both_parts ? 2 : 1;
    for (int part = 0; part < parts; ++part) {
        ReportRow row;
        row.identifier = base + (part == 0 ? "_re" : "_im");
        row.params = params;
        row.lhs = part == 0 ? lhs.real() : lhs.imag();
        row.rhs = part == 0 ? rhs.real() : rhs.imag();
        row.residual = row.lhs - row.rhs;
        row.truncation.n_terms = n_terms;
        row.status = std::abs(row.residual) <= tolerance ? "pass" : "fail";
        rows.push_back(std::move(row));
    }
}

std::vector<ReportRow> family_integrals(const RunConfig& config) {
    const Complex s(config.s_re, config.s_im);
    QuadratureSpec q = config.quadrature;
    q.tail_tol = config.tail_tol;
    std::vector<ReportRow> rows;
    if (config.theorem == "21") {
        const Complex lhs = sawtooth_mellin_forward(s);
        const Complex rhs = sawtooth_mellin_reference(s);
        push_complex_rows(rows, "sawtooth_transform",
                          {{"s_re", config.s_re}, {"s_im", config.s_im}}, lhs, rhs,
                          1.0e-12 * (1.0 + std::abs(rhs)), 1);
    } else if (config.theorem == "31") {
        const CertifiedValue cv = frac_integral_certified(s, q);
        const Complex rhs = frac_integral_reference(s);
        push_complex_rows(rows, "frac_integral",
                          {{"s_re", config.s_re},
                           {"s_im", config.s_im},
                           {"K_cells", static_cast<double>(q.k_cells)},
                           {"certificate", cv.certificate}},
                          cv.value, rhs, cv.certificate + 1.0e-8 * (1.0 + std::abs(rhs)),
                          q.k_cells);
    } else if (config.theorem == "32") {
        const CertifiedValue cv = floor_frac_integral_certified(s, q);
        const Complex rhs = floor_frac_integral_reference(s);
        push_complex_rows(rows, "floor_frac_integral",
                          {{"s_re", config.s_re},
                           {"s_im", config.s_im},
                           {"K_cells", static_cast<double>(q.k_cells)},
                           {"certificate", cv.certificate}},
                          cv.value, rhs, cv.certificate + 1.0e-8 * (1.0 + std::abs(rhs)),
                          q.k_cells);
    } else {
        throw ParseError("verify-integrals: unknown --theorem selector '" + config.theorem +
                         "' (expected 21, 31, or 32)");
    }
    return rows;
}

std::vector<ReportRow> family_residues(const RunConfig& config) {
    std::vector<ReportRow> rows;
    if (config.theorem == "1") {
        const double y = config.y > 0.0 ? config.y : 100.5;
        const ZeroTable zeros = obtain_zeros(config, config.truncation.k_zeros);
        const ArithmeticTable table =
            sieve(ArithmeticKind::von_mangoldt, sieve_size_for(y, config.n_sieve));
        ReportRow row;
        row.identifier = "prime_bracket_expansion";
        row.params = {{"y", y}, {"w", config.w}};
        row.lhs = prime_bracket_lhs(table, y, config.w);
        row.rhs = prime_bracket_expansion(y, config.w, config.truncation, zeros);
        row.residual = row.lhs - row.rhs;
        row.truncation = config.truncation;
        row.truncation.n_terms = table.size();
        row.status = config.w == 0.0 ? "provisional" : "finding";
        rows.push_back(std::move(row));
    } else if (config.theorem == "2") {
        const double y = config.y > 0.0 ? config.y : 10000.5;
        const ZeroTable zeros = obtain_zeros(config, config.truncation.k_zeros);
        const std::int64_t n = sieve_size_for(y, config.n_sieve);
        const ArithmeticTable mobius_log = sieve(ArithmeticKind::mobius_log_neg, n);
        const ArithmeticTable lambda = sieve(ArithmeticKind::von_mangoldt, n);
        rows.push_back(
            mobius_log_report(mobius_log, lambda, y, config.truncation, zeros));
    } else if (config.theorem == "33") {
        const ZeroTable zeros = obtain_zeros(config, config.truncation.k_zeros);
        ReportRow row;
        row.identifier = "prime_frac_expansion";
        row.params = {{"x", config.x}};
        row.lhs = prime_frac_lhs(config.x, config.tail_tol);
        row.rhs = prime_frac_expansion(config.x, config.truncation, zeros);
        row.residual = row.lhs - row.rhs;
        row.truncation = config.truncation;
        row.status = "finding";
        rows.push_back(std::move(row));
    } else {
        throw ParseError("verify-residues: unknown --theorem selector '" + config.theorem +
                         "' (expected 1, 2, or 33)");
    }
    return rows;
}

std::vector<ReportRow> family_identities(const RunConfig& config) {
    const std::int64_t n = sieve_size_for(config.x, config.n_sieve);
    std::vector<ReportRow> rows;
    if (config.which == "19") {
        rows.push_back(totient_integral_identity(sieve(ArithmeticKind::mobius, n),
                                                 sieve(ArithmeticKind::totient, n),
                                                 config.x));
    } else if (config.which == "112") {
        rows.push_back(totient_direct_identity(sieve(ArithmeticKind::mobius, n),
                                               sieve(ArithmeticKind::totient, n),
                                               config.x));
    } else if (config.which == "16") {
        rows.push_back(divisor_chain_identity(sieve(kind_from_name(config.kind), n),
                                              config.x, config.w));
    } else {
        throw ParseError("report-identities: unknown --which selector '" + config.which +
                         "' (expected 16, 19, or 112)");
    }
    return rows;
}

std::vector<ReportRow> family_divergence(const RunConfig& config) {
    const double y = config.y > 0.0 ? config.y : 4.0;
    ZeroTable zeros;
    if (!config.zeros_path.empty())
        zeros = load_zeros(config.zeros_path);
    else
        zeros = zeros_to_height(config.t_zeros, config.zero_precision);
    const std::vector<double> sums =
        zero_power_partial_sums(config.m_power, config.t_zeros, y, zeros);

    std::vector<ReportRow> rows;
    rows.reserve(sums.size());
    for (std::size_t i = 0; i < sums.size(); ++i) {
        ReportRow row;
        row.identifier = "zero_power_partial";
        row.params = {{"m", config.m_power}, {"y", y}, {"gamma", zeros.ordinates[i]}};
        row.lhs = sums[i];
        row.rhs = i > 0 ? sums[i - 1] : 0.0;
        row.residual = row.lhs - row.rhs; // per-ordinate increment: never negative
        row.truncation.n_terms = static_cast<std::int64_t>(i + 1);
        row.status = "finding";
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ReportRow> family_decay(const RunConfig& config) {
    const std::int64_t n = sieve_size_for(config.y_max, config.n_sieve);
    const ArithmeticTable table = sieve(kind_from_name(config.kind), n);
    const VolterraInstance inst = make_volterra_instance(table, config.w, config.w < 1.0);
    return {observed_decay_exponent(inst, config.y_min, config.y_max, config.points)};
}

} // namespace

std::uint64_t SampleGenerator::next_u64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
}

double SampleGenerator::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SampleGenerator::next_noninteger(double lo, double hi) {
    if (!(hi > lo)) throw DomainError("sampler: empty interval");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double v = lo + (hi - lo) * next_unit();
        if (std::abs(v - std::round(v)) >= 1.0e-6 && v > lo && v < hi) return v;
    }
    throw Error("sampler: rejection failed to find a non-integer point");
}

std::string cache_directory() {
    const char* dir = std::getenv("SUMMA_CACHE_DIR");
    return dir == nullptr ? std::string() : std::string(dir);
}

ZeroTable zeros_to_height(double t_max, double precision) {
    const std::string dir = cache_directory();
    std::string path;
    if (!dir.empty()) {
        path = dir + "/zeros-T" + format_double(t_max) + "-p" + format_double(precision) +
               ".txt";
        if (std::filesystem::exists(path)) {
            ZeroTable table = load_zeros(path);
            table.t_max = t_max; // the filename records the scanned coverage
            return table;
        }
    }
    ZeroTable table = find_zeros(t_max, precision);
    if (!path.empty() && !table.ordinates.empty()) save_zeros(path, table);
    return table;
}

ZeroTable zeros_for_count(std::int64_t k_zeros, double precision) {
    if (k_zeros <= 0) {
        ZeroTable empty;
        empty.precision = precision;
        empty.t_max = 14.5;
        return empty;
    }
    double t = 30.0;
    while (t < 1.0e3 &&
           riemann_siegel_theta(t) / kPi + 1.0 < static_cast<double>(k_zeros) + 2.0)
        t = std::min(1.0e3, t * 1.25);
    ZeroTable table = zeros_to_height(t, precision);
    if (static_cast<std::int64_t>(table.ordinates.size()) < k_zeros)
        throw SizingError("zeros_for_count: only " + std::to_string(table.ordinates.size()) +
                          " ordinates available below the supported height");
    return table;
}

RunResult run(const RunConfig& config) {
    if (config.sample_count < 1) throw DomainError("run: sample_count must be >= 1");
    std::vector<ReportRow> rows;
    if (config.command == "sieve")
        rows = family_sieve(config);
    else if (config.command == "zeros")
        rows = family_zeros(config);
    else if (config.command == "verify-volterra")
        rows = family_volterra(config);
    else if (config.command == "verify-neumann")
        rows = family_neumann(config);
    else if (config.command == "verify-bvp")
        rows = family_bvp(config);
    else if (config.command == "verify-integrals")
        rows = family_integrals(config);
    else if (config.command == "verify-residues")
        rows = family_residues(config);
    else if (config.command == "report-identities")
        rows = family_identities(config);
    else if (config.command == "divergence")
        rows = family_divergence(config);
    else if (config.command == "decay-exponent")
        rows = family_decay(config);
    else
        throw ParseError("run: unknown command '" + config.command + "'");
    return {std::move(rows), exit_code_for(rows)};
}

std::string command_listing() {
    return
        "sieve             arithmetic tables (von Mangoldt, Moebius, signed Moebius-log,\n"
        "                  totient, unit): nonzero counts and summatory values\n"
        "zeros             critical-line zero ordinates by sign-change scan of the rotated\n"
        "                  zeta function; writes the text cache (--out)\n"
        "verify-volterra   renewal identity D(y) = F(y) + (1/y) int_0^y D(t) dt, exact at\n"
        "                  non-integer y; seeded samples\n"
        "verify-neumann    iterated-kernel series: closed-form partial sums vs the direct\n"
        "                  Dirichlet polynomial, factorial tail bounds, quadrature oracle\n"
        "verify-bvp        integrated two-point form x D - x F = int_0^x D for the Moebius\n"
        "                  kind, plus the flipped-sign variant (finding)\n"
        "verify-integrals  forward unit-cell transforms with certified tails:\n"
        "                  --theorem 21  sawtooth kernel on (0,1), closed form both sides\n"
        "                  --theorem 31  fractional-part integral, strip -1 < Re s < 0\n"
        "                  --theorem 32  floor-weighted integral, half-plane Re s > 0\n"
        "verify-residues   series vs residue expansions over zeta zeros:\n"
        "                  --theorem 1   prime-power bracket sum, weight w\n"
        "                  --theorem 2   signed Moebius-log bracket sum (finding)\n"
        "                  --theorem 33  prime fractional-part series at x > 0\n"
        "report-identities archived identity comparisons (never assertions):\n"
        "                  --which 19    Moebius bracket vs totient-integral form\n"
        "                  --which 112   corrected bracket vs direct totient form\n"
        "                  --which 16    divisor-sum chain for a chosen kind\n"
        "divergence        partial sums sqrt(y) * sum_{gamma<=T} gamma^{m-1}: monotone\n"
        "                  unbounded growth demonstration\n"
        "decay-exponent    observed power-law exponent of |D_w(y)| on a log grid (finding)\n";
}

} // namespace summa
