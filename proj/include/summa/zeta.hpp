#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace summa {

using Complex = std::complex<double>;

// Supported evaluation band for the zeta machinery. Outside it we refuse
// rather than silently degrade.
constexpr double kZetaImMax = 1.0e3;
constexpr double kZetaReMin = -50.0;
constexpr double kPoleGuard = 1.0e-6; // reject |s-1| below this

// Euler-Maclaurin evaluation; absolute error <= 1e-12 for |Im s| <= 100 and
// <= 1e-9 up to |Im s| = 1e3. Re s < -0.5 goes through the reflection formula.
Complex zeta(Complex s);

// Term-wise differentiated Euler-Maclaurin; reflected via chi'(s) for
// Re s < -0.5. Absolute error <= 1e-10 for |Im s| <= 100.
Complex zeta_prime(Complex s);

// zeta'(s)/zeta(s); refuses when |zeta(s)| < 1e-13.
Complex zeta_log_deriv(Complex s);

// chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s), the reflection factor with
// zeta(s) = chi(s) zeta(1-s).
Complex reflection_factor(Complex s);

// Euler-Mascheroni constant, computed (not hard-coded) by Euler-Maclaurin on
// H_N - log N; absolute error well under 1e-12.
double euler_gamma();

// log Gamma(z) for Re z > 0 (principal, analytic); Stirling + recurrence.
Complex log_gamma(Complex z);

// digamma(z) = Gamma'(z)/Gamma(z) for Re z > 0.
Complex digamma(Complex z);

// Riemann-Siegel theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
double riemann_siegel_theta(double t);

// Z(t) = exp(i theta(t)) zeta(1/2 + it); real-valued on the critical line.
double hardy_z(double t);

// Critical-line zero ordinates 0 < gamma <= T.
struct ZeroTable {
    std::vector<double> ordinates; // strictly ascending, all > 14
    double precision = 0.0;        // absolute error bound per ordinate
    double t_max = 0.0;            // scanned coverage; loaded tables fall back
                                   // to their last ordinate (not serialized)
    enum class Source { computed, loaded } source = Source::computed;

    std::int64_t count_below(double t) const;
};

// Scan Z(t) sign changes on a 0.05 grid over (14, T], refine by bisection to
// the requested precision, and cross-check the count against the theta-based
// expected value (refining the grid once on mismatch).
ZeroTable find_zeros(double t_max, double precision = 1.0e-9);

// Independent recount: sign changes of Z over (14, t_max] on a uniform grid
// of the given spacing, no bisection or cross-checks.
std::int64_t count_zero_sign_changes(double t_max, double grid);

// T log(T) / (2 pi): leading-order zero-count growth (no lower-order terms).
double zero_count_asymptotic(double t);

// Persistent cache: header "# summa-lab zeros v1 precision=<decimal>", one
// ordinate per line with fixed 12 decimals, ascending. Round-trip lossless.
void save_zeros(const std::string& path, const ZeroTable& table);
ZeroTable load_zeros(const std::string& path);

} // namespace summa
