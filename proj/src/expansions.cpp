#include "summa/expansions.hpp"

#include <cmath>

#include "summa/errors.hpp"
#include "summa/kahan.hpp"

namespace summa {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLog2Pi = 1.837877066409345483560659472811;

void check_truncation(const TruncationSpec& trunc, const ZeroTable& zeros) {
    if (trunc.k_zeros < 0 || trunc.k_trivial < 0)
        throw DomainError("truncation: negative cutoffs");
    if (trunc.k_zeros > static_cast<std::int64_t>(zeros.ordinates.size()))
        throw SizingError("truncation: K_zeros exceeds the available zero table (" +
                          std::to_string(zeros.ordinates.size()) + ")");
}

// Sum term(rho) over the first K ordinates; with pairing enabled the
// conjugate zero is evaluated independently and added, which makes the
// imaginary part of the total a genuine cross-check rather than zero by
// construction.
template <typename Term>
Complex zero_sum(const ZeroTable& zeros, const TruncationSpec& trunc, Term term) {
    KahanComplexSum sum;
    for (std::int64_t k = 0; k < trunc.k_zeros; ++k) {
        const Complex rho(0.5, zeros.ordinates[static_cast<std::size_t>(k)]);
        sum.add(term(rho));
        if (trunc.pair_conjugates) sum.add(term(std::conj(rho)));
    }
    return sum.value();
}

double real_after_pairing_check(Complex total, bool paired, const char* what) {
    if (paired && std::abs(total.imag()) > 1.0e-9 * (1.0 + std::abs(total.real())))
        throw Error(std::string(what) +
                    ": conjugate pairing failed, imaginary part " +
                    format_double(total.imag()));
    return total.real();
}

} // namespace

double prime_bracket_lhs(const ArithmeticTable& von_mangoldt_table, double y, double w) {
    if (von_mangoldt_table.kind() != ArithmeticKind::von_mangoldt)
        throw DomainError("prime_bracket_lhs: needs the von Mangoldt kind");
    return weighted_bracket_sum(von_mangoldt_table, w, y) -
           divisor_sum_prefix(von_mangoldt_table, w, y);
}

double main_pole_term(double w, double y) {
    if (!(y > 1.0)) throw DomainError("main_pole_term: y must be > 1");
    if (w == 0.0 || w == 1.0) return 0.0;
    const double zeta_neg = zeta(Complex(-w, 0.0)).real();
    return -(1.0 + w) * std::pow(y, 1.0 - w) * zeta_neg / ((w - 1.0) * w);
}

double prime_bracket_expansion(double y, double w, const TruncationSpec& trunc,
                               const ZeroTable& zeros) {
    if (!(y > 1.0)) throw DomainError("prime_bracket_expansion: y must be > 1");
    if (w < 0.0) throw DomainError("prime_bracket_expansion: w must be >= 0");
    if (w == 1.0)
        throw PoleError("prime_bracket_expansion: w = 1 collides with the pole of the "
                        "weight-(1+w) term");
    check_truncation(trunc, zeros);
    // zeta(-2n - w - 1) must stay inside the supported reflection band.
    if (2.0 * static_cast<double>(trunc.k_trivial) + w + 1.0 > -kZetaReMin - 1.0)
        throw SizingError("prime_bracket_expansion: K_trivial outside the supported "
                          "zeta band");

    double main;
    if (w == 0.0) {
        // kappa(w) and -y zeta'(1+w)/(2 zeta(1+w)) diverge separately as
        // w -> 0 but their sum has this finite limit; callers flag the result
        // as provisional.
        main = kLog2Pi / 6.0 +
               0.5 * y * (std::log(2.0 * kPi * y) - 2.0 - euler_gamma());
    } else {
        const Complex ratio_w = zeta_log_deriv(Complex(w, 0.0));
        const Complex ratio_w1 = zeta_log_deriv(Complex(1.0 + w, 0.0));
        main = main_pole_term(w, y) + ratio_w.real() / 6.0 - y * ratio_w1.real() / 2.0;
    }

    const double log_y = std::log(y);
    const Complex zsum = zero_sum(zeros, trunc, [&](Complex rho) {
        const Complex shifted = rho - w;
        return std::exp(shifted * log_y) * (2.0 + w - rho) * zeta(shifted - 1.0) /
               (2.0 * shifted * (shifted - 1.0));
    });

    KahanSum trivial;
    for (std::int64_t n = 1; n <= trunc.k_trivial; ++n) {
        const double a = 2.0 * static_cast<double>(n) + w; // = -(rho - w) at rho = -2n
        trivial.add(std::pow(y, -a) * (2.0 + a) *
                    zeta(Complex(-a - 1.0, 0.0)).real() / (2.0 * a * (a + 1.0)));
    }

    return main + real_after_pairing_check(zsum, trunc.pair_conjugates,
                                           "prime_bracket_expansion") +
           trivial.value();
}

Complex mobius_log_rbar(Complex rho, double y) {
    if (!(y > 1.0)) throw DomainError("mobius_log_rbar: y must be > 1");
    const Complex dz = zeta_prime(rho);
    if (std::abs(dz) < 1.0e-10)
        throw NearZeroError("mobius_log_rbar: |zeta'(rho)| < 1e-10 (degenerate zero)");
    const Complex zm1 = zeta(rho - 1.0);
    const Complex dzm1 = zeta_prime(rho - 1.0);
    const Complex cubic = rho * (rho - 1.0) * (rho - 2.0); // rho^3 - 3rho^2 + 2rho
    const Complex bracket = cubic * dzm1 + (-rho * rho + 4.0 * rho - 2.0) * zm1 +
                            std::log(y) * cubic * zm1;
    const Complex denom = (rho - 1.0) * (rho - 1.0) * rho * rho * dz;
    return -bracket / denom;
}

Complex mobius_log_contour_residue(double y, Complex center, double radius, int points) {
    if (!(y > 1.0)) throw DomainError("mobius_log_contour_residue: y must be > 1");
    if (!(radius > 0.0) || points < 8)
        throw DomainError("mobius_log_contour_residue: bad circle parameters");
    const double log_y = std::log(y);
    KahanComplexSum sum;
    for (int j = 0; j < points; ++j) {
        const double angle = 2.0 * kPi * static_cast<double>(j) / points;
        const Complex dir = std::polar(1.0, angle);
        const Complex s = center + radius * dir;
        const Complex z1 = zeta(s + 1.0);
        const Complex g = std::exp((s + 1.0) * log_y) * zeta_prime(s + 1.0) *
                          (1.0 - s) * zeta(s) / (z1 * z1 * s * (s + 1.0));
        sum.add(g * dir);
    }
    return sum.value() * (radius / static_cast<double>(points));
}

ReportRow mobius_log_report(const ArithmeticTable& mobius_log_table,
                            const ArithmeticTable& von_mangoldt_table, double y,
                            const TruncationSpec& trunc, const ZeroTable& zeros) {
    if (mobius_log_table.kind() != ArithmeticKind::mobius_log_neg)
        throw DomainError("mobius_log_report: needs the mobius_log_neg kind");
    if (von_mangoldt_table.kind() != ArithmeticKind::von_mangoldt)
        throw DomainError("mobius_log_report: needs a von Mangoldt table for psi");
    if (!(y > 1.0)) throw DomainError("mobius_log_report: y must be > 1");
    check_truncation(trunc, zeros);
    // Trivial contour centers -2n-1 with radius 0.25 must stay inside the band.
    if (2.0 * static_cast<double>(trunc.k_trivial) + 1.25 > -kZetaReMin)
        throw SizingError("mobius_log_report: K_trivial outside the supported zeta band");

    const double lhs = weighted_bracket_sum(mobius_log_table, 0.0, y) -
                       dirichlet_polynomial(von_mangoldt_table, 0.0, y);

    const Complex zsum = zero_sum(zeros, trunc, [&](Complex rho) {
        return std::exp(rho * std::log(y)) * mobius_log_rbar(rho, y);
    });
    KahanSum trivial;
    for (std::int64_t n = 1; n <= trunc.k_trivial; ++n) {
        const Complex residue =
            mobius_log_contour_residue(y, Complex(-2.0 * static_cast<double>(n) - 1.0, 0.0));
        trivial.add(residue.real());
    }
    const double rhs = y / 2.0 +
                       real_after_pairing_check(zsum, trunc.pair_conjugates,
                                                "mobius_log_report") +
                       trivial.value();

    ReportRow row;
    row.identifier = "mobius_log_expansion";
    row.params = {{"y", y}};
    row.lhs = lhs;
    row.rhs = rhs;
    row.residual = lhs - rhs;
    row.truncation = trunc;
    row.truncation.n_terms = static_cast<std::int64_t>(std::floor(y));
    row.status = "finding"; // divergent-series expansion: archived, not asserted
    return row;
}

double prime_frac_lhs(double x, double tail_tol) {
    if (!(x > 0.0)) throw DomainError("prime_frac_lhs: x must be > 0");
    if (!(tail_tol > 0.0)) throw DomainError("prime_frac_lhs: tail_tol must be > 0");
    // 1/x integer => frac(n/x) = frac(n * integer) = 0 for every n.
    const double inv = 1.0 / x;
    if (std::abs(inv - std::round(inv)) < 1.0e-12) return 0.0;

    // Smallest N with x (log N + 1) / N <= tail_tol; the bound comes from
    // Lambda(n) <= log n and the decreasing-integrand comparison
    // sum_{n>N} log(n)/n^2 <= (log N + 1)/N.
    constexpr std::int64_t kMaxN = 600'000'000;
    std::int64_t n_top = 1024;
    while (x * (std::log(static_cast<double>(n_top)) + 1.0) / static_cast<double>(n_top) >
           tail_tol) {
        n_top *= 2;
        if (n_top > kMaxN)
            throw SizingError("prime_frac_lhs: tail_tol " + format_double(tail_tol) +
                              " needs more than " + std::to_string(kMaxN) +
                              " terms under the unconditional tail bound");
    }

    // Prime sieve; the series is supported on prime powers only.
    std::vector<bool> composite(static_cast<std::size_t>(n_top) + 1, false);
    for (std::int64_t p = 2; p * p <= n_top; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        for (std::int64_t q = p * p; q <= n_top; q += p)
            composite[static_cast<std::size_t>(q)] = true;
    }

    KahanSum sum;
    for (std::int64_t p = 2; p <= n_top; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        const double log_p = std::log(static_cast<double>(p));
        for (std::int64_t pk = p;; pk *= p) {
            const double nd = static_cast<double>(pk);
            const double frac = frac_floor(nd / x).frac;
            if (frac != 0.0) sum.add(log_p * frac / (nd * nd));
            if (pk > n_top / p) break;
        }
    }
    return -x * sum.value();
}

double prime_frac_expansion(double x, const TruncationSpec& trunc, const ZeroTable& zeros) {
    if (!(x > 0.0)) throw DomainError("prime_frac_expansion: x must be > 0");
    check_truncation(trunc, zeros);

    const double log_x = std::log(x);
    const double main = 1.0 - 2.0 * euler_gamma() - log_x;

    const Complex zsum = zero_sum(zeros, trunc, [&](Complex rho) {
        const Complex two_minus = 2.0 - rho;
        return zeta(two_minus) * std::exp((1.0 - rho) * log_x) / two_minus;
    });

    KahanSum trivial;
    for (std::int64_t n = 1; n <= trunc.k_trivial; ++n) {
        const double a = 2.0 + 2.0 * static_cast<double>(n);
        trivial.add(zeta(Complex(a, 0.0)).real() *
                    std::pow(x, 1.0 - 2.0 * static_cast<double>(n)) / a);
    }

    return main + real_after_pairing_check(zsum, trunc.pair_conjugates,
                                           "prime_frac_expansion") +
           trivial.value();
}

std::vector<double> zero_power_partial_sums(double m, double t_max, double y,
                                            const ZeroTable& zeros) {
    if (!(m >= 1.0)) throw DomainError("zero_power_partial_sums: m must be >= 1");
    if (!(y > 1.0)) throw DomainError("zero_power_partial_sums: y must be > 1");
    if (!(t_max > 14.0)) throw DomainError("zero_power_partial_sums: t_max must be > 14");
    if (zeros.t_max < t_max)
        throw SizingError("zero_power_partial_sums: zero table covers only up to " +
                          format_double(zeros.t_max));

    const double weight = std::sqrt(y);
    std::vector<double> partial;
    KahanSum sum;
    for (double gamma : zeros.ordinates) {
        if (gamma > t_max) break;
        sum.add(std::pow(gamma, m - 1.0));
        partial.push_back(weight * sum.value());
    }
    return partial;
}

} // namespace summa
