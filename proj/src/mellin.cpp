#include "summa/mellin.hpp"

#include <cmath>

#include "summa/errors.hpp"
#include "summa/kahan.hpp"

namespace summa {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEps = 2.220446049250313e-16;

// exp(z) - 1 without cancellation for small |z|.
Complex cexpm1(Complex z) {
    if (z.imag() == 0.0) return {std::expm1(z.real()), 0.0};
    const double ex = std::expm1(z.real());
    const double sy = std::sin(z.imag());
    const double half = std::sin(0.5 * z.imag());
    return {ex * std::cos(z.imag()) - 2.0 * half * half, (ex + 1.0) * sy};
}

Complex cpow_real_base(double base, Complex e) {
    return std::exp(e * std::log(base)); // base > 0
}

// Exact integral over [k, k+1) of frac(x) * x^{-s-2}, k >= 1:
//   (k^{-s} - (k+1)^{-s})/s + k ((k+1)^{-s-1} - k^{-s-1})/(s+1),
// arranged through expm1 so consecutive-power cancellation costs no digits.
Complex unit_cell(std::int64_t k, Complex s, const Complex& s1) {
    const double kd = static_cast<double>(k);
    const double lk = std::log(kd);
    const double lp = std::log1p(1.0 / kd);
    const Complex kms = std::exp(-s * lk);          // k^{-s}
    const Complex d1 = kms * cexpm1(-s * lp);       // (k+1)^{-s} - k^{-s}
    const Complex kms1 = kms / kd;                  // k^{-s-1}
    const Complex d2 = kms1 * cexpm1(-s1 * lp);     // (k+1)^{-s-1} - k^{-s-1}
    return -d1 / s + kd * d2 / s1;
}

void check_spec(const QuadratureSpec& q) {
    if (q.k_cells < 1) throw DomainError("cell sum: K_cells must be positive");
    if (!(q.tail_tol > 0.0)) throw DomainError("cell sum: tail_tol must be positive");
}

double certify(double analytic, double rounding_floor, double tail_tol, const char* what) {
    // 1.5x headroom on the analytic coefficient, plus the accumulated
    // floating-point noise floor, keeps the bound honest at large K.
    const double cert = 1.5 * analytic + rounding_floor;
    if (!(cert <= tail_tol))
        throw SizingError(std::string(what) +
                          ": tail certificate " + format_double(cert) +
                          " exceeds tail_tol " + format_double(tail_tol) +
                          "; increase K_cells or relax the tolerance");
    return cert;
}

double pi_squared() { return kPi * kPi; }

} // namespace

TailMethod tail_method_from_name(const std::string& name) {
    if (name == "analytic_halfweight") return TailMethod::analytic_halfweight;
    if (name == "geometric_bound") return TailMethod::geometric_bound;
    throw ParseError("unknown tail method: " + name);
}

Complex sawtooth_mellin_forward(Complex s) {
    if (!(s.real() < 0.0))
        throw DomainError("sawtooth transform: integral diverges for Re s >= 0");
    // Antiderivative of (1/2 - x) x^{-s-1} on (0,1): x^{-s}/(-2s) - x^{1-s}/(1-s);
    // both boundary terms vanish at 0 for Re s < 0.
    return -1.0 / (2.0 * s) - 1.0 / (1.0 - s);
}

Complex sawtooth_mellin_reference(Complex s) {
    if (!(s.real() < 0.0))
        throw DomainError("sawtooth transform: integral diverges for Re s >= 0");
    return 1.0 / (s * (s - 1.0)) + 1.0 / (2.0 * s);
}

CertifiedValue frac_integral_certified(Complex s, const QuadratureSpec& q) {
    check_spec(q);
    const double sigma = s.real();
    if (!(sigma > -1.0 && sigma < 0.0))
        throw DomainError("frac integral: requires -1 < Re s < 0");

    const Complex s1 = s + 1.0;
    KahanComplexSum sum;
    KahanSum magnitude;
    sum.add(-1.0 / s); // cell [0,1): integral of u^{-s-1} du
    magnitude.add(std::abs(1.0 / s));
    for (std::int64_t k = 1; k < q.k_cells; ++k) {
        const Complex cell = unit_cell(k, s, s1);
        sum.add(cell);
        magnitude.add(std::abs(cell));
    }

    const double m = static_cast<double>(q.k_cells); // first uncovered cell
    const double rounding_floor = 32.0 * kEps * (1.0 + magnitude.value());
    double cert;
    if (q.tail_method == TailMethod::analytic_halfweight) {
        const Complex m_pow = cpow_real_base(m, -s1); // M^{-s-1}
        sum.add(0.5 * m_pow / s1 - (m_pow / m) / 12.0);
        const double analytic =
            std::abs(s + 2.0) * std::pow(m, -sigma - 2.0) / (12.0 * (sigma + 2.0));
        cert = certify(analytic, rounding_floor, q.tail_tol, "frac integral");
    } else {
        const double analytic = std::pow(m, -sigma - 1.0) / (sigma + 1.0);
        cert = certify(analytic / 1.5, rounding_floor, q.tail_tol, "frac integral");
    }
    return {sum.value(), cert};
}

Complex frac_integral_reference(Complex s) {
    if (!(s.real() > -1.0 && s.real() < 0.0))
        throw DomainError("frac integral: requires -1 < Re s < 0");
    return -zeta(s + 1.0) / (s + 1.0);
}

CertifiedValue floor_frac_integral_certified(Complex s, const QuadratureSpec& q) {
    check_spec(q);
    const double sigma = s.real();
    if (!(sigma > 0.0)) throw DomainError("floor-frac integral: requires Re s > 0");

    const Complex s1 = s + 1.0;
    KahanComplexSum sum;
    KahanSum magnitude;
    for (std::int64_t k = 1; k < q.k_cells; ++k) {
        const Complex cell = static_cast<double>(k) * unit_cell(k, s, s1);
        sum.add(cell);
        magnitude.add(std::abs(cell));
    }

    const double m = static_cast<double>(q.k_cells);
    const double rounding_floor = 32.0 * kEps * (1.0 + magnitude.value());
    double cert;
    if (q.tail_method == TailMethod::analytic_halfweight) {
        const Complex m_pow = cpow_real_base(m, -s); // M^{-s}
        const Complex m_pow1 = m_pow / m;            // M^{-s-1}
        sum.add(0.5 * m_pow / s - m_pow1 / 12.0 - m_pow1 / (3.0 * s1));
        const double analytic =
            std::abs(s1) * std::pow(m, -sigma - 1.0) / (12.0 * (sigma + 1.0)) +
            0.1283 * std::abs(s + 2.0) * std::pow(m, -sigma - 2.0) / (sigma + 2.0);
        cert = certify(analytic, rounding_floor, q.tail_tol, "floor-frac integral");
    } else {
        const double analytic = std::pow(m, -sigma) / sigma;
        cert = certify(analytic / 1.5, rounding_floor, q.tail_tol, "floor-frac integral");
    }
    return {sum.value(), cert};
}

Complex floor_frac_integral_reference(Complex s) {
    if (!(s.real() > 0.0)) throw DomainError("floor-frac integral: requires Re s > 0");
    // (1-s) zeta(s) has a removable singularity at s = 1 with value -1; take
    // the first-order expansion -1 + gamma(1-s) inside the pole guard.
    const Complex one_minus_s = 1.0 - s;
    const Complex scaled = std::abs(s - 1.0) < kPoleGuard
                               ? -1.0 + euler_gamma() * one_minus_s
                               : one_minus_s * zeta(s);
    return (s * zeta(s + 1.0) + scaled) / (s * (s + 1.0));
}

Complex summation_kernel_reference(Complex s) {
    return ((s - 1.0) * zeta(s) + (2.0 - s) * zeta(s - 1.0)) / (s * (s - 1.0));
}

ReportRow totient_integral_identity(const ArithmeticTable& mobius_table,
                                    const ArithmeticTable& totient_table, double x) {
    if (mobius_table.kind() != ArithmeticKind::mobius ||
        totient_table.kind() != ArithmeticKind::totient)
        throw DomainError("totient_integral_identity: needs a mobius and a totient table");
    if (!(x > 1.0)) throw DomainError("totient_integral_identity: x must be > 1");

    const double lhs = weighted_bracket_sum(mobius_table, 0.0, x);
    const double phi_sum = dirichlet_polynomial(totient_table, 0.0, x);
    const double integral_steps = step_integral(totient_table, 1.0, x);
    const double rhs = 1.0 + (integral_steps - x * x * x / pi_squared()) +
                       (phi_sum - 3.0 * x * x / pi_squared());

    ReportRow row;
    row.identifier = "identity_totient_integral";
    row.params = {{"x", x}};
    row.lhs = lhs;
    row.rhs = rhs;
    row.residual = lhs - rhs;
    row.truncation.n_terms = static_cast<std::int64_t>(std::floor(x));
    row.status = "finding";
    return row;
}

ReportRow totient_direct_identity(const ArithmeticTable& mobius_table,
                                  const ArithmeticTable& totient_table, double x) {
    if (mobius_table.kind() != ArithmeticKind::mobius ||
        totient_table.kind() != ArithmeticKind::totient)
        throw DomainError("totient_direct_identity: needs a mobius and a totient table");
    if (!(x > 1.0)) throw DomainError("totient_direct_identity: x must be > 1");
    if (x > static_cast<double>(mobius_table.size()) + 1.0)
        throw SizingError("totient_direct_identity: x exceeds sieved range");

    KahanSum lhs_sum;
    for (std::int64_t n = 1; n <= x; ++n) {
        const double a = mobius_table.raw(n);
        if (a == 0.0) continue;
        const FracFloorPair u = frac_floor(x / static_cast<double>(n));
        const double fl = static_cast<double>(u.floor);
        lhs_sum.add(a * (u.frac * fl - fl - 0.5 + (u.frac * u.frac + fl) / 2.0));
    }
    const double lhs = lhs_sum.value();
    const double rhs =
        dirichlet_polynomial(totient_table, 0.0, x) - 3.0 * x * x / pi_squared();

    ReportRow row;
    row.identifier = "identity_totient_direct";
    row.params = {{"x", x}};
    row.lhs = lhs;
    row.rhs = rhs;
    row.residual = lhs - rhs;
    row.truncation.n_terms = static_cast<std::int64_t>(std::floor(x));
    row.status = "finding";
    return row;
}

double attached_series_value(ArithmeticKind kind, double w) {
    const Complex at(2.0 + w, 0.0);
    switch (kind) {
        case ArithmeticKind::von_mangoldt:
            return (-zeta_log_deriv(at)).real();
        case ArithmeticKind::mobius:
            return (1.0 / zeta(at)).real();
        case ArithmeticKind::totient:
            return (zeta(Complex(1.0 + w, 0.0)) / zeta(at)).real();
        default:
            throw DomainError(std::string("divisor chain: no attached Dirichlet series for "
                                          "kind ") +
                              kind_name(kind));
    }
}

ReportRow divisor_chain_identity(const ArithmeticTable& table, double x, double w) {
    if (!(x > 1.0)) throw DomainError("divisor_chain_identity: x must be > 1");
    if (w < 0.0) throw DomainError("divisor_chain_identity: w must be >= 0");
    if (x > static_cast<double>(table.size()) + 1.0)
        throw SizingError("divisor_chain_identity: x exceeds sieved range");

    const double series = attached_series_value(table.kind(), w);
    const double lhs = weighted_bracket_sum(table, w, x);

    const std::int64_t n_top = static_cast<std::int64_t>(std::floor(x));
    const std::vector<double> g_next = divisor_sum(table, w + 1.0, n_top);
    KahanSum step_sum, weighted_sum;
    for (std::int64_t n = 1; n <= n_top; ++n) {
        step_sum.add(g_next[static_cast<std::size_t>(n)] * (x - static_cast<double>(n)));
        weighted_sum.add(g_next[static_cast<std::size_t>(n)] * static_cast<double>(n));
    }
    const double rhs = divisor_sum_prefix(table, w, x) +
                       (step_sum.value() - x * x * x * series / 6.0) +
                       (weighted_sum.value() - x * x * series / 2.0);

    ReportRow row;
    row.identifier = std::string("identity_divisor_chain:") + kind_name(table.kind());
    row.params = {{"x", x}, {"w", w}};
    row.lhs = lhs;
    row.rhs = rhs;
    row.residual = lhs - rhs;
    row.truncation.n_terms = n_top;
    row.status = "finding";
    return row;
}

} // namespace summa
