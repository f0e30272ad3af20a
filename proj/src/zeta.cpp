#include "summa/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "summa/errors.hpp"
#include "summa/kahan.hpp"

namespace summa {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLog2Pi = 1.837877066409345483560659472811; // log(2 pi)

// B_{2j} for j = 1..12.
constexpr double kBern2[12] = {
    1.0 / 6.0,       -1.0 / 30.0,      1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,      -691.0 / 2730.0,  7.0 / 6.0,       -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
};

// B_{2j}/(2j)! for the Euler-Maclaurin correction terms.
const double* em_coefficients() {
    static double coef[12];
    static bool init = [] {
        double fact = 1.0; // (2j)!
        for (int j = 1; j <= 12; ++j) {
            fact *= (2.0 * j - 1.0) * (2.0 * j);
            coef[j - 1] = kBern2[j - 1] / fact;
        }
        return true;
    }();
    (void)init;
    return coef;
}

// log n cache for the Euler-Maclaurin main sum (single-threaded use).
const std::vector<double>& log_table(std::size_t need) {
    static std::vector<double> logs{0.0, 0.0}; // logs[0] unused
    while (logs.size() <= need) logs.push_back(std::log(static_cast<double>(logs.size())));
    return logs;
}

void check_band(Complex s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError("zeta: non-finite argument");
    if (std::abs(s.imag()) > kZetaImMax)
        throw DomainError("zeta: |Im s| beyond supported band 1e3");
    if (s.real() < kZetaReMin)
        throw DomainError("zeta: Re s below supported band -50");
    if (std::abs(s - Complex(1.0, 0.0)) < kPoleGuard)
        throw PoleError("zeta: argument within 1e-6 of the pole s=1");
}

struct ValueAndDerivative {
    Complex value;
    Complex derivative;
};

// Euler-Maclaurin on the direct side (Re s >= -0.5):
//   zeta(s) = sum_{n<M} n^{-s} + M^{1-s}/(s-1) + M^{-s}/2
//           + sum_j B_{2j}/(2j)! * (s)(s+1)...(s+2j-2) * M^{-s-2j+1},
// with the derivative accumulated term-wise alongside.
ValueAndDerivative em_direct(Complex s) {
    const double im = std::abs(s.imag());
    const long m = std::max(20L, static_cast<long>(std::ceil(1.3 * im)));
    const std::vector<double>& logs = log_table(static_cast<std::size_t>(m) + 1);

    KahanComplexSum val, der;
    val.add(Complex(1.0, 0.0)); // n = 1
    const double sigma = s.real(), t = s.imag();
    for (long n = 2; n < m; ++n) {
        const double ln = logs[static_cast<std::size_t>(n)];
        const Complex term = std::polar(std::exp(-sigma * ln), -t * ln);
        val.add(term);
        der.add(-ln * term);
    }

    const double log_m = logs[static_cast<std::size_t>(m)];
    const Complex m_pow_ms = std::polar(std::exp(-sigma * log_m), -t * log_m); // M^{-s}
    const Complex sm1 = s - 1.0;
    const Complex md = static_cast<double>(m) * m_pow_ms; // M^{1-s}

    val.add(md / sm1);
    der.add(-log_m * md / sm1 - md / (sm1 * sm1));
    val.add(0.5 * m_pow_ms);
    der.add(-0.5 * log_m * m_pow_ms);

    // Rising product p = s(s+1)...(s+2j-2) and its s-derivative, updated
    // incrementally so p' needs no division (factors may vanish).
    const double* coef = em_coefficients();
    Complex p(1.0, 0.0), dp(0.0, 0.0);
    int next_factor = 0;
    double m_shift = 1.0 / static_cast<double>(m); // M^{-2j+1}
    const double m_inv2 = m_shift * m_shift;
    for (int j = 1; j <= 12; ++j) {
        const int last = 2 * j - 2;
        while (next_factor <= last) {
            const Complex f = s + static_cast<double>(next_factor);
            dp = dp * f + p;
            p *= f;
            ++next_factor;
        }
        const Complex scale = coef[j - 1] * m_shift * m_pow_ms;
        val.add(scale * p);
        der.add(scale * (dp - log_m * p));
        m_shift *= m_inv2;
    }
    return {val.value(), der.value()};
}

// log sin(pi s / 2) without overflow for large |Im s|.
Complex log_sin_half_pi(Complex s) {
    const Complex z = 0.5 * kPi * s;
    if (std::abs(z.imag()) <= 1.0) return std::log(std::sin(z));
    if (z.imag() > 0.0) {
        // sin z = (i/2) e^{-iz} (1 - e^{2iz})
        const Complex q = std::exp(Complex(0.0, 2.0) * z);
        return Complex(-std::log(2.0), 0.5 * kPi) - Complex(0.0, 1.0) * z + std::log(1.0 - q);
    }
    return std::conj(log_sin_half_pi(std::conj(s)));
}

Complex log_cos_half_pi(Complex s) {
    const Complex z = 0.5 * kPi * s;
    if (std::abs(z.imag()) <= 1.0) return std::log(std::cos(z));
    if (z.imag() > 0.0) {
        // cos z = (1/2) e^{-iz} (1 + e^{2iz})
        const Complex q = std::exp(Complex(0.0, 2.0) * z);
        return Complex(-std::log(2.0), 0.0) - Complex(0.0, 1.0) * z + std::log(1.0 + q);
    }
    return std::conj(log_cos_half_pi(std::conj(s)));
}

Complex tan_half_pi(Complex s) {
    const Complex z = 0.5 * kPi * s;
    if (std::abs(z.imag()) <= 1.0) return std::tan(z);
    if (z.imag() > 0.0) {
        const Complex q = std::exp(Complex(0.0, 2.0) * z);
        return Complex(0.0, 1.0) * (1.0 - q) / (1.0 + q);
    }
    return std::conj(tan_half_pi(std::conj(s)));
}

Complex cot_half_pi(Complex s) {
    const Complex z = 0.5 * kPi * s;
    if (std::abs(z.imag()) <= 1.0) return std::cos(z) / std::sin(z);
    if (z.imag() > 0.0) {
        const Complex q = std::exp(Complex(0.0, 2.0) * z);
        return Complex(0.0, -1.0) * (1.0 + q) / (1.0 - q);
    }
    return std::conj(cot_half_pi(std::conj(s)));
}

Complex log_chi(Complex s) {
    if (s.real() < 0.5)
        return s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_sin_half_pi(s) +
               log_gamma(1.0 - s);
    // Same factor written with the gamma argument on this side of the strip:
    // chi(s) = (2 pi)^s / (2 cos(pi s / 2) Gamma(s)), valid for Re s > 0.
    return s * kLog2Pi - std::log(2.0) - log_cos_half_pi(s) - log_gamma(s);
}

// chi'(s). Away from the real axis' even integers, chi * (chi'/chi) with the
// cotangent form; near them (where cot blows up but sin has the zero) the
// cos-factored form is exact and the exponent stays moderate.
Complex chi_prime(Complex s) {
    const double nearest_even = 2.0 * std::round(0.5 * s.real());
    const bool near_even_integer =
        std::abs(s.imag()) < 0.3 && std::abs(s.real() - nearest_even) < 0.3 &&
        nearest_even <= 0.5;
    if (near_even_integer) {
        const Complex a = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi) +
                                   log_gamma(1.0 - s) + log_cos_half_pi(s));
        const Complex bracket =
            1.0 + (2.0 / kPi) * tan_half_pi(s) * (kLog2Pi - digamma(1.0 - s));
        return a * (0.5 * kPi) * bracket;
    }
    const Complex ratio = kLog2Pi + 0.5 * kPi * cot_half_pi(s) - digamma(1.0 - s);
    return std::exp(log_chi(s)) * ratio;
}

ValueAndDerivative zeta_pair(Complex s) {
    check_band(s);
    if (s.real() >= -0.5) return em_direct(s);
    // Reflect: zeta(s) = chi(s) zeta(1-s); differentiate the product.
    const Complex one_minus = 1.0 - s;
    const ValueAndDerivative direct = em_direct(one_minus);
    const Complex chi = std::exp(log_chi(s));
    const Complex value = chi * direct.value;
    const Complex derivative = chi_prime(s) * direct.value - chi * direct.derivative;
    return {value, derivative};
}

double bisect_zero(double a, double b, double za, double tol) {
    // za is hardy_z(a); keep the sign-change bracket and shrink to tol.
    while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        const double zm = hardy_z(mid);
        if ((za < 0.0) == (zm < 0.0)) {
            a = mid;
            za = zm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

std::vector<double> scan_zeros(double t_max, double grid, double precision) {
    std::vector<double> found;
    double t = 14.0;
    double zt = hardy_z(t);
    while (t < t_max) {
        const double next = std::min(t + grid, t_max);
        const double zn = hardy_z(next);
        if ((zt < 0.0) != (zn < 0.0))
            found.push_back(bisect_zero(t, next, zt, 0.25 * precision));
        t = next;
        zt = zn;
    }
    return found;
}

void validate_table(const ZeroTable& table, bool allow_empty) {
    if (table.ordinates.empty()) {
        if (!allow_empty) throw ParseError("zero table: empty");
        return;
    }
    if (!(table.ordinates.front() > 14.0 && table.ordinates.front() < 14.3))
        throw ParseError("zero table: first ordinate outside (14.0, 14.3)");
    for (std::size_t i = 0; i < table.ordinates.size(); ++i) {
        if (table.ordinates[i] <= 14.0)
            throw ParseError("zero table: ordinate <= 14 at entry " + std::to_string(i + 1));
        if (i > 0 && table.ordinates[i] <= table.ordinates[i - 1])
            throw ParseError("zero table: not strictly ascending at entry " +
                             std::to_string(i + 1));
    }
}

} // namespace

Complex zeta(Complex s) { return zeta_pair(s).value; }

Complex zeta_prime(Complex s) { return zeta_pair(s).derivative; }

Complex zeta_log_deriv(Complex s) {
    const ValueAndDerivative zd = zeta_pair(s);
    if (std::abs(zd.value) < 1.0e-13)
        throw NearZeroError("zeta_log_deriv: |zeta(s)| below 1e-13 (near a zero)");
    return zd.derivative / zd.value;
}

Complex reflection_factor(Complex s) {
    check_band(s);
    return std::exp(log_chi(s));
}

double euler_gamma() {
    static const double gamma_value = [] {
        // H_N - log N - 1/(2N) + sum_j B_{2j}/(2j N^{2j}), N = 100.
        const int n = 100;
        KahanSum h;
        for (int k = n; k >= 1; --k) h.add(1.0 / static_cast<double>(k));
        double v = h.value() - std::log(static_cast<double>(n)) - 0.5 / n;
        double npow = 1.0;
        const double n2 = static_cast<double>(n) * n;
        for (int j = 1; j <= 8; ++j) {
            npow *= n2;
            v += kBern2[j - 1] / (2.0 * j * npow);
        }
        return v;
    }();
    return gamma_value;
}

Complex log_gamma(Complex z) {
    if (!(z.real() > 0.0)) throw DomainError("log_gamma: requires Re z > 0");
    Complex shift(0.0, 0.0);
    while (z.real() < 12.0) {
        shift += std::log(z);
        z += 1.0;
    }
    // Stirling with B_{2j}/((2j)(2j-1) z^{2j-1}).
    Complex series(0.0, 0.0);
    const Complex z2 = z * z;
    Complex zp = z;
    for (int j = 1; j <= 8; ++j) {
        series += kBern2[j - 1] / ((2.0 * j) * (2.0 * j - 1.0) * zp);
        zp *= z2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi + series - shift;
}

Complex digamma(Complex z) {
    if (!(z.real() > 0.0)) throw DomainError("digamma: requires Re z > 0");
    Complex shift(0.0, 0.0);
    while (z.real() < 12.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    Complex series(0.0, 0.0);
    const Complex z2 = z * z;
    Complex zp = z2;
    for (int j = 1; j <= 8; ++j) {
        series += kBern2[j - 1] / ((2.0 * j) * zp);
        zp *= z2;
    }
    return std::log(z) - 0.5 / z - series - shift;
}

double riemann_siegel_theta(double t) {
    if (!std::isfinite(t)) throw DomainError("theta: non-finite t");
    if (std::abs(t) > 2.1e3) throw DomainError("theta: |t| beyond supported band");
    return log_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
}

double hardy_z(double t) {
    const double theta = riemann_siegel_theta(t);
    const Complex rotated = std::polar(1.0, theta) * zeta(Complex(0.5, t));
    return rotated.real();
}

std::int64_t ZeroTable::count_below(double t) const {
    return static_cast<std::int64_t>(
        std::upper_bound(ordinates.begin(), ordinates.end(), t) - ordinates.begin());
}

std::int64_t count_zero_sign_changes(double t_max, double grid) {
    if (!(t_max > 14.0)) throw DomainError("count_zero_sign_changes: T must be > 14");
    if (!(grid > 0.0) || grid > 0.5)
        throw DomainError("count_zero_sign_changes: grid must be in (0, 0.5]");
    std::int64_t count = 0;
    double t = 14.0;
    double zt = hardy_z(t);
    while (t < t_max) {
        const double next = std::min(t + grid, t_max);
        const double zn = hardy_z(next);
        if ((zt < 0.0) != (zn < 0.0)) ++count;
        t = next;
        zt = zn;
    }
    return count;
}

ZeroTable find_zeros(double t_max, double precision) {
    if (!(t_max > 14.0)) throw DomainError("find_zeros: T must be > 14");
    if (t_max > 1.0e3) throw DomainError("find_zeros: T beyond supported band 1e3");
    if (precision < 1.0e-12) throw DomainError("find_zeros: precision < 1e-12 unsupported");
    if (precision > 1.0e-2) throw DomainError("find_zeros: precision > 1e-2 meaningless");

    std::vector<double> found = scan_zeros(t_max, 0.05, precision);
    const double expected_real = riemann_siegel_theta(t_max) / kPi + 1.0;
    const long expected = std::lround(expected_real);
    // Missed close pairs drop sign changes two at a time; a one-off difference
    // can also come from rounding the theta count near a half-integer.
    if (std::llabs(static_cast<long long>(found.size()) - expected) >= 2) {
        found = scan_zeros(t_max, 0.01, precision);
        if (std::llabs(static_cast<long long>(found.size()) - expected) >= 2)
            throw Error("find_zeros: count " + std::to_string(found.size()) +
                        " disagrees with theta-based expectation " + std::to_string(expected) +
                        " after grid refinement");
    }
    ZeroTable table;
    table.ordinates = std::move(found);
    table.precision = precision;
    table.t_max = t_max;
    table.source = ZeroTable::Source::computed;
    validate_table(table, /*allow_empty=*/true);
    return table;
}

double zero_count_asymptotic(double t) {
    if (!(t > 1.0)) throw DomainError("zero_count_asymptotic: T must be > 1");
    return t * std::log(t) / (2.0 * kPi);
}

void save_zeros(const std::string& path, const ZeroTable& table) {
    validate_table(table, /*allow_empty=*/false);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("save_zeros: cannot open " + path);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", table.precision);
    out << "# summa-lab zeros v1 precision=" << buf << "\n";
    for (double g : table.ordinates) {
        std::snprintf(buf, sizeof buf, "%.12f", g);
        out << buf << "\n";
    }
    if (!out) throw Error("save_zeros: write failure on " + path);
}

ZeroTable load_zeros(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("load_zeros: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("load_zeros: empty file " + path);
    const std::string prefix = "# summa-lab zeros v1 precision=";
    if (line.rfind(prefix, 0) != 0)
        throw ParseError("load_zeros: bad header at line 1 of " + path);
    ZeroTable table;
    try {
        std::size_t used = 0;
        table.precision = std::stod(line.substr(prefix.size()), &used);
        if (used != line.size() - prefix.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ParseError("load_zeros: bad precision field at line 1 of " + path);
    }
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            std::size_t used = 0;
            const double g = std::stod(line, &used);
            if (used != line.size()) throw std::invalid_argument("trailing");
            table.ordinates.push_back(g);
        } catch (const std::exception&) {
            throw ParseError("load_zeros: bad ordinate at line " + std::to_string(lineno) +
                             " of " + path);
        }
    }
    table.source = ZeroTable::Source::loaded;
    validate_table(table, /*allow_empty=*/false);
    table.t_max = table.ordinates.back();
    return table;
}

} // namespace summa
