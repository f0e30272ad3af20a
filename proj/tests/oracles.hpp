// Independent reference implementations used only by the test suites.
// Everything here is deliberately written with different algorithms than the
// library under test (alternating-series acceleration instead of
// Euler-Maclaurin, trial division instead of a linear sieve, quadrature
// instead of closed forms) so that agreement is meaningful.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

// Alternating-series (eta-function) evaluation with Chebyshev-polynomial
// acceleration coefficients.  Accurate to ~1e-13 for Re(s) >= 0.5 and
// |Im(s)| up to a few tens with n = 64 terms.  Do not call near s = 1 or
// near the zeros of 1 - 2^{1-s} on the line Re(s) = 1.
inline Complex borwein_zeta(Complex s, int n = 64) {
    std::vector<double> d(static_cast<std::size_t>(n) + 1);
    // t_i = (n+i-1)! 4^i / ((n-i)! (2i)!), accumulated into d_k = n * sum_{i<=k} t_i
    double t = 1.0 / n;  // i = 0 term
    double acc = t;
    d[0] = n * acc;
    for (int i = 1; i <= n; ++i) {
        t *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / (2.0 * i * (2.0 * i - 1.0));
        acc += t;
        d[static_cast<std::size_t>(i)] = n * acc;
    }
    Complex eta = 0.0;
    for (int k = 0; k < n; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        eta += sign * (d[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(n)]) *
               std::exp(-s * std::log(static_cast<double>(k + 1)));
    }
    eta /= -d[static_cast<std::size_t>(n)];
    const Complex one{1.0, 0.0};
    return eta / (one - std::exp((one - s) * std::log(2.0)));
}

// Central finite difference; step chosen so truncation and rounding errors
// are both ~1e-8 or below for well-scaled functions.
inline Complex central_difference(const std::function<Complex(Complex)>& f, Complex s,
                                  double h = 1e-5) {
    return (f(s + Complex(h, 0.0)) - f(s - Complex(h, 0.0))) / (2.0 * h);
}

inline int naive_mobius(std::int64_t n) {
    if (n == 1) return 1;
    int factors = 0;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

inline double naive_von_mangoldt(std::int64_t n) {
    if (n < 2) return 0.0;
    std::int64_t base = 0;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            base = p;
            break;
        }
    }
    if (base == 0) return std::log(static_cast<double>(n));  // n prime
    while (n % base == 0) n /= base;
    return (n == 1) ? std::log(static_cast<double>(base)) : 0.0;
}

inline std::int64_t naive_totient(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// Quadrature of a piecewise-constant integrand over [0, y]: splits at every
// integer jump and integrates each constant piece exactly.  The piece values
// come from the supplied prefix function, not from the library under test.
inline double step_quadrature(const std::function<double(std::int64_t)>& prefix, double y) {
    double total = 0.0;
    const auto whole = static_cast<std::int64_t>(std::floor(y));
    for (std::int64_t m = 1; m < whole; ++m) total += prefix(m);
    if (y > static_cast<double>(whole)) total += prefix(whole) * (y - static_cast<double>(whole));
    return total;
}

// Deterministic 64-bit mix for test-local sampling, independent of the
// library's generator.
inline double unit_double(std::uint64_t& state) {
    state = state * 2862933555777941757ULL + 3037000493ULL;
    std::uint64_t z = state;
    z ^= z >> 29;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 32;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace oracle
