#include "summa/arith.hpp"

#include <cmath>
#include <limits>

#include "summa/errors.hpp"
#include "summa/kahan.hpp"

namespace summa {

namespace {

constexpr std::int64_t kMaxSieve = 200'000'000; // ~1.6 GB of doubles; hard cap

void check_range(const ArithmeticTable& table, double y) {
    if (!std::isfinite(y)) throw DomainError("arith: y must be finite");
    if (y > static_cast<double>(table.size()) + 1.0)
        throw SizingError("arith: y=" + std::to_string(y) + " beyond sieved range N=" +
                          std::to_string(table.size()));
}

// n^{-w} for positive integer n. pow(double, double) is deterministic per
// platform, which is all the determinism contract requires.
inline double inv_pow(std::int64_t n, double w) {
    if (w == 0.0) return 1.0;
    if (w == 1.0) return 1.0 / static_cast<double>(n);
    return std::pow(static_cast<double>(n), -w);
}

} // namespace

const char* kind_name(ArithmeticKind k) {
    switch (k) {
        case ArithmeticKind::von_mangoldt: return "vonMangoldt";
        case ArithmeticKind::mobius: return "mobius";
        case ArithmeticKind::mobius_log_neg: return "mobiusLogNeg";
        case ArithmeticKind::totient: return "totient";
        case ArithmeticKind::unit: return "unit";
    }
    return "?";
}

ArithmeticKind kind_from_name(const std::string& name) {
    if (name == "vonMangoldt" || name == "lambda") return ArithmeticKind::von_mangoldt;
    if (name == "mobius" || name == "mu") return ArithmeticKind::mobius;
    if (name == "mobiusLogNeg") return ArithmeticKind::mobius_log_neg;
    if (name == "totient" || name == "phi") return ArithmeticKind::totient;
    if (name == "unit") return ArithmeticKind::unit;
    throw ParseError("unknown arithmetic kind: " + name);
}

ArithmeticTable::ArithmeticTable(ArithmeticKind kind, std::int64_t n, std::vector<double> values)
    : kind_(kind), n_(n), values_(std::move(values)) {
    if (n < 1) throw SizingError("table: N must be >= 1");
    if (values_.size() != static_cast<std::size_t>(n) + 1)
        throw SizingError("table: value vector size mismatch");
}

double ArithmeticTable::at(std::int64_t n) const {
    if (n < 1 || n > n_)
        throw SizingError("table: index " + std::to_string(n) + " outside [1, " +
                          std::to_string(n_) + "]");
    return values_[static_cast<std::size_t>(n)];
}

ArithmeticTable sieve(ArithmeticKind kind, std::int64_t n) {
    if (n < 1) throw SizingError("sieve: N must be >= 1");
    if (n > kMaxSieve) throw SizingError("sieve: N exceeds supported maximum");
    const std::size_t sz = static_cast<std::size_t>(n) + 1;

    std::vector<double> out(sz, 0.0);

    if (kind == ArithmeticKind::unit) {
        for (std::size_t i = 1; i < sz; ++i) out[i] = 1.0;
        return ArithmeticTable(kind, n, std::move(out));
    }

    // Smallest-prime-factor linear sieve. mu and phi come out of the standard
    // recurrences; the von Mangoldt values use spf plus prime-power detection.
    std::vector<std::int32_t> spf(sz, 0);
    std::vector<std::int32_t> primes;
    std::vector<std::int32_t> mu;
    std::vector<std::int64_t> phi;
    const bool want_mu =
        kind == ArithmeticKind::mobius || kind == ArithmeticKind::mobius_log_neg;
    const bool want_phi = kind == ArithmeticKind::totient;
    if (want_mu) mu.assign(sz, 0);
    if (want_phi) phi.assign(sz, 0);
    if (want_mu) mu[1] = 1;
    if (want_phi) phi[1] = 1;

    for (std::int64_t i = 2; i < static_cast<std::int64_t>(sz); ++i) {
        if (spf[i] == 0) {
            spf[i] = static_cast<std::int32_t>(i);
            primes.push_back(static_cast<std::int32_t>(i));
            if (want_mu) mu[i] = -1;
            if (want_phi) phi[i] = i - 1;
        }
        for (std::int32_t p : primes) {
            const std::int64_t ip = i * p;
            if (p > spf[i] || ip >= static_cast<std::int64_t>(sz)) break;
            spf[ip] = p;
            if (p == spf[i]) {
                if (want_mu) mu[ip] = 0;
                if (want_phi) phi[ip] = phi[i] * p;
            } else {
                if (want_mu) mu[ip] = -mu[i];
                if (want_phi) phi[ip] = phi[i] * (p - 1);
            }
        }
    }

    switch (kind) {
        case ArithmeticKind::von_mangoldt:
            for (std::int64_t i = 2; i < static_cast<std::int64_t>(sz); ++i) {
                // strip the smallest prime repeatedly; i is a prime power iff
                // nothing but that prime remains
                std::int64_t q = i;
                const std::int32_t p = spf[i];
                while (q % p == 0) q /= p;
                if (q == 1) out[i] = std::log(static_cast<double>(p));
            }
            break;
        case ArithmeticKind::mobius:
            for (std::size_t i = 1; i < sz; ++i) out[i] = static_cast<double>(mu[i]);
            break;
        case ArithmeticKind::mobius_log_neg:
            out[1] = 0.0;
            for (std::size_t i = 2; i < sz; ++i)
                out[i] = mu[i] == 0 ? 0.0
                                    : -static_cast<double>(mu[i]) * std::log(static_cast<double>(i));
            break;
        case ArithmeticKind::totient:
            for (std::size_t i = 1; i < sz; ++i) out[i] = static_cast<double>(phi[i]);
            break;
        case ArithmeticKind::unit:
            break;
    }
    return ArithmeticTable(kind, n, std::move(out));
}

FracFloorPair frac_floor(double x) {
    if (!std::isfinite(x) || x < 0.0) throw DomainError("frac_floor: x must be finite and >= 0");
    if (x >= 9.007199254740992e15) // 2^53: integer part no longer exact
        throw DomainError("frac_floor: x too large for exact split");
    const double fl = std::floor(x);
    return {x - fl, static_cast<std::int64_t>(fl)};
}

std::vector<double> divisor_sum(const ArithmeticTable& table, double w, std::int64_t n) {
    if (w < 0.0) throw DomainError("divisor_sum: w must be >= 0");
    if (n < 1) throw SizingError("divisor_sum: N must be >= 1");
    if (n > table.size()) throw SizingError("divisor_sum: N exceeds table range");
    std::vector<double> g(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::int64_t d = 1; d <= n; ++d) {
        const double term = table.raw(d) * inv_pow(d, w);
        if (term == 0.0) continue;
        for (std::int64_t m = d; m <= n; m += d) g[static_cast<std::size_t>(m)] += term;
    }
    return g;
}

double divisor_sum_prefix(const ArithmeticTable& table, double w, double y) {
    check_range(table, y);
    if (y < 1.0) return 0.0;
    const std::int64_t m = frac_floor(y).floor;
    KahanSum acc;
    for (std::int64_t d = 1; d <= m; ++d) {
        const double a = table.raw(d);
        if (a == 0.0) continue;
        acc.add(a * inv_pow(d, w) * std::floor(y / static_cast<double>(d)));
    }
    return acc.value();
}

double dirichlet_polynomial(const ArithmeticTable& table, double w, double y) {
    check_range(table, y);
    if (y < 1.0) return 0.0;
    const std::int64_t m = frac_floor(y).floor;
    KahanSum acc;
    for (std::int64_t n = 1; n <= m; ++n) {
        const double a = table.raw(n);
        if (a == 0.0) continue;
        acc.add(a * inv_pow(n, w));
    }
    return acc.value();
}

double weighted_bracket_sum(const ArithmeticTable& table, double w, double y) {
    if (w < 0.0) throw DomainError("weighted_bracket_sum: w must be >= 0");
    check_range(table, y);
    if (y <= 1.0) throw DomainError("weighted_bracket_sum: y must be > 1");
    const std::int64_t m = frac_floor(y).floor;
    KahanSum acc;
    for (std::int64_t n = 1; n <= m; ++n) {
        const double a = table.raw(n);
        if (a == 0.0) continue;
        const FracFloorPair u = frac_floor(y / static_cast<double>(n));
        acc.add(a * inv_pow(n, w) * u.frac * static_cast<double>(u.floor));
    }
    return acc.value();
}

double step_integral(const ArithmeticTable& table, double w, double y) {
    check_range(table, y);
    if (y < 1.0) return 0.0;
    const std::int64_t m = frac_floor(y).floor;
    KahanSum acc;
    for (std::int64_t n = 1; n <= m; ++n) {
        const double a = table.raw(n);
        if (a == 0.0) continue;
        acc.add(a * inv_pow(n, w) * (y - static_cast<double>(n)));
    }
    return acc.value();
}

} // namespace summa
