#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace summa {

// The five arithmetic functions a(n) the harness works with.
enum class ArithmeticKind {
    von_mangoldt,   // log p if n = p^k, else 0
    mobius,         // (-1)^k on squarefree n with k prime factors, else 0
    mobius_log_neg, // -mu(n) * log(n)
    totient,        // Euler phi
    unit,           // constantly 1
};

const char* kind_name(ArithmeticKind k);
ArithmeticKind kind_from_name(const std::string& name);

// Immutable sieved table of a(n) for 1 <= n <= N.
class ArithmeticTable {
  public:
    ArithmeticTable(ArithmeticKind kind, std::int64_t n, std::vector<double> values);

    ArithmeticKind kind() const { return kind_; }
    std::int64_t size() const { return n_; }

    // 1-based access; n outside [1, N] is a sizing error.
    double at(std::int64_t n) const;

    // Unchecked access for hot loops; caller guarantees 1 <= n <= N.
    double raw(std::int64_t n) const { return values_[static_cast<std::size_t>(n)]; }

  private:
    ArithmeticKind kind_;
    std::int64_t n_;
    std::vector<double> values_; // index 0 unused
};

// {x} and [x] of a nonnegative real, with frac + floor == x exactly.
struct FracFloorPair {
    double frac = 0.0;
    std::int64_t floor = 0;
};

// Linear (smallest-prime-factor) sieve of kind up to N.
ArithmeticTable sieve(ArithmeticKind kind, std::int64_t n);

FracFloorPair frac_floor(double x);

// G_w(n) = sum_{d|n} a(d) d^{-w} for 1 <= n <= N, multiple-enumeration in
// O(N log N). Result is 1-based with slot 0 unused.
std::vector<double> divisor_sum(const ArithmeticTable& table, double w, std::int64_t n);

// sum_{n<=y} sum_{d|n} a(d) d^{-w}, computed as sum_d a(d) d^{-w} floor(y/d).
double divisor_sum_prefix(const ArithmeticTable& table, double w, double y);

// D_w(y) = sum_{n<=y} a(n) n^{-w}; empty sum for y < 1.
double dirichlet_polynomial(const ArithmeticTable& table, double w, double y);

// sum_{n<=y} (a(n)/n^w) {y/n} [y/n].
double weighted_bracket_sum(const ArithmeticTable& table, double w, double y);

// int_0^y D_w(t) dt = sum_{n<=y} (a(n)/n^w)(y - n), exact for the step function.
double step_integral(const ArithmeticTable& table, double w, double y);

} // namespace summa
