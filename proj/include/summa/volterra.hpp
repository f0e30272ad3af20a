#pragma once

#include <cstdint>
#include <vector>

#include "summa/arith.hpp"
#include "summa/report.hpp"

namespace summa {

// One configured instance of the renewal-type integral equation
//   D(y) = F(y) + (1/y) * integral_0^y D(t) dt
// over a sieved arithmetic table with weight w. The supported regime is
// w >= 1; smaller weights are admitted only with the exploratory flag set and
// downstream reports mark such rows.
struct VolterraInstance {
    const ArithmeticTable& table;
    double w;
    bool exploratory = false;
};

VolterraInstance make_volterra_instance(const ArithmeticTable& table, double w,
                                        bool exploratory = false);

// F(y) = sum_{n <= y} a(n) frac(n/y) / n^w = (1/y) sum_{n < y} a(n) n^{1-w}.
double forcing_term(const VolterraInstance& inst, double y);

// D(y) - F(y) - (1/y) * integral_0^y D(t) dt; analytically zero away from
// integer y. At integer y the defect equals a(y)/y^w (the dropped endpoint).
double volterra_residual(const VolterraInstance& inst, double y);

// k-th iterated-kernel series term, in closed form:
//   (1/y) sum_{n <= y} a(n) n^{1-w} log^k(y/n) / k!
// k = 0 reproduces forcing_term.
double neumann_term_closed(const VolterraInstance& inst, double y, std::int64_t k);

// Factorial-tail bound on |D(y) - sum_{j<=k} neumann_term_closed(j)|:
//   sum_{n <= y} |a(n)| n^{-w} log^{k+1}(y/n) / (k+1)!
double neumann_remainder_bound(const VolterraInstance& inst, double y, std::int64_t k);

// Independent oracle: the same series term by nested trapezoid quadrature on
// a jump-aligned grid (integrands are piecewise smooth between consecutive
// integers). k <= 4; mesh >= 1000 nodes spread over [1, y].
double neumann_term_quadrature(const VolterraInstance& inst, double y, std::int64_t k,
                               std::int64_t mesh);

// Integrated two-point check for the Moebius kind: compares
//   x·D(x) − x·F(x)  against  integral_0^x D(t) dt
// (row "bvp_integrated", an identity), and separately the same relation with
// the forcing sign flipped (row "bvp_literal_sign", residual 2·x·F(x),
// reported as a finding).
std::vector<ReportRow> bvp_integrated_check(const VolterraInstance& inst, double x);

// Observation-only: least-squares exponent of |D(y)| over a log-spaced grid,
// reported against the square-root-cancellation prediction 1/2 - w. Never a
// pass/fail assertion.
ReportRow observed_decay_exponent(const VolterraInstance& inst, double y_min, double y_max,
                                  std::int64_t points);

} // namespace summa
