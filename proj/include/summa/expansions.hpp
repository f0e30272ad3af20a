#pragma once

#include <cstdint>
#include <vector>

#include "summa/arith.hpp"
#include "summa/report.hpp"
#include "summa/zeta.hpp"

namespace summa {

// --- Prime-weighted bracket sum and its residue expansion -------------------

// Left side: sum_{n<=y} Lambda(n) frac(y/n) floor(y/n) / n^w minus the prefix
// sum of the divisor sums H_w(n) = sum_{d|n} Lambda(d) d^{-w}.
double prime_bracket_lhs(const ArithmeticTable& von_mangoldt_table, double y, double w);

// Main pole term kappa(w) = -(1+w) y^{1-w} zeta(-w) / ((w-1)w), defined as 0
// at w = 0 and w = 1.
double main_pole_term(double w, double y);

// Right side: kappa(w) + zeta'(w)/(6 zeta(w)) - y zeta'(1+w)/(2 zeta(1+w))
// plus the truncated sums over critical-line and trivial zeros. w = 1 is a
// genuine pole collision and is rejected; at w = 0 the kappa and weight-(1+w)
// pole terms individually blow up but their combination has a finite limit,
//   log(2pi)/6 + (y/2)(log(2 pi y) - 2 - euler_gamma),
// which is substituted and flagged "provisional" by callers.
double prime_bracket_expansion(double y, double w, const TruncationSpec& trunc,
                               const ZeroTable& zeros);

// --- Moebius-log bracket sum: residues and report ---------------------------

// Closed-form residue coefficient R(rho, y) at a simple critical-line zero:
// the cubic-bracket combination of zeta(rho-1), zeta'(rho-1) and log y divided
// by (rho-1)^2 rho^2 zeta'(rho), sign included. Throws NearZeroError when
// |zeta'(rho)| < 1e-10 (degenerate zero).
Complex mobius_log_rbar(Complex rho, double y);

// Numerical residue oracle: (radius/points) sum_j g(c + r e^{i theta_j})
// e^{i theta_j} for the generating integrand
//   g(s) = y^{s+1} zeta'(s+1) (1-s) zeta(s) / (zeta(s+1)^2 s (s+1)).
// At c = rho-1 this equals y^rho R(rho, y); at c = -2n-1 it yields the
// trivial-zero contribution, for which no closed form exists here.
Complex mobius_log_contour_residue(double y, Complex center, double radius = 0.25,
                                   int points = 64);

// Report (never asserted): lhs = sum_{n<=y} (-mu(n) log n) frac(y/n) floor(y/n)
// - psi(y) against rhs = y/2 + paired zero residues + contour trivial terms.
ReportRow mobius_log_report(const ArithmeticTable& mobius_log_table,
                            const ArithmeticTable& von_mangoldt_table, double y,
                            const TruncationSpec& trunc, const ZeroTable& zeros);

// --- Prime fractional-part series and its expansion -------------------------

// -x sum_{n>=1} Lambda(n) frac(n/x) / n^2, truncated at the smallest N whose
// unconditional tail bound x (log N + 1)/N falls under tail_tol; throws
// SizingError when no feasible N exists. Exact 0 when 1/x is an integer.
double prime_frac_lhs(double x, double tail_tol);

// 1 - 2 gamma - log x + paired sum of zeta(2-rho) x^{1-rho}/(2-rho) plus
// sum_{n<=K_trivial} zeta(2+2n) x^{1-2n}/(2+2n), evaluated as displayed.
double prime_frac_expansion(double x, const TruncationSpec& trunc, const ZeroTable& zeros);

// --- Divergence demonstration ----------------------------------------------

// Partial sums S(T') = y^{1/2} sum_{0<gamma<=T'} gamma^{m-1} recorded at each
// ordinate up to t_max; for m = 1 this is y^{1/2} N(T'). Monotone and
// unbounded in T — the point being demonstrated.
std::vector<double> zero_power_partial_sums(double m, double t_max, double y,
                                            const ZeroTable& zeros);

} // namespace summa
