#pragma once

#include <cstdint>

#include "summa/arith.hpp"
#include "summa/report.hpp"
#include "summa/zeta.hpp"

namespace summa {

// Truncation policy for the forward (cell-sum) integral evaluators: number of
// unit cells [k, k+1) summed exactly, plus how the remaining tail is handled.
//   analytic_halfweight: add the mean-value tail estimate and certify the
//     periodic correction analytically (tight);
//   geometric_bound: add nothing and certify by the crude majorant (loose).
enum class TailMethod { analytic_halfweight, geometric_bound };

TailMethod tail_method_from_name(const std::string& name);

struct QuadratureSpec {
    std::int64_t k_cells = 100000;
    TailMethod tail_method = TailMethod::analytic_halfweight;
    double tail_tol = 1.0e-6;
};

// A value together with a rigorous bound on its truncation error. Ops throw
// SizingError when the bound cannot be brought under the requested tolerance.
struct CertifiedValue {
    Complex value;
    double certificate;
};

// integral_0^1 (1/2 - frac(x)) x^{-s-1} dx for Re s < 0, evaluated from the
// polynomial antiderivative on (0,1).
Complex sawtooth_mellin_forward(Complex s);
// The same transform as the displayed rational function 1/(s(s-1)) + 1/(2s).
Complex sawtooth_mellin_reference(Complex s);

// integral_0^\infty frac(x)^2 x^{-s-1} / (x^2 - floor(x)^2 - frac(x)floor(x)) dx
// on the strip -1 < Re s < 0; the denominator collapses to frac(x)*x, so each
// cell is the exact antiderivative of frac(x) x^{-s-2}.
CertifiedValue frac_integral_certified(Complex s, const QuadratureSpec& q);
Complex frac_integral_reference(Complex s); // -zeta(s+1)/(s+1)

// Same integrand carrying an extra floor(x) factor, for Re s > 0.
CertifiedValue floor_frac_integral_certified(Complex s, const QuadratureSpec& q);
// (s zeta(s+1) + (1-s) zeta(s)) / (s(s+1)), with the limiting value
// (1-s)zeta(s) -> -1 as s -> 1 substituted inside the pole guard.
Complex floor_frac_integral_reference(Complex s);

// Summation kernel ((s-1)zeta(s) + (2-s)zeta(s-1)) / (s(s-1)): under the
// shift s -> s+1 it reproduces floor_frac_integral_reference, which is how
// the forward cell sums validate it without oscillatory quadrature.
Complex summation_kernel_reference(Complex s);

// Finding-only identity reports: both sides evaluated exactly, residual
// archived, never asserted zero.

// Moebius bracket sum vs. the totient-integral expression
//   1 + integral_0^x (sum_{n<=y} phi(n)/n - 3y^2/pi^2) dy
//     + (sum_{n<=x} phi(n) - 3x^2/pi^2).
ReportRow totient_integral_identity(const ArithmeticTable& mobius_table,
                                    const ArithmeticTable& totient_table, double x);

// Moebius sum of the corrected bracket combination
//   frac(u)floor(u) - floor(u) - 1/2 + (frac(u)^2 + floor(u))/2,  u = x/n,
// vs. sum_{n<=x} phi(n) - 3x^2/pi^2.
ReportRow totient_direct_identity(const ArithmeticTable& mobius_table,
                                  const ArithmeticTable& totient_table, double x);

// General divisor-sum chain: weighted bracket sum vs.
//   sum G_w + integral_0^x (sum G_{w+1} - y^2 L/2) dy + (sum n G_{w+1} - x^2 L/2),
// where L is the attached Dirichlet-series value at 2+w for the kind.
ReportRow divisor_chain_identity(const ArithmeticTable& table, double x, double w);

// The attached Dirichlet-series value L(2+w) used by divisor_chain_identity.
double attached_series_value(ArithmeticKind kind, double w);

} // namespace summa
