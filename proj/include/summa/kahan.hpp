#pragma once

#include <complex>

namespace summa {

// Neumaier-compensated accumulator. Long sums (>= 1e5 terms) of mixed-sign
// values keep ~1 ulp of the true sum instead of O(sqrt(N)) ulp drift.
class KahanSum {
  public:
    void add(double x) {
        double t = s_ + x;
        if (std::abs(s_) >= std::abs(x))
            c_ += (s_ - t) + x;
        else
            c_ += (x - t) + s_;
        s_ = t;
    }
    double value() const { return s_ + c_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

class KahanComplexSum {
  public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

  private:
    KahanSum re_;
    KahanSum im_;
};

} // namespace summa
