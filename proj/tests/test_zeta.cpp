#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "summa/errors.hpp"
#include "summa/zeta.hpp"

using namespace summa;

namespace {

// Reference constants, frozen from an independent multiprecision computation
// (25 significant digits each).
constexpr double kZetaHalf = -1.460354508809586812889499;
constexpr double kZeta3Q = -3.44128538694522289439514; // zeta(0.75)
constexpr double kZeta32 = 2.612375348685488343348568; // zeta(1.5)
constexpr double kZeta2 = 1.644934066848226436472415;
constexpr double kZeta52 = 1.34148725725091717975677; // zeta(2.5)
constexpr double kZeta3 = 1.202056903159594285399738;
constexpr double kZeta4 = 1.082323233711138191516004;
constexpr double kZetaMinusHalf = -0.2078862249773545660173067;
constexpr double kZetaP0 = -0.9189385332046727417803297;  // zeta'(0) = -log(2 pi)/2
constexpr double kZetaP2 = -0.9375482543158437537025741;  // zeta'(2)
constexpr double kZetaP52 = -0.3873419503262099727119924; // zeta'(2.5)
constexpr double kZetaP3 = -0.1981262428856368533306818;  // zeta'(3)
constexpr double kLogDeriv2 = -0.5699609930945328063998644;
constexpr double kEulerGamma = 0.5772156649015328606065121;
constexpr double kGamma1 = 14.13472514173469379045725;
constexpr double kGamma2 = 21.02203963877155499262848;
constexpr double kGamma3 = 25.01085758014568876321379;
const double kPi = std::acos(-1.0);

double rel_err(Complex got, Complex want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

const ZeroTable& zeros_to_1000() {
    static const ZeroTable table = find_zeros(1000.0, 1.0e-9);
    return table;
}

} // namespace

TEST_SUITE("zeta") {

TEST_CASE("frozen real values on both sides of the critical strip") {
    CHECK(zeta(Complex(2.0, 0.0)).real() == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-14));
    CHECK(zeta(Complex(2.0, 0.0)).real() == doctest::Approx(kZeta2).epsilon(1e-14));
    CHECK(zeta(Complex(3.0, 0.0)).real() == doctest::Approx(kZeta3).epsilon(1e-14));
    CHECK(zeta(Complex(4.0, 0.0)).real() == doctest::Approx(kZeta4).epsilon(1e-14));
    CHECK(zeta(Complex(2.5, 0.0)).real() == doctest::Approx(kZeta52).epsilon(1e-14));
    CHECK(zeta(Complex(1.5, 0.0)).real() == doctest::Approx(kZeta32).epsilon(1e-14));
    CHECK(zeta(Complex(0.75, 0.0)).real() == doctest::Approx(kZeta3Q).epsilon(1e-13));
    CHECK(zeta(Complex(0.5, 0.0)).real() == doctest::Approx(kZetaHalf).epsilon(1e-13));
    CHECK(zeta(Complex(0.0, 0.0)).real() == doctest::Approx(-0.5).epsilon(1e-13));
    // reflection side
    CHECK(zeta(Complex(-0.5, 0.0)).real() == doctest::Approx(kZetaMinusHalf).epsilon(1e-12));
    CHECK(zeta(Complex(-1.0, 0.0)).real() == doctest::Approx(-1.0 / 12.0).epsilon(1e-12));
    CHECK(std::abs(zeta(Complex(-2.0, 0.0))) < 1e-13);
    CHECK(zeta(Complex(-3.0, 0.0)).real() == doctest::Approx(1.0 / 120.0).epsilon(1e-11));
    CHECK(zeta(Complex(-11.0, 0.0)).real() == doctest::Approx(691.0 / 32760.0).epsilon(1e-11));
    CHECK(std::abs(zeta(Complex(2.0, 0.0)).imag()) < 1e-15);
}

TEST_CASE("agrees with the alternating-series oracle off the real axis") {
    for (double sigma : {0.6, 1.1, 1.5, 3.0}) {
        for (double t : {0.0, 0.7, 5.0, 20.0}) {
            const Complex s(sigma, t);
            const Complex got = zeta(s);
            const Complex ref = oracle::borwein_zeta(s);
            CAPTURE(sigma);
            CAPTURE(t);
            CHECK(rel_err(got, ref) < 1e-11);
        }
    }
}

TEST_CASE("reflection identity holds to 1e-9 across the strip") {
    for (double sigma : {0.3, 0.5, 0.8, 2.5, -1.7}) {
        for (double t : {0.5, 1.0, 5.0, 20.0, 100.0, 200.0}) {
            const Complex s(sigma, t);
            const Complex lhs = zeta(s);
            const Complex rhs = reflection_factor(s) * zeta(Complex(1.0, 0.0) - s);
            CAPTURE(sigma);
            CAPTURE(t);
            CHECK(rel_err(lhs, rhs) < 1e-9);
        }
    }
    // higher up the line, slightly relaxed
    const Complex s(0.5, 500.0);
    CHECK(rel_err(zeta(s), reflection_factor(s) * zeta(Complex(1.0, 0.0) - s)) < 1e-8);
}

TEST_CASE("reflection factor is unitary on the critical line and involutive") {
    CHECK(std::abs(std::abs(reflection_factor(Complex(0.5, 7.0))) - 1.0) < 1e-11);
    CHECK(std::abs(std::abs(reflection_factor(Complex(0.5, 63.2))) - 1.0) < 1e-11);
    for (Complex s : {Complex(0.3, 5.0), Complex(-0.7, 2.0), Complex(0.9, 40.0)}) {
        const Complex prod =
            reflection_factor(s) * reflection_factor(Complex(1.0, 0.0) - s);
        CHECK(std::abs(prod - 1.0) < 1e-10);
    }
}

TEST_CASE("derivative: frozen values and finite-difference agreement") {
    CHECK(zeta_prime(Complex(0.0, 0.0)).real() == doctest::Approx(kZetaP0).epsilon(1e-12));
    CHECK(zeta_prime(Complex(2.0, 0.0)).real() == doctest::Approx(kZetaP2).epsilon(1e-13));
    CHECK(zeta_prime(Complex(2.5, 0.0)).real() == doctest::Approx(kZetaP52).epsilon(1e-13));
    CHECK(zeta_prime(Complex(3.0, 0.0)).real() == doctest::Approx(kZetaP3).epsilon(1e-13));
    const auto f = [](Complex z) { return zeta(z); };
    for (Complex s : {Complex(2.5, 0.0), Complex(0.5, 3.0), Complex(0.3, 25.0),
                      Complex(-1.5, 2.0), Complex(3.0, 10.0), Complex(-4.3, 0.7)}) {
        const Complex fd = oracle::central_difference(f, s);
        CAPTURE(s.real());
        CAPTURE(s.imag());
        CHECK(std::abs(zeta_prime(s) - fd) < 1e-6 * (1.0 + std::abs(fd)));
    }
}

TEST_CASE("logarithmic derivative: frozen value and near-zero refusal") {
    CHECK(zeta_log_deriv(Complex(2.0, 0.0)).real() == doctest::Approx(kLogDeriv2).epsilon(1e-13));
    // at the first critical-line zero, |zeta| is ~1e-15 and must be refused
    CHECK_THROWS_AS(zeta_log_deriv(Complex(0.5, kGamma1)), NearZeroError);
}

TEST_CASE("pole and band guards") {
    CHECK_THROWS_AS(zeta(Complex(1.0, 0.0)), PoleError);
    CHECK_THROWS_AS(zeta(Complex(1.0 + 1e-8, 0.0)), PoleError);
    CHECK_THROWS_AS(zeta_prime(Complex(1.0, 1e-9)), PoleError);
    CHECK_THROWS_AS(zeta(Complex(0.5, 1.5e3)), DomainError);
    CHECK_THROWS_AS(zeta(Complex(-60.0, 0.0)), DomainError);
    // just inside the band is fine
    CHECK(std::isfinite(zeta(Complex(1.0 + 2e-6, 0.0)).real()));
}

TEST_CASE("Euler-Mascheroni constant is computed, not guessed") {
    CHECK(euler_gamma() == doctest::Approx(kEulerGamma).epsilon(1e-14));
    // consistency with the pole expansion zeta(1+eps) = 1/eps + gamma + O(eps)
    const double eps = 1e-4;
    const double near = zeta(Complex(1.0 + eps, 0.0)).real() - 1.0 / eps;
    CHECK(std::abs(near - euler_gamma()) < 1e-3);
}

TEST_CASE("log-gamma and digamma basics") {
    CHECK(std::exp(log_gamma(Complex(5.0, 0.0)).real()) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(log_gamma(Complex(0.5, 0.0)).real() == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-13));
    const Complex z(0.3, 2.0);
    const Complex rec = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
    CHECK(std::abs(rec) < 1e-11);
    CHECK(digamma(Complex(1.0, 0.0)).real() == doctest::Approx(-euler_gamma()).epsilon(1e-13));
    CHECK(digamma(Complex(2.0, 0.0)).real() == doctest::Approx(1.0 - euler_gamma()).epsilon(1e-13));
    const auto lg = [](Complex w) { return log_gamma(w); };
    const Complex fd = oracle::central_difference(lg, Complex(1.7, 1.3));
    CHECK(std::abs(digamma(Complex(1.7, 1.3)) - fd) < 1e-6);
    CHECK_THROWS_AS(log_gamma(Complex(-1.0, 0.0)), DomainError);
}

TEST_CASE("theta function pins the zero-counting scale") {
    CHECK(std::abs(riemann_siegel_theta(100.0) / kPi + 1.0 - 29.002) < 5e-3);
    CHECK(std::abs(riemann_siegel_theta(1000.0) / kPi + 1.0 - 648.616) < 5e-3);
    CHECK_THROWS_AS(riemann_siegel_theta(2.5e3), DomainError);
}

TEST_CASE("Hardy Z has the magnitude of zeta on the critical line") {
    const double t = 17.0;
    CHECK(std::abs(std::abs(hardy_z(t)) - std::abs(zeta(Complex(0.5, t)))) < 1e-12);
}

TEST_CASE("first zeros to height 100: ordinates, counting, invariants") {
    const ZeroTable table = find_zeros(100.0, 1.0e-9);
    REQUIRE(table.ordinates.size() == 29);
    CHECK(table.precision == 1.0e-9);
    CHECK(table.t_max == 100.0);
    CHECK(table.source == ZeroTable::Source::computed);
    CHECK(std::abs(table.ordinates[0] - kGamma1) < 1e-8);
    CHECK(std::abs(table.ordinates[1] - kGamma2) < 1e-8);
    CHECK(std::abs(table.ordinates[2] - kGamma3) < 1e-8);
    CHECK(table.ordinates.front() > 14.0);
    CHECK(table.ordinates.front() < 14.3);
    for (std::size_t i = 1; i < table.ordinates.size(); ++i)
        CHECK(table.ordinates[i] > table.ordinates[i - 1]);
    for (double g : table.ordinates) CHECK(std::abs(hardy_z(g)) < 1e-8);
    CHECK(table.count_below(50.0) == 10);
    CHECK(table.count_below(14.0) == 0);
    CHECK(table.count_below(100.0) == 29);
    // independent recount without bisection on a finer grid
    CHECK(count_zero_sign_changes(100.0, 0.01) == 29);
    CHECK(count_zero_sign_changes(30.0, 0.05) == 3);
    CHECK_THROWS_AS(find_zeros(10.0), DomainError);
    CHECK_THROWS_AS(find_zeros(2.0e3), DomainError);
    CHECK_THROWS_AS(find_zeros(100.0, 1.0e-15), DomainError);
    CHECK_THROWS_AS(find_zeros(100.0, 0.5), DomainError);
    CHECK_THROWS_AS(count_zero_sign_changes(100.0, 0.7), DomainError);
}

TEST_CASE("ordinate growth tracks the leading-order counting asymptotic") {
    const ZeroTable& table = zeros_to_1000();
    REQUIRE(table.ordinates.size() == 649);
    CHECK(zero_count_asymptotic(100.0) ==
          doctest::Approx(100.0 * std::log(100.0) / (2.0 * kPi)).epsilon(1e-15));
    // gamma_k vs 2 pi k / log k: bounded ratio, drifting toward 1
    std::vector<double> ratio;
    for (std::size_t k = 2; k <= table.ordinates.size(); ++k) {
        const double pred = 2.0 * kPi * static_cast<double>(k) / std::log(static_cast<double>(k));
        ratio.push_back(table.ordinates[k - 1] / pred);
    }
    for (double r : ratio) {
        CHECK(r > 0.5);
        CHECK(r < 2.0);
    }
    double first = 0.0, last = 0.0;
    for (int i = 0; i < 10; ++i) {
        first += ratio[static_cast<std::size_t>(i)];
        last += ratio[ratio.size() - 1 - static_cast<std::size_t>(i)];
    }
    first /= 10.0;
    last /= 10.0;
    CHECK(std::abs(last - 1.0) < std::abs(first - 1.0));
}

TEST_CASE("zero cache round-trips losslessly and validates on load") {
    const ZeroTable table = find_zeros(60.0, 1.0e-9);
    const std::string path = "zeta_cache_roundtrip.txt";
    save_zeros(path, table);
    const ZeroTable back = load_zeros(path);
    REQUIRE(back.ordinates.size() == table.ordinates.size());
    for (std::size_t i = 0; i < back.ordinates.size(); ++i)
        CHECK(std::abs(back.ordinates[i] - table.ordinates[i]) < 5e-13); // fixed 12 decimals
    CHECK(back.precision == table.precision);
    CHECK(back.source == ZeroTable::Source::loaded);
    CHECK(back.t_max == back.ordinates.back());
    // save(load(x)) must be byte-identical to save(x) modulo the first write
    const std::string path2 = "zeta_cache_roundtrip2.txt";
    save_zeros(path2, back);
    std::ifstream f1(path, std::ios::binary), f2(path2, std::ios::binary);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(!s1.str().empty());
    CHECK(s1.str().rfind("# summa-lab zeros v1 precision=", 0) == 0);

    const auto write_file = [](const std::string& p, const std::string& body) {
        std::ofstream o(p, std::ios::binary);
        o << body;
    };
    const std::string bad = "zeta_cache_bad.txt";
    CHECK_THROWS_AS(load_zeros("zeta_cache_does_not_exist.txt"), Error);
    write_file(bad, "");
    CHECK_THROWS_AS(load_zeros(bad), ParseError);
    write_file(bad, "# other header\n14.134725141735\n");
    CHECK_THROWS_AS(load_zeros(bad), ParseError);
    write_file(bad, "# summa-lab zeros v1 precision=bogus\n14.134725141735\n");
    CHECK_THROWS_AS(load_zeros(bad), ParseError);
    write_file(bad, "# summa-lab zeros v1 precision=1e-09\n13.900000000000\n");
    CHECK_THROWS_AS(load_zeros(bad), ParseError);
    write_file(bad, "# summa-lab zeros v1 precision=1e-09\n14.134725141735\n14.100000000000\n");
    CHECK_THROWS_AS(load_zeros(bad), ParseError);
    write_file(bad, "# summa-lab zeros v1 precision=1e-09\n14.134725141735\nnot-a-number\n");
    CHECK_THROWS_AS(load_zeros(bad), ParseError);
    write_file(bad, "# summa-lab zeros v1 precision=1e-09\n");
    CHECK_THROWS_AS(load_zeros(bad), ParseError);
    std::remove(bad.c_str());
}

} // TEST_SUITE
