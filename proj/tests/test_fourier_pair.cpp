#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oracle_quad.hpp"
#include "specstat/fourier_pair.hpp"

using namespace specstat;

namespace {
const TestFunctionPair fejer(Family::fejer);
const TestFunctionPair bump(Family::cinf_bump);
const TestFunctionPair hann(Family::hann);

double fhat_base(const TestFunctionPair& p, double x) { return p.eval_fhat(x); }
}  // namespace

TEST_CASE("fhat point values") {
    CHECK(fejer.eval_fhat(0.0) == 1.0);
    CHECK(fejer.eval_fhat(0.5) == 0.5);
    CHECK(fejer.eval_fhat(-0.5) == 0.5);
    CHECK(bump.eval_fhat(1.5) == 0.0);
    CHECK(bump.eval_fhat(1.0) == 0.0);   // endpoint defined as 0, no overflow
    CHECK(bump.eval_fhat(-1.0) == 0.0);
    CHECK(bump.eval_fhat(0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(hann.eval_fhat(0.0) == 1.0);
    CHECK(hann.eval_fhat(1.0) == 0.0);
    CHECK(fejer.eval_fhat(1.0 + 1e-14) == 0.0);
}

TEST_CASE("fhat is even and compactly supported") {
    for (const auto& p : {fejer, bump, hann}) {
        for (double x = 0.0; x <= 2.0; x += 0.03125) {
            CHECK(p.eval_fhat(x) == p.eval_fhat(-x));
            if (x > p.beta()) CHECK(p.eval_fhat(x) == 0.0);
        }
    }
}

TEST_CASE("closed-form f values") {
    CHECK(fejer.eval_f(0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(fejer.eval_f(2.0 * M_PI)) < 1e-15);  // sin(pi) = 0
    CHECK(hann.eval_f(0.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(hann.eval_f(M_PI) == doctest::Approx(0.5).epsilon(1e-13));
    // frozen regression from the pre-build quadrature oracle:
    // int_{-1}^{1} exp(-1/(1-x^2)) dx = 0.443993816168079...
    CHECK(bump.eval_f(0.0) == doctest::Approx(0.443993816168079).epsilon(1e-11));
}

TEST_CASE("f at complex arguments") {
    // fejer closed form continues to (sinh(1/4)/(1/4))^2 at y = i/2
    const auto v = fejer.eval_f(std::complex<double>(0.0, 0.5));
    CHECK(v.real() == doctest::Approx(1.02100772165104628).epsilon(1e-13));
    CHECK(std::abs(v.imag()) < 1e-14);
    // bump via quadrature: frozen oracle value int fhat(x) cosh(x/2) dx
    const auto b = bump.eval_f(std::complex<double>(0.0, 0.5));
    CHECK(b.real() == doctest::Approx(0.45283048285276672).epsilon(1e-11));
    CHECK(std::abs(b.imag()) < 1e-14);
}

TEST_CASE("strip validation") {
    CHECK_THROWS_AS((void)fejer.eval_f({0.0, 50.5}), std::domain_error);
    CHECK_THROWS_AS((void)bump.eval_f({1.0, -51.0}), std::domain_error);
    // wider support shrinks the strip; narrower support widens it
    const auto narrow = fejer.scale_support(0.5);
    CHECK_NOTHROW((void)narrow.eval_f({0.0, 80.0}));
    CHECK_THROWS_AS((void)narrow.eval_f({0.0, 101.0}), std::domain_error);
}

TEST_CASE("scale_support") {
    const auto same = fejer.scale_support(1.0);
    for (double x : {0.0, 0.25, 0.75, 1.5}) CHECK(same.eval_fhat(x) == fejer.eval_fhat(x));
    for (double y : {0.0, 1.0, 7.5}) CHECK(same.eval_f(y) == fejer.eval_f(y));

    const auto wide = fejer.scale_support(2.0);
    CHECK(wide.beta() == 2.0);
    CHECK(wide.eval_fhat(0.0) == 0.5);                      // 1/c at the peak
    CHECK(std::abs(wide.eval_f(M_PI)) < 1e-15);             // f_c(pi) = f(2 pi) = 0
    CHECK(wide.eval_f(1.25) == doctest::Approx(fejer.eval_f(2.5)).epsilon(1e-14));
    CHECK(wide.eval_fhat(1.0) == doctest::Approx(0.5 * fejer.eval_fhat(0.5)).epsilon(1e-14));
}

TEST_CASE("Paley-Wiener decay") {
    // fejer: |f(y)| <= 4/y^2 for |y| >= 1, directly from the closed form
    for (double y = 1.0; y <= 200.0; y += 0.5)
        CHECK(std::abs(fejer.eval_f(y)) <= 4.0 / (y * y));
    // cinf_bump: |f(y)| (1+|y|)^4 <= C with C fitted once on this grid and
    // frozen (raw maximum 745.95 at y = 35.5).
    const double kBumpQuarticC = 746.5;
    for (double y = 0.0; y <= 200.0; y += 0.5)
        CHECK(std::abs(bump.eval_f(y)) * std::pow(1.0 + y, 4) <= kBumpQuarticC);
}

TEST_CASE("transform consistency against an independent quadrature") {
    std::mt19937 gen(20260811);
    std::uniform_real_distribution<double> uy(-50.0, 50.0);
    for (const auto& p : {fejer, bump, hann}) {
        for (int i = 0; i < 50; ++i) {
            const double y = uy(gen);
            const double via_quad = oracle::integrate(
                [&](double x) { return 2.0 * p.eval_fhat(x) * std::cos(x * y); }, 0.0, p.beta(),
                1e-13, 64);
            CHECK(std::abs(via_quad - p.eval_f(y)) < 1e-9);
        }
    }
}

TEST_CASE("f is even and real on the real line") {
    for (const auto& p : {fejer, bump, hann}) {
        for (double y = 0.0; y <= 40.0; y += 0.7) {
            CHECK(std::abs(p.eval_f(y) - p.eval_f(-y)) < 1e-12);
            const auto z = p.eval_f(std::complex<double>(y, 0.0));
            CHECK(std::abs(z.imag()) < 1e-12);
        }
    }
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(TestFunctionPair(Family::fejer, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(TestFunctionPair(Family::fejer, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(TestFunctionPair(Family::fejer, 1.0, -0.5), std::invalid_argument);
    CHECK_NOTHROW(TestFunctionPair(Family::fejer, 1.0, 0.0));  // the zero pair
    CHECK_THROWS_AS(family_from_string("triangle"), std::invalid_argument);
}

TEST_CASE("normalization scales both members") {
    const TestFunctionPair half(Family::fejer, 1.0, 0.5);
    CHECK(half.eval_fhat(0.25) == doctest::Approx(0.5 * fhat_base(fejer, 0.25)).epsilon(1e-15));
    CHECK(half.eval_f(3.0) == doctest::Approx(0.5 * fejer.eval_f(3.0)).epsilon(1e-14));
}
