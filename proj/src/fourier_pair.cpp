#include "specstat/fourier_pair.hpp"

#include <cmath>
#include <stdexcept>

#include "specstat/quadrature.hpp"

namespace specstat {

namespace {

constexpr double kPi = 3.14159265358979323846;

// sin(z)/z with the removable singularity handled by series.
std::complex<double> sinc(std::complex<double> z) {
    if (std::abs(z) < 1e-4) {
        const auto z2 = z * z;
        return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0);
    }
    return std::sin(z) / z;
}

double base_fhat(Family fam, double x) {
    x = std::abs(x);
    if (x >= 1.0) return 0.0;
    switch (fam) {
        case Family::fejer: return 1.0 - x;
        case Family::cinf_bump: return std::exp(-1.0 / (1.0 - x * x));
        case Family::hann: {
            const double c = std::cos(kPi * x / 2.0);
            return c * c;
        }
    }
    return 0.0;
}

double base_fhat_deriv(Family fam, double x) {
    const double s = x < 0 ? -1.0 : 1.0;
    x = std::abs(x);
    if (x >= 1.0) return 0.0;
    switch (fam) {
        case Family::fejer: return -s;
        case Family::cinf_bump: {
            const double d = 1.0 - x * x;
            return -s * std::exp(-1.0 / d) * 2.0 * x / (d * d);
        }
        case Family::hann: return -s * (kPi / 2.0) * std::sin(kPi * x);
    }
    return 0.0;
}

// Closed form for the hann transform, pi^2 sin(y) / (y (pi^2 - y^2)), with
// stable rewrites near the removable singularities y = 0, +-pi.
std::complex<double> hann_f(std::complex<double> y) {
    if (std::abs(y) < 0.5) return sinc(y) * kPi * kPi / (kPi * kPi - y * y);
    if (std::abs(y - kPi) < 0.5) {
        const auto u = y - kPi;
        return sinc(u) * kPi * kPi / (y * (y + kPi));
    }
    if (std::abs(y + kPi) < 0.5) {
        const auto u = y + kPi;
        return -sinc(u) * kPi * kPi / (y * (kPi - y));
    }
    return kPi * kPi * std::sin(y) / (y * (kPi * kPi - y * y));
}

std::complex<double> base_f(Family fam, std::complex<double> y) {
    switch (fam) {
        case Family::fejer: {
            const auto s = sinc(y / 2.0);
            return s * s;
        }
        case Family::hann: return hann_f(y);
        case Family::cinf_bump: {
            // f(y) = 2 \int_0^1 fhat(x) cos(x y) dx; cos keeps real y exactly real.
            QuadratureOptions opt;
            opt.rel_tol = 1e-12;
            const std::vector<double> pts{0.0, 0.5, 0.9, 1.0};
            const double re = integrate_segments(
                [&](double x) {
                    const double c = std::cos(x * y.real()) * std::cosh(x * y.imag());
                    return 2.0 * base_fhat(fam, x) * c;
                }, pts, opt).value;
            double im = 0.0;
            if (y.imag() != 0.0) {
                im = integrate_segments(
                    [&](double x) {
                        const double s = -std::sin(x * y.real()) * std::sinh(x * y.imag());
                        return 2.0 * base_fhat(fam, x) * s;
                    }, pts, opt).value;
            }
            return {re, im};
        }
    }
    return 0.0;
}

}  // namespace

Family family_from_string(const std::string& name) {
    if (name == "fejer") return Family::fejer;
    if (name == "cinf_bump" || name == "bump") return Family::cinf_bump;
    if (name == "hann") return Family::hann;
    throw std::invalid_argument("unknown test-function family: " + name);
}

std::string to_string(Family f) {
    switch (f) {
        case Family::fejer: return "fejer";
        case Family::cinf_bump: return "cinf_bump";
        case Family::hann: return "hann";
    }
    return "?";
}

TestFunctionPair::TestFunctionPair(Family family, double beta, double normalization)
    : family_(family), beta_(beta), normalization_(normalization) {
    if (!(beta > 0.0)) throw std::invalid_argument("TestFunctionPair: beta must be positive");
    if (!(normalization >= 0.0))
        throw std::invalid_argument("TestFunctionPair: normalization must be nonnegative");
}

double TestFunctionPair::eval_fhat(double x) const {
    return normalization_ * base_fhat(family_, x / beta_) / beta_;
}

double TestFunctionPair::eval_fhat_deriv(double x) const {
    return normalization_ * base_fhat_deriv(family_, x / beta_) / (beta_ * beta_);
}

std::complex<double> TestFunctionPair::eval_f(std::complex<double> y) const {
    if (std::abs(y.imag()) * beta_ > kImagStripHalfWidth)
        throw std::domain_error("eval_f: argument outside the validated strip |Im y|*beta <= 50");
    return normalization_ * base_f(family_, beta_ * y);
}

double TestFunctionPair::eval_f(double y) const {
    return eval_f(std::complex<double>(y, 0.0)).real();
}

TestFunctionPair TestFunctionPair::scale_support(double c) const {
    if (!(c > 0.0)) throw std::invalid_argument("scale_support: c must be positive");
    return TestFunctionPair(family_, c * beta_, normalization_);
}

double TestFunctionPair::fhat_sup() const {
    const double base_max = family_ == Family::cinf_bump ? std::exp(-1.0) : 1.0;
    return normalization_ * base_max / beta_;
}

double TestFunctionPair::fhat_deriv_sup() const {
    double base_max = 1.0;  // fejer: |fhat'| = 1
    switch (family_) {
        case Family::fejer: base_max = 1.0; break;
        case Family::hann: base_max = kPi / 2.0; break;
        case Family::cinf_bump: base_max = 0.7985;  // max of 2x/(1-x^2)^2 e^{-1/(1-x^2)}
            break;
    }
    return normalization_ * base_max / (beta_ * beta_);
}

}  // namespace specstat
