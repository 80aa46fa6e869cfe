#include "specstat/kernels.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "specstat/quadrature.hpp"

namespace specstat {

KernelParams::KernelParams(double L_, double tau_, TestFunctionPair pair_)
    : L(L_), tau(tau_), pair(std::move(pair_)) {
    if (!(L > 0.0)) throw std::invalid_argument("KernelParams: L must be positive");
    if (!(tau >= 0.0)) throw std::invalid_argument("KernelParams: tau must be nonnegative");
}

double eval_F(const KernelParams& p, double x) {
    if (!(x > 0.0)) throw std::invalid_argument("eval_F: x must be positive");
    const double fh = p.pair.eval_fhat(x / p.L);
    if (fh == 0.0) return 0.0;
    return fh * std::cos(x * p.tau) * detail::inv_sinh(x / 2.0);
}

namespace detail {

double hl_sum_direct(const KernelParams& p, double x, bool majorant) {
    const double support = p.pair.beta() * p.L;
    const auto K = static_cast<std::int64_t>(std::floor(support / x));
    double sum = 0.0;
    for (std::int64_t k = 1; k <= K; ++k) {
        const double kx = static_cast<double>(k) * x;
        const double z = kx / 2.0;
        if (z > 745.0) break;  // 1/sinh underflows; remaining terms are zero
        const double w = majorant ? (kx <= support ? 1.0 : 0.0) : p.pair.eval_fhat(kx / p.L);
        if (w == 0.0) continue;
        const double c = majorant ? 1.0 : std::cos(kx * p.tau);
        sum += w * c * inv_sinh(z);
    }
    return x / p.L * sum;
}

// Exact sums at both ends plus an Euler-Maclaurin midpoint middle:
//   sum_{k=a}^{b} g(kx) = (1/x) int_{(a-1/2)x}^{(b+1/2)x} g
//                         + (x/24) [g'((a-1/2)x) - g'((b+1/2)x)] + O(x^3 g''')
// with g(u) = fhat(u/L) cos(u tau) / sinh(u/2).  The top k0 terms are summed
// directly so the EM range stays clear of the support edge (where fhat kinks
// and the majorant's indicator jumps).  Entered only when K > ~2e5, where the
// residual is far below 1e-12.
double hl_sum_accelerated(const KernelParams& p, double x, bool majorant) {
    const double support = p.pair.beta() * p.L;
    const auto K = static_cast<std::int64_t>(std::floor(support / x));
    constexpr std::int64_t k0 = 4096;
    if (K <= 4 * k0) return hl_sum_direct(p, x, majorant);  // chunks would overlap

    double head = 0.0;
    for (std::int64_t k = 1; k <= k0; ++k) {
        const double kx = static_cast<double>(k) * x;
        const double w = majorant ? 1.0 : p.pair.eval_fhat(kx / p.L);
        const double c = majorant ? 1.0 : std::cos(kx * p.tau);
        head += w * c * inv_sinh(kx / 2.0);
    }
    for (std::int64_t k = K - k0 + 1; k <= K; ++k) {
        const double kx = static_cast<double>(k) * x;
        const double w = majorant ? (kx <= support ? 1.0 : 0.0) : p.pair.eval_fhat(kx / p.L);
        if (w == 0.0) continue;
        const double c = majorant ? 1.0 : std::cos(kx * p.tau);
        head += w * c * inv_sinh(kx / 2.0);
    }

    auto g = [&](double u) {
        const double w = majorant ? (u <= support ? 1.0 : 0.0) : p.pair.eval_fhat(u / p.L);
        if (w == 0.0) return 0.0;
        const double c = majorant ? 1.0 : std::cos(u * p.tau);
        return w * c * inv_sinh(u / 2.0);
    };
    auto g_deriv = [&](double u) {
        if (u > support) return 0.0;
        const double s = inv_sinh(u / 2.0);
        const double ch = 1.0 / std::tanh(u / 2.0);  // cosh/sinh
        if (majorant) return -0.5 * s * ch;
        const double fh = p.pair.eval_fhat(u / p.L);
        const double fhd = p.pair.eval_fhat_deriv(u / p.L) / p.L;
        const double c = std::cos(u * p.tau), sn = std::sin(u * p.tau);
        return (fhd * c - p.tau * fh * sn) * s - 0.5 * fh * c * s * ch;
    };

    const double lo = (static_cast<double>(k0) + 0.5) * x;
    const double hi = (static_cast<double>(K - k0) + 0.5) * x;
    // Geometric refinement toward the 1/u endpoint.
    std::vector<double> pts{lo};
    for (double u = lo * 4.0; u < std::min(hi, 2.0); u *= 4.0) pts.push_back(u);
    pts.push_back(hi);
    QuadratureOptions opt;
    opt.rel_tol = 1e-12;
    opt.osc_scale = p.tau;
    const double integral = integrate_segments(g, pts, opt).value;

    const double middle = integral / x + x / 24.0 * (g_deriv(lo) - g_deriv(hi));
    return x / p.L * (head + middle);
}

}  // namespace detail

static double hl_eval(const KernelParams& p, double x, bool majorant) {
    if (!(x > 0.0)) throw std::invalid_argument("kernel evaluation: x must be positive");
    if (x < kKernelEvalFloor)
        throw std::invalid_argument("kernel evaluation: x below evaluation floor 1e-12");
    const double terms = p.pair.beta() * p.L / x;
    if (terms <= static_cast<double>(detail::kDirectTermLimit))
        return detail::hl_sum_direct(p, x, majorant);
    return detail::hl_sum_accelerated(p, x, majorant);
}

double eval_HL(const KernelParams& p, double x) { return hl_eval(p, x, false); }

double eval_GL(const KernelParams& p, double x) { return hl_eval(p, x, true); }

bool sinh_ratio_bound_check(std::int64_t k, double y) {
    if (k < 1 || !(y > 0.0)) throw std::invalid_argument("sinh_ratio_bound_check: need k>=1, y>0");
    // sinh(y)/sinh(ky) = e^{(1-k)y} (1-e^{-2y})/(1-e^{-2ky}); compare the
    // bracketed factor against 2 to avoid overflow at large ky.
    const double ratio_scaled = (-std::expm1(-2.0 * y)) / (-std::expm1(-2.0 * static_cast<double>(k) * y));
    return ratio_scaled < 2.0;
}

double min_nonsimple_geodesic_length() { return 4.0 * std::asinh(1.0); }

}  // namespace specstat
