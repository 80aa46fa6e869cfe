#pragma once

#include <cmath>
#include <cstdint>

#include "specstat/fourier_pair.hpp"

namespace specstat {

/// Window parameters of the statistic: L is the inverse window width, tau the
/// spectral center.
struct KernelParams {
    double L;
    double tau;
    TestFunctionPair pair;

    KernelParams(double L_, double tau_, TestFunctionPair pair_);
};

/// F(x) = fhat(x/L) cos(x tau) / sinh(x/2) for x > 0; zero beyond the support
/// of fhat (x > beta * L).
double eval_F(const KernelParams& p, double x);

/// H_L(x) = (x/L) * sum_{k=1}^{floor(beta L / x)} F(k x).
///
/// The sum is finite (fhat kills k x > beta L).  For term counts up to ~2e5
/// it is evaluated directly; for smaller x (up to the 1e-12 evaluation floor,
/// where the count reaches ~1e13) the tail of the sum is evaluated as a
/// midpoint-rule integral with an Euler-Maclaurin derivative correction,
/// which agrees with the direct sum to ~1e-10 absolute.
double eval_HL(const KernelParams& p, double x);

/// Majorant G_L(x) = (x/L) sum_k 1_{[0, beta L]}(k x) / sinh(k x / 2);
/// dominates |H_L| whenever sup |fhat| <= 1.
double eval_GL(const KernelParams& p, double x);

/// Checks sinh(y)/sinh(k y) < 2 exp(-(k-1) y) at one grid point.
bool sinh_ratio_bound_check(std::int64_t k, double y);

/// Uniform lower bound on the length of a non-simple closed geodesic,
/// 4 arcsinh(1) = 3.5254943...; sharp.
double min_nonsimple_geodesic_length();

/// Below this x, eval_HL / eval_GL refuse to evaluate (callers integrate
/// against x dx, so the region is negligible; erroring beats clamping).
inline constexpr double kKernelEvalFloor = 1e-12;

namespace detail {
// Both evaluation strategies, exposed for crossover tests.
double hl_sum_direct(const KernelParams& p, double x, bool majorant);
double hl_sum_accelerated(const KernelParams& p, double x, bool majorant);
// 1/sinh(z) for z > 0 without overflow.
inline double inv_sinh(double z) { return 2.0 * std::exp(-z) / (-std::expm1(-2.0 * z)); }
inline constexpr std::int64_t kDirectTermLimit = 200'000;
}  // namespace detail

}  // namespace specstat
