#pragma once

#include <cstdint>
#include <vector>

#include "specstat/fourier_pair.hpp"

namespace specstat {

/// Dyson-Mehta closed form Sigma^2_GOE(f) = 2 int |x| fhat(x)^2 dx.
/// Valid as the GOE smooth-statistic variance target when beta <= 1 (the
/// band-limited regime); scale invariant under scale_support.
double sigma2_goe_closed_form(const TestFunctionPair& pair);

struct GOEMCConfig {
    int matrix_dim;            // N >= 64
    int samples;               // M >= 16
    std::uint64_t rng_seed;
    double bulk_fraction = 0.5;  // window centers stay in the central fraction
    TestFunctionPair pair;
};

struct GOEMCResult {
    double estimate;     // sample variance of the windowed statistic
    double std_error;    // jackknife standard error
    int samples_used;
    double closed_form;  // Sigma^2_GOE(f) for comparison
};

/// Sorted unfolded spectrum of a single tridiagonal draw (diagnostic; the
/// unfolding sends eigenvalues through N * G_sc(lambda / sqrt(2N)), so the
/// mean spacing is 1 away from the edges).
std::vector<double> unfolded_spectrum(int matrix_dim, std::uint64_t seed);

/// Monte Carlo estimate of the GOE windowed-statistic variance.
///
/// Per sample: draw the beta=1 tridiagonal ensemble (diagonal N(0,1),
/// off-diagonal chi_{N-i}/sqrt(2); spectrum-equivalent to GOE with diagonal
/// variance 1 and off-diagonal variance 1/2), compute eigenvalues, unfold by
/// the exact semicircle CDF of radius sqrt(2N), place one window center
/// uniformly in the central bulk, and evaluate S = sum_j f(u_j - center).
/// Returns the sample variance of S with its jackknife error; deterministic
/// for a fixed seed.
GOEMCResult sample_goe_variance(const GOEMCConfig& cfg);

}  // namespace specstat
