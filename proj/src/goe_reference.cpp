#include "specstat/goe_reference.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "specstat/quadrature.hpp"
#include "specstat/rng.hpp"

namespace specstat {

double sigma2_goe_closed_form(const TestFunctionPair& pair) {
    const double beta = pair.beta();
    QuadratureOptions opt;
    opt.rel_tol = 1e-12;
    opt.abs_tol = 1e-16;
    auto integrand = [&](double x) {
        const double fh = pair.eval_fhat(x);
        return std::abs(x) * fh * fh;
    };
    // Split at 0 so the |x| kink sits on a panel boundary.
    return 2.0 * integrate_segments(integrand, {-beta, 0.0, beta}, opt).value;
}

namespace {

// Semicircle CDF on [-1, 1]: G(t) = 1/2 + (t sqrt(1-t^2) + asin t) / pi.
double semicircle_cdf(double t) {
    if (t <= -1.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return 0.5 + (t * std::sqrt(1.0 - t * t) + std::asin(t)) / M_PI;
}

// One tridiagonal beta=1 draw, unfolded to unit mean density (ascending).
std::vector<double> draw_unfolded(int n, Rng& rng) {
    Eigen::VectorXd diag(n), offdiag(n - 1);
    for (int i = 0; i < n; ++i) diag[i] = rng.normal();
    for (int i = 0; i < n - 1; ++i)
        offdiag[i] = rng.chi(static_cast<double>(n - 1 - i)) / std::sqrt(2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, offdiag, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("GOE sampling: eigenvalue iteration failed to converge");
    const double radius = std::sqrt(2.0 * n);
    std::vector<double> unfolded(n);
    for (int j = 0; j < n; ++j) unfolded[j] = n * semicircle_cdf(solver.eigenvalues()[j] / radius);
    return unfolded;
}

}  // namespace

std::vector<double> unfolded_spectrum(int matrix_dim, std::uint64_t seed) {
    if (matrix_dim < 64) throw std::invalid_argument("unfolded_spectrum: matrix_dim < 64");
    Rng rng(Rng::derive_seed(seed, 0));
    return draw_unfolded(matrix_dim, rng);
}

GOEMCResult sample_goe_variance(const GOEMCConfig& cfg) {
    if (cfg.matrix_dim < 64) throw std::invalid_argument("sample_goe_variance: matrix_dim < 64");
    if (cfg.samples < 16) throw std::invalid_argument("sample_goe_variance: samples < 16");
    if (!(cfg.bulk_fraction > 0.0 && cfg.bulk_fraction < 1.0))
        throw std::invalid_argument("sample_goe_variance: bulk_fraction outside (0,1)");
    // The closed form is the small-frequency limit of the GOE form factor;
    // comparisons need the band limit beta <= 1 (<< 2 pi).
    if (cfg.pair.beta() > 1.0)
        throw std::invalid_argument("sample_goe_variance: beta > 1 leaves the band-limited regime");

    const int n = cfg.matrix_dim;
    const int m = cfg.samples;

    std::vector<double> stats(m);
    for (int s = 0; s < m; ++s) {
        Rng rng(Rng::derive_seed(cfg.rng_seed, static_cast<std::uint64_t>(s)));
        const auto unfolded = draw_unfolded(n, rng);
        // one window per matrix, centered in the bulk
        const double center = n * (0.5 + cfg.bulk_fraction * (rng.uniform() - 0.5));
        double statistic = 0.0;
        for (double u : unfolded) statistic += cfg.pair.eval_f(u - center);
        stats[s] = statistic;
    }

    double mean = 0.0;
    for (double s : stats) mean += s;
    mean /= m;
    double q = 0.0;
    for (double s : stats) q += (s - mean) * (s - mean);
    const double estimate = q / (m - 1);

    // Jackknife over samples: leave-one-out variances in O(m) via the sums.
    double sum = mean * m, sumsq = 0.0;
    for (double s : stats) sumsq += s * s;
    std::vector<double> loo(m);
    double loo_mean = 0.0;
    for (int i = 0; i < m; ++i) {
        const double mu = (sum - stats[i]) / (m - 1);
        const double v = (sumsq - stats[i] * stats[i] - (m - 1) * mu * mu) / (m - 2);
        loo[i] = v;
        loo_mean += v;
    }
    loo_mean /= m;
    double jk = 0.0;
    for (double v : loo) jk += (v - loo_mean) * (v - loo_mean);
    const double std_error = std::sqrt(jk * (m - 1) / m);

    return {estimate, std_error, m, sigma2_goe_closed_form(cfg.pair)};
}

}  // namespace specstat
