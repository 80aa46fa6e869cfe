#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace specstat {

/// Deterministic samplers on top of mt19937_64 (whose output sequence is
/// fixed by the standard), so results are reproducible across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Derives an independent stream for one Monte Carlo sample.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
        // splitmix64 of seed ^ golden-ratio-scrambled index
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() {  // (0, 1)
        const std::uint64_t bits = gen_();
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
    }

    double normal() {  // Box-Muller, cached second value
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u = uniform(), v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double theta = 2.0 * M_PI * v;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    /// Gamma(shape, 1) via Marsaglia-Tsang, with the standard boost for shape < 1.
    double gamma(double shape) {
        if (shape < 1.0) return gamma(shape + 1.0) * std::pow(uniform(), 1.0 / shape);
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    /// chi-distributed value with k degrees of freedom.
    double chi(double k) { return std::sqrt(2.0 * gamma(0.5 * k)); }

  private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace specstat
