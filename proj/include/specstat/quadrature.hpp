#pragma once

#include <cmath>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace specstat {

/// Thrown when an integral cannot be resolved to the requested tolerance
/// within the panel budget.  Callers treat this as a hard numerical failure.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureOptions {
    double rel_tol = 1e-11;
    double abs_tol = 1e-14;
    // Panels narrower than width_floor * (b - a) are accepted as-is; guards
    // against endless refinement on C^0 kinks.
    double width_floor = 1e-15;
    std::size_t max_panels = 1'000'000;
    // When > 0, the initial panelization uses width pi / osc_scale so that
    // each panel sees at most ~half an oscillation of cos(osc_scale * x).
    double osc_scale = 0.0;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t panels = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes on [-1, 1] (positive half; symmetric).
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
// Gauss-7 weights, matching Kronrod nodes 1, 3, 5, 7 (odd indices).
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <typename F>
inline void gk15(F&& f, double a, double b, double& value, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kKronrodNodes[i]);
        fv[14 - i] = f(c + h * kKronrodNodes[i]);
    }
    fv[7] = f(c);
    double kron = kKronrodWeights[7] * fv[7];
    double gauss = kGaussWeights[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kron += kKronrodWeights[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (fv[i] + fv[14 - i]);
    }
    value = kron * h;
    // QUADPACK-style rescaled error estimate.
    const double diff = std::abs(kron - gauss) * std::abs(h);
    double resabs = 0.0;
    for (int i = 0; i < 7; ++i) resabs += kKronrodWeights[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    resabs += kKronrodWeights[7] * std::abs(fv[7]);
    resabs *= std::abs(h);
    err = diff;
    if (resabs > 0.0 && diff > 0.0) {
        const double scaled = 200.0 * diff / resabs;
        err = resabs * std::min(1.0, scaled * std::sqrt(scaled));
    }
}

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace detail

/// Adaptive Gauss-Kronrod integration over the union of [pts[i], pts[i+1]].
/// Explicit breakpoints let callers isolate kinks and endpoint singularities.
template <typename F>
QuadratureResult integrate_segments(F&& f, const std::vector<double>& pts,
                                    const QuadratureOptions& opt = {}) {
    if (pts.size() < 2) throw std::invalid_argument("integrate_segments: need at least two points");
    const double span = std::abs(pts.back() - pts.front());

    std::priority_queue<detail::Panel> heap;
    double total = 0.0, total_err = 0.0;
    std::size_t count = 0;

    auto push = [&](double a, double b) {
        if (a == b) return;
        detail::Panel p{a, b, 0.0, 0.0};
        detail::gk15(f, a, b, p.value, p.error);
        total += p.value;
        total_err += p.error;
        ++count;
        heap.push(p);
    };

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double a = pts[i], b = pts[i + 1];
        if (opt.osc_scale > 0.0) {
            const double width = M_PI / opt.osc_scale;
            const double n_real = std::ceil(std::abs(b - a) / width);
            if (n_real > static_cast<double>(opt.max_panels))
                throw QuadratureError("oscillation presplit exceeds panel budget");
            const auto n = static_cast<std::size_t>(n_real);
            for (std::size_t j = 0; j < n; ++j)
                push(a + (b - a) * static_cast<double>(j) / static_cast<double>(n),
                     a + (b - a) * static_cast<double>(j + 1) / static_cast<double>(n));
        } else {
            push(a, b);
        }
    }

    auto tolerance = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };

    while (total_err > tolerance()) {
        if (count >= opt.max_panels)
            throw QuadratureError("quadrature did not converge within panel budget (err=" +
                                  std::to_string(total_err) + ")");
        detail::Panel worst = heap.top();
        if (std::abs(worst.b - worst.a) < opt.width_floor * span) break;
        heap.pop();
        total -= worst.value;
        total_err -= worst.error;
        --count;
        const double mid = 0.5 * (worst.a + worst.b);
        push(worst.a, mid);
        push(mid, worst.b);
    }
    return {total, total_err, count};
}

template <typename F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
    return integrate_segments(std::forward<F>(f), std::vector<double>{a, b}, opt);
}

}  // namespace specstat
