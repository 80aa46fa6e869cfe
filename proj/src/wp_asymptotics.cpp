#include "specstat/wp_asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specstat/quadrature.hpp"

namespace specstat {

namespace {

// sinh^2(x/2)/sinh(kx/2) without overflow: the exponent x - kx/2 is <= 0 for
// k >= 2 and the k = 1 case grows only like e^{x/2}.
double sinh_sq_over_sinh(double x, double k) {
    const double e1 = -std::expm1(-x);
    const double ek = -std::expm1(-k * x);
    return 0.5 * std::exp(x * (1.0 - 0.5 * k)) * e1 * e1 / ek;
}

// sinh^2(l/2) / (sinh(k1 l/2) sinh(k2 l/2)); exponent is never positive.
double sinh_sq_over_sinh_pair(double l, double k1, double k2) {
    const double e1 = -std::expm1(-l);
    const double ea = -std::expm1(-k1 * l);
    const double eb = -std::expm1(-k2 * l);
    return std::exp(l * (1.0 - 0.5 * (k1 + k2))) * e1 * e1 / (ea * eb);
}

}  // namespace

double sinh_weight(double l) {
    if (l < 0.0) throw std::invalid_argument("sinh_weight: negative length");
    const double z = l / 2.0;
    if (z < 1e-4) {
        const double z2 = z * z;
        const double s = 1.0 + z2 / 6.0 * (1.0 + z2 / 20.0);
        return s * s;
    }
    const double s = std::sinh(z) / z;
    return s * s;
}

namespace detail {

double zeta_tail(int p, std::int64_t k_from) {
    const std::int64_t T = std::max<std::int64_t>(20'000, 4 * k_from);
    double sum = 0.0;
    for (std::int64_t k = T; k > k_from; --k) sum += std::pow(static_cast<double>(k), -p);
    // Euler-Maclaurin closure past T.
    const double t = static_cast<double>(T) + 1.0;
    sum += std::pow(t, 1 - p) / (p - 1) + 0.5 * std::pow(t, -p) +
           p / 12.0 * std::pow(t, -p - 1) -
           p * (p + 1) * (p + 2) / 720.0 * std::pow(t, -p - 3);
    return sum;
}

double i_l_pair_tail_bound(double L, double beta, double fhat_sup, std::int64_t m_from) {
    m_from = std::max<std::int64_t>(m_from, 2);
    const double M2 = fhat_sup * fhat_sup;
    const std::int64_t m_cap = std::max<std::int64_t>(4 * m_from, 4096);
    double bound = 0.0;
    for (std::int64_t m = m_from + 1; m <= m_cap; ++m) {
        const double md = static_cast<double>(m);
        const double b54 = 64.0 * M2 / ((md - 2.0) * (md - 2.0) * L * L);
        for (std::int64_t k1 = 1; k1 <= m - 1; ++k1) {
            const double kmin = static_cast<double>(std::min(k1, m - k1));
            const double kmax = static_cast<double>(std::max(k1, m - k1));
            const double b56 = 2.0 * M2 * beta * beta / (kmin * kmax * kmax * kmax);
            bound += std::min(b54, b56);
        }
    }
    // Closed-form remainder for m > m_cap via the large-k majorant.
    const double T = static_cast<double>(m_cap);
    bound += 32.0 * M2 * beta * beta *
             ((1.0 + std::log(T / 2.0)) / (2.0 * T * T) + 1.0 / (4.0 * T * T));
    return bound;
}

}  // namespace detail

IfBreakdown i_f_components(const KernelParams& p) {
    const double L = p.L, tau = p.tau, beta = p.pair.beta();
    const auto k_head = std::max<std::int64_t>(4, static_cast<std::int64_t>(std::ceil(beta * L)) + 8);

    IfBreakdown out;
    for (std::int64_t k = 1; k <= k_head; ++k) {
        const double kd = static_cast<double>(k);
        const double upper = beta * L / kd;
        QuadratureOptions opt;
        opt.rel_tol = 1e-11;
        opt.abs_tol = 1e-16;
        opt.osc_scale = kd * tau;
        const double term = integrate(
            [&](double x) {
                if (x <= 0.0) return 0.0;
                return 4.0 / L * p.pair.eval_fhat(kd * x / L) * sinh_sq_over_sinh(x, kd) *
                       std::cos(kd * tau * x);
            }, 0.0, upper, opt).value;
        out.total += term;
        if (k == 1) out.k1 = term;
        else if (k == 2) out.k2 = term;
        else out.k3plus += term;
    }

    // Tail over k > k_head via the series sinh^2(w) = sum_m (2w)^{2m}/(2 (2m)!)
    // in w = uL/(2k), which converts the k-sum into zeta tails:
    //   sum_{k>k0} T_k = sum_{m>=1} [2 L^{2m}/(2m)!] B_m sum_{k>k0} k^-(2m+1),
    //   B_m = int_0^beta fhat(u) u^{2m} cos(tau L u) / sinh(uL/2) du.
    // Converges like 1/(2m)! since beta*L/(2 k_head) <= 1/2.
    const double M = p.pair.fhat_sup();
    double log_fact = std::log(2.0);  // log (2m)! at m = 1
    for (int m = 1; m <= 20; ++m) {
        if (m > 1)
            log_fact += std::log(static_cast<double>(2 * m - 1)) + std::log(static_cast<double>(2 * m));
        const double coeff = 2.0 * std::exp(2.0 * m * std::log(L) - log_fact);
        const double s_tail = detail::zeta_tail(2 * m + 1, k_head);
        QuadratureOptions opt;
        opt.rel_tol = 1e-11;
        opt.abs_tol = 1e-18;
        opt.osc_scale = tau * L;
        const double b_m = integrate(
            [&](double u) {
                if (u <= 0.0) return 0.0;
                return p.pair.eval_fhat(u) * std::pow(u, 2.0 * m) * detail::inv_sinh(u * L / 2.0) *
                       std::cos(tau * L * u);
            }, 0.0, beta, opt).value;
        const double term = coeff * b_m * s_tail;
        out.total += term;
        out.k3plus += term;
        // |B_m| <= 2 M beta^{2m} / (2m L) gives a certified cutoff bound.
        const double next_bound = 2.0 *
            std::exp(2.0 * (m + 1) * std::log(L * beta) - log_fact -
                     std::log(static_cast<double>(2 * m + 1)) - std::log(static_cast<double>(2 * m + 2))) *
            2.0 * M / (2.0 * (m + 1) * L) * detail::zeta_tail(2 * m + 3, k_head);
        if (next_bound < 1e-16 * std::abs(out.total) + 1e-18) {
            out.tail_bound = next_bound * 2.0;
            break;
        }
        out.tail_bound = next_bound * 2.0;
    }
    return out;
}

double i_f(const KernelParams& p) { return i_f_components(p).total; }

std::pair<double, double> expectation_sns_finite_g(const KernelParams& p, std::int64_t genus,
                                                   double envelope_c) {
    if (genus <= 2)
        throw std::invalid_argument(
            "expectation_sns_finite_g: genus must exceed 2 (the orbit constant changes at g=2)");
    if (envelope_c < 0.0) throw std::invalid_argument("expectation_sns_finite_g: envelope_c < 0");
    const double central = i_f(p);
    if (envelope_c == 0.0) return {central, 0.0};

    const double upper = p.pair.beta() * p.L;
    const double lo = 1e-9;  // |H| R l^4 < 1e-33 below; kernel floor is 1e-12
    std::vector<double> pts;
    for (std::int64_t k = 64; k >= 1; --k) {
        const double b = upper / static_cast<double>(k);
        if (b > lo && (pts.empty() || b > pts.back())) pts.push_back(b);
    }
    pts.insert(pts.begin(), lo);
    QuadratureOptions opt;
    opt.rel_tol = 1e-9;
    opt.abs_tol = 1e-13;
    opt.osc_scale = p.tau;
    const double band = integrate_segments(
        [&](double l) {
            return std::abs(eval_HL(p, l)) * sinh_weight(l) * l * l * l * l;
        }, pts, opt).value;
    return {central, envelope_c * band / static_cast<double>(genus)};
}

double i_l_pair(const KernelParams& p, std::int64_t k1, std::int64_t k2) {
    if (k1 < 1 || k2 < 1) throw std::invalid_argument("i_l_pair: k1, k2 must be >= 1");
    const double L = p.L, tau = p.tau;
    const double a = static_cast<double>(k1), b = static_cast<double>(k2);
    const double upper = p.pair.beta() * L / std::max(a, b);
    QuadratureOptions opt;
    opt.rel_tol = 1e-11;
    opt.abs_tol = 1e-16;
    opt.osc_scale = tau * (a + b);
    return integrate(
        [&](double l) {
            if (l <= 0.0) return 0.0;
            const double fh = p.pair.eval_fhat(a * l / L) * p.pair.eval_fhat(b * l / L);
            if (fh == 0.0) return 0.0;
            return 4.0 / (L * L) * l * fh * sinh_sq_over_sinh_pair(l, a, b) *
                   std::cos(tau * a * l) * std::cos(tau * b * l);
        }, 0.0, upper, opt).value;
}

namespace {

// Exact sum of I_L(k1,k2) over 3 <= k1+k2 <= m_max (ordered pairs).
double pair_sum_exact(const KernelParams& p, std::int64_t m_max) {
    double sum = 0.0;
    for (std::int64_t m = 3; m <= m_max; ++m)
        for (std::int64_t k1 = 1; 2 * k1 <= m; ++k1) {
            const std::int64_t k2 = m - k1;
            if (k1 > k2) break;
            sum += (k1 == k2 ? 1.0 : 2.0) * i_l_pair(p, k1, k2);
        }
    return sum;
}

std::int64_t exact_cutoff(double L, std::int64_t k_budget) {
    return std::min<std::int64_t>(k_budget, static_cast<std::int64_t>(std::ceil(L * L)));
}

}  // namespace

VarianceBreakdown limiting_variance(const KernelParams& p, std::int64_t k_budget) {
    if (k_budget < 2) throw std::invalid_argument("limiting_variance: k_budget must be >= 2");
    const double L = p.L, tau = p.tau, beta = p.pair.beta();

    QuadratureOptions opt;
    opt.rel_tol = 1e-11;
    opt.abs_tol = 1e-16;
    auto x_fhat_sq = [&](double x) {
        const double fh = p.pair.eval_fhat(x);
        return x * fh * fh;
    };
    VarianceBreakdown out;
    out.goe_term = 4.0 * integrate(x_fhat_sq, 0.0, beta, opt).value;

    QuadratureOptions osc_opt = opt;
    osc_opt.osc_scale = 2.0 * tau * L;
    const double osc11 = 4.0 * integrate(
        [&](double x) { return x_fhat_sq(x) * std::cos(2.0 * tau * L * x); }, 0.0, beta,
        osc_opt).value;

    out.k_exact_max = exact_cutoff(L, k_budget);
    out.diag_correction = osc11 + 2.0 * pair_sum_exact(p, out.k_exact_max);
    const double offdiag = i_f(p);
    out.offdiag_term = offdiag * offdiag;
    out.tail_bound =
        2.0 * detail::i_l_pair_tail_bound(L, beta, p.pair.fhat_sup(), out.k_exact_max);
    out.total = out.goe_term + out.diag_correction + out.offdiag_term;
    return out;
}

VarianceBreakdown variance_tau0(const TestFunctionPair& pair, double L, std::int64_t k_budget) {
    if (k_budget < 2) throw std::invalid_argument("variance_tau0: k_budget must be >= 2");
    const KernelParams p(L, 0.0, pair);
    VarianceBreakdown out;
    // With the tau=0 statistic N = sum_j f(L r_j), N^osc = sum_gamma H_L and
    // the limit of Var is sum_{k1,k2} I_L(k1,k2); the off-diagonal pair term
    // cancels against the squared expectation.
    out.goe_term = i_l_pair(p, 1, 1);
    out.k_exact_max = exact_cutoff(L, k_budget);
    out.diag_correction = pair_sum_exact(p, out.k_exact_max);
    out.offdiag_term = 0.0;
    out.tail_bound = detail::i_l_pair_tail_bound(L, pair.beta(), pair.fhat_sup(), out.k_exact_max);
    out.total = out.goe_term + out.diag_correction + out.offdiag_term;
    return out;
}

DecayStudy decay_study_if(const TestFunctionPair& pair, double L, const std::vector<double>& taus) {
    DecayStudy study;
    for (double tau : taus) {
        if (tau < 1.0) throw std::invalid_argument("decay_study_if: all tau must be >= 1");
        const auto c = i_f_components(KernelParams(L, tau, pair));
        study.rows.push_back({tau, std::abs(c.total), c.k1, c.total - c.k1, c.k3plus});
    }
    if (study.rows.size() >= 2) {
        // Measurement floor: quadrature noise of the k=1 integral.
        const double noise =
            1e-13 * std::max(1.0, 4.0 / L * pair.fhat_sup() * std::exp(pair.beta() * L / 2.0));
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const auto n = static_cast<double>(study.rows.size());
        for (const auto& r : study.rows) {
            const double x = std::log(r.tau);
            const double y = std::log(std::max(std::abs(r.k1_component), noise));
            sx += x; sy += y; sxx += x * x; sxy += x * y;
        }
        study.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return study;
}

}  // namespace specstat
