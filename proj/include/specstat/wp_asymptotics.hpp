#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "specstat/kernels.hpp"

namespace specstat {

/// R(l) = (sinh(l/2)/(l/2))^2, the large-genus volume-ratio weight; R(0) = 1.
double sinh_weight(double l);

/// I_f(L, tau) = (4/L) int_0^inf sum_k fhat(kx/L) sinh^2(x/2)/sinh(kx/2) cos(k tau x) dx,
/// equivalently int_0^inf H_L(x) R(x) x dx, split by k.
struct IfBreakdown {
    double total = 0.0;
    double k1 = 0.0;        // k = 1 term
    double k2 = 0.0;        // k = 2 term
    double k3plus = 0.0;    // k >= 3 terms (the tau-uniform 1/L floor)
    double tail_bound = 0.0;  // certified remainder of the k-summation
};

IfBreakdown i_f_components(const KernelParams& p);
double i_f(const KernelParams& p);

/// Finite-genus sinh-weighted expectation band for the sns sum:
/// (central, half_width) with central = I_f and
/// half_width = envelope_c * int |H_L(l)| R(l) l^4 / g dl.
std::pair<double, double> expectation_sns_finite_g(const KernelParams& p, std::int64_t genus,
                                                   double envelope_c);

/// I_L(k1,k2) = (1/L^2) int_0^inf l^2 F(k1 l) F(k2 l) R(l) l dl (symmetric).
double i_l_pair(const KernelParams& p, std::int64_t k1, std::int64_t k2);

struct VarianceBreakdown {
    double goe_term = 0.0;         // tau-independent part of the (1,1) diagonal
    double diag_correction = 0.0;  // (1,1) oscillatory remainder + k1+k2 >= 3 sum
    double offdiag_term = 0.0;     // I_f^2 (zero in the tau=0 pipeline)
    double tail_bound = 0.0;       // certified bound on the truncated pair sum
    double total = 0.0;            // goe_term + diag_correction + offdiag_term
    std::int64_t k_exact_max = 0;  // pairs k1+k2 <= this were summed exactly
};

/// Large-genus limit of E((N^osc)^2) for tau >= 1 conventions:
///   2 sum_{k1,k2} I_L(k1,k2) + I_f^2.
/// Pairs with k1+k2 <= min(k_budget, ceil(L^2)) are summed exactly; the rest
/// is covered by tail_bound (from the explicit small-k/large-k majorants).
VarianceBreakdown limiting_variance(const KernelParams& p, std::int64_t k_budget);

/// tau = 0 pipeline with the halved statistic N = sum f(L r_j):
/// total = sum_{k1,k2} I_L(k1,k2) -> Sigma^2_GOE(f) + O(log L / L^2);
/// the off-diagonal term cancels against the squared expectation and is
/// reported as 0.
VarianceBreakdown variance_tau0(const TestFunctionPair& pair, double L, std::int64_t k_budget);

struct DecayRow {
    double tau;
    double abs_if;        // |I_f(L, tau)|
    double k1_component;  // k = 1 term (the e^{L/2}/tau^A part)
    double floor_k2plus;  // k >= 2 remainder
    double floor_k3plus;  // k >= 3 remainder (the 1/L floor)
};

struct DecayStudy {
    std::vector<DecayRow> rows;
    // Least-squares slope of log|k1_component| vs log tau; absent for < 2 rows.
    std::optional<double> slope;
};

/// Tabulates |I_f| against tau >= 1 and fits the decay rate of the k = 1
/// component after subtracting the k >= 2 floor.
DecayStudy decay_study_if(const TestFunctionPair& pair, double L, const std::vector<double>& taus);

namespace detail {
/// Certified upper bound on sum over ordered pairs (k1,k2), k1+k2 > m_from, of
/// |I_L(k1,k2)|, from the explicit small-k majorant 64 M^2/((m-2)^2 L^2)
/// and large-k majorant 2 M^2 beta^2 / (k1 k2^3).
double i_l_pair_tail_bound(double L, double beta, double fhat_sup, std::int64_t m_from);
/// sum_{k > k_from} k^-p via direct summation plus Euler-Maclaurin closure.
double zeta_tail(int p, std::int64_t k_from);
}  // namespace detail

}  // namespace specstat
