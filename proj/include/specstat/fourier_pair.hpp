#pragma once

#include <complex>
#include <string>

namespace specstat {

enum class Family { fejer, cinf_bump, hann };

Family family_from_string(const std::string& name);
std::string to_string(Family f);

/// A band-limited test-function pair (f, fhat).
///
/// fhat is even, real, supported on [-beta, beta]; f is its inverse Fourier
/// transform f(y) = \int fhat(x) e^{ixy} dx, real on the real line and entire
/// (so it can be evaluated at complex arguments; see eval_f).
///
/// Families:
///   fejer     fhat(x) = (1 - |x|)_+              f(y) = (sin(y/2)/(y/2))^2
///   cinf_bump fhat(x) = exp(-1/(1-x^2)) 1_{|x|<1}  f by quadrature
///   hann      fhat(x) = cos^2(pi x/2) 1_{|x|<=1}   f(y) = pi^2 sin y / (y(pi^2-y^2))
///
/// fejer is C^0 only (rate constants in smoothness-sensitive bounds differ);
/// cinf_bump is the C_c^infty reference; hann (C^1, closed form) sits between.
class TestFunctionPair {
  public:
    explicit TestFunctionPair(Family family, double beta = 1.0, double normalization = 1.0);

    /// fhat(x); exactly zero for |x| >= beta (all families vanish at the endpoint).
    double eval_fhat(double x) const;

    /// d/dx fhat(x), defined a.e. (one-sided at the fejer kinks).
    double eval_fhat_deriv(double x) const;

    /// f(y) for complex y.  Validated strip: |Im y| * beta <= kImagStripHalfWidth
    /// (throws std::domain_error beyond it).  For real y the result is real.
    std::complex<double> eval_f(std::complex<double> y) const;

    /// f(y) for real y; the (rounding-level) imaginary part is discarded here.
    double eval_f(double y) const;

    /// The pair with fhat_c(x) = fhat(x/c)/c, f_c(y) = f(c y); beta becomes c*beta.
    TestFunctionPair scale_support(double c) const;

    Family family() const { return family_; }
    double beta() const { return beta_; }
    double normalization() const { return normalization_; }

    /// sup |fhat| over the support (used by certified tail bounds).
    double fhat_sup() const;
    /// sup |fhat'| over the support, a.e.
    double fhat_deriv_sup() const;

    /// Half-width of the validated strip for eval_f, in units of beta*|Im y|.
    static constexpr double kImagStripHalfWidth = 50.0;

  private:
    Family family_;
    double beta_;
    double normalization_;
};

}  // namespace specstat
