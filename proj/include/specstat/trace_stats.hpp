#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specstat/kernels.hpp"

namespace specstat {

enum class GeodesicClass { sns, ssep, nonsimple, unknown };

GeodesicClass geodesic_class_from_string(const std::string& s);
std::string to_string(GeodesicClass c);

struct SpectrumEntry {
    double length;
    std::int64_t multiplicity;
    GeodesicClass cls;
};

/// Primitive closed geodesics of a surface: strictly increasing lengths with
/// multiplicities and topological class labels.  Multiplicities count
/// non-oriented classes unless oriented is set.
class LengthSpectrum {
  public:
    LengthSpectrum(int genus, std::vector<SpectrumEntry> entries, bool oriented = false);

    int genus() const { return genus_; }
    bool oriented() const { return oriented_; }
    const std::vector<SpectrumEntry>& entries() const { return entries_; }
    double systole() const;  // first length; 0 for an empty spectrum
    LengthSpectrum filtered(GeodesicClass c) const;

  private:
    int genus_;
    bool oriented_;
    std::vector<SpectrumEntry> entries_;
};

/// Laplace eigenvalues 0 = lambda_0 <= lambda_1 <= ...
class EigenvalueList {
  public:
    EigenvalueList(int genus, std::vector<double> values);

    int genus() const { return genus_; }
    const std::vector<double>& values() const { return values_; }

  private:
    int genus_;
    std::vector<double> values_;
};

/// Weyl main term
///   Nbar = 2 (g-1) \int f(L(r - tau)) r tanh(pi r) dr.
///
/// For the fejer family (f ~ 1/y^2) the integral converges only as a
/// symmetric principal value; the implementation evaluates it over the
/// documented window |L(r - tau)| <= max(4000, 4 L tau), which keeps the
/// truncation error below ~1e-4 relative for tau up to ~1e3.
double weyl_main_term(const KernelParams& p, int genus);

/// N^osc = 2 sum_gamma m_gamma H_L(l_gamma) over non-oriented spectra
/// (factor 1 when multiplicities already count orientations).
double n_osc_from_spectrum(const KernelParams& p, const LengthSpectrum& spec);

/// N_{f,L,tau} = sum_j f(L(r_j - tau)) + f(L(r_j + tau)) with
/// r_j = sqrt(lambda_j - 1/4), continued to imaginary r for lambda < 1/4.
double statistic_from_eigenvalues(const KernelParams& p, const EigenvalueList& ev);

}  // namespace specstat
