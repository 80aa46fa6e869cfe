#include "specstat/trace_stats.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "specstat/quadrature.hpp"

namespace specstat {

GeodesicClass geodesic_class_from_string(const std::string& s) {
    if (s == "sns") return GeodesicClass::sns;
    if (s == "ssep") return GeodesicClass::ssep;
    if (s == "nonsimple") return GeodesicClass::nonsimple;
    if (s == "unknown") return GeodesicClass::unknown;
    throw std::invalid_argument("unknown geodesic class: " + s);
}

std::string to_string(GeodesicClass c) {
    switch (c) {
        case GeodesicClass::sns: return "sns";
        case GeodesicClass::ssep: return "ssep";
        case GeodesicClass::nonsimple: return "nonsimple";
        case GeodesicClass::unknown: return "unknown";
    }
    return "?";
}

LengthSpectrum::LengthSpectrum(int genus, std::vector<SpectrumEntry> entries, bool oriented)
    : genus_(genus), oriented_(oriented), entries_(std::move(entries)) {
    if (genus_ < 2) throw std::invalid_argument("LengthSpectrum: genus must be >= 2");
    double prev = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        if (!(e.length > 0.0))
            throw std::invalid_argument("LengthSpectrum: entry " + std::to_string(i) +
                                        " has non-positive length");
        if (e.length <= prev)
            throw std::invalid_argument("LengthSpectrum: lengths not strictly increasing at entry " +
                                        std::to_string(i));
        if (e.multiplicity < 1)
            throw std::invalid_argument("LengthSpectrum: entry " + std::to_string(i) +
                                        " has multiplicity < 1");
        prev = e.length;
    }
}

double LengthSpectrum::systole() const { return entries_.empty() ? 0.0 : entries_.front().length; }

LengthSpectrum LengthSpectrum::filtered(GeodesicClass c) const {
    std::vector<SpectrumEntry> out;
    std::copy_if(entries_.begin(), entries_.end(), std::back_inserter(out),
                 [&](const SpectrumEntry& e) { return e.cls == c; });
    return LengthSpectrum(genus_, std::move(out), oriented_);
}

EigenvalueList::EigenvalueList(int genus, std::vector<double> values)
    : genus_(genus), values_(std::move(values)) {
    if (genus_ < 2) throw std::invalid_argument("EigenvalueList: genus must be >= 2");
    if (values_.empty() || values_.front() != 0.0)
        throw std::invalid_argument("EigenvalueList: first eigenvalue must be exactly 0");
    double prev = -1.0;
    for (double v : values_) {
        if (v < 0.0) throw std::invalid_argument("EigenvalueList: negative eigenvalue");
        if (v < prev) throw std::invalid_argument("EigenvalueList: values must be nondecreasing");
        prev = v;
    }
}

double weyl_main_term(const KernelParams& p, int genus) {
    if (genus < 2) throw std::invalid_argument("weyl_main_term: genus must be >= 2");
    const double L = p.L, tau = p.tau;
    const double U = std::max(4000.0, 4.0 * L * tau);  // window in u = L(r - tau)

    auto integrand = [&](double u) {
        const double r = tau + u / L;
        return p.pair.eval_f(u) * r * std::tanh(M_PI * r);
    };

    // Split at r = 0 (tanh sign change) when it falls inside the window.
    std::vector<double> pts{-U};
    const double u_r0 = -L * tau;
    if (u_r0 > -U && u_r0 < U) pts.push_back(u_r0);
    if (0.0 > pts.back() && 0.0 < U) pts.push_back(0.0);
    pts.push_back(U);

    QuadratureOptions opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-12;
    opt.osc_scale = 1.0;  // f oscillates on scale ~1 in u for all families
    opt.max_panels = 4'000'000;
    const double integral = integrate_segments(integrand, pts, opt).value;
    return 2.0 * (genus - 1) / L * integral;
}

double n_osc_from_spectrum(const KernelParams& p, const LengthSpectrum& spec) {
    const double factor = spec.oriented() ? 1.0 : 2.0;
    // Per-class accumulation with a fixed reduction order, so that the total
    // over a spectrum equals the sum of the class-filtered totals exactly
    // (the orientation factor is a power of two and also exact).
    double bucket[4] = {0.0, 0.0, 0.0, 0.0};
    for (const auto& e : spec.entries())
        bucket[static_cast<int>(e.cls)] +=
            static_cast<double>(e.multiplicity) * eval_HL(p, e.length);
    return factor * (((bucket[0] + bucket[1]) + bucket[2]) + bucket[3]);
}

double statistic_from_eigenvalues(const KernelParams& p, const EigenvalueList& ev) {
    std::complex<double> total = 0.0;
    for (double lambda : ev.values()) {
        std::complex<double> r;
        if (lambda >= 0.25)
            r = std::sqrt(lambda - 0.25);
        else
            r = std::complex<double>(0.0, std::sqrt(0.25 - lambda));
        total += p.pair.eval_f(p.L * (r - p.tau));
        total += p.pair.eval_f(p.L * (r + p.tau));
    }
    if (std::abs(total.imag()) > 1e-10 * std::max(1.0, std::abs(total.real())))
        throw std::runtime_error("statistic_from_eigenvalues: imaginary residue above 1e-10");
    return total.real();
}

}  // namespace specstat
