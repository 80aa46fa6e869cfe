#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "specstat/cli.hpp"
#include "specstat/goe_reference.hpp"
#include "specstat/io.hpp"
#include "specstat/kernels.hpp"
#include "specstat/trace_stats.hpp"
#include "specstat/version.hpp"
#include "specstat/wp_asymptotics.hpp"

namespace py = pybind11;
using namespace specstat;

namespace {

TestFunctionPair make_pair_py(const std::string& family, double beta, double normalization) {
    return TestFunctionPair(family_from_string(family), beta, normalization);
}

LengthSpectrum spectrum_from_rows(int genus,
                                  const std::vector<std::tuple<double, std::int64_t, std::string>>& rows,
                                  bool oriented) {
    std::vector<SpectrumEntry> entries;
    for (const auto& [len, mult, cls] : rows)
        entries.push_back({len, mult, geodesic_class_from_string(cls)});
    return LengthSpectrum(genus, std::move(entries), oriented);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Smooth spectral statistics of hyperbolic surfaces: Weil-Petersson "
              "large-genus limits and the GOE reference";
    m.attr("__version__") = kToolVersion;
    m.attr("fixture_version") = kFixtureVersion;

    py::class_<TestFunctionPair>(m, "TestFunctionPair")
        .def(py::init(&make_pair_py), py::arg("family"), py::arg("beta") = 1.0,
             py::arg("normalization") = 1.0)
        .def("fhat", &TestFunctionPair::eval_fhat, py::arg("x"))
        .def("f", [](const TestFunctionPair& p, std::complex<double> y) { return p.eval_f(y); },
             py::arg("y"))
        .def("f_real", [](const TestFunctionPair& p, double y) { return p.eval_f(y); }, py::arg("y"))
        .def("scale_support", &TestFunctionPair::scale_support, py::arg("c"))
        .def_property_readonly("beta", &TestFunctionPair::beta)
        .def_property_readonly("normalization", &TestFunctionPair::normalization)
        .def_property_readonly("family",
                               [](const TestFunctionPair& p) { return to_string(p.family()); });

    py::class_<KernelParams>(m, "KernelParams")
        .def(py::init<double, double, TestFunctionPair>(), py::arg("L"), py::arg("tau"),
             py::arg("pair"))
        .def_readonly("L", &KernelParams::L)
        .def_readonly("tau", &KernelParams::tau);

    m.def("eval_F", &eval_F, py::arg("params"), py::arg("x"));
    m.def("eval_HL", &eval_HL, py::arg("params"), py::arg("x"));
    m.def("eval_GL", &eval_GL, py::arg("params"), py::arg("x"));
    m.def("sinh_ratio_bound_check", &sinh_ratio_bound_check, py::arg("k"), py::arg("y"));
    m.def("min_nonsimple_geodesic_length", &min_nonsimple_geodesic_length);

    py::class_<LengthSpectrum>(m, "LengthSpectrum")
        .def(py::init(&spectrum_from_rows), py::arg("genus"), py::arg("entries"),
             py::arg("oriented") = false)
        .def_property_readonly("genus", &LengthSpectrum::genus)
        .def_property_readonly("oriented", &LengthSpectrum::oriented)
        .def("systole", &LengthSpectrum::systole)
        .def("__len__", [](const LengthSpectrum& s) { return s.entries().size(); });

    py::class_<EigenvalueList>(m, "EigenvalueList")
        .def(py::init<int, std::vector<double>>(), py::arg("genus"), py::arg("values"))
        .def_property_readonly("genus", &EigenvalueList::genus)
        .def_property_readonly("values", &EigenvalueList::values);

    m.def("weyl_main_term", &weyl_main_term, py::arg("params"), py::arg("genus"));
    m.def("n_osc_from_spectrum", &n_osc_from_spectrum, py::arg("params"), py::arg("spectrum"));
    m.def("statistic_from_eigenvalues", &statistic_from_eigenvalues, py::arg("params"),
          py::arg("eigenvalues"));

    m.def("sinh_weight", &sinh_weight, py::arg("l"));
    m.def("i_f", &i_f, py::arg("params"));
    py::class_<IfBreakdown>(m, "IfBreakdown")
        .def_readonly("total", &IfBreakdown::total)
        .def_readonly("k1", &IfBreakdown::k1)
        .def_readonly("k2", &IfBreakdown::k2)
        .def_readonly("k3plus", &IfBreakdown::k3plus)
        .def_readonly("tail_bound", &IfBreakdown::tail_bound);
    m.def("i_f_components", &i_f_components, py::arg("params"));
    m.def("expectation_sns_finite_g", &expectation_sns_finite_g, py::arg("params"),
          py::arg("genus"), py::arg("envelope_c") = 1.0);
    m.def("i_l_pair", &i_l_pair, py::arg("params"), py::arg("k1"), py::arg("k2"));

    py::class_<VarianceBreakdown>(m, "VarianceBreakdown")
        .def_readonly("goe_term", &VarianceBreakdown::goe_term)
        .def_readonly("diag_correction", &VarianceBreakdown::diag_correction)
        .def_readonly("offdiag_term", &VarianceBreakdown::offdiag_term)
        .def_readonly("tail_bound", &VarianceBreakdown::tail_bound)
        .def_readonly("total", &VarianceBreakdown::total)
        .def_readonly("k_exact_max", &VarianceBreakdown::k_exact_max);
    m.def("limiting_variance", &limiting_variance, py::arg("params"), py::arg("k_budget") = 400);
    m.def("variance_tau0", &variance_tau0, py::arg("pair"), py::arg("L"), py::arg("k_budget") = 400);

    py::class_<DecayRow>(m, "DecayRow")
        .def_readonly("tau", &DecayRow::tau)
        .def_readonly("abs_if", &DecayRow::abs_if)
        .def_readonly("k1_component", &DecayRow::k1_component)
        .def_readonly("floor_k2plus", &DecayRow::floor_k2plus)
        .def_readonly("floor_k3plus", &DecayRow::floor_k3plus);
    py::class_<DecayStudy>(m, "DecayStudy")
        .def_readonly("rows", &DecayStudy::rows)
        .def_property_readonly("slope", [](const DecayStudy& s) -> py::object {
            return s.slope ? py::cast(*s.slope) : py::none();
        });
    m.def("decay_study_if", &decay_study_if, py::arg("pair"), py::arg("L"), py::arg("taus"));

    m.def("sigma2_goe_closed_form", &sigma2_goe_closed_form, py::arg("pair"));
    py::class_<GOEMCResult>(m, "GOEMCResult")
        .def_readonly("estimate", &GOEMCResult::estimate)
        .def_readonly("std_error", &GOEMCResult::std_error)
        .def_readonly("samples_used", &GOEMCResult::samples_used)
        .def_readonly("closed_form", &GOEMCResult::closed_form);
    m.def("unfolded_spectrum", &unfolded_spectrum, py::arg("dim"), py::arg("seed"));
    m.def("sample_goe_variance",
          [](int dim, int samples, std::uint64_t seed, double bulk_fraction,
             const TestFunctionPair& pair) {
              return sample_goe_variance(GOEMCConfig{dim, samples, seed, bulk_fraction, pair});
          },
          py::arg("dim"), py::arg("samples"), py::arg("seed"), py::arg("bulk_fraction") = 0.5,
          py::arg("pair") = make_pair_py("fejer", 1.0, 1.0));

    m.def("read_length_spectrum", &read_length_spectrum, py::arg("path"));
    m.def("write_length_spectrum",
          [](const std::string& path, const LengthSpectrum& s) { write_length_spectrum(path, s); },
          py::arg("path"), py::arg("spectrum"));
    m.def("read_eigenvalue_list", &read_eigenvalue_list, py::arg("path"));

    m.def("cli_main", [](const std::vector<std::string>& args) {
        try {
            return run(parse_args(args));
        } catch (const UsageError&) {
            return 2;
        }
    }, py::arg("args"), "Run a CLI command in-process; returns the exit code.");
}
