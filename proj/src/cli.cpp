#include "specstat/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "specstat/goe_reference.hpp"
#include "specstat/io.hpp"
#include "specstat/version.hpp"
#include "specstat/wp_asymptotics.hpp"

namespace specstat {

namespace {

std::string positive_check(const std::string& name, double v) {
    return v > 0.0 ? std::string{} : name + " must be positive";
}

void add_pair_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--family", cfg.family, "test-function family (fejer|cinf_bump|hann)")
        ->check(CLI::IsMember({"fejer", "cinf_bump", "bump", "hann"}));
    cmd->add_option("--beta", cfg.beta, "half-width of supp fhat")
        ->check([&](const std::string& s) { return positive_check("beta", std::stod(s)); });
    cmd->add_option("--normalization", cfg.normalization, "scale applied to fhat")
        ->check(CLI::NonNegativeNumber);
}

void add_window_options(CLI::App* cmd, RunConfig& cfg, bool with_tau = true) {
    cmd->add_option("--L", cfg.L, "window inverse-width L")
        ->check([&](const std::string& s) { return positive_check("L", std::stod(s)); });
    if (with_tau)
        cmd->add_option("--tau", cfg.tau, "spectral center tau")->check(CLI::NonNegativeNumber);
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--output,-o", cfg.output_path, "output file (default: stdout)");
    cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
}

TestFunctionPair make_pair(const RunConfig& cfg) {
    return TestFunctionPair(family_from_string(cfg.family), cfg.beta, cfg.normalization);
}

std::string timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

OutputTable new_table(const RunConfig& cfg, const std::string& command) {
    OutputTable t;
    t.meta.emplace_back("tool", std::string("specstat ") + kToolVersion);
    t.meta.emplace_back("fixtures", kFixtureVersion);
    t.meta.emplace_back("command", command);
    t.meta.emplace_back("family", cfg.family);
    t.meta.emplace_back("beta", format_double(cfg.beta));
    t.meta.emplace_back("normalization", format_double(cfg.normalization));
    t.meta.emplace_back("timestamp", timestamp_now());
    return t;
}

void emit(const RunConfig& cfg, const OutputTable& t) {
    std::string path = cfg.output_path;
    if (!path.empty() && path.front() != '/') {
        if (const char* dir = std::getenv("SPECSTAT_OUTPUT_DIR"); dir && *dir)
            path = std::string(dir) + "/" + path;
    }
    if (path.empty()) {
        if (cfg.format == "json") write_json(std::cout, t);
        else write_csv(std::cout, t);
        return;
    }
    std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    if (cfg.format == "json") write_json(out, t);
    else write_csv(out, t);
}

void append_breakdown_row(OutputTable& t, double L, double tau, std::int64_t k_budget,
                          const VarianceBreakdown& b) {
    t.rows.push_back({L, tau, static_cast<double>(k_budget), b.goe_term, b.diag_correction,
                      b.offdiag_term, b.tail_bound, b.total, static_cast<double>(b.k_exact_max)});
}

const std::vector<std::string> kBreakdownCols = {
    "L", "tau", "k_budget", "goe_term", "diag_correction",
    "offdiag_term", "tail_bound", "total", "k_exact_max"};

int run_goe_closed(const RunConfig& cfg) {
    auto t = new_table(cfg, "goe-closed");
    t.columns = {"beta", "normalization", "sigma2_goe"};
    t.rows.push_back({cfg.beta, cfg.normalization, sigma2_goe_closed_form(make_pair(cfg))});
    emit(cfg, t);
    return 0;
}

int run_goe_mc(const RunConfig& cfg) {
    GOEMCConfig mc{cfg.dim, cfg.samples, cfg.seed, cfg.bulk_fraction, make_pair(cfg)};
    const auto r = sample_goe_variance(mc);
    auto t = new_table(cfg, "goe-mc");
    t.meta.emplace_back("seed", std::to_string(cfg.seed));
    t.columns = {"dim", "samples", "bulk_fraction", "estimate", "std_error", "closed_form",
                 "abs_dev"};
    t.rows.push_back({static_cast<double>(cfg.dim), static_cast<double>(r.samples_used),
                      cfg.bulk_fraction, r.estimate, r.std_error, r.closed_form,
                      std::abs(r.estimate - r.closed_form)});
    emit(cfg, t);
    return 0;
}

int run_expectation(const RunConfig& cfg) {
    const KernelParams p(cfg.L, cfg.tau, make_pair(cfg));
    const auto c = i_f_components(p);
    auto t = new_table(cfg, "expectation");
    t.columns = {"L", "tau", "i_f", "k1_term", "k2_term", "k3plus_term", "tail_bound",
                 "genus", "band_half_width"};
    double half = 0.0;
    if (cfg.genus > 0) half = expectation_sns_finite_g(p, cfg.genus, cfg.envelope_c).second;
    t.rows.push_back({cfg.L, cfg.tau, c.total, c.k1, c.k2, c.k3plus, c.tail_bound,
                      static_cast<double>(cfg.genus), half});
    emit(cfg, t);
    return 0;
}

int run_variance(const RunConfig& cfg) {
    const auto pair = make_pair(cfg);
    const auto b = cfg.tau == 0.0 ? variance_tau0(pair, cfg.L, cfg.k_budget)
                                  : limiting_variance(KernelParams(cfg.L, cfg.tau, pair), cfg.k_budget);
    auto t = new_table(cfg, "variance");
    t.meta.emplace_back("pipeline", cfg.tau == 0.0 ? "tau0" : "tau");
    t.columns = kBreakdownCols;
    append_breakdown_row(t, cfg.L, cfg.tau, cfg.k_budget, b);
    emit(cfg, t);
    return 0;
}

int run_decay_study(const RunConfig& cfg) {
    const auto study = decay_study_if(make_pair(cfg), cfg.L, cfg.taus);
    auto t = new_table(cfg, "decay-study");
    if (study.slope) t.meta.emplace_back("fitted_slope", format_double(*study.slope));
    t.columns = {"tau", "abs_i_f", "k1_component", "floor_k2plus", "floor_k3plus"};
    for (const auto& r : study.rows)
        t.rows.push_back({r.tau, r.abs_if, r.k1_component, r.floor_k2plus, r.floor_k3plus});
    emit(cfg, t);
    return 0;
}

int run_convergence_study(const RunConfig& cfg) {
    const auto pair = make_pair(cfg);
    const double sigma2 = sigma2_goe_closed_form(pair);
    auto t = new_table(cfg, "convergence-study");
    t.columns = {"L", "total", "sigma2_goe", "abs_dev", "log_L_over_L2", "tail_bound"};
    for (double L : cfg.Ls) {
        const auto b = variance_tau0(pair, L, cfg.k_budget);
        t.rows.push_back({L, b.total, sigma2, std::abs(b.total - sigma2), std::log(L) / (L * L),
                          b.tail_bound});
    }
    emit(cfg, t);
    return 0;
}

int run_trace_eval(const RunConfig& cfg) {
    const auto spec = read_length_spectrum(cfg.spectrum_path);
    const auto pair = make_pair(cfg);
    const KernelParams p(cfg.L, cfg.tau, pair);
    // At tau = 0 the statistic is N = sum f(L r_j), which halves the Weyl term,
    // the geodesic sum, and the eigenvalue statistic alike.
    const double conv = cfg.tau == 0.0 ? 0.5 : 1.0;

    auto t = new_table(cfg, "trace-eval");
    t.columns = {"genus", "L", "tau", "n_bar", "n_osc", "n_osc_sns", "n_osc_ssep",
                 "n_osc_nonsimple", "n_osc_unknown", "n_total"};
    const double nbar = conv * weyl_main_term(p, spec.genus());
    const double nosc = conv * n_osc_from_spectrum(p, spec);
    std::vector<double> row{static_cast<double>(spec.genus()), cfg.L, cfg.tau, nbar, nosc};
    for (auto c : {GeodesicClass::sns, GeodesicClass::ssep, GeodesicClass::nonsimple,
                   GeodesicClass::unknown})
        row.push_back(conv * n_osc_from_spectrum(p, spec.filtered(c)));
    row.push_back(nbar + nosc);
    if (!cfg.eigenvalues_path.empty()) {
        const auto ev = read_eigenvalue_list(cfg.eigenvalues_path);
        t.columns.push_back("n_from_eigenvalues");
        row.push_back(conv * statistic_from_eigenvalues(p, ev));
    }
    t.rows.push_back(std::move(row));
    emit(cfg, t);
    return 0;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"spectral statistics of hyperbolic surfaces: Weil-Petersson limits and the GOE reference"};
    app.require_subcommand(1);

    auto* goe_closed = app.add_subcommand("goe-closed", "Dyson-Mehta closed-form variance");
    add_pair_options(goe_closed, cfg);
    add_output_options(goe_closed, cfg);

    auto* goe_mc = app.add_subcommand("goe-mc", "GOE Monte Carlo variance estimate");
    add_pair_options(goe_mc, cfg);
    goe_mc->add_option("--dim", cfg.dim, "matrix dimension")->check(CLI::Range(64, 1 << 20));
    goe_mc->add_option("--samples", cfg.samples, "Monte Carlo samples")->check(CLI::Range(16, 1 << 24));
    goe_mc->add_option("--seed", cfg.seed, "RNG seed");
    goe_mc->add_option("--bulk-fraction", cfg.bulk_fraction, "central fraction for window centers")
        ->check(CLI::Range(1e-6, 0.999999));
    add_output_options(goe_mc, cfg);

    auto* expectation = app.add_subcommand("expectation", "large-genus expectation I_f(L,tau)");
    add_pair_options(expectation, cfg);
    add_window_options(expectation, cfg);
    expectation->add_option("--genus", cfg.genus, "finite genus for the error band (> 2; 0 = limit)");
    expectation->add_option("--envelope-c", cfg.envelope_c, "envelope constant for the band")
        ->check(CLI::NonNegativeNumber);
    add_output_options(expectation, cfg);

    auto* variance = app.add_subcommand("variance", "limiting variance breakdown");
    add_pair_options(variance, cfg);
    add_window_options(variance, cfg);
    variance->add_option("--k-budget", cfg.k_budget, "exact pair-sum budget")
        ->check(CLI::Range(static_cast<std::int64_t>(2), static_cast<std::int64_t>(1) << 24));
    add_output_options(variance, cfg);

    auto* decay = app.add_subcommand("decay-study", "decay of I_f in tau");
    add_pair_options(decay, cfg);
    add_window_options(decay, cfg, false);
    decay->add_option("--taus", cfg.taus, "tau values (all >= 1)")->required()->delimiter(',');
    add_output_options(decay, cfg);

    auto* conv = app.add_subcommand("convergence-study", "variance_tau0 vs Sigma^2_GOE over L");
    add_pair_options(conv, cfg);
    conv->add_option("--Ls", cfg.Ls, "L values")->required()->delimiter(',');
    conv->add_option("--k-budget", cfg.k_budget, "exact pair-sum budget")
        ->check(CLI::Range(static_cast<std::int64_t>(2), static_cast<std::int64_t>(1) << 24));
    add_output_options(conv, cfg);

    auto* trace = app.add_subcommand("trace-eval", "evaluate the trace-formula decomposition");
    add_pair_options(trace, cfg);
    add_window_options(trace, cfg);
    trace->add_option("--spectrum", cfg.spectrum_path, "length-spectrum file")->required();
    trace->add_option("--eigenvalues", cfg.eigenvalues_path, "eigenvalue-list file");
    add_output_options(trace, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (goe_closed->parsed()) cfg.command = RunConfig::Command::goe_closed;
    else if (goe_mc->parsed()) cfg.command = RunConfig::Command::goe_mc;
    else if (expectation->parsed()) cfg.command = RunConfig::Command::expectation;
    else if (variance->parsed()) cfg.command = RunConfig::Command::variance;
    else if (decay->parsed()) cfg.command = RunConfig::Command::decay_study;
    else if (conv->parsed()) cfg.command = RunConfig::Command::convergence_study;
    else if (trace->parsed()) cfg.command = RunConfig::Command::trace_eval;

    if (cfg.genus != 0 && cfg.genus <= 2)
        throw UsageError("--genus must be 0 (limit) or greater than 2");
    for (double t : cfg.taus)
        if (t < 1.0) throw UsageError("--taus entries must be >= 1");
    for (double L : cfg.Ls)
        if (!(L > 0.0)) throw UsageError("--Ls entries must be positive");
    return cfg;
}

int run(const RunConfig& cfg) {
    switch (cfg.command) {
        case RunConfig::Command::goe_closed: return run_goe_closed(cfg);
        case RunConfig::Command::goe_mc: return run_goe_mc(cfg);
        case RunConfig::Command::expectation: return run_expectation(cfg);
        case RunConfig::Command::variance: return run_variance(cfg);
        case RunConfig::Command::decay_study: return run_decay_study(cfg);
        case RunConfig::Command::convergence_study: return run_convergence_study(cfg);
        case RunConfig::Command::trace_eval: return run_trace_eval(cfg);
    }
    return 1;
}

}  // namespace specstat
