#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frozen_fixtures.hpp"
#include "specstat/cli.hpp"
#include "specstat/io.hpp"

using namespace specstat;

namespace {

std::string tmp_path(const std::string& name) {
    return std::string("/tmp/specstat_test_") + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Drops the timestamp metadata line for byte comparisons.
std::string strip_timestamp(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
        if (line.rfind("# timestamp:", 0) != 0 && line.find("\"timestamp\"") == std::string::npos)
            out += line + "\n";
    return out;
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<double>> rows;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) { header_seen = true; continue; }
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

TEST_CASE("parse_args accepts the documented command lines") {
    const auto v = parse_args({"variance", "--family", "fejer", "--L", "10", "--tau", "0",
                               "--k-budget", "400"});
    CHECK(v.command == RunConfig::Command::variance);
    CHECK(v.L == 10.0);
    CHECK(v.tau == 0.0);
    CHECK(v.k_budget == 400);

    const auto m = parse_args({"goe-mc", "--dim", "1000", "--samples", "400", "--seed", "42"});
    CHECK(m.command == RunConfig::Command::goe_mc);
    CHECK(m.dim == 1000);
    CHECK(m.samples == 400);
    CHECK(m.seed == 42);
}

TEST_CASE("parse_args rejects bad input with a usage diagnostic") {
    CHECK_THROWS_WITH_AS(parse_args({"variance", "--L", "-3"}),
                         doctest::Contains("L must be positive"), UsageError);
    CHECK_THROWS_AS(parse_args({"variance", "--no-such-flag", "1"}), UsageError);
    CHECK_THROWS_AS(parse_args({}), UsageError);                       // subcommand required
    CHECK_THROWS_AS(parse_args({"decay-study", "--L", "6"}), UsageError);  // taus required
    CHECK_THROWS_AS(parse_args({"expectation", "--genus", "2"}), UsageError);
    CHECK_THROWS_AS(parse_args({"goe-mc", "--dim", "10"}), UsageError);
    CHECK_THROWS_WITH_AS(parse_args({"decay-study", "--taus", "0.5,16"}),
                         doctest::Contains("must be >= 1"), UsageError);
    CHECK_THROWS_WITH_AS(parse_args({"convergence-study", "--Ls", "10,-5"}),
                         doctest::Contains("must be positive"), UsageError);
}

TEST_CASE("length spectrum parsing") {
    SUBCASE("single entry with comments") {
        std::istringstream in("# comment line\ngenus 2\n3.057 24 unknown  # trailing comment\n");
        const auto s = parse_length_spectrum(in, "test");
        CHECK(s.genus() == 2);
        REQUIRE(s.entries().size() == 1);
        CHECK(s.entries()[0].length == 3.057);
        CHECK(s.entries()[0].multiplicity == 24);
        CHECK(s.entries()[0].cls == GeodesicClass::unknown);
        CHECK_FALSE(s.oriented());
    }
    SUBCASE("unsorted lengths name the offending line") {
        std::istringstream in("genus 2\n2.0 1 sns\n1.5 1 sns\n");
        CHECK_THROWS_WITH_AS(parse_length_spectrum(in, "test"),
                             doctest::Contains("test:3"), ParseError);
    }
    SUBCASE("zero multiplicity is rejected") {
        std::istringstream in("genus 2\n2.0 0 sns\n");
        CHECK_THROWS_WITH_AS(parse_length_spectrum(in, "test"),
                             doctest::Contains("multiplicity"), ParseError);
    }
    SUBCASE("unknown class is rejected") {
        std::istringstream in("genus 2\n2.0 1 twisted\n");
        CHECK_THROWS_AS(parse_length_spectrum(in, "test"), ParseError);
    }
    SUBCASE("missing header is rejected") {
        std::istringstream in("2.0 1 sns\n");
        CHECK_THROWS_AS(parse_length_spectrum(in, "test"), ParseError);
    }
    SUBCASE("empty file is rejected") {
        std::istringstream in("# nothing\n");
        CHECK_THROWS_AS(parse_length_spectrum(in, "test"), ParseError);
    }
}

TEST_CASE("length spectrum round-trips exactly") {
    const LengthSpectrum s(3, {{0.7215415032741, 2, GeodesicClass::sns},
                               {3.0570001, 24, GeodesicClass::ssep},
                               {3.5254943480781721, 1, GeodesicClass::nonsimple},
                               {11.25, 7, GeodesicClass::unknown}});
    std::stringstream buf;
    write_length_spectrum(buf, s);
    const auto back = parse_length_spectrum(buf, "roundtrip");
    CHECK(back.genus() == s.genus());
    REQUIRE(back.entries().size() == s.entries().size());
    for (std::size_t i = 0; i < s.entries().size(); ++i) {
        CHECK(back.entries()[i].length == s.entries()[i].length);  // exact doubles
        CHECK(back.entries()[i].multiplicity == s.entries()[i].multiplicity);
        CHECK(back.entries()[i].cls == s.entries()[i].cls);
    }
}

TEST_CASE("eigenvalue list parsing") {
    std::istringstream ok("genus 2\n0\n0.121\n0.25\n1.75\n");
    const auto ev = parse_eigenvalue_list(ok, "test");
    CHECK(ev.values().size() == 4);
    std::istringstream bad_first("genus 2\n0.1\n");
    CHECK_THROWS_WITH_AS(parse_eigenvalue_list(bad_first, "test"),
                         doctest::Contains("first eigenvalue"), ParseError);
    std::istringstream decreasing("genus 2\n0\n0.5\n0.4\n");
    CHECK_THROWS_AS(parse_eigenvalue_list(decreasing, "test"), ParseError);
}

TEST_CASE("format_double round-trips") {
    for (double v : {1.0 / 3.0, 3.0570001, 1e-300, 0.0, 125.66370614359172, -2.5}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("convergence-study emits the documented columns") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::convergence_study;
    cfg.Ls = {10.0, 20.0};
    cfg.k_budget = 100;
    cfg.output_path = tmp_path("conv.csv");
    CHECK(run(cfg) == 0);
    const auto text = slurp(cfg.output_path);
    CHECK(text.find("L,total,sigma2_goe,abs_dev,log_L_over_L2,tail_bound") != std::string::npos);
    const auto rows = csv_rows(text);
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) {
        const double L = row[0], abs_dev = row[3];
        CHECK(abs_dev <= fixtures::kConvergenceC * std::log(L) / (L * L));
    }
    CHECK(rows[0][3] > rows[1][3]);  // deviation shrinks from L=10 to L=20
}

TEST_CASE("trace-eval reports zero N^osc below the systole") {
    const auto spath = tmp_path("spec.txt");
    {
        std::ofstream out(spath);
        out << "genus 2\n3.0 5 sns\n4.5 2 unknown\n";
    }
    RunConfig cfg;
    cfg.command = RunConfig::Command::trace_eval;
    cfg.spectrum_path = spath;
    cfg.L = 2.0;  // beta L = 2 < systole 3
    cfg.tau = 1.0;
    cfg.output_path = tmp_path("trace.csv");
    CHECK(run(cfg) == 0);
    const auto rows = csv_rows(slurp(cfg.output_path));
    REQUIRE(rows.size() == 1);
    // columns: genus,L,tau,n_bar,n_osc,n_osc_sns,n_osc_ssep,n_osc_nonsimple,n_osc_unknown,n_total
    for (int c : {4, 5, 6, 7, 8}) CHECK(rows[0][c] == 0.0);
    CHECK(rows[0][9] == rows[0][3]);  // n_total = n_bar
}

TEST_CASE("expectation emits the finite-genus band when asked") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::expectation;
    cfg.L = 10.0;
    cfg.tau = 0.0;
    cfg.genus = 100;
    cfg.output_path = tmp_path("exp.csv");
    CHECK(run(cfg) == 0);
    const auto text = slurp(cfg.output_path);
    CHECK(text.find("i_f,k1_term") != std::string::npos);
    const auto rows = csv_rows(text);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0][2] == doctest::Approx(11.4927398689).epsilon(1e-8));  // i_f column
    CHECK(rows[0][8] > 0.0);  // band_half_width
}

TEST_CASE("decay-study meta carries the fitted slope") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::decay_study;
    cfg.family = "cinf_bump";
    cfg.L = 6.0;
    cfg.taus = {16.0, 32.0, 64.0};
    cfg.output_path = tmp_path("decay.csv");
    CHECK(run(cfg) == 0);
    const auto text = slurp(cfg.output_path);
    const auto pos = text.find("# fitted_slope: ");
    REQUIRE(pos != std::string::npos);
    const double slope = std::stod(text.substr(pos + 16));
    CHECK(slope <= -1.0);
    CHECK(csv_rows(text).size() == 3);
}

TEST_CASE("identical configs give identical bytes apart from the timestamp") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::variance;
    cfg.L = 10.0;
    cfg.tau = 1.0;
    cfg.k_budget = 20;
    cfg.output_path = tmp_path("var_a.csv");
    CHECK(run(cfg) == 0);
    cfg.output_path = tmp_path("var_b.csv");
    CHECK(run(cfg) == 0);
    CHECK(strip_timestamp(slurp(tmp_path("var_a.csv"))) ==
          strip_timestamp(slurp(tmp_path("var_b.csv"))));
}

TEST_CASE("json output mirrors the csv rows as objects") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::goe_closed;
    cfg.format = "json";
    cfg.output_path = tmp_path("goe.json");
    CHECK(run(cfg) == 0);
    const auto j = nlohmann::json::parse(slurp(cfg.output_path));
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["sigma2_goe"].get<double>() ==
          doctest::Approx(fixtures::kSigmaFejer).epsilon(1e-10));
    CHECK(j["meta"]["command"] == "goe-closed");
}

TEST_CASE("relative outputs honor SPECSTAT_OUTPUT_DIR") {
    ::setenv("SPECSTAT_OUTPUT_DIR", "/tmp", 1);
    RunConfig cfg;
    cfg.command = RunConfig::Command::goe_closed;
    cfg.output_path = "specstat_test_envdir.csv";
    CHECK(run(cfg) == 0);
    ::unsetenv("SPECSTAT_OUTPUT_DIR");
    CHECK(!slurp("/tmp/specstat_test_envdir.csv").empty());
}

#ifdef SPECSTAT_CLI_PATH
TEST_CASE("process exit codes") {
    const std::string cli = SPECSTAT_CLI_PATH;
    CHECK(std::system((cli + " goe-closed > /dev/null 2>&1").c_str()) == 0);
    // usage error -> 2
    int rc = std::system((cli + " variance --L -3 > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 2);
    rc = std::system((cli + " no-such-command > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 2);
    // runtime data failure -> 1
    rc = std::system((cli + " trace-eval --spectrum /nonexistent.txt > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 1);
}
#endif
