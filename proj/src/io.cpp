#include "specstat/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace specstat {

namespace {

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
    throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

// Payload lines with their 1-based line numbers, comments and blanks removed.
std::vector<std::pair<int, std::string>> payload_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) out.emplace_back(no, line);
    }
    return out;
}

int parse_genus_header(const std::pair<int, std::string>& hdr, const std::string& source) {
    std::istringstream is(hdr.second);
    std::string key;
    long genus = 0;
    if (!(is >> key >> genus) || key != "genus")
        fail(source, hdr.first, "expected header 'genus <int>'");
    std::string extra;
    if (is >> extra) fail(source, hdr.first, "trailing tokens after genus header");
    if (genus < 2) fail(source, hdr.first, "genus must be >= 2");
    return static_cast<int>(genus);
}

}  // namespace

LengthSpectrum parse_length_spectrum(std::istream& in, const std::string& source) {
    const auto lines = payload_lines(in);
    if (lines.empty()) fail(source, 1, "empty length-spectrum file");
    const int genus = parse_genus_header(lines.front(), source);

    std::vector<SpectrumEntry> entries;
    double prev = 0.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, text] = lines[i];
        std::istringstream is(text);
        double length = 0.0;
        long long mult = 0;
        std::string cls, extra;
        if (!(is >> length >> mult >> cls))
            fail(source, no, "expected '<length> <multiplicity> <class>'");
        if (is >> extra) fail(source, no, "trailing tokens in entry");
        if (!(length > 0.0)) fail(source, no, "length must be positive");
        if (length <= prev) fail(source, no, "lengths must be strictly increasing");
        if (mult < 1) fail(source, no, "multiplicity must be >= 1");
        GeodesicClass c;
        try {
            c = geodesic_class_from_string(cls);
        } catch (const std::invalid_argument& e) {
            fail(source, no, e.what());
        }
        entries.push_back({length, mult, c});
        prev = length;
    }
    return LengthSpectrum(genus, std::move(entries));
}

LengthSpectrum read_length_spectrum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_length_spectrum(in, path);
}

void write_length_spectrum(std::ostream& out, const LengthSpectrum& spec) {
    out << "genus " << spec.genus() << "\n";
    for (const auto& e : spec.entries())
        out << format_double(e.length) << ' ' << e.multiplicity << ' ' << to_string(e.cls) << "\n";
}

void write_length_spectrum(const std::string& path, const LengthSpectrum& spec) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    write_length_spectrum(out, spec);
}

EigenvalueList parse_eigenvalue_list(std::istream& in, const std::string& source) {
    const auto lines = payload_lines(in);
    if (lines.empty()) fail(source, 1, "empty eigenvalue file");
    const int genus = parse_genus_header(lines.front(), source);

    std::vector<double> values;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, text] = lines[i];
        std::istringstream is(text);
        double v = 0.0;
        std::string extra;
        if (!(is >> v)) fail(source, no, "expected an eigenvalue");
        if (is >> extra) fail(source, no, "trailing tokens after eigenvalue");
        if (v < 0.0) fail(source, no, "eigenvalues must be nonnegative");
        if (!values.empty() && v < values.back()) fail(source, no, "eigenvalues must be nondecreasing");
        if (values.empty() && v != 0.0) fail(source, no, "first eigenvalue must be exactly 0");
        values.push_back(v);
    }
    if (values.empty()) fail(source, lines.back().first, "no eigenvalues listed");
    return EigenvalueList(genus, std::move(values));
}

EigenvalueList read_eigenvalue_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_eigenvalue_list(in, path);
}

std::string format_double(double v) {
    char buf[64];
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        std::snprintf(buf, sizeof buf, "%.0f", v);
        return buf;
    }
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v) break;
    }
    return buf;
}

void write_csv(std::ostream& out, const OutputTable& t) {
    for (const auto& [k, v] : t.meta) out << "# " << k << ": " << v << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << t.columns[i] << (i + 1 < t.columns.size() ? "," : "");
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << format_double(row[i]) << (i + 1 < row.size() ? "," : "");
        out << "\n";
    }
}

void write_json(std::ostream& out, const OutputTable& t) {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : t.meta) j["meta"][k] = v;
    j["columns"] = t.columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i)
            obj[t.columns[i]] = row[i];
        j["rows"].push_back(obj);
    }
    out << j.dump(2) << "\n";
}

}  // namespace specstat
