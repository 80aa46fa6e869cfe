#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "specstat/trace_stats.hpp"

namespace specstat {

/// File-format violation; the message carries "<source>:<line>".
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Length-spectrum text format: '#' comments and blank lines are skipped; the
/// first payload line is "genus <int>", then one entry per line,
/// "<length> <multiplicity> <class>" with class in {sns, ssep, nonsimple,
/// unknown}, lengths strictly increasing.  Files store non-oriented classes.
LengthSpectrum parse_length_spectrum(std::istream& in, const std::string& source);
LengthSpectrum read_length_spectrum(const std::string& path);
void write_length_spectrum(std::ostream& out, const LengthSpectrum& spec);
void write_length_spectrum(const std::string& path, const LengthSpectrum& spec);

/// Eigenvalue-list format: "genus <int>", then one eigenvalue per line,
/// nondecreasing, first exactly 0.
EigenvalueList parse_eigenvalue_list(std::istream& in, const std::string& source);
EigenvalueList read_eigenvalue_list(const std::string& path);

/// One tabular result: ordered metadata, column names, numeric rows.
struct OutputTable {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Shortest representation that round-trips a double exactly.
std::string format_double(double v);

void write_csv(std::ostream& out, const OutputTable& t);
void write_json(std::ostream& out, const OutputTable& t);

}  // namespace specstat
