#pragma once

#include <iosfwd>
#include <string>

#include "fdbench/series.hpp"

namespace fdbench {

/// Reads a `t,value` CSV (UTF-8, decimal point, scientific notation ok,
/// blank lines ignored, `nan` = missing). Throws ParseError naming the
/// first offending line, or GridError on duplicate/decreasing times.
Series read_series_csv(std::istream& in);
Series read_series_csv_file(const std::string& path);

/// Writes the series with shortest round-trip decimals; read-back is
/// value-identical. The file write is atomic (temp + rename).
std::string series_to_csv(const Series& s);
void write_series_csv_file(const Series& s, const std::string& path);

/// Atomic whole-file write used by every CLI output path.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace fdbench
