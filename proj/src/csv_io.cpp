#include "fdbench/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fdbench/errors.hpp"
#include "fdbench/numfmt.hpp"

namespace fdbench {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

Series read_series_csv(std::istream& in) {
    Series s;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string trimmed = strip(line);
        if (trimmed.empty()) continue;
        if (!header_seen) {
            if (trimmed != "t,value")
                throw ParseError("expected header 't,value', got '" + trimmed +
                                     "'",
                                 lineno, 1);
            header_seen = true;
            continue;
        }
        const std::size_t comma = trimmed.find(',');
        if (comma == std::string::npos)
            throw ParseError("expected two comma-separated fields", lineno, 1);
        if (trimmed.find(',', comma + 1) != std::string::npos)
            throw ParseError("expected exactly two fields", lineno, 3);
        double t, v;
        if (!parse_double(strip(trimmed.substr(0, comma)), t))
            throw ParseError("malformed time value '" +
                                 strip(trimmed.substr(0, comma)) + "'",
                             lineno, 1);
        if (!parse_double(strip(trimmed.substr(comma + 1)), v))
            throw ParseError("malformed value '" +
                                 strip(trimmed.substr(comma + 1)) + "'",
                             lineno, 2);
        if (std::isnan(t))
            throw ParseError("time column may not be nan", lineno, 1);
        if (!s.times.empty() && !(t > s.times.back()))
            throw GridError("times must be strictly increasing (line " +
                            std::to_string(lineno) + ")");
        s.times.push_back(t);
        s.values.push_back(v);
    }
    if (!header_seen) throw ParseError("missing 't,value' header", 1, 1);
    return s;
}

Series read_series_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    return read_series_csv(in);
}

std::string series_to_csv(const Series& s) {
    std::ostringstream os;
    os << "t,value\n";
    for (std::size_t i = 0; i < s.size(); ++i)
        os << format_double(s.times[i]) << ',' << format_double(s.values[i])
           << "\n";
    return os.str();
}

void write_series_csv_file(const Series& s, const std::string& path) {
    write_file_atomic(path, series_to_csv(s));
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open output file: " + tmp);
        out << content;
        if (!out) throw Error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("atomic rename failed for: " + path);
}

} // namespace fdbench
