#pragma once

#include <stdexcept>
#include <string>

namespace fdbench {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A closed-form model was evaluated at (or too close to) a pole.
class SingularityError : public Error {
public:
    SingularityError(const std::string& msg, double time)
        : Error(msg), time_(time) {}
    double time() const { return time_; }

private:
    double time_;
};

/// Grid problems: non-uniform spacing, mismatched axes, too few samples.
class GridError : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed. Line numbers are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column = 0)
        : Error(msg), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A function handle failed while a stencil was sampling it.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& msg, double abscissa)
        : Error(msg), abscissa_(abscissa) {}
    double abscissa() const { return abscissa_; }

private:
    double abscissa_;
};

} // namespace fdbench
