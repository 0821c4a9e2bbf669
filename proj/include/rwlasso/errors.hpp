#pragma once

#include <stdexcept>
#include <string>

namespace rwlasso {

/// Thrown when a symmetric positive-definite factorization or solve fails.
/// `pivot()` is the 0-based index of the first non-positive pivot.
class SingularSystemError : public std::runtime_error {
public:
    SingularSystemError(const std::string& msg, int pivot)
        : std::runtime_error(msg), pivot_(pivot) {}

    int pivot() const noexcept { return pivot_; }

private:
    int pivot_;
};

/// Thrown on malformed input files. Row/column are 1-based as displayed to
/// the user; row 1 is the header line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, long row, long column)
        : std::runtime_error(msg), row_(row), column_(column) {}

    long row() const noexcept { return row_; }
    long column() const noexcept { return column_; }

private:
    long row_;
    long column_;
};

} // namespace rwlasso
