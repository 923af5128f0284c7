#pragma once

#include <stdexcept>
#include <string>

namespace qdet {

// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shapes that do not fit the operation (non-square, length mismatch, ...).
class DimensionError : public Error {
public:
    using Error::Error;
};

// A 1-based row/column/anchor index outside its valid range.
class IndexError : public Error {
public:
    using Error::Error;
};

class ZeroDivisionError : public Error {
public:
    using Error::Error;
};

class NotHermitianError : public Error {
public:
    using Error::Error;
};

// Permutation enumeration refused because n exceeds the configured limit.
class EnumerationLimitError : public Error {
public:
    EnumerationLimitError(int n, int max_enum)
        : Error("n = " + std::to_string(n) + " exceeds max_enum = " + std::to_string(max_enum) +
                "; direct enumeration costs n!*n products. Use the cofactor expansion, "
                "the complex-embedding oracle, or raise --max-enum explicitly"),
          n_(n), max_enum_(max_enum) {}

    int n() const noexcept { return n_; }
    int max_enum() const noexcept { return max_enum_; }

private:
    int n_;
    int max_enum_;
};

// The matrix is singular. `certificate` holds the vanishing determinant
// (ddet for general matrices, det for Hermitian ones) as a literal.
class SingularError : public Error {
public:
    SingularError(const std::string& what, std::string certificate)
        : Error(what), certificate_(std::move(certificate)) {}

    const std::string& certificate() const noexcept { return certificate_; }

private:
    std::string certificate_;
};

// Two routes that must agree exactly did not. Signals an implementation bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Float backend refused an operation that would amplify rounding error.
class NumericalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace qdet
