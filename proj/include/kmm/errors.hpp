#ifndef KMM_ERRORS_HPP
#define KMM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kmm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyInputError : public Error {
public:
    EmptyInputError() : Error("empty input: no rows") {}
};

class RaggedRowsError : public Error {
public:
    RaggedRowsError(int row, int got, int expected)
        : Error("ragged rows: row " + std::to_string(row) + " has " + std::to_string(got) +
                " fields, expected " + std::to_string(expected)) {}
};

class RowAllMissingError : public Error {
public:
    explicit RowAllMissingError(int row)
        : Error("row " + std::to_string(row) + " has no observed features"), row_(row) {}
    int row() const { return row_; }

private:
    int row_;
};

class KGreaterThanNError : public Error {
public:
    KGreaterThanNError(int k, int n)
        : Error("k = " + std::to_string(k) + " exceeds number of rows n = " + std::to_string(n)) {}
};

class LastMemberError : public Error {
public:
    explicit LastMemberError(int cluster)
        : Error("cannot remove the last member of cluster " + std::to_string(cluster)) {}
};

class ParseError : public Error {
public:
    ParseError(int row, int col, const std::string& what)
        : Error("parse error at row " + std::to_string(row) + ", col " + std::to_string(col) +
                ": " + what),
          row_(row), col_(col) {}
    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_;
    int col_;
};

class InfeasibleSeparationError : public Error {
public:
    using Error::Error;
};

class InfeasibleRateError : public Error {
public:
    using Error::Error;
};

class NonPositiveForLogError : public Error {
public:
    explicit NonPositiveForLogError(int col)
        : Error("column " + std::to_string(col) + " has non-positive observed values; log10 undefined") {}
};

class ZeroVarianceError : public Error {
public:
    explicit ZeroVarianceError(int col)
        : Error("column " + std::to_string(col) + " has zero variance over observed cells") {}
};

class LengthMismatchError : public Error {
public:
    LengthMismatchError(std::size_t a, std::size_t b)
        : Error("label vectors differ in length: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class DegenerateDenominatorError : public Error {
public:
    DegenerateDenominatorError()
        : Error("adjusted Rand denominator is zero and partitions differ") {}
};

}  // namespace kmm

#endif  // KMM_ERRORS_HPP
