#pragma once

#include <stdexcept>
#include <string>

namespace stocenv {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotSquare : Error {
    explicit NotSquare(const std::string& what) : Error(what) {}
};

struct NegativeEntry : Error {
    NegativeEntry(std::size_t row, std::size_t col, const std::string& value)
        : Error("negative entry at (" + std::to_string(row) + "," + std::to_string(col) +
                "): " + value),
          row(row), col(col) {}
    std::size_t row, col;
};

struct RowSumNotOne : Error {
    RowSumNotOne(std::size_t row, const std::string& sum)
        : Error("row " + std::to_string(row) + " sums to " + sum + ", expected 1"),
          row(row), sum(sum) {}
    std::size_t row;
    std::string sum;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct NotIrreducible : Error {
    explicit NotIrreducible(const std::string& what = "matrix is not irreducible") : Error(what) {}
};

struct SingularSystem : Error {
    explicit SingularSystem(const std::string& what) : Error(what) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

struct NotBoundaryState : Error {
    explicit NotBoundaryState(const std::string& what) : Error(what) {}
};

struct IndeterminateBoundary : Error {
    explicit IndeterminateBoundary(const std::string& what = "boundary set is undetermined")
        : Error(what) {}
};

struct EmptyBoundary : Error {
    explicit EmptyBoundary(const std::string& what = "boundary set is empty") : Error(what) {}
};

struct ZeroRowOrColumn : Error {
    explicit ZeroRowOrColumn(const std::string& what) : Error(what) {}
};

struct EdgeNotInSupport : Error {
    explicit EdgeNotInSupport(const std::string& what) : Error(what) {}
};

struct SupportViolation : Error {
    explicit SupportViolation(const std::string& what) : Error(what) {}
};

struct TruncationTooShallow : Error {
    explicit TruncationTooShallow(const std::string& what) : Error(what) {}
};

struct EmptyWindow : Error {
    explicit EmptyWindow(const std::string& what) : Error(what) {}
};

struct NotApplicable : Error {
    explicit NotApplicable(const std::string& what) : Error(what) {}
};

}  // namespace stocenv
