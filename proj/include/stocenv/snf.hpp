#pragma once

#include <cstddef>
#include <vector>

#include "stocenv/rational.hpp"

namespace stocenv {

/// Dense matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntegerMatrix multiply(const IntegerMatrix& other) const;
    IntegerMatrix transpose() const;
    bool operator==(const IntegerMatrix& other) const;

    /// Exact determinant (square matrices) via fraction-free elimination.
    Integer determinant() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

/// U * M * V = D with U, V unimodular, D diagonal with divisibility chain.
struct SmithNormalForm {
    IntegerMatrix u, d, v;
};

SmithNormalForm smith_normal_form(const IntegerMatrix& m);

}  // namespace stocenv
