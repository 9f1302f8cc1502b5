#pragma once

#include <cstddef>
#include <vector>

#include "stocenv/rational.hpp"

namespace stocenv {

/// Dense matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix multiply(const RationalMatrix& other) const;
    RationalMatrix transpose() const;
    bool operator==(const RationalMatrix& other) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Square Boolean matrix over the (or, and) semiring.
class BoolMatrix {
public:
    BoolMatrix() = default;
    explicit BoolMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

    static BoolMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    bool at(std::size_t i, std::size_t j) const { return data_[i * n_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v) { data_[i * n_ + j] = v ? 1 : 0; }

    BoolMatrix multiply(const BoolMatrix& other) const;
    /// Semiring power by repeated squaring; pow(0) = identity.
    BoolMatrix pow(unsigned long n) const;
    BoolMatrix transpose() const;
    bool operator==(const BoolMatrix& other) const;

    bool is_permutation() const;
    bool has_zero_row_or_column() const;

private:
    std::size_t n_ = 0;
    std::vector<unsigned char> data_;
};

}  // namespace stocenv
