#include "stocenv/matrix.hpp"

#include "stocenv/errors.hpp"

namespace stocenv {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw Error("shape mismatch in rational matrix product");
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rational& b = other.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != other.data_[i]) return false;
    return true;
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
    BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BoolMatrix BoolMatrix::multiply(const BoolMatrix& other) const {
    if (n_ != other.n_) throw Error("shape mismatch in Boolean matrix product");
    BoolMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            if (!at(i, k)) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (other.at(k, j)) out.set(i, j, true);
        }
    return out;
}

BoolMatrix BoolMatrix::pow(unsigned long n) const {
    BoolMatrix result = identity(n_);
    BoolMatrix base = *this;
    while (n > 0) {
        if (n & 1ul) result = result.multiply(base);
        n >>= 1;
        if (n > 0) base = base.multiply(base);
    }
    return result;
}

BoolMatrix BoolMatrix::transpose() const {
    BoolMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out.set(j, i, at(i, j));
    return out;
}

bool BoolMatrix::operator==(const BoolMatrix& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (at(i, j) != other.at(i, j)) return false;
    return true;
}

bool BoolMatrix::is_permutation() const {
    for (std::size_t i = 0; i < n_; ++i) {
        std::size_t row = 0, col = 0;
        for (std::size_t j = 0; j < n_; ++j) {
            if (at(i, j)) ++row;
            if (at(j, i)) ++col;
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

bool BoolMatrix::has_zero_row_or_column() const {
    for (std::size_t i = 0; i < n_; ++i) {
        bool row = false, col = false;
        for (std::size_t j = 0; j < n_; ++j) {
            row = row || at(i, j);
            col = col || at(j, i);
        }
        if (!row || !col) return true;
    }
    return false;
}

}  // namespace stocenv
