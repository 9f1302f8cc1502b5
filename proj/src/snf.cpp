#include "stocenv/snf.hpp"

#include <algorithm>

#include "stocenv/errors.hpp"

namespace stocenv {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& other) const {
    if (cols_ != other.rows_) throw Error("shape mismatch in integer matrix product");
    IntegerMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool IntegerMatrix::operator==(const IntegerMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != other.data_[i]) return false;
    return true;
}

Integer IntegerMatrix::determinant() const {
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    // Bareiss fraction-free elimination.
    IntegerMatrix a = *this;
    const std::size_t n = rows_;
    Integer sign = 1, prev = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            sign = -sign;
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            for (std::size_t j = col + 1; j < n; ++j) {
                Integer num = a.at(col, col) * a.at(row, j) - a.at(row, col) * a.at(col, j);
                a.at(row, j) = num / prev;  // exact by Bareiss
            }
            a.at(row, col) = 0;
        }
        prev = a.at(col, col);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

struct SnfState {
    IntegerMatrix u, d, v;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    void add_row(std::size_t target, std::size_t source, const Integer& factor) {
        for (std::size_t j = 0; j < d.cols(); ++j) d.at(target, j) += factor * d.at(source, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(target, j) += factor * u.at(source, j);
    }
    void add_col(std::size_t target, std::size_t source, const Integer& factor) {
        for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, target) += factor * d.at(i, source);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, target) += factor * v.at(i, source);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) = -d.at(a, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
    }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntegerMatrix& m) {
    SnfState s{IntegerMatrix::identity(m.rows()), m, IntegerMatrix::identity(m.cols())};
    const std::size_t bound = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < bound; ++t) {
        // Minimal-absolute-value pivot in the trailing block.
        std::size_t pi = t, pj = t;
        bool found = false;
        Integer best = 0;
        for (std::size_t i = t; i < m.rows(); ++i)
            for (std::size_t j = t; j < m.cols(); ++j) {
                const Integer& e = s.d.at(i, j);
                if (e == 0) continue;
                Integer a = abs(e);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);

        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < m.rows(); ++i) {
                if (s.d.at(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), s.d.at(i, t).get_mpz_t(), s.d.at(t, t).get_mpz_t());
                s.add_row(i, t, -q);
                if (s.d.at(i, t) != 0) {
                    // Remainder became the smaller pivot.
                    s.swap_rows(t, i);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < m.cols(); ++j) {
                if (s.d.at(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), s.d.at(t, j).get_mpz_t(), s.d.at(t, t).get_mpz_t());
                s.add_col(j, t, -q);
                if (s.d.at(t, j) != 0) {
                    s.swap_cols(t, j);
                    again = true;
                }
            }
        }

        // Enforce the divisibility chain: fold any non-divisible entry of the
        // trailing block into the pivot position and redo this step.
        bool redo = false;
        for (std::size_t i = t + 1; i < m.rows() && !redo; ++i)
            for (std::size_t j = t + 1; j < m.cols(); ++j)
                if (s.d.at(i, j) % s.d.at(t, t) != 0) {
                    s.add_row(t, i, 1);
                    redo = true;
                    break;
                }
        if (redo) {
            --t;
            continue;
        }
        if (s.d.at(t, t) < 0) s.negate_row(t);
    }
    return SmithNormalForm{s.u, s.d, s.v};
}

}  // namespace stocenv
