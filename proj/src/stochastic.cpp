#include "stocenv/stochastic.hpp"

#include <cmath>

#include "stocenv/errors.hpp"

namespace stocenv {

StochasticMatrix validate(const RationalMatrix& raw, std::vector<std::string> labels) {
    if (raw.rows() == 0 || raw.rows() != raw.cols())
        throw NotSquare("expected a nonempty square matrix, got " + std::to_string(raw.rows()) +
                        "x" + std::to_string(raw.cols()));
    const std::size_t d = raw.rows();
    for (std::size_t i = 0; i < d; ++i) {
        Rational sum = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (raw.at(i, j) < 0) throw NegativeEntry(i, j, rational_to_string(raw.at(i, j)));
            sum += raw.at(i, j);
        }
        if (sum != 1) throw RowSumNotOne(i, rational_to_string(sum));
    }
    if (labels.empty())
        for (std::size_t i = 0; i < d; ++i) labels.push_back(std::to_string(i + 1));
    if (labels.size() != d) throw ParseError("label count does not match matrix size");
    return StochasticMatrix{std::move(labels), raw};
}

RationalMatrix power(const StochasticMatrix& p, unsigned long n) {
    RationalMatrix result = RationalMatrix::identity(p.size());
    RationalMatrix base = p.entries;
    while (n > 0) {
        if (n & 1ul) result = result.multiply(base);
        n >>= 1;
        if (n > 0) base = base.multiply(base);
    }
    return result;
}

BoolMatrix support(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("support expects a square matrix");
    BoolMatrix out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, j) > 0);
    return out;
}

std::vector<std::vector<double>> sqrt_entrywise(const RationalMatrix& m) {
    std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols(), 0.0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = std::sqrt(m.at(i, j).get_d());
    return out;
}

RationalMatrix flat(const RationalMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) out.at(i, j) = 1 / m.at(i, j);
    return out;
}

RationalMatrix schur(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("shape mismatch in Schur product");
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) * b.at(i, j);
    return out;
}

RationalMatrix mask(const RationalMatrix& a, const BoolMatrix& pattern) {
    if (a.rows() != pattern.size() || a.cols() != pattern.size())
        throw Error("shape mismatch in support mask");
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (pattern.at(i, j)) out.at(i, j) = a.at(i, j);
    return out;
}

std::vector<Rational> stationary_distribution(const StochasticMatrix& p) {
    // Solve (P^t - I) x = 0 with the last equation replaced by sum(x) = 1.
    const std::size_t d = p.size();
    RationalMatrix a(d, d);
    std::vector<Rational> rhs(d, Rational(0));
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            a.at(i, j) = p.entries.at(j, i) - (i == j ? Rational(1) : Rational(0));
    for (std::size_t j = 0; j < d; ++j) a.at(d - 1, j) = 1;
    rhs[d - 1] = 1;

    // Exact Gaussian elimination with partial (first nonzero) pivoting.
    std::vector<std::size_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = i;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && a.at(pivot, col) == 0) ++pivot;
        if (pivot == d) throw SingularSystem("stationary system is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < d; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            std::swap(rhs[pivot], rhs[col]);
        }
        for (std::size_t row = col + 1; row < d; ++row) {
            if (a.at(row, col) == 0) continue;
            Rational factor = a.at(row, col) / a.at(col, col);
            for (std::size_t j = col; j < d; ++j) a.at(row, j) -= factor * a.at(col, j);
            rhs[row] -= factor * rhs[col];
        }
    }
    std::vector<Rational> x(d);
    for (std::size_t ii = d; ii-- > 0;) {
        Rational acc = rhs[ii];
        for (std::size_t j = ii + 1; j < d; ++j) acc -= a.at(ii, j) * x[j];
        x[ii] = acc / a.at(ii, ii);
    }
    for (const Rational& v : x)
        if (v <= 0) throw SingularSystem("stationary vector not strictly positive");
    return x;
}

}  // namespace stocenv
