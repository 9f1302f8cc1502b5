#pragma once

#include <string>
#include <vector>

#include "stocenv/matrix.hpp"

namespace stocenv {

/// Validated row-stochastic matrix over an ordered state set.
struct StochasticMatrix {
    std::vector<std::string> states;  ///< labels, size d
    RationalMatrix entries;           ///< d x d, rows sum to exactly 1

    std::size_t size() const { return entries.rows(); }
};

/**
 * Validate a raw rational matrix as row-stochastic.
 * Labels default to "1".."d". Throws NotSquare, NegativeEntry, RowSumNotOne.
 */
StochasticMatrix validate(const RationalMatrix& raw, std::vector<std::string> labels = {});

/// Exact n-th power; power(P, 0) is the identity.
RationalMatrix power(const StochasticMatrix& p, unsigned long n);

/// Strict-positivity pattern of a nonnegative rational matrix.
BoolMatrix support(const RationalMatrix& m);

/// Entrywise square root (the only real-valued transform in this module).
std::vector<std::vector<double>> sqrt_entrywise(const RationalMatrix& m);

/// Entrywise reciprocal on the support, zeros preserved.
RationalMatrix flat(const RationalMatrix& m);

/// Entrywise (Schur) product.
RationalMatrix schur(const RationalMatrix& a, const RationalMatrix& b);

/// Mask a rational matrix by a Boolean support pattern.
RationalMatrix mask(const RationalMatrix& a, const BoolMatrix& pattern);

/**
 * Exact stationary distribution: the unique nu with nu P = nu, sum nu = 1.
 * Requires irreducible P; throws SingularSystem otherwise.
 */
std::vector<Rational> stationary_distribution(const StochasticMatrix& p);

}  // namespace stocenv
