#pragma once

#include <vector>

#include "stocenv/stochastic.hpp"

namespace stocenv {

/// Cyclic class structure of an irreducible matrix.
struct CyclicDecomposition {
    unsigned long period = 1;                   ///< r
    std::vector<std::vector<int>> classes;      ///< classes[l] = states with residue l, input order
    std::vector<unsigned long> sigma;           ///< state -> residue in Z_r
    std::vector<int> proper_order;              ///< position -> state, class-major
};

/// Per-column support stabilization thresholds.
struct StabilizationProfile {
    std::vector<unsigned long> per_state;  ///< m0(k)
    unsigned long global = 1;              ///< max over k
};

bool is_irreducible(const StochasticMatrix& p);

/// gcd of cycle lengths through state 0 (same for all states). Throws NotIrreducible.
unsigned long period(const StochasticMatrix& p);

/**
 * Cyclic classes as BFS residues from the basepoint; sigma(basepoint) = 0.
 * proper_order sorts states by (residue, input index).
 */
CyclicDecomposition cyclic_decomposition(const StochasticMatrix& p, int basepoint = 0);

/// P^(n)_{ij} > 0, decided over the Boolean semiring.
bool leads_in_steps(const StochasticMatrix& p, int i, int j, unsigned long n);

/**
 * Smallest m0(k) such that for all m >= m0(k) every state of residue
 * sigma(k) - m reaches k in m steps. Hard cap r*((d-1)^2+1)+r; exceeding it
 * signals an internal bug (CapExceeded).
 */
StabilizationProfile stabilization_profile(const StochasticMatrix& p,
                                           const CyclicDecomposition& decomp);

/**
 * Immutable bundle of a matrix with its decomposition, stabilization profile,
 * and cached exact powers. The cache covers [0, min_powers] at construction;
 * power_at extends past it without mutating the bundle.
 */
struct Dynamics {
    StochasticMatrix matrix;
    CyclicDecomposition decomp;
    StabilizationProfile profile;
    std::vector<RationalMatrix> powers;      ///< exact P^0..P^max
    std::vector<BoolMatrix> supports;        ///< support(P^n), same range

    std::size_t size() const { return matrix.size(); }
    const RationalMatrix& cached_power(unsigned long n) const;
    bool support_at(unsigned long n, int i, int j) const;
};

/// Analyze an irreducible matrix; throws NotIrreducible.
Dynamics analyze_dynamics(const StochasticMatrix& p, int basepoint = 0,
                          unsigned long min_powers = 0);

/// Exact P^n, served from the cache when available.
RationalMatrix power_at(const Dynamics& dyn, unsigned long n);

}  // namespace stocenv
