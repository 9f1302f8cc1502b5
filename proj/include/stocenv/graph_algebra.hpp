#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stocenv/classify.hpp"
#include "stocenv/matrix.hpp"
#include "stocenv/snf.hpp"

namespace stocenv {

/**
 * Finitely generated abelian group Z^free_rank + Z_{t1} + ... with the
 * invariant factors forming a divisibility chain t1 | t2 | ...; unit_class,
 * when present, is an element in these coordinates (torsion coordinates
 * reduced mod the factors, then free coordinates).
 */
struct AbelianGroupPresentation {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;  ///< invariant factors > 1, ascending chain
    std::optional<std::vector<Integer>> torsion_unit;  ///< aligned with torsion
    std::optional<std::vector<Integer>> free_unit;     ///< aligned with free summands

    bool same_group(const AbelianGroupPresentation& other) const {
        return free_rank == other.free_rank && torsion == other.torsion;
    }
};

/// K0 = coker(I - A^t) with the class of the unit, K1 = ker(I - A^t).
std::pair<AbelianGroupPresentation, AbelianGroupPresentation> cuntz_krieger_k_theory(
    const BoolMatrix& a);

/**
 * Decide whether two pointed groups (G, u) and (G', u') are isomorphic by an
 * isomorphism carrying u to u'. Groups must be abstractly isomorphic first.
 * Decision: gcd content of the free part plus an automorphism-orbit search
 * on the torsion part (orbit translated by content * torsion lattice).
 * Desk-scale caps: torsion order <= 10^4.
 */
bool pointed_groups_isomorphic(const AbelianGroupPresentation& g,
                               const AbelianGroupPresentation& h);

struct GraphAlgebraComparison {
    ClassificationVerdict star;
    ClassificationVerdict stable;
};

/// Kirchberg-Phillips comparison of the Cuntz-Krieger algebras of two supports.
GraphAlgebraComparison compare_graph_algebras(const BoolMatrix& a, const BoolMatrix& b);

}  // namespace stocenv
