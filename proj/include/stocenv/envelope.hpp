#pragma once

#include <map>
#include <optional>
#include <vector>

#include "stocenv/boundary.hpp"

namespace stocenv {

enum class K1Tag { Trivial, FreeRankOne };

enum class Trichotomy { ToeplitzEnvelope, CuntzPimsnerEnvelope, Intermediate, Indeterminate };

struct EnvelopeKTheory {
    std::size_t k0_rank = 0;  ///< K0 is Z^k0_rank
    K1Tag k1 = K1Tag::Trivial;
};

struct EnvelopeInvariants {
    std::size_t d = 0;
    std::vector<unsigned long> nullities;            ///< N_P(k) for every state k
    std::map<int, unsigned long> defects;            ///< boundary state -> residue mod d
    long weak_class = -1;                            ///< constant where defined
    std::optional<EnvelopeKTheory> k_theory;         ///< absent when boundary undetermined
    Trichotomy trichotomy = Trichotomy::Indeterminate;
};

/// N_P(k): zeros of column k across powers, within the residue-correct class.
unsigned long column_nullity(const Dynamics& dyn, int k);

/**
 * Extension defect of a boundary state, as a residue mod d. Computed at
 * n = ceil(m0(k)/r) and re-verified at n+1. Non-boundary states are rejected
 * unless allow_non_boundary is set (diagnostic, non-canonical value).
 */
unsigned long extension_defect(const Dynamics& dyn, const BoundaryReport& report, int k,
                               bool allow_non_boundary = false);

/// The index map on K1 of the quotient: the constant vector (-n, ..., -n).
std::vector<long> index_map_delta(const BoundaryReport& report, long n);

/// K-theory of the C*-envelope. Throws IndeterminateBoundary.
EnvelopeKTheory envelope_k_theory(const BoundaryReport& report);

/// Toeplitz / Cuntz-Pimsner / Intermediate / Indeterminate verdict.
Trichotomy envelope_trichotomy(const Dynamics& dyn, const BoundaryReport& report);

/// All envelope invariants in one pass.
EnvelopeInvariants envelope_invariants(const Dynamics& dyn, const BoundaryReport& report);

const char* to_string(Trichotomy t);
const char* to_string(K1Tag t);

}  // namespace stocenv
