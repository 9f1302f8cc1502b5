#pragma once

#include <map>
#include <optional>
#include <vector>

#include "stocenv/graph.hpp"

namespace stocenv {

/// Evidence recorded per state while deciding boundary membership.
struct BoundaryEvidence {
    /// For non-exclusive states: a step n and state i with 0 < P^(n)_{ik} < 1.
    std::optional<std::pair<unsigned long, int>> non_exclusive_witness;
    /// For boundary states certified by the sufficient condition (per other
    /// non-exclusive state s): the companion k' in the same class as k.
    std::map<int, int> companion;
    /// Verification window [1, m0(s)+r] sizes used for this state's checks.
    unsigned long window = 0;
};

struct BoundaryReport {
    std::vector<int> exclusive;
    std::vector<int> boundary;
    std::vector<int> undetermined;
    bool multiple_arrival = false;
    bool fully_supported = false;
    std::map<int, BoundaryEvidence> evidence;

    bool determined() const { return undetermined.empty(); }
    bool is_boundary(int k) const;
    bool is_exclusive(int k) const;
};

/// States k whose columns of every power contain only entries 0 and 1.
std::vector<int> exclusive_states(const Dynamics& dyn);

/// Every cyclic block of P entirely positive.
bool is_fully_supported(const Dynamics& dyn);

/**
 * Whenever a non-exclusive state k reaches a non-exclusive state s in n
 * steps, some other state also reaches s in n steps (finite window check).
 */
bool has_multiple_arrival(const Dynamics& dyn);

/// Full boundary determination; undetermined states propagate Indeterminate.
BoundaryReport boundary_states(const Dynamics& dyn);

}  // namespace stocenv
