#include "stocenv/envelope.hpp"

#include <algorithm>

#include "stocenv/errors.hpp"

namespace stocenv {

unsigned long column_nullity(const Dynamics& dyn, int k) {
    const unsigned long r = dyn.decomp.period;
    unsigned long total = 0;
    // Terms vanish once the column pattern stabilizes, so the sum truncates.
    for (unsigned long m = 1; m + 1 <= dyn.profile.per_state[k]; ++m) {
        unsigned long cls = (dyn.decomp.sigma[k] + r - (m % r)) % r;
        for (int i : dyn.decomp.classes[cls])
            if (!dyn.support_at(m, i, k)) ++total;
    }
    return total;
}

namespace {

unsigned long defect_sum(const Dynamics& dyn, int k, unsigned long n) {
    const unsigned long r = dyn.decomp.period;
    const std::size_t d = dyn.size();
    unsigned long total = 0;
    for (unsigned long m = 0; m < n * r; ++m) {
        unsigned long cls = (dyn.decomp.sigma[k] + r - (m % r)) % r;
        for (int i : dyn.decomp.classes[cls])
            if (dyn.support_at(m, i, k)) ++total;
    }
    return total % d;
}

}  // namespace

unsigned long extension_defect(const Dynamics& dyn, const BoundaryReport& report, int k,
                               bool allow_non_boundary) {
    if (!allow_non_boundary && !report.is_boundary(k))
        throw NotBoundaryState("state " + dyn.matrix.states[k] + " is not a boundary state");
    const unsigned long r = dyn.decomp.period;
    const unsigned long m0 = dyn.profile.per_state[k];
    const unsigned long n = (m0 + r - 1) / r;
    unsigned long first = defect_sum(dyn, k, n);
    unsigned long second = defect_sum(dyn, k, n + 1);
    if (first != second)
        throw Error("extension defect did not stabilize across one extra period");
    return first;
}

std::vector<long> index_map_delta(const BoundaryReport& report, long n) {
    if (!report.determined()) throw IndeterminateBoundary();
    if (report.boundary.empty()) throw EmptyBoundary();
    return std::vector<long>(report.boundary.size(), -n);
}

EnvelopeKTheory envelope_k_theory(const BoundaryReport& report) {
    EnvelopeKTheory kt;
    if (report.boundary.empty() && report.undetermined.empty()) {
        // All states exclusive: K0 = Z, K1 = Z.
        kt.k0_rank = 1;
        kt.k1 = K1Tag::FreeRankOne;
        return kt;
    }
    if (!report.determined()) throw IndeterminateBoundary();
    kt.k0_rank = report.boundary.size();
    kt.k1 = K1Tag::Trivial;
    return kt;
}

Trichotomy envelope_trichotomy(const Dynamics& dyn, const BoundaryReport& report) {
    const std::size_t d = dyn.size();
    if (report.exclusive.size() == d) return Trichotomy::CuntzPimsnerEnvelope;
    if (report.multiple_arrival)
        return report.exclusive.empty() ? Trichotomy::ToeplitzEnvelope : Trichotomy::Intermediate;
    if (!report.determined()) return Trichotomy::Indeterminate;
    if (report.boundary.size() == d) return Trichotomy::ToeplitzEnvelope;
    if (report.boundary.empty()) return Trichotomy::CuntzPimsnerEnvelope;
    return Trichotomy::Intermediate;
}

EnvelopeInvariants envelope_invariants(const Dynamics& dyn, const BoundaryReport& report) {
    EnvelopeInvariants inv;
    inv.d = dyn.size();
    for (std::size_t k = 0; k < dyn.size(); ++k)
        inv.nullities.push_back(column_nullity(dyn, static_cast<int>(k)));
    for (int k : report.boundary) inv.defects[k] = extension_defect(dyn, report, k);
    inv.trichotomy = envelope_trichotomy(dyn, report);
    if (report.exclusive.size() == dyn.size() || report.determined())
        inv.k_theory = envelope_k_theory(report);
    return inv;
}

const char* to_string(Trichotomy t) {
    switch (t) {
        case Trichotomy::ToeplitzEnvelope: return "ToeplitzEnvelope";
        case Trichotomy::CuntzPimsnerEnvelope: return "CuntzPimsnerEnvelope";
        case Trichotomy::Intermediate: return "Intermediate";
        default: return "Indeterminate";
    }
}

const char* to_string(K1Tag t) {
    return t == K1Tag::FreeRankOne ? "FreeRankOne" : "Trivial";
}

}  // namespace stocenv
