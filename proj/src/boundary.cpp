#include "stocenv/boundary.hpp"

#include <algorithm>

#include "stocenv/errors.hpp"

namespace stocenv {

bool BoundaryReport::is_boundary(int k) const {
    return std::find(boundary.begin(), boundary.end(), k) != boundary.end();
}

bool BoundaryReport::is_exclusive(int k) const {
    return std::find(exclusive.begin(), exclusive.end(), k) != exclusive.end();
}

std::vector<int> exclusive_states(const Dynamics& dyn) {
    const std::size_t d = dyn.size();
    const unsigned long r = dyn.decomp.period;
    std::vector<int> out;
    for (std::size_t k = 0; k < d; ++k) {
        bool exclusive = true;
        for (unsigned long m = 1; exclusive && m <= dyn.profile.per_state[k] + r; ++m) {
            const RationalMatrix& pm = dyn.cached_power(m);
            for (std::size_t i = 0; i < d; ++i) {
                const Rational& v = pm.at(i, k);
                if (v != 0 && v != 1) {
                    exclusive = false;
                    break;
                }
            }
        }
        // Exclusivity is equivalent to k's cyclic class being a singleton.
        bool singleton = dyn.decomp.classes[dyn.decomp.sigma[k]].size() == 1;
        if (exclusive != singleton)
            throw Error("exclusivity window check disagrees with the singleton-class criterion");
        if (exclusive) out.push_back(static_cast<int>(k));
    }
    return out;
}

bool is_fully_supported(const Dynamics& dyn) {
    const unsigned long r = dyn.decomp.period;
    for (unsigned long l = 0; l < r; ++l)
        for (int i : dyn.decomp.classes[l])
            for (int j : dyn.decomp.classes[(l + 1) % r])
                if (dyn.matrix.entries.at(static_cast<std::size_t>(i),
                                          static_cast<std::size_t>(j)) == 0)
                    return false;
    return true;
}

namespace {

std::vector<int> non_exclusive_states(const Dynamics& dyn, const std::vector<int>& exclusive) {
    std::vector<int> out;
    for (std::size_t k = 0; k < dyn.size(); ++k)
        if (std::find(exclusive.begin(), exclusive.end(), static_cast<int>(k)) == exclusive.end())
            out.push_back(static_cast<int>(k));
    return out;
}

}  // namespace

bool has_multiple_arrival(const Dynamics& dyn) {
    const std::size_t d = dyn.size();
    const unsigned long r = dyn.decomp.period;
    const std::vector<int> nonexcl = non_exclusive_states(dyn, exclusive_states(dyn));
    for (int k : nonexcl)
        for (int s : nonexcl) {
            if (k == s) continue;
            for (unsigned long n = 1; n <= dyn.profile.per_state[s] + r; ++n) {
                if (!dyn.support_at(n, k, s)) continue;
                bool witnessed = false;
                for (std::size_t kp = 0; kp < d && !witnessed; ++kp)
                    if (static_cast<int>(kp) != k && dyn.support_at(n, static_cast<int>(kp), s))
                        witnessed = true;
                if (!witnessed) return false;
            }
        }
    return true;
}

BoundaryReport boundary_states(const Dynamics& dyn) {
    const unsigned long r = dyn.decomp.period;
    BoundaryReport report;
    report.exclusive = exclusive_states(dyn);
    report.fully_supported = is_fully_supported(dyn);
    report.multiple_arrival = has_multiple_arrival(dyn);

    // Witnesses of non-exclusivity for the record.
    const std::vector<int> nonexcl = non_exclusive_states(dyn, report.exclusive);
    for (int k : nonexcl) {
        BoundaryEvidence ev;
        ev.window = dyn.profile.per_state[k] + r;
        for (unsigned long m = 1; m <= ev.window && !ev.non_exclusive_witness; ++m) {
            const RationalMatrix& pm = dyn.cached_power(m);
            for (std::size_t i = 0; i < dyn.size(); ++i) {
                const Rational& v = pm.at(i, static_cast<std::size_t>(k));
                if (v != 0 && v != 1) {
                    ev.non_exclusive_witness = {m, static_cast<int>(i)};
                    break;
                }
            }
        }
        report.evidence[k] = std::move(ev);
    }

    if (report.multiple_arrival) {
        report.boundary = nonexcl;
        return report;
    }

    // Sufficient condition: a same-class companion k' covering every arrival
    // of k at each other non-exclusive state s across the finite window.
    for (int k : nonexcl) {
        bool boundary = true;
        BoundaryEvidence& ev = report.evidence[k];
        for (int s : nonexcl) {
            if (s == k) continue;
            const unsigned long window = dyn.profile.per_state[s] + r;
            int found = -1;
            for (int kp : dyn.decomp.classes[dyn.decomp.sigma[k]]) {
                if (kp == k) continue;
                bool covers = true;
                for (unsigned long m = 1; m <= window && covers; ++m)
                    if (dyn.support_at(m, k, s) && !dyn.support_at(m, kp, s)) covers = false;
                if (covers) {
                    found = kp;
                    break;
                }
            }
            if (found < 0) {
                boundary = false;
                break;
            }
            ev.companion[s] = found;
        }
        (boundary ? report.boundary : report.undetermined).push_back(k);
    }
    return report;
}

}  // namespace stocenv
