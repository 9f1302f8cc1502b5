#include "stocenv/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "stocenv/errors.hpp"

namespace stocenv {

namespace {

std::vector<long> bfs_depths(const BoolMatrix& adj, int start, bool reversed) {
    const std::size_t d = adj.size();
    std::vector<long> depth(d, -1);
    std::deque<int> queue{start};
    depth[start] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < d; ++v) {
            bool edge = reversed ? adj.at(v, u) : adj.at(static_cast<std::size_t>(u), v);
            if (edge && depth[v] < 0) {
                depth[v] = depth[u] + 1;
                queue.push_back(static_cast<int>(v));
            }
        }
    }
    return depth;
}

}  // namespace

bool is_irreducible(const StochasticMatrix& p) {
    const BoolMatrix adj = support(p.entries);
    for (long v : bfs_depths(adj, 0, false))
        if (v < 0) return false;
    for (long v : bfs_depths(adj, 0, true))
        if (v < 0) return false;
    return true;
}

unsigned long period(const StochasticMatrix& p) {
    if (!is_irreducible(p)) throw NotIrreducible();
    const BoolMatrix adj = support(p.entries);
    const std::size_t d = p.size();
    std::vector<long> depth = bfs_depths(adj, 0, false);
    long g = 0;
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
            if (adj.at(u, v)) g = std::gcd(g, depth[u] + 1 - depth[v]);
    return static_cast<unsigned long>(g < 0 ? -g : g);
}

CyclicDecomposition cyclic_decomposition(const StochasticMatrix& p, int basepoint) {
    const std::size_t d = p.size();
    if (basepoint < 0 || static_cast<std::size_t>(basepoint) >= d)
        throw Error("basepoint out of range");
    const unsigned long r = period(p);
    const BoolMatrix adj = support(p.entries);
    std::vector<long> depth = bfs_depths(adj, basepoint, false);

    CyclicDecomposition out;
    out.period = r;
    out.classes.assign(r, {});
    out.sigma.assign(d, 0);
    for (std::size_t j = 0; j < d; ++j) {
        unsigned long residue = static_cast<unsigned long>(depth[j]) % r;
        out.sigma[j] = residue;
        out.classes[residue].push_back(static_cast<int>(j));
    }
    for (unsigned long l = 0; l < r; ++l)
        for (int s : out.classes[l]) out.proper_order.push_back(s);
    return out;
}

bool leads_in_steps(const StochasticMatrix& p, int i, int j, unsigned long n) {
    return support(p.entries).pow(n).at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

StabilizationProfile stabilization_profile(const StochasticMatrix& p,
                                           const CyclicDecomposition& decomp) {
    const std::size_t d = p.size();
    const unsigned long r = decomp.period;
    const unsigned long wielandt = r * ((d - 1) * (d - 1) + 1);
    const unsigned long cap = wielandt + r;

    const BoolMatrix base = support(p.entries);
    BoolMatrix bp = base;  // base^m during the scan
    std::vector<unsigned long> last_incomplete(d, 0);
    for (unsigned long m = 1; m <= cap; ++m) {
        for (std::size_t k = 0; k < d; ++k) {
            // Residue class that must fully reach k in exactly m steps.
            unsigned long cls = (decomp.sigma[k] + r - (m % r)) % r;
            for (int i : decomp.classes[cls])
                if (!bp.at(static_cast<std::size_t>(i), k)) {
                    last_incomplete[k] = m;
                    break;
                }
        }
        if (m < cap) bp = bp.multiply(base);
    }

    StabilizationProfile profile;
    profile.per_state.assign(d, 1);
    for (std::size_t k = 0; k < d; ++k) {
        if (last_incomplete[k] >= wielandt)
            throw CapExceeded("support stabilization did not settle below the primitivity bound");
        profile.per_state[k] = std::max<unsigned long>(1, last_incomplete[k] + 1);
        profile.global = std::max(profile.global, profile.per_state[k]);
    }

    // Persistence re-check at m0(k) and m0(k)+r.
    for (std::size_t k = 0; k < d; ++k) {
        for (unsigned long m : {profile.per_state[k], profile.per_state[k] + r}) {
            BoolMatrix bm = base.pow(m);
            unsigned long cls = (decomp.sigma[k] + r - (m % r)) % r;
            for (int i : decomp.classes[cls])
                if (!bm.at(static_cast<std::size_t>(i), k))
                    throw CapExceeded("stabilization persistence check failed");
        }
    }
    return profile;
}

const RationalMatrix& Dynamics::cached_power(unsigned long n) const {
    if (n >= powers.size()) throw Error("power cache miss; use power_at");
    return powers[n];
}

bool Dynamics::support_at(unsigned long n, int i, int j) const {
    if (n < supports.size())
        return supports[n].at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return support(matrix.entries)
        .pow(n)
        .at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

Dynamics analyze_dynamics(const StochasticMatrix& p, int basepoint, unsigned long min_powers) {
    if (!is_irreducible(p)) throw NotIrreducible();
    Dynamics dyn;
    dyn.matrix = p;
    dyn.decomp = cyclic_decomposition(p, basepoint);
    dyn.profile = stabilization_profile(p, dyn.decomp);

    unsigned long top = std::max(min_powers, dyn.profile.global + 2 * dyn.decomp.period + 2);
    dyn.powers.reserve(top + 1);
    dyn.supports.reserve(top + 1);
    dyn.powers.push_back(RationalMatrix::identity(p.size()));
    dyn.supports.push_back(support(dyn.powers.back()));
    for (unsigned long n = 1; n <= top; ++n) {
        dyn.powers.push_back(dyn.powers.back().multiply(p.entries));
        dyn.supports.push_back(support(dyn.powers.back()));
    }
    return dyn;
}

RationalMatrix power_at(const Dynamics& dyn, unsigned long n) {
    if (n < dyn.powers.size()) return dyn.powers[n];
    RationalMatrix m = dyn.powers.back();
    for (unsigned long i = dyn.powers.size() - 1; i < n; ++i) m = m.multiply(dyn.matrix.entries);
    return m;
}

}  // namespace stocenv
