#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "stocenv/graph.hpp"
#include "stocenv/stochastic.hpp"

namespace testsupport {

inline stocenv::StochasticMatrix from_rows(const std::vector<std::vector<std::string>>& rows) {
    stocenv::RationalMatrix raw(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            raw.at(i, j) = stocenv::parse_rational(rows[i][j]);
    return stocenv::validate(raw);
}

/// The periodic 3-state example used as the golden test throughout.
inline stocenv::StochasticMatrix golden_p() {
    return from_rows({{"0", "0", "1"}, {"0", "0", "1"}, {"1/2", "1/2", "0"}});
}

/// Aperiodic 3-state matrix with a single zero at (1,3).
inline stocenv::StochasticMatrix example_q() {
    return from_rows({{"1/2", "1/2", "0"}, {"1/3", "1/3", "1/3"}, {"1/3", "1/3", "1/3"}});
}

/// Aperiodic 3-state matrix with a single zero at (3,3).
inline stocenv::StochasticMatrix example_r() {
    return from_rows({{"1/3", "1/3", "1/3"}, {"1/3", "1/3", "1/3"}, {"1/2", "1/2", "0"}});
}

/**
 * Random irreducible stochastic matrix with exactly d states and period r.
 * Deterministic given the generator state; retries until the sampled support
 * is irreducible with the requested period.
 */
inline stocenv::StochasticMatrix random_irreducible(std::mt19937& rng, std::size_t d,
                                                    unsigned long r) {
    using namespace stocenv;
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> weight(1, 5);
    for (;;) {
        // Assign every state a cyclic class, each class nonempty.
        std::vector<unsigned long> class_of(d);
        for (std::size_t i = 0; i < d; ++i)
            class_of[i] = i < r ? i : std::uniform_int_distribution<unsigned long>(0, r - 1)(rng);
        std::shuffle(class_of.begin(), class_of.end(), rng);

        std::vector<std::vector<int>> members(r);
        for (std::size_t i = 0; i < d; ++i) members[class_of[i]].push_back(static_cast<int>(i));

        RationalMatrix raw(d, d);
        for (std::size_t u = 0; u < d; ++u) {
            const std::vector<int>& succ = members[(class_of[u] + 1) % r];
            std::vector<int> chosen;
            for (int v : succ)
                if (coin(rng)) chosen.push_back(v);
            if (chosen.empty())
                chosen.push_back(succ[std::uniform_int_distribution<std::size_t>(
                    0, succ.size() - 1)(rng)]);
            long total = 0;
            std::vector<long> w(chosen.size());
            for (std::size_t t = 0; t < chosen.size(); ++t) {
                w[t] = weight(rng);
                total += w[t];
            }
            for (std::size_t t = 0; t < chosen.size(); ++t) {
                Rational q(w[t], total);
                q.canonicalize();
                raw.at(u, static_cast<std::size_t>(chosen[t])) = q;
            }
        }
        StochasticMatrix p = validate(raw);
        if (!is_irreducible(p)) continue;
        if (period(p) != r) continue;
        return p;
    }
}

/// Pool entry: matrix plus its requested shape, for reporting.
struct PoolEntry {
    stocenv::StochasticMatrix matrix;
    std::size_t d;
    unsigned long r;
};

/// Deterministic pool covering every period 1..d_max.
inline std::vector<PoolEntry> random_pool(std::size_t count, std::size_t d_max,
                                          unsigned int seed) {
    std::mt19937 rng(seed);
    std::vector<PoolEntry> pool;
    for (std::size_t i = 0; i < count; ++i) {
        unsigned long r = static_cast<unsigned long>(i % d_max) + 1;
        std::size_t d =
            std::uniform_int_distribution<std::size_t>(static_cast<std::size_t>(r), d_max)(rng);
        pool.push_back(PoolEntry{random_irreducible(rng, d, r), d, r});
    }
    return pool;
}

}  // namespace testsupport
