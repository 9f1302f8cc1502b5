#include "stocenv/graph_algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "stocenv/errors.hpp"

namespace stocenv {

namespace {

bool strongly_connected(const BoolMatrix& adj) {
    const std::size_t d = adj.size();
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<char> seen(d, 0);
        std::deque<std::size_t> queue{0};
        seen[0] = 1;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < d; ++v) {
                bool edge = pass == 0 ? adj.at(u, v) : adj.at(v, u);
                if (edge && !seen[v]) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
    }
    return true;
}

Integer positive_mod(const Integer& x, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

std::pair<AbelianGroupPresentation, AbelianGroupPresentation> cuntz_krieger_k_theory(
    const BoolMatrix& a) {
    if (a.has_zero_row_or_column())
        throw ZeroRowOrColumn("support matrix has a zero row or column");
    const std::size_t d = a.size();
    IntegerMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m.at(i, j) = (i == j ? Integer(1) : Integer(0)) - Integer(a.at(j, i) ? 1 : 0);

    SmithNormalForm snf = smith_normal_form(m);

    AbelianGroupPresentation k0, k1;
    std::vector<std::size_t> torsion_coords, free_coords;
    for (std::size_t i = 0; i < d; ++i) {
        const Integer& di = snf.d.at(i, i);
        if (di == 0) {
            free_coords.push_back(i);
        } else if (di > 1) {
            torsion_coords.push_back(i);
            k0.torsion.push_back(di);
        }
    }
    k0.free_rank = free_coords.size();
    k1.free_rank = free_coords.size();

    // Unit class [1]_0 in cokernel coordinates: U * (1,...,1).
    std::vector<Integer> y(d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) y[i] += snf.u.at(i, j);
    std::vector<Integer> tu, fu;
    for (std::size_t idx = 0; idx < torsion_coords.size(); ++idx)
        tu.push_back(positive_mod(y[torsion_coords[idx]], k0.torsion[idx]));
    for (std::size_t c : free_coords) fu.push_back(y[c]);
    k0.torsion_unit = std::move(tu);
    k0.free_unit = std::move(fu);
    return {k0, k1};
}

namespace {

Integer gcd_content(const std::vector<Integer>& v) {
    Integer g = 0;
    for (const Integer& x : v) g = gcd(g, x);
    return g;
}

/// Aut(T)-orbit of a torsion element, T = Z_{d1} + ... with d1 | d2 | ...
std::set<std::vector<Integer>> torsion_orbit(const std::vector<Integer>& factors,
                                             const std::vector<Integer>& start) {
    const std::size_t k = factors.size();
    std::set<std::vector<Integer>> orbit;
    std::vector<Integer> seed(k);
    for (std::size_t i = 0; i < k; ++i) seed[i] = positive_mod(start[i], factors[i]);
    orbit.insert(seed);
    std::deque<std::vector<Integer>> queue{seed};

    // Generators: per-coordinate unit multiplications and the elementary
    // transvections e_j -> e_j + c*e_i with c = 1 (i < j) or d_i/d_j (i > j).
    while (!queue.empty()) {
        std::vector<Integer> x = queue.front();
        queue.pop_front();
        auto push = [&](std::vector<Integer> next) {
            if (orbit.insert(next).second) queue.push_back(std::move(next));
        };
        for (std::size_t i = 0; i < k; ++i) {
            for (Integer unit = 2; unit < factors[i]; ++unit) {
                if (gcd(unit, factors[i]) != 1) continue;
                std::vector<Integer> next = x;
                next[i] = positive_mod(unit * x[i], factors[i]);
                push(std::move(next));
            }
            for (std::size_t j = 0; j < k; ++j) {
                if (i == j) continue;
                Integer c = i < j ? Integer(1) : factors[i] / factors[j];
                std::vector<Integer> next = x;
                next[i] = positive_mod(next[i] + c * x[j], factors[i]);
                push(std::move(next));
            }
        }
    }
    return orbit;
}

}  // namespace

bool pointed_groups_isomorphic(const AbelianGroupPresentation& g,
                               const AbelianGroupPresentation& h) {
    if (!g.same_group(h)) return false;
    if (!g.torsion_unit || !h.torsion_unit || !g.free_unit || !h.free_unit)
        throw Error("pointed comparison requires unit classes on both sides");

    Integer order = 1;
    for (const Integer& f : g.torsion) order *= f;
    if (order > 10000) throw Error("torsion subgroup exceeds the documented desk-scale cap");

    const Integer cg = gcd_content(*g.free_unit);
    const Integer ch = gcd_content(*h.free_unit);
    if (cg != ch) return false;

    // (G,u) ~ (G,v) iff some automorphism of the torsion part carries u's
    // torsion component into v's coset modulo content * torsion.
    std::set<std::vector<Integer>> orbit = torsion_orbit(g.torsion, *g.torsion_unit);
    const std::size_t k = g.torsion.size();
    for (const std::vector<Integer>& x : orbit) {
        bool match = true;
        for (std::size_t i = 0; i < k && match; ++i) {
            Integer step = gcd(cg, g.torsion[i]);
            if (positive_mod((*h.torsion_unit)[i] - x[i], step) != 0) match = false;
        }
        if (match) return true;
    }
    return false;
}

GraphAlgebraComparison compare_graph_algebras(const BoolMatrix& a, const BoolMatrix& b) {
    GraphAlgebraComparison out;
    out.star.question = Question::StarIsomorphic;
    out.stable.question = Question::StablyIsomorphic;

    auto not_simple = [](const BoolMatrix& m, std::string& why) {
        if (m.is_permutation()) {
            why = "permutation support: Cuntz-Krieger algebra is not simple purely infinite";
            return true;
        }
        if (!strongly_connected(m)) {
            why = "support digraph is not strongly connected";
            return true;
        }
        return false;
    };
    std::string why;
    if (not_simple(a, why) || not_simple(b, why)) {
        out.star.answer = Answer::Indeterminate;
        out.stable.answer = Answer::Indeterminate;
        out.star.reason = why;
        out.stable.reason = why;
        return out;
    }

    auto [k0a, k1a] = cuntz_krieger_k_theory(a);
    auto [k0b, k1b] = cuntz_krieger_k_theory(b);

    const bool groups_match = k0a.same_group(k0b) && k1a.same_group(k1b);
    out.stable.answer = groups_match ? Answer::Yes : Answer::No;
    out.stable.reason = groups_match ? "K0 and K1 agree" : "K0 or K1 differ";

    if (!groups_match) {
        out.star.answer = Answer::No;
        out.star.reason = "K0 or K1 differ";
    } else if (pointed_groups_isomorphic(k0a, k0b)) {
        out.star.answer = Answer::Yes;
        out.star.reason = "K-theory with unit class agrees";
    } else {
        out.star.answer = Answer::No;
        out.star.reason = "no K0 isomorphism carries the unit class to the unit class";
    }
    return out;
}

}  // namespace stocenv
