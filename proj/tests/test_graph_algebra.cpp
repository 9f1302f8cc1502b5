#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stocenv/errors.hpp"
#include "stocenv/graph_algebra.hpp"
#include "stocenv/stochastic.hpp"
#include "test_support.hpp"

using namespace stocenv;
using testsupport::example_q;
using testsupport::example_r;
using testsupport::golden_p;

namespace {

BoolMatrix from_bits(const std::vector<std::vector<int>>& rows) {
    BoolMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j]) m.set(i, j, true);
    return m;
}

BoolMatrix full(std::size_t n) {
    BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, true);
    return m;
}

}  // namespace

TEST_CASE("K-theory of the worked-example supports") {
    auto [k0p, k1p] = cuntz_krieger_k_theory(support(golden_p().entries));
    CHECK(k0p.free_rank == 0);
    CHECK(k0p.torsion.empty());
    CHECK(k1p.free_rank == 0);
    CHECK(k1p.torsion.empty());

    auto [k0q, k1q] = cuntz_krieger_k_theory(support(example_q().entries));
    CHECK(k0q.free_rank == 0);
    CHECK(k0q.torsion.empty());
    CHECK(k1q.free_rank == 0);

    auto [k0r, k1r] = cuntz_krieger_k_theory(support(example_r().entries));
    CHECK(k0r.free_rank == 0);
    REQUIRE(k0r.torsion.size() == 1);
    CHECK(k0r.torsion[0] == 3);
    CHECK(k1r.free_rank == 0);
    CHECK(k1r.torsion.empty());
}

TEST_CASE("K-theory of the full shifts") {
    // n states, all edges: K0 = Z_{n-1} generated by the unit, K1 = 0.
    for (std::size_t n : {2, 3, 5, 7}) {
        auto [k0, k1] = cuntz_krieger_k_theory(full(n));
        CHECK(k0.free_rank == 0);
        CHECK(k1.free_rank == 0);
        CHECK(k1.torsion.empty());
        if (n == 2) {
            CHECK(k0.torsion.empty());
        } else {
            REQUIRE(k0.torsion.size() == 1);
            CHECK(k0.torsion[0] == static_cast<long>(n - 1));
            REQUIRE(k0.torsion_unit.has_value());
            // The unit generates Z_{n-1}.
            CHECK(gcd((*k0.torsion_unit)[0], k0.torsion[0]) == 1);
        }
    }
}

TEST_CASE("K-theory of a cycle") {
    auto [k0, k1] = cuntz_krieger_k_theory(from_bits({{0, 1}, {1, 0}}));
    CHECK(k0.free_rank == 1);
    CHECK(k0.torsion.empty());
    CHECK(k1.free_rank == 1);
}

TEST_CASE("zero rows and columns are rejected") {
    BoolMatrix m(2);
    m.set(0, 0, true);
    m.set(1, 0, true);  // column 1 is zero
    CHECK_THROWS_AS(cuntz_krieger_k_theory(m), ZeroRowOrColumn);
}

TEST_CASE("free rank equals n minus the rank of I - A^t") {
    std::mt19937 rng(79);
    std::uniform_int_distribution<int> dim(2, 6);
    std::bernoulli_distribution edge(0.5);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = static_cast<std::size_t>(dim(rng));
        BoolMatrix a(n);
        for (std::size_t i = 0; i < n; ++i) {
            bool any = false;
            for (std::size_t j = 0; j < n; ++j)
                if (edge(rng)) {
                    a.set(i, j, true);
                    any = true;
                }
            if (!any) a.set(i, (i + 1) % n, true);
        }
        if (a.has_zero_row_or_column()) continue;
        auto [k0, k1] = cuntz_krieger_k_theory(a);
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = (i == j ? 1 : 0) - (a.at(j, i) ? 1 : 0);
        SmithNormalForm s = smith_normal_form(m);
        std::size_t rank = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (s.d.at(i, i) != 0) ++rank;
        CHECK(k0.free_rank == n - rank);
        CHECK(k1.free_rank == n - rank);
        Integer torsion_order = 1;
        for (const Integer& t : k0.torsion) torsion_order *= t;
        Integer det = m.determinant();
        if (det != 0) CHECK(torsion_order == (det < 0 ? Integer(-det) : det));
    }
}

TEST_CASE("pointed group comparison") {
    AbelianGroupPresentation z;
    z.free_rank = 1;
    z.free_unit = std::vector<Integer>{1};
    z.torsion_unit = std::vector<Integer>{};
    AbelianGroupPresentation z2 = z;
    z2.free_unit = std::vector<Integer>{2};
    AbelianGroupPresentation zm2 = z;
    zm2.free_unit = std::vector<Integer>{-2};
    CHECK_FALSE(pointed_groups_isomorphic(z, z2));
    CHECK(pointed_groups_isomorphic(z2, zm2));
    CHECK(pointed_groups_isomorphic(z, z));

    AbelianGroupPresentation z4;
    z4.torsion = {Integer(4)};
    z4.torsion_unit = std::vector<Integer>{1};
    z4.free_unit = std::vector<Integer>{};
    AbelianGroupPresentation z4_3 = z4;
    z4_3.torsion_unit = std::vector<Integer>{3};
    AbelianGroupPresentation z4_2 = z4;
    z4_2.torsion_unit = std::vector<Integer>{2};
    CHECK(pointed_groups_isomorphic(z4, z4_3));
    CHECK_FALSE(pointed_groups_isomorphic(z4, z4_2));

    // Different groups are never pointed-isomorphic.
    AbelianGroupPresentation z6;
    z6.torsion = {Integer(6)};
    z6.torsion_unit = std::vector<Integer>{1};
    z6.free_unit = std::vector<Integer>{};
    CHECK_FALSE(pointed_groups_isomorphic(z4, z6));

    // Z + Z_2: the free content shift can absorb torsion differences.
    AbelianGroupPresentation a;
    a.free_rank = 1;
    a.torsion = {Integer(2)};
    a.free_unit = std::vector<Integer>{1};
    a.torsion_unit = std::vector<Integer>{0};
    AbelianGroupPresentation b = a;
    b.torsion_unit = std::vector<Integer>{1};
    CHECK(pointed_groups_isomorphic(a, b));
}

TEST_CASE("worked-example algebra comparisons") {
    BoolMatrix gp = support(golden_p().entries);
    BoolMatrix gq = support(example_q().entries);
    BoolMatrix gr = support(example_r().entries);

    GraphAlgebraComparison pq = compare_graph_algebras(gp, gq);
    CHECK(pq.star.answer == Answer::Yes);
    CHECK(pq.stable.answer == Answer::Yes);

    GraphAlgebraComparison qr = compare_graph_algebras(gq, gr);
    CHECK(qr.star.answer == Answer::No);
    CHECK(qr.stable.answer == Answer::No);
}

TEST_CASE("comparison is indeterminate outside the simple purely infinite case") {
    BoolMatrix cyc = from_bits({{0, 1}, {1, 0}});
    GraphAlgebraComparison cc = compare_graph_algebras(cyc, cyc);
    CHECK(cc.star.answer == Answer::Indeterminate);
    CHECK(cc.stable.answer == Answer::Indeterminate);

    BoolMatrix notsc = from_bits({{1, 1}, {0, 1}});
    GraphAlgebraComparison ns = compare_graph_algebras(notsc, full(2));
    CHECK(ns.star.answer == Answer::Indeterminate);
}

TEST_CASE("comparison is reflexive and symmetric on random supports") {
    std::mt19937 rng(83);
    std::vector<BoolMatrix> pool;
    for (int trial = 0; trial < 8; ++trial)
        pool.push_back(support(testsupport::random_irreducible(rng, 5, 1).entries));
    for (const auto& a : pool) {
        GraphAlgebraComparison self = compare_graph_algebras(a, a);
        if (self.star.answer != Answer::Indeterminate) {
            CHECK(self.star.answer == Answer::Yes);
            CHECK(self.stable.answer == Answer::Yes);
        }
        for (const auto& b : pool) {
            GraphAlgebraComparison ab = compare_graph_algebras(a, b);
            GraphAlgebraComparison ba = compare_graph_algebras(b, a);
            CHECK(ab.star.answer == ba.star.answer);
            CHECK(ab.stable.answer == ba.stable.answer);
            if (ab.star.answer == Answer::Yes) CHECK(ab.stable.answer == Answer::Yes);
        }
    }
}
