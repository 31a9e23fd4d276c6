#include <catch2/catch_amalgamated.hpp>

#include "qflag/poset.hpp"

using namespace qflag;

namespace {

FinitePoset chain(int k) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
    return FinitePoset::from_covers(k, covers);
}

// The six-element shape: bottom chain, one diamond, top chain.
//       5
//       |
//       4
//      / \
//     2   3
//      \ /
//       1
//       |
//       0
FinitePoset chain_diamond_chain() {
    return FinitePoset::from_covers(6, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}});
}

}  // namespace

TEST_CASE("construction validates the poset axioms") {
    // missing transitivity
    std::vector<std::vector<bool>> bad = {{true, true, false}, {false, true, true}, {false, false, true}};
    CHECK_THROWS_AS(FinitePoset::from_leq(bad), std::invalid_argument);
    // cycle through covers -> antisymmetry failure
    CHECK_THROWS_AS(FinitePoset::from_covers(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(FinitePoset::from_covers(2, {{0, 2}}), std::invalid_argument);
    // closure fills in implied relations
    auto p = FinitePoset::from_covers(3, {{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2));
    CHECK_FALSE(p.leq(2, 0));
}

TEST_CASE("cover pairs recover exactly the generating edges of a chain") {
    auto p = chain(5);
    auto covers = p.cover_pairs();
    REQUIRE(covers.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(covers[i] == std::make_pair(i, i + 1));
    CHECK(p.minimal_elements() == std::vector<int>{0});
    CHECK(p.maximal_elements() == std::vector<int>{4});
}

TEST_CASE("duality is an involution and swaps minima with maxima") {
    auto p = chain_diamond_chain();
    auto d = dual(p);
    CHECK(d.minimal_elements() == std::vector<int>{5});
    CHECK(d.maximal_elements() == std::vector<int>{0});
    CHECK(dual(d).relation() == p.relation());
    // cover pairs of the dual are the reversed cover pairs
    auto pc = p.cover_pairs();
    auto dc = d.cover_pairs();
    REQUIRE(pc.size() == dc.size());
    for (auto [a, b] : pc)
        CHECK(std::find(dc.begin(), dc.end(), std::make_pair(b, a)) != dc.end());
}

TEST_CASE("interval_below extracts order ideals") {
    auto p = chain_diamond_chain();
    auto below4 = interval_below(p, 4);
    CHECK(below4.original_index == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(below4.poset.maximal_elements() == std::vector<int>{4});
    auto below2 = interval_below(p, 2);
    CHECK(below2.original_index == std::vector<int>{0, 1, 2});
    CHECK(below2.poset.cover_pairs().size() == 2);
}

TEST_CASE("lattices and chains are wonderful") {
    CHECK(check_wonderful(chain(6)).wonderful);
    CHECK(check_wonderful(chain_diamond_chain()).wonderful);

    // divisors of 60 under divisibility: a lattice, hence wonderful
    std::vector<int> divs;
    for (int d = 1; d <= 60; ++d)
        if (60 % d == 0) divs.push_back(d);
    std::vector<std::vector<bool>> leq(divs.size(), std::vector<bool>(divs.size()));
    for (std::size_t a = 0; a < divs.size(); ++a)
        for (std::size_t b = 0; b < divs.size(); ++b) leq[a][b] = divs[b] % divs[a] == 0;
    CHECK(check_wonderful(FinitePoset::from_leq(leq)).wonderful);
}

TEST_CASE("a cover-sibling pair with an upper bound but no common cover is flagged") {
    //     5
    //    / \
    //   3   4
    //   |   |
    //   1   2
    //    \ /
    //     0
    auto p = FinitePoset::from_covers(6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}});
    auto rep = check_wonderful(p);
    REQUIRE_FALSE(rep.wonderful);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->z == 0);
    CHECK(rep.witness->x == 1);
    CHECK(rep.witness->y == 2);
    CHECK(rep.witness->u == 5);
}

TEST_CASE("a common cover that avoids the upper bound is flagged by the full scan") {
    // 1 and 2 share the single common cover 3, yet both lie under 6
    // (via 4 resp. 5) while 3 does not, so (z,x,y,u) = (0,1,2,6) violates.
    // Every other cover-sibling pair has a common cover (7, 8, or the top 9),
    // so the first scanning pass stays silent and the exhaustive pass reports.
    auto p = FinitePoset::from_covers(10, {{0, 1},
                                           {0, 2},
                                           {1, 3},
                                           {2, 3},
                                           {1, 4},
                                           {2, 5},
                                           {4, 6},
                                           {5, 6},
                                           {3, 7},
                                           {4, 7},
                                           {3, 8},
                                           {5, 8},
                                           {6, 9},
                                           {7, 9},
                                           {8, 9}});
    auto rep = check_wonderful(p);
    REQUIRE_FALSE(rep.wonderful);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->z == 0);
    CHECK(rep.witness->x == 1);
    CHECK(rep.witness->y == 2);
    CHECK(rep.witness->u == 6);
    CHECK(p.less(rep.witness->x, rep.witness->u));
    CHECK(p.less(rep.witness->y, rep.witness->u));
}

TEST_CASE("posets without unique bounds report the sentinel witness") {
    // two-element antichain: no unique minimum or maximum
    auto anti = FinitePoset::from_covers(2, {});
    auto rep = check_wonderful(anti);
    REQUIRE_FALSE(rep.wonderful);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->is_bounds_sentinel());

    // unique minimum but two maximal elements
    auto vee = FinitePoset::from_covers(3, {{0, 1}, {0, 2}});
    auto rep2 = check_wonderful(vee);
    REQUIRE_FALSE(rep2.wonderful);
    REQUIRE(rep2.witness.has_value());
    CHECK(rep2.witness->is_bounds_sentinel());
}

TEST_CASE("decreasing chain counts on small shapes") {
    auto c4 = chain(4);
    CHECK(count_decreasing_chains(c4, 0) == 1);
    CHECK(count_decreasing_chains(c4, 1) == 4);
    CHECK(count_decreasing_chains(c4, 2) == 10);  // multisets of size 2 from 4
    CHECK(count_decreasing_chains(c4, 3) == 20);

    auto diamond = FinitePoset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(count_decreasing_chains(diamond, 1) == 4);
    CHECK(count_decreasing_chains(diamond, 2) == 9);
    CHECK(count_decreasing_chains(diamond, 3) == 16);

    auto p = chain_diamond_chain();
    CHECK(count_decreasing_chains(p, 1) == 6);
    CHECK(count_decreasing_chains(p, 2) == 20);
    CHECK(count_decreasing_chains(p, 3) == 50);
}

TEST_CASE("bounded counts satisfy the extension recurrence") {
    auto p = chain_diamond_chain();
    for (int n = 1; n <= 4; ++n) {
        Int total(0);
        for (int w = 0; w < static_cast<int>(p.size()); ++w) total += count_decreasing_chains(p, n, w);
        // prepending one more maximal entry t_1 = w on top of bounded chains
        CHECK(total == count_decreasing_chains(p, n + 1));
    }
    // bounding by the global maximum changes nothing
    CHECK(count_decreasing_chains(p, 3, 5) == count_decreasing_chains(p, 3));
}
