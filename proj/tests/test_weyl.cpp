#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "qflag/weyl.hpp"

using namespace qflag;

namespace {

struct GroupOracle {
    const char* type;
    long order;
    long longest_length;
};

// |W| and the number of positive roots (= length of the longest element).
const GroupOracle kGroups[] = {
    {"A1", 2, 1},  {"A2", 6, 3},    {"A3", 24, 6},  {"A4", 120, 10}, {"B2", 8, 4},
    {"B3", 48, 9}, {"C3", 48, 9},   {"B4", 384, 16}, {"C4", 384, 16}, {"D4", 192, 12},
    {"G2", 12, 6}, {"F4", 1152, 24},
};

}  // namespace

TEST_CASE("group orders and longest lengths match the classical tables") {
    for (const auto& gexp : kGroups) {
        auto g = build_weyl_group(build_root_datum(gexp.type));
        INFO(gexp.type);
        CHECK(g.elements.size() == static_cast<std::size_t>(gexp.order));
        CHECK(g.elements.back().length == gexp.longest_length);
        CHECK(g.elements.back().length == static_cast<long>(g.datum.positive_roots.size()));
        // identity is the unique length-0 element and sits at index 0
        CHECK(g.identity() == 0);
        CHECK(g.elements[0].length == 0);
        CHECK(g.elements[1].length == 1);
    }
}

TEST_CASE("enumeration refuses groups beyond the budget") {
    CHECK_THROWS_AS(build_weyl_group(build_root_datum('D', 5)), std::domain_error);  // order 1920
    CHECK_THROWS_AS(build_weyl_group(build_root_datum('A', 7)), std::domain_error);  // order 40320
}

TEST_CASE("the longest element negates rho and reduced words multiply back") {
    for (const char* type : {"A3", "B3", "D4", "G2"}) {
        auto d = build_root_datum(type);
        auto g = build_weyl_group(d);
        const auto& w0 = g.elements.back();
        CHECK(act(w0, rho(d)) == scale(Int(-1), rho(d)));
        for (const auto& e : g.elements) {
            CHECK(e.word.size() == e.length);
            CHECK(element_of_word(g, e.word) == g.index_of.at(e.images));
        }
    }
}

TEST_CASE("reflections are involutions and generate the Bruhat covers") {
    auto g = build_weyl_group(build_root_datum('A', 3));
    auto refl = reflections(g);
    CHECK(refl.size() == 6);
    for (int t : refl) {
        CHECK(g.elements[t].length % 2 == 1);
        CHECK(compose(g, t, t) == g.identity());
    }
    // covers of the Bruhat order == {(x, tx) : t reflection, l(tx) = l(x)+1}
    auto poset = bruhat_poset(g);
    std::set<std::pair<int, int>> via_reflections;
    for (std::size_t x = 0; x < g.elements.size(); ++x)
        for (int t : refl) {
            int y = compose(g, t, static_cast<int>(x));
            if (g.elements[y].length == g.elements[x].length + 1) via_reflections.emplace(static_cast<int>(x), y);
        }
    auto covers = poset.cover_pairs();
    CHECK(std::set<std::pair<int, int>>(covers.begin(), covers.end()) == via_reflections);
}

TEST_CASE("Bruhat order agrees with the transitive closure of reflection covers") {
    for (const char* type : {"A3", "B2", "G2"}) {
        auto g = build_weyl_group(build_root_datum(type));
        auto refl = reflections(g);
        std::vector<std::pair<int, int>> covers;
        for (std::size_t x = 0; x < g.elements.size(); ++x)
            for (int t : refl) {
                int y = compose(g, t, static_cast<int>(x));
                if (g.elements[y].length == g.elements[x].length + 1)
                    covers.emplace_back(static_cast<int>(x), y);
            }
        auto closed = FinitePoset::from_covers(g.elements.size(), covers);
        INFO(type);
        CHECK(closed.relation() == bruhat_poset(g).relation());
    }
}

TEST_CASE("the Bruhat order on S_4 is not wonderful, with the expected witness") {
    auto g = build_weyl_group(build_root_datum('A', 3));
    auto poset = bruhat_poset(g);
    auto rep = check_wonderful(poset);
    REQUIRE_FALSE(rep.wonderful);
    REQUIRE(rep.witness.has_value());

    const int s1s3 = element_of_word(g, {1, 3});
    const int s1s2s3 = element_of_word(g, {1, 2, 3});
    const int s3s2s1 = element_of_word(g, {3, 2, 1});
    CHECK(rep.witness->z == s1s3);
    CHECK(std::set<int>{rep.witness->x, rep.witness->y} == std::set<int>{s1s2s3, s3s2s1});
    // the reported u is a genuine strict upper bound of both
    CHECK(poset.less(rep.witness->x, rep.witness->u));
    CHECK(poset.less(rep.witness->y, rep.witness->u));
    // and no common cover of x,y sits below it
    auto up = poset.upper_covers();
    for (int c : up[rep.witness->x])
        if (std::find(up[rep.witness->y].begin(), up[rep.witness->y].end(), c) != up[rep.witness->y].end())
            CHECK_FALSE(poset.leq(c, rep.witness->u));

    CHECK_FALSE(check_wonderful(dual(poset)).wonderful);
}

TEST_CASE("minuscule poset of (A3, 2) has the documented shape") {
    auto d = build_root_datum('A', 3);
    auto p = build_minuscule_poset(d, 2);
    REQUIRE(p.size() == 6);
    std::vector<Int> expected_lengths = {0, 1, 2, 2, 3, 4};
    CHECK(p.lengths == expected_lengths);
    CHECK(p.max_length() == 4);
    CHECK(p.weights[0] == fundamental_weight(d, 2));
    CHECK(p.weights[p.top()] == scale(Int(-1), fundamental_weight(d, 2)));

    auto fp = order_poset(p);
    CHECK(check_wonderful(fp).wonderful);
    CHECK(check_wonderful(dual(fp)).wonderful);
    // covers from the BFS agree with the abstract poset's cover pairs
    std::set<std::pair<int, int>> bfs_covers;
    for (int x = 0; x < static_cast<int>(p.size()); ++x)
        for (auto [label, y] : p.covers_up[x]) bfs_covers.emplace(x, y);
    auto pairs = fp.cover_pairs();
    CHECK(std::set<std::pair<int, int>>(pairs.begin(), pairs.end()) == bfs_covers);
}

TEST_CASE("tiny and exceptional minuscule posets have the right sizes") {
    auto a1 = build_minuscule_poset(build_root_datum('A', 1), 1);
    CHECK(a1.size() == 2);
    CHECK(a1.covers_up[0].size() == 1);

    CHECK(build_minuscule_poset(build_root_datum('A', 4), 2).size() == 10);
    CHECK(build_minuscule_poset(build_root_datum('B', 3), 3).size() == 8);
    CHECK(build_minuscule_poset(build_root_datum('C', 3), 1).size() == 6);
    CHECK(build_minuscule_poset(build_root_datum('D', 4), 4).size() == 8);
    CHECK(build_minuscule_poset(build_root_datum('D', 5), 5).size() == 16);

    auto e6 = build_minuscule_poset(build_root_datum('E', 6), 1);
    CHECK(e6.size() == 27);
    CHECK(e6.max_length() == 16);
    auto e7 = build_minuscule_poset(build_root_datum('E', 7), 7);
    CHECK(e7.size() == 56);
    CHECK(e7.max_length() == 27);
    CHECK(check_wonderful(order_poset(e7)).wonderful);

    CHECK_THROWS_AS(build_minuscule_poset(build_root_datum('C', 3), 2), std::invalid_argument);
    CHECK_THROWS_AS(build_minuscule_poset(build_root_datum('G', 2), 1), std::invalid_argument);
}

TEST_CASE("representative words are minimal-length coset representatives") {
    for (auto [type, s] : std::vector<std::pair<const char*, int>>{{"A3", 1}, {"A3", 2}, {"B3", 3}, {"C3", 1}, {"D4", 4}}) {
        auto d = build_root_datum(type);
        auto g = build_weyl_group(d);
        auto p = build_minuscule_poset(d, s);
        INFO(type << " s=" << s);
        for (int x = 0; x < static_cast<int>(p.size()); ++x) {
            int rep = representative_in(g, p, x);
            CHECK(g.elements[rep].length == p.lengths[x]);
            CHECK(act(g.elements[rep], fundamental_weight(d, s)) == p.weights[x]);
            // no group element reaching this weight is shorter
            for (const auto& e : g.elements)
                if (act(e, fundamental_weight(d, s)) == p.weights[x]) CHECK(e.length >= p.lengths[x]);
        }
    }
}

TEST_CASE("weight dominance order coincides with Bruhat order on representatives") {
    for (auto [type, s] : std::vector<std::pair<const char*, int>>{
             {"A3", 1}, {"A3", 2}, {"A3", 3}, {"A4", 2}, {"B3", 3}, {"B4", 4}, {"C3", 1}, {"C4", 1}, {"D4", 1}, {"D4", 3}, {"D4", 4}}) {
        auto d = build_root_datum(type);
        auto g = build_weyl_group(d);
        auto p = build_minuscule_poset(d, s);
        INFO(type << " s=" << s);
        std::vector<int> reps(p.size());
        for (int x = 0; x < static_cast<int>(p.size()); ++x) reps[x] = representative_in(g, p, x);
        for (int x = 0; x < static_cast<int>(p.size()); ++x)
            for (int y = 0; y < static_cast<int>(p.size()); ++y)
                CHECK(bruhat_leq_minuscule(p, x, y) == bruhat_leq_general(g, reps[x], reps[y]));
    }
}

TEST_CASE("minuscule covers raise length by one and are labelled consistently") {
    auto d = build_root_datum('D', 5);
    auto p = build_minuscule_poset(d, 5);
    for (int x = 0; x < static_cast<int>(p.size()); ++x)
        for (auto [label, y] : p.covers_up[x]) {
            CHECK(p.lengths[y] == p.lengths[x] + 1);
            CHECK(p.weights[y] == sub(p.weights[x], root_as_weight(d, simple_root(d, label))));
            CHECK(bruhat_leq_minuscule(p, x, y));
            CHECK_FALSE(bruhat_leq_minuscule(p, y, x));
        }
}
