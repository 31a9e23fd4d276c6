#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qflag/character.hpp"
#include "qflag/hilbert.hpp"
#include "qflag/qgrass.hpp"

using namespace qflag;

namespace {

QScalar qp(int e, int num = 1, int den = 1) { return QScalar::q_power(Rat(e), Rat(num, den)); }

}  // namespace

TEST_CASE("q-scalar ring operations are exact") {
    const QScalar a = qp(2) + qp(-1, 3);
    const QScalar b = qp(1, -1);
    CHECK((a + b) - b == a);
    CHECK(a * QScalar::one() == a);
    CHECK(a * QScalar::zero() == QScalar::zero());
    CHECK(a - a == QScalar::zero());
    CHECK(qp(2) * qp(-2) == QScalar::one());
    CHECK(QScalar::q_minus_qinv() == qp(1) - qp(-1));

    CHECK(qp(3, 5).inverse() == qp(-3, 1, 5));
    CHECK_THROWS_AS(a.inverse(), std::domain_error);
    CHECK_THROWS_AS(QScalar::zero().inverse(), std::domain_error);

    CHECK(a.specialize(Rat(2)) == Rat(4) + Rat(3, 2));
    CHECK(b.specialize(Rat(3)) == Rat(-3));
    CHECK_THROWS_AS(QScalar::q_power(Rat(1, 2)).specialize(Rat(2)), std::domain_error);
}

TEST_CASE("quantum matrix relations normalize as installed") {
    const QMatrixAlgebra alg(2, 2);
    const int x11 = alg.gen(0, 0), x12 = alg.gen(0, 1), x21 = alg.gen(1, 0), x22 = alg.gen(1, 1);

    SECTION("row pair picks up one inverse power of q") {
        const auto nf = alg.normal_form(NCPolynomial::monomial({x12, x11}));
        NCPolynomial expect;
        expect.add_term({x11, x12}, qp(-1));
        CHECK(nf == expect);
    }
    SECTION("column pair behaves like the row pair") {
        const auto nf = alg.normal_form(NCPolynomial::monomial({x21, x11}));
        NCPolynomial expect;
        expect.add_term({x11, x21}, qp(-1));
        CHECK(nf == expect);
    }
    SECTION("anti-diagonal pair commutes") {
        const auto nf = alg.normal_form(NCPolynomial::monomial({x21, x12}));
        NCPolynomial expect;
        expect.add_term({x12, x21}, QScalar::one());
        CHECK(nf == expect);
    }
    SECTION("diagonal pair produces the commutator correction") {
        const auto nf = alg.normal_form(NCPolynomial::monomial({x22, x11}));
        NCPolynomial expect;
        expect.add_term({x11, x22}, QScalar::one());
        expect.add_term({x12, x21}, -QScalar::q_minus_qinv());
        CHECK(nf == expect);
    }
    SECTION("one-variable algebra is free") {
        const QMatrixAlgebra free1(1, 1);
        const auto nf = free1.normal_form(NCPolynomial::monomial({0, 0, 0}));
        CHECK(nf == NCPolynomial::monomial({0, 0, 0}));
    }
    SECTION("multiplication is associative after normalization") {
        const NCPolynomial f = NCPolynomial::monomial({x22, x12});
        const NCPolynomial g = NCPolynomial::monomial({x21});
        const NCPolynomial h = NCPolynomial::monomial({x11, x12});
        CHECK(alg.multiply(alg.multiply(f, g), h) == alg.multiply(f, alg.multiply(g, h)));
    }
    SECTION("rewriting preserves the row and column content of words") {
        const auto nf = alg.normal_form(NCPolynomial::monomial({x22, x21, x12, x11}));
        for (const auto& [w, c] : nf.terms) {
            std::multiset<int> rows, cols;
            for (int g : w) {
                rows.insert(alg.row_of(g));
                cols.insert(alg.col_of(g));
            }
            CHECK(rows == std::multiset<int>{0, 0, 1, 1});
            CHECK(cols == std::multiset<int>{0, 0, 1, 1});
        }
    }
}

TEST_CASE("construction passes the confluence self-test for small sizes") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) CHECK_NOTHROW(QMatrixAlgebra(m, n));
}

TEST_CASE("the quantum determinant is central for square sizes up to three") {
    for (int s = 1; s <= 3; ++s) {
        const QMatrixAlgebra alg(s, s);
        const NCPolynomial det = alg.quantum_determinant();
        for (int g = 0; g < alg.generator_count(); ++g) {
            const NCPolynomial x = NCPolynomial::monomial({g});
            const NCPolynomial commutator = alg.multiply(det, x) - alg.multiply(x, det);
            INFO("size " << s << ", generator " << g);
            CHECK(commutator.is_zero());
        }
    }
}

TEST_CASE("quantum minors normalize to the expected alternating sums") {
    const QMatrixAlgebra alg(2, 2);
    SECTION("a 1x1 minor is the generator itself") {
        const auto one_by_one = alg.quantum_minor({1}, {0});
        CHECK(one_by_one == NCPolynomial::monomial({alg.gen(1, 0)}));
    }
    SECTION("the 2x2 determinant has two terms with a -q sign") {
        NCPolynomial expect;
        expect.add_term({alg.gen(0, 0), alg.gen(1, 1)}, QScalar::one());
        expect.add_term({alg.gen(0, 1), alg.gen(1, 0)}, qp(1, -1));
        CHECK(alg.quantum_determinant() == expect);
    }
    SECTION("index sets must be strictly increasing and in range") {
        CHECK_THROWS_AS(alg.quantum_minor({0, 0}, {0, 1}), std::invalid_argument);
        CHECK_THROWS_AS(alg.quantum_minor({0, 1}, {0, 2}), std::invalid_argument);
    }
}

TEST_CASE("straightening the crossing pair reproduces the frozen expansion") {
    QGrassmannian g(2, 4);
    const int i12 = g.subset_index({1, 2}), i13 = g.subset_index({1, 3}), i14 = g.subset_index({1, 4});
    const int i23 = g.subset_index({2, 3}), i24 = g.subset_index({2, 4}), i34 = g.subset_index({3, 4});

    SECTION("[14][23] = q^{-1} [13][24] - q^{-2} [12][34]") {
        const auto& terms = g.straighten_pair(i14, i23);
        REQUIRE(terms.size() == 2);
        std::map<std::pair<int, int>, QScalar> got;
        for (const auto& t : terms) got[{t.first, t.second}] = t.coeff;
        REQUIRE(got.count({i13, i24}) == 1);
        REQUIRE(got.count({i12, i34}) == 1);
        CHECK(got.at({i13, i24}) == qp(-1));
        CHECK(got.at({i12, i34}) == qp(-2, -1));
    }
    SECTION("the q=1 limit is the classical three-term relation") {
        const auto& terms = g.straighten_pair(i14, i23);
        std::map<std::pair<int, int>, Rat> classical;
        for (const auto& t : terms) classical[{t.first, t.second}] = t.coeff.specialize(Rat(1));
        CHECK(classical.at({i13, i24}) == 1);
        CHECK(classical.at({i12, i34}) == -1);
        CHECK(g.classical_straightening_check(i14, i23));
    }
    SECTION("the expansion re-multiplies to the product") {
        NCPolynomial sum;
        for (const auto& t : g.straighten_pair(i14, i23))
            sum += g.algebra().multiply(g.minor_nf(t.first), g.minor_nf(t.second)).scaled(t.coeff);
        CHECK(sum == g.algebra().multiply(g.minor_nf(i14), g.minor_nf(i23)));
    }
    SECTION("every ordered pair passes the commutative re-check at q = 1") {
        for (int a = 0; a < g.generator_count(); ++a)
            for (int b = 0; b < g.generator_count(); ++b) {
                INFO("pair " << subset_to_string(g.subsets()[a]) << " " << subset_to_string(g.subsets()[b]));
                CHECK(g.classical_straightening_check(a, b));
            }
    }
}

TEST_CASE("comparable products straighten to a single power of q") {
    QGrassmannian g(2, 4);
    const int i12 = g.subset_index({1, 2}), i13 = g.subset_index({1, 3}), i34 = g.subset_index({3, 4});

    SECTION("an in-order pair is already standard") {
        const auto& terms = g.straighten_pair(i12, i34);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].first == i12);
        CHECK(terms[0].second == i34);
        CHECK(terms[0].coeff == QScalar::one());
    }
    SECTION("[34][12] = q^{-2} [12][34], exponent magnitude two") {
        const auto& terms = g.straighten_pair(i34, i12);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].first == i12);
        CHECK(terms[0].second == i34);
        CHECK(terms[0].coeff == qp(-2));
    }
    SECTION("[13][12] = q^{-1} [12][13]") {
        const auto& terms = g.straighten_pair(i13, i12);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].first == i12);
        CHECK(terms[0].second == i13);
        CHECK(terms[0].coeff == qp(-1));
    }
}

TEST_CASE("expansions of longer products re-multiply to their normal form") {
    QGrassmannian g(2, 4);
    const std::vector<std::vector<int>> tuples = {
        {5, 3, 0}, {2, 3, 1}, {4, 4, 0}, {5, 2, 3}, {1, 0, 2}};
    for (const auto& tuple : tuples) {
        auto coords = g.expand_monomial(tuple);
        NCPolynomial sum;
        for (const auto& [seq, c] : coords) {
            NCPolynomial prod = NCPolynomial::monomial({});
            for (int idx : seq) prod = g.algebra().multiply(prod, g.minor_nf(idx));
            sum += prod.scaled(c);
        }
        NCPolynomial direct = NCPolynomial::monomial({});
        for (int idx : tuple) direct = g.algebra().multiply(direct, g.minor_nf(idx));
        INFO("tuple " << tuple[0] << tuple[1] << tuple[2]);
        CHECK(sum == direct);
        for (const auto& [seq, c] : coords)
            for (std::size_t k = 0; k + 1 < seq.size(); ++k) CHECK(g.leq(seq[k], seq[k + 1]));
    }
}

TEST_CASE("component dimensions match Weyl dimensions and chain counts") {
    SECTION("G(2,4): 1, 6, 20, 50") {
        QGrassmannian g(2, 4);
        const RootDatum a3 = build_root_datum('A', 3);
        const auto poset = order_poset(build_minuscule_poset(a3, 2));
        const std::vector<Int> expected = {Int(1), Int(6), Int(20), Int(50)};
        for (int d = 0; d <= 3; ++d) {
            const Int dim = g.component_dimension(d);
            CHECK(dim == expected[static_cast<std::size_t>(d)]);
            CHECK(dim == count_decreasing_chains(poset, d));
            if (d >= 1) CHECK(dim == weyl_dim(a3, scale(Int(d), fundamental_weight(a3, 2))));
        }
    }
    SECTION("G(2,5) agrees with the same counts") {
        QGrassmannian g(2, 5);
        const RootDatum a4 = build_root_datum('A', 4);
        const auto poset = order_poset(build_minuscule_poset(a4, 2));
        for (int d = 0; d <= 3; ++d) {
            const Int dim = g.component_dimension(d);
            CHECK(dim == count_decreasing_chains(poset, d));
            if (d >= 1) CHECK(dim == weyl_dim(a4, scale(Int(d), fundamental_weight(a4, 2))));
        }
    }
}

TEST_CASE("Schubert quotient dimensions match decreasing chain counts") {
    QGrassmannian g(2, 4);
    const RootDatum a3 = build_root_datum('A', 3);
    const auto mp = build_minuscule_poset(a3, 2);
    const auto poset = order_poset(mp);

    SECTION("every interval, degrees up to two") {
        for (const auto& w : g.subsets()) {
            const int widx = poset_index_of_subset(a3, mp, w);
            for (int d = 0; d <= 2; ++d) {
                INFO("w = " << subset_to_string(w) << ", degree " << d);
                CHECK(g.schubert_quotient_dimension(w, d) == count_decreasing_chains(poset, d, widx));
            }
        }
    }
    SECTION("the full quotient at the maximum recovers the component dimension") {
        CHECK(g.schubert_quotient_dimension({3, 4}, 2) == Int(20));
    }
    SECTION("a length-two interval gives six standard pairs") {
        const int widx = poset_index_of_subset(a3, mp, {1, 4});
        CHECK(g.schubert_quotient_dimension({1, 4}, 2) == Int(6));
        CHECK(count_decreasing_chains(poset, 2, widx) == Int(6));
        CHECK(schubert_hilbert_function(a3, 2, widx, 2) == Int(6));
        CHECK(g.schubert_quotient_dimension({1, 4}, 3) == count_decreasing_chains(poset, 3, widx));
    }
    SECTION("the minimum survives with dimension one in every degree") {
        for (int d = 0; d <= 3; ++d) CHECK(g.schubert_quotient_dimension({1, 2}, d) == Int(1));
    }
}

TEST_CASE("the straightening-law axioms hold for the small Grassmannians") {
    SECTION("G(2,4)") {
        QGrassmannian g(2, 4);
        const auto rep = g.verify_asl_axioms(std::nullopt, 2);
        CHECK(rep.all_pass());
        CHECK(rep.failures.empty());
        REQUIRE(rep.standard_counts.size() == 3);
        CHECK(rep.standard_counts[0] == Int(1));
        CHECK(rep.standard_counts[1] == Int(6));
        CHECK(rep.standard_counts[2] == Int(20));
    }
    SECTION("G(2,5)") {
        QGrassmannian g(2, 5);
        const auto rep = g.verify_asl_axioms(std::nullopt, 2);
        CHECK(rep.all_pass());
        CHECK(rep.failures.empty());
        CHECK(rep.standard_counts[1] == Int(10));
    }
    SECTION("a chain poset passes trivially") {
        QGrassmannian g(1, 4);
        const auto rep = g.verify_asl_axioms(std::nullopt, 2);
        CHECK(rep.all_pass());
    }
    SECTION("a single-generator Grassmannian passes trivially") {
        QGrassmannian g(2, 2);
        const auto rep = g.verify_asl_axioms(std::nullopt, 2);
        CHECK(rep.all_pass());
        CHECK(rep.standard_counts[1] == Int(1));
    }
}

TEST_CASE("the straightening-law axioms hold in every Schubert quotient") {
    QGrassmannian g(2, 4);
    for (const auto& w : g.subsets()) {
        const auto rep = g.verify_asl_axioms(w, 2);
        INFO("interval below " << subset_to_string(w));
        CHECK(rep.all_pass());
        CHECK(rep.failures.empty());
    }
    const auto rep = g.verify_asl_axioms(Subset{1, 4}, 2);
    REQUIRE(rep.standard_counts.size() == 3);
    CHECK(rep.standard_counts[0] == Int(1));
    CHECK(rep.standard_counts[1] == Int(3));
    CHECK(rep.standard_counts[2] == Int(6));
}

TEST_CASE("every generator quasi-commutes with the minimal minor as predicted") {
    SECTION("G(2,4): frozen exponent table") {
        QGrassmannian g(2, 4);
        const auto rep = g.minimum_commutation_report();
        CHECK(rep.holds);
        CHECK(rep.orientation == 1);
        std::map<Subset, Rat> expect = {
            {{1, 2}, Rat(0)},  {{1, 3}, Rat(-1)}, {{1, 4}, Rat(-1)},
            {{2, 3}, Rat(-1)}, {{2, 4}, Rat(-1)}, {{3, 4}, Rat(-2)}};
        REQUIRE(rep.exponents.size() == expect.size());
        for (const auto& [J, k] : rep.exponents) {
            INFO("generator " << subset_to_string(J));
            CHECK(k == expect.at(J));
        }
    }
    SECTION("G(2,5) and G(1,4) satisfy the same identity") {
        CHECK(QGrassmannian(2, 5).minimum_commutation_report().holds);
        const auto rep = QGrassmannian(1, 4).minimum_commutation_report();
        CHECK(rep.holds);
        for (const auto& [J, k] : rep.exponents)
            CHECK(k == (J == Subset{1} ? Rat(0) : Rat(-1)));
    }
}

TEST_CASE("the minor poset is isomorphic to the minuscule coset poset") {
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m <= std::min(3, n - 1); ++m) {
            INFO("n = " << n << ", m = " << m);
            CHECK(verify_minor_poset_isomorphism(n, m));
        }
}

TEST_CASE("subset weights translate poset indices both ways") {
    const RootDatum a3 = build_root_datum('A', 3);
    const auto p = build_minuscule_poset(a3, 2);
    CHECK(subset_weight(a3, {1, 2}) == fundamental_weight(a3, 2));
    CHECK(poset_index_of_subset(a3, p, {1, 2}) == 0);
    for (int idx = 0; idx < static_cast<int>(p.size()); ++idx)
        CHECK(poset_index_of_subset(a3, p, subset_of_poset_index(a3, p, 2, idx)) == idx);
}

TEST_CASE("budget violations are rejected") {
    CHECK_THROWS_AS(QGrassmannian(3, 9), std::invalid_argument);
    CHECK_THROWS_AS(QGrassmannian(2, 7), std::invalid_argument);
    CHECK_THROWS_AS(QGrassmannian(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(QGrassmannian(0, 2), std::invalid_argument);
    QGrassmannian g(2, 4);
    CHECK_THROWS_AS(g.component_dimension(4), std::invalid_argument);
    CHECK_THROWS_AS(g.component_dimension(-1), std::invalid_argument);
    CHECK_THROWS_AS(g.schubert_quotient_dimension({1, 4}, 4), std::invalid_argument);
    CHECK_THROWS_AS(g.subset_index({1, 5}), std::invalid_argument);
}

TEST_CASE("the free-function straightening interface reports subsets directly") {
    const auto expansion = straighten_product(2, 4, {1, 4}, {2, 3});
    REQUIRE(expansion.size() == 2);
    std::map<std::vector<Subset>, QScalar> got;
    for (const auto& [chain, c] : expansion) got[chain] = c;
    CHECK(got.at({{1, 3}, {2, 4}}) == qp(-1));
    CHECK(got.at({{1, 2}, {3, 4}}) == qp(-2, -1));
}
