// Acceptance-criteria runners: each criterion of the verification matrix as a
// reusable function producing a structured pass/fail result, shared by the
// command-line driver and the acceptance binary.
#ifndef QFLAG_VERIFY_HPP
#define QFLAG_VERIFY_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qflag/character.hpp"
#include "qflag/hilbert.hpp"
#include "qflag/poset.hpp"
#include "qflag/qgrass.hpp"
#include "qflag/weyl.hpp"

namespace qflag {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int number = 0;
    std::string title;
    bool pass = true;
    std::vector<CheckLine> checks;

    void add(std::string name, bool ok, std::string detail = "") {
        pass = pass && ok;
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

struct MinusculeCase {
    char letter = 'A';
    int rank = 0;
    int s = 0;

    std::string name() const {
        std::ostringstream os;
        os << letter << rank << " s=" << s;
        return os.str();
    }
};

/// The verification matrix for the flag-poset criteria: every minuscule
/// (type, s) of rank at most max_rank, capped at rank 7.
inline std::vector<MinusculeCase> minuscule_case_list(int max_rank = 7) {
    std::vector<MinusculeCase> out;
    auto keep = [&](char L, int n, int s) {
        if (n <= max_rank) out.push_back({L, n, s});
    };
    for (int n = 1; n <= 6; ++n)
        for (int s = 1; s <= n; ++s) keep('A', n, s);
    for (int n = 2; n <= 5; ++n) keep('B', n, n);
    for (int n = 2; n <= 5; ++n) keep('C', n, 1);
    for (int n = 4; n <= 6; ++n) {
        keep('D', n, 1);
        keep('D', n, n - 1);
        keep('D', n, n);
    }
    keep('E', 6, 1);
    keep('E', 6, 6);
    keep('E', 7, 7);
    return out;
}

/// The simply-laced minuscule cases of rank at most max_rank (capped at 7),
/// used by the numerical-reciprocity criterion.
inline std::vector<MinusculeCase> simply_laced_case_list(int max_rank = 7) {
    std::vector<MinusculeCase> out;
    const int cap = std::min(max_rank, 7);
    for (int n = 1; n <= cap; ++n)
        for (int s = 1; s <= n; ++s) out.push_back({'A', n, s});
    for (int n = 4; n <= cap; ++n) {
        out.push_back({'D', n, 1});
        out.push_back({'D', n, n - 1});
        out.push_back({'D', n, n});
    }
    if (cap >= 6) {
        out.push_back({'E', 6, 1});
        out.push_back({'E', 6, 6});
    }
    if (cap >= 7) out.push_back({'E', 7, 7});
    return out;
}

namespace detail {

inline bool poset_and_dual_wonderful(const FinitePoset& p) {
    return check_wonderful(p).wonderful && check_wonderful(dual(p)).wonderful;
}

}  // namespace detail

/// Criterion 1: the coset poset of every minuscule case is wonderful, as is
/// its dual, every interval below an element, and the dual of every interval.
inline CriterionResult verify_criterion_1(int max_rank = 7) {
    CriterionResult r;
    r.number = 1;
    r.title = "poset-wonderful";
    for (const auto& c : minuscule_case_list(max_rank)) {
        const RootDatum d = build_root_datum(c.letter, c.rank);
        const FinitePoset p = order_poset(build_minuscule_poset(d, c.s));
        bool ok = detail::poset_and_dual_wonderful(p);
        for (int t = 0; ok && t < static_cast<int>(p.size()); ++t)
            ok = detail::poset_and_dual_wonderful(interval_below(p, t).poset);
        std::ostringstream os;
        os << p.size() << " elements, all intervals and duals";
        r.add(c.name(), ok, os.str());
    }
    return r;
}

/// Criterion 2: the full Bruhat order on the rank-3 symmetric group is not
/// wonderful, and the deterministic search reports the expected witness.
inline CriterionResult verify_criterion_2() {
    CriterionResult r;
    r.number = 2;
    r.title = "symmetric-group-counterexample";
    const RootDatum d = build_root_datum('A', 3);
    const WeylGroup g = build_weyl_group(d);
    const FinitePoset p = bruhat_poset(g);
    const WonderfulReport rep = check_wonderful(p);
    r.add("bruhat(S4) fails", !rep.wonderful && rep.witness.has_value());
    if (rep.witness && !rep.witness->is_bounds_sentinel()) {
        const int s1s3 = element_of_word(g, {1, 3});
        const int s1s2s3 = element_of_word(g, {1, 2, 3});
        const int s3s2s1 = element_of_word(g, {3, 2, 1});
        const bool match = rep.witness->z == s1s3 &&
                           std::set<int>{rep.witness->x, rep.witness->y} == std::set<int>{s1s2s3, s3s2s1};
        r.add("witness is (s1s3; s1s2s3, s3s2s1)", match);
    } else {
        r.add("witness is (s1s3; s1s2s3, s3s2s1)", false, "no usable witness returned");
    }
    return r;
}

/// Criterion 3: degree-n standard monomials match the irreducible character:
/// dimension count for n <= 4 in every case, full weight multisets for rank
/// <= 4 and n <= 3, and the frozen chain-count anchor 6, 20, 50.
inline CriterionResult verify_criterion_3(int max_rank = 7) {
    CriterionResult r;
    r.number = 3;
    r.title = "character-identity";
    for (const auto& c : minuscule_case_list(max_rank)) {
        const RootDatum d = build_root_datum(c.letter, c.rank);
        const MinusculePoset mp = build_minuscule_poset(d, c.s);
        const FinitePoset p = order_poset(mp);
        const Weight lambda = fundamental_weight(d, c.s);
        bool dims = true;
        for (int n = 1; n <= 4; ++n)
            dims = dims && count_decreasing_chains(p, n) == weyl_dim(d, scale(Int(n), lambda));
        r.add(c.name() + " dimensions n<=4", dims);
        if (c.rank <= 4) {
            bool multisets = true;
            for (int n = 1; n <= 3; ++n) multisets = multisets && verify_character_identity(d, c.s, n);
            r.add(c.name() + " weight multisets n<=3", multisets);
        }
    }
    {
        const RootDatum a3 = build_root_datum('A', 3);
        const FinitePoset p = order_poset(build_minuscule_poset(a3, 2));
        const bool anchor = count_decreasing_chains(p, 1) == Int(6) && count_decreasing_chains(p, 2) == Int(20) &&
                            count_decreasing_chains(p, 3) == Int(50);
        r.add("A3 s=2 anchor 6, 20, 50", anchor);
    }
    return r;
}

/// Criterion 4: the functional-equation certificate holds for every flag
/// series and every big-cell series of the matrix; in the simply-laced cases
/// the flag certificate's shift and sign are (r+1, (-1)^{l+1}) for
/// r = (rho, highest root) and l the maximal coset length.
inline CriterionResult verify_criterion_4(int max_rank = 7) {
    CriterionResult r;
    r.number = 4;
    r.title = "hilbert-palindromy";
    for (const auto& c : minuscule_case_list(max_rank)) {
        const RootDatum d = build_root_datum(c.letter, c.rank);
        const HilbertSeries flag = flag_hilbert_series(d, c.s);
        const HilbertSeries cell = big_cell_hilbert_series(d, c.s);
        const GorensteinCertificate fc = gorenstein_certificate(flag);
        const GorensteinCertificate cc = gorenstein_certificate(cell);
        bool ok = fc.holds && cc.holds;
        std::string detail;
        if (ok && (d.letter == 'A' || d.letter == 'D' || d.letter == 'E')) {
            const Int l = build_minuscule_poset(d, c.s).max_length();
            const Int m_expected = reciprocity_r(d) + 1;
            const int sign_expected = l % 2 == 0 ? -1 : 1;  // (-1)^{l+1}
            ok = fc.m == m_expected && fc.sign == sign_expected;
            if (!ok) detail = "flag certificate shift/sign disagree with (r+1, (-1)^{l+1})";
        }
        r.add(c.name() + " flag+big-cell", ok, detail);
    }
    {
        const RootDatum a3 = build_root_datum('A', 3);
        const HilbertSeries flag = flag_hilbert_series(a3, 2);
        const HilbertSeries expect{{Int(1), Int(1)}, std::vector<int>(5, 1)};
        const GorensteinCertificate fc = gorenstein_certificate(flag);
        r.add("A3 s=2 anchor (1+t)/(1-t)^5, shift 4", series_equal(flag, expect) && fc.holds && fc.m == 4);
    }
    return r;
}

/// Criterion 5: the graded dimension polynomial vanishes at -1..-r and
/// satisfies p(n) = (-1)^{deg p} p(-n-r-1) for every simply-laced minuscule
/// case of rank at most 7.
inline CriterionResult verify_criterion_5(int max_rank = 7) {
    CriterionResult r;
    r.number = 5;
    r.title = "dimension-reciprocity";
    for (const auto& c : simply_laced_case_list(max_rank))
        r.add(c.name(), reciprocity_check(build_root_datum(c.letter, c.rank), c.s));
    return r;
}

/// Criterion 6: the flag series of (B_n, omega_n) and (D_{n+1}, omega_{n+1})
/// coincide, and the flag series of (C_n, omega_1) is the polynomial-ring
/// series 1/(1-t)^{2n}, for n = 2, 3, 4.
inline CriterionResult verify_criterion_6() {
    CriterionResult r;
    r.number = 6;
    r.title = "series-coincidences";
    for (int n = 2; n <= 4; ++n) {
        r.add("B" + std::to_string(n) + " spin = D" + std::to_string(n + 1) + " half-spin",
              bn_dn_coincidence_check(n));
        r.add("C" + std::to_string(n) + " s=1 polynomial ring", cn_polynomial_check(n));
    }
    return r;
}

/// Criterion 7: the (B_n, omega_1) flag series has growth 2n, and its big
/// cell is a polynomial-type series on 2n-1 generators, for n = 2, 3, 4.
inline CriterionResult verify_criterion_7() {
    CriterionResult r;
    r.number = 7;
    r.title = "odd-quadric-series";
    for (int n = 2; n <= 4; ++n) {
        const RootDatum d = build_root_datum('B', n);
        r.add("B" + std::to_string(n) + " s=1 growth 2n", gkdim(flag_hilbert_series(d, 1)) == 2 * n);
        const HilbertSeries cell = big_cell_hilbert_series(d, 1);
        const HilbertSeries poly{{Int(1)}, std::vector<int>(static_cast<std::size_t>(2 * n - 1), 1)};
        r.add("B" + std::to_string(n) + " s=1 big cell on 2n-1 generators",
              static_cast<int>(cell.denominator_exponents.size()) == 2 * n - 1 && series_equal(cell, poly));
    }
    return r;
}

/// Criterion 8: the straightening-law axioms hold for the (2,4) and (2,5)
/// minor algebras and for every Schubert quotient of (2,4) at degree 2, and
/// the certified graded dimensions of (2,4) are 1, 6, 20, 50 up to degree 3.
inline CriterionResult verify_criterion_8() {
    CriterionResult r;
    r.number = 8;
    r.title = "straightening-axioms";
    QGrassmannian g24(2, 4);
    r.add("G(2,4) axioms, degree 2", g24.verify_asl_axioms(std::nullopt, 2).all_pass());
    {
        bool ok = true;
        for (const auto& w : g24.subsets()) ok = ok && g24.verify_asl_axioms(w, 2).all_pass();
        r.add("G(2,4) all Schubert quotients, degree 2", ok);
    }
    {
        const std::vector<Int> expect = {Int(1), Int(6), Int(20), Int(50)};
        bool ok = true;
        for (int deg = 0; deg <= 3; ++deg)
            ok = ok && g24.component_dimension(deg) == expect[static_cast<std::size_t>(deg)];
        r.add("G(2,4) dimensions 1, 6, 20, 50", ok);
    }
    {
        QGrassmannian g25(2, 5);
        r.add("G(2,5) axioms, degree 2", g25.verify_asl_axioms(std::nullopt, 2).all_pass());
        const RootDatum a4 = build_root_datum('A', 4);
        const FinitePoset p = order_poset(build_minuscule_poset(a4, 2));
        bool ok = true;
        for (int deg = 0; deg <= 3; ++deg)
            ok = ok && g25.component_dimension(deg) == count_decreasing_chains(p, deg);
        r.add("G(2,5) dimensions match chain counts, degree <= 3", ok);
    }
    return r;
}

/// Criterion 9: the rewriting system passes its confluence self-test for all
/// sizes up to 3x3, the quantum determinant is central up to 3x3, and every
/// degree-2 straightening identity of the (2,4) and (2,5) minor algebras
/// re-checks in a commutative evaluator at q = 1.
inline CriterionResult verify_criterion_9() {
    CriterionResult r;
    r.number = 9;
    r.title = "quantum-matrix-sanity";
    {
        bool ok = true;
        std::string detail;
        for (int m = 1; m <= 3 && ok; ++m)
            for (int n = 1; n <= 3 && ok; ++n)
                try {
                    QMatrixAlgebra alg(m, n);
                } catch (const std::exception& e) {
                    ok = false;
                    detail = e.what();
                }
        r.add("confluence self-test, sizes <= 3x3", ok, detail);
    }
    {
        bool ok = true;
        for (int s = 1; s <= 3; ++s) {
            const QMatrixAlgebra alg(s, s);
            const NCPolynomial det = alg.quantum_determinant();
            for (int gidx = 0; gidx < alg.generator_count(); ++gidx) {
                const NCPolynomial x = NCPolynomial::monomial({gidx});
                ok = ok && (alg.multiply(det, x) - alg.multiply(x, det)).is_zero();
            }
        }
        r.add("quantum determinant central, sizes <= 3x3", ok);
    }
    for (int n : {4, 5}) {
        QGrassmannian g(2, n);
        bool ok = true;
        for (int i = 0; i < g.generator_count() && ok; ++i)
            for (int j = 0; j < g.generator_count() && ok; ++j) ok = g.classical_straightening_check(i, j);
        r.add("G(2," + std::to_string(n) + ") classical re-check of all straightenings", ok);
    }
    return r;
}

/// Criterion 10: the homological conclusions are certified exactly through
/// their combinatorial hypotheses (criteria 1, 4, 8); no direct homological
/// computation is attempted, by design.
inline CriterionResult verify_criterion_10(bool c1, bool c4, bool c8) {
    CriterionResult r;
    r.number = 10;
    r.title = "homological-route";
    r.add("combinatorial hypotheses certified (criteria 1, 4, 8)", c1 && c4 && c8,
          "certified via the wonderful-poset and functional-equation routes; no direct homological computation");
    return r;
}

/// Runs the whole matrix in order.  max_rank restricts the case lists of the
/// rank-parametrized criteria (1, 3, 4, 5); the fixed small cases always run.
inline std::vector<CriterionResult> verify_all(int max_rank = 7) {
    std::vector<CriterionResult> out;
    out.push_back(verify_criterion_1(max_rank));
    out.push_back(verify_criterion_2());
    out.push_back(verify_criterion_3(max_rank));
    out.push_back(verify_criterion_4(max_rank));
    out.push_back(verify_criterion_5(max_rank));
    out.push_back(verify_criterion_6());
    out.push_back(verify_criterion_7());
    out.push_back(verify_criterion_8());
    out.push_back(verify_criterion_9());
    out.push_back(verify_criterion_10(out[0].pass, out[3].pass, out[7].pass));
    return out;
}

}  // namespace qflag

#endif
