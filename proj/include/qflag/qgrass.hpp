// Quantum Grassmannian: the subalgebra of O_q(M_{m,n}) generated by the
// maximal quantum minors, its standard monomial basis, straightening laws,
// Schubert quotients, and the graded straightening-law axioms.
#ifndef QFLAG_QGRASS_HPP
#define QFLAG_QGRASS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qflag/qmatrix.hpp"
#include "qflag/weyl.hpp"

namespace qflag {

/// Column set of a maximal minor: strictly increasing, 1-based labels.
using Subset = std::vector<int>;

inline std::vector<Subset> all_m_subsets(int n, int m) {
    std::vector<Subset> out;
    Subset cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        const int need = m - static_cast<int>(cur.size());
        for (int v = next; v + need - 1 <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

/// Componentwise order on equal-size subsets; {1..m} is the minimum.
inline bool subset_leq(const Subset& a, const Subset& b) {
    if (a.size() != b.size()) throw std::invalid_argument("subset sizes differ");
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

inline std::string subset_to_string(const Subset& s) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}";
    return os.str();
}

/// Weight of the minor labelled by J in the weight lattice of A_{n-1}:
/// the sum over j in J of e_j, where e_j = omega_j - omega_{j-1}
/// (omega_0 = omega_n = 0).  {1..m} maps to omega_m.
inline Weight subset_weight(const RootDatum& d, const Subset& J) {
    const int n = d.rank + 1;
    Weight w = zero_weight(d);
    for (int j : J) {
        if (j < 1 || j > n) throw std::invalid_argument("subset entry out of range");
        if (j <= n - 1) w.coords[j - 1] += 1;
        if (j >= 2) w.coords[j - 2] -= 1;
    }
    return w;
}

/// One term of a degree-2 straightening, by generator index:
/// coeff * [first][second] with first <= second componentwise.
struct StraightenTermIdx {
    int first = 0, second = 0;
    QScalar coeff;
};

/// The same term with explicit column sets (for reports and callers).
struct StraightenTerm {
    Subset first, second;
    QScalar coeff;
};

struct StraighteningEntry {
    Subset left, right;  // the input product [left][right]
    std::vector<StraightenTerm> expansion;
};

struct ASLReport {
    int m = 0, n = 0;
    bool quotient = false;
    Subset top;  // interval top when quotient == true
    int degree = 2;
    bool axiom1_generators = true;
    bool axiom2_degree_one_independent = true;
    bool axiom3_standard_independent = true;
    bool axiom4_incomparable_shape = true;
    bool axiom5_commutation_shape = true;
    std::vector<Int> standard_counts;  // by degree, 0..degree
    std::vector<std::string> failures;
    std::vector<StraighteningEntry> tables;

    bool all_pass() const {
        return axiom1_generators && axiom2_degree_one_independent && axiom3_standard_independent &&
               axiom4_incomparable_shape && axiom5_commutation_shape;
    }
};

/// Quasi-commutation of every generator against the minimal one:
/// [J][E] = q^k [E][J] exactly, with k = orientation * ((wt(J),L) - (L,L))
/// for L the fundamental weight labelling the embedding.
struct CommutationReport {
    bool holds = true;
    int orientation = 1;
    std::vector<std::pair<Subset, Rat>> exponents;
    std::vector<std::string> failures;
};

class QGrassmannian {
  public:
    QGrassmannian(int m, int n)
        : m_(checked_m(m, n)), n_(n), algebra_(m, n), subsets_(all_m_subsets(n, m)) {
        std::vector<int> rows(static_cast<std::size_t>(m_));
        std::iota(rows.begin(), rows.end(), 0);
        for (std::size_t i = 0; i < subsets_.size(); ++i) {
            subset_index_[subsets_[i]] = static_cast<int>(i);
            std::vector<int> cols(subsets_[i].size());
            for (std::size_t k = 0; k < cols.size(); ++k) cols[k] = subsets_[i][k] - 1;
            minors_.push_back(algebra_.quantum_minor(rows, cols));
        }
        const std::size_t sz = subsets_.size();
        leq_.assign(sz, std::vector<char>(sz, 0));
        for (std::size_t a = 0; a < sz; ++a)
            for (std::size_t b = 0; b < sz; ++b) leq_[a][b] = subset_leq(subsets_[a], subsets_[b]) ? 1 : 0;
    }

    int m() const { return m_; }
    int n() const { return n_; }
    const QMatrixAlgebra& algebra() const { return algebra_; }
    const std::vector<Subset>& subsets() const { return subsets_; }
    int generator_count() const { return static_cast<int>(subsets_.size()); }
    const NCPolynomial& minor_nf(int i) const { return minors_.at(static_cast<std::size_t>(i)); }

    int subset_index(const Subset& s) const {
        auto it = subset_index_.find(s);
        if (it == subset_index_.end())
            throw std::invalid_argument("not an m-subset of {1..n}: " + subset_to_string(s));
        return it->second;
    }

    /// Componentwise comparison by generator index.  The subsets are stored in
    /// lexicographic order, so index order refines this partial order.
    bool leq(int a, int b) const {
        return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0;
    }

    /// Degree-2 straightening: [i][j] = sum of c * [a][b] with a <= b
    /// componentwise.  Solved triangularly against leading PBW words and
    /// certified by re-multiplying the expansion (round trip, exact in q).
    const std::vector<StraightenTermIdx>& straighten_pair(int i, int j) {
        const auto key = std::make_pair(i, j);
        if (auto it = straighten_cache_.find(key); it != straighten_cache_.end()) return it->second;
        const NCPolynomial target = algebra_.multiply(minor_nf(i), minor_nf(j));
        NCPolynomial remainder = target;
        std::vector<StraightenTermIdx> out;
        Word prev;
        bool have_prev = false;
        while (!remainder.is_zero()) {
            Word w = remainder.terms.begin()->first;
            if (have_prev && !(prev < w))
                throw std::logic_error("straightening solver: leading word failed to advance");
            prev = w;
            have_prev = true;
            const auto [a, b] = decode_standard_pair(w);
            const NCPolynomial& basis = standard_pair_nf(a, b);
            const auto lead = basis.terms.find(w);
            if (lead == basis.terms.end() || !lead->second.is_single_term())
                throw std::logic_error("straightening solver: pivot is not a single invertible term");
            const QScalar c = remainder.terms.at(w) * lead->second.inverse();
            out.push_back({a, b, c});
            remainder -= basis.scaled(c);
        }
        NCPolynomial roundtrip;
        for (const auto& t : out)
            roundtrip += algebra_.multiply(minor_nf(t.first), minor_nf(t.second)).scaled(t.coeff);
        if (!(roundtrip == target)) throw std::logic_error("straightening expansion failed its round-trip check");
        return straighten_cache_.emplace(key, std::move(out)).first->second;
    }

    /// Expand an arbitrary product of minors over the standard basis by
    /// straightening adjacent out-of-order pairs until all sequences are
    /// componentwise weakly increasing.  Keys are generator index sequences.
    std::map<std::vector<int>, QScalar> expand_monomial(const std::vector<int>& seq) {
        std::map<std::vector<int>, QScalar> done;
        std::map<std::vector<int>, QScalar> work;
        work[seq] = QScalar::one();
        while (!work.empty()) {
            auto it = work.begin();
            std::vector<int> s = it->first;
            QScalar c = it->second;
            work.erase(it);
            if (c.is_zero()) continue;
            std::size_t pos = 0;
            bool standard = true;
            for (; pos + 1 < s.size(); ++pos)
                if (!leq(s[pos], s[pos + 1])) {
                    standard = false;
                    break;
                }
            if (standard) {
                QScalar& slot = done[s];
                slot += c;
                if (slot.is_zero()) done.erase(s);
                continue;
            }
            for (const auto& t : straighten_pair(s[pos], s[pos + 1])) {
                // index order refines the componentwise order, so this
                // guarantees the rewriting terminates
                if (!(t.first < s[pos]))
                    throw std::logic_error("straightening failed to decrease; aborting expansion");
                std::vector<int> ns = s;
                ns[pos] = t.first;
                ns[pos + 1] = t.second;
                QScalar& slot = work[ns];
                slot += QScalar(c * t.coeff);
                if (slot.is_zero()) work.erase(ns);
            }
        }
        return done;
    }

    /// All componentwise weakly increasing index sequences of the given
    /// length, optionally restricted to an allowed set of generators.
    std::vector<std::vector<int>> standard_sequences(int degree, const std::vector<char>* allowed = nullptr) const {
        check_degree(degree);
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        const int sz = generator_count();
        std::function<void()> rec = [&]() {
            if (static_cast<int>(cur.size()) == degree) {
                out.push_back(cur);
                return;
            }
            for (int j = 0; j < sz; ++j) {
                if (allowed && !(*allowed)[static_cast<std::size_t>(j)]) continue;
                if (!cur.empty() && !leq(cur.back(), j)) continue;
                cur.push_back(j);
                rec();
                cur.pop_back();
            }
        };
        rec();
        return out;
    }

    /// Independence of the standard monomials of one degree, certified by the
    /// faithful specialization q = 2 and exact rational elimination, blocked
    /// by column content (words with different content never interact).
    bool standard_independent(int degree, const std::vector<char>* allowed, std::string* why) {
        auto seqs = standard_sequences(degree, allowed);
        std::map<std::vector<int>, std::vector<const std::vector<int>*>> groups;
        for (const auto& s : seqs) groups[content_of(s)].push_back(&s);
        for (const auto& [content, members] : groups) {
            std::vector<std::map<Word, Rat>> rows;
            rows.reserve(members.size());
            for (const auto* s : members) rows.push_back(algebra_.specialize(product_nf(*s), Rat(2)));
            if (rows_rank(rows) != rows.size()) {
                if (why) {
                    std::ostringstream os;
                    os << "standard monomials of degree " << degree << " with content ";
                    for (int c : content) os << c;
                    os << " are linearly dependent";
                    *why = os.str();
                }
                return false;
            }
        }
        return true;
    }

    /// Dimension of the degree-d component of the minor subalgebra, fully
    /// certified: every product of d minors rewrites into the standard basis
    /// (spanning, exact in q) and the standard monomials are independent.
    Int component_dimension(int degree) {
        check_degree(degree);
        std::string why;
        if (!standard_independent(degree, nullptr, &why)) throw std::logic_error(why);
        certify_spanning(degree);
        return Int(static_cast<unsigned long>(standard_sequences(degree).size()));
    }

    /// Dimension of the degree-d component of the quotient by the two-sided
    /// ideal generated by the minors not componentwise below w.  Exact: the
    /// standard basis splits into a surviving part and an ideal part, every
    /// product with a disallowed factor is checked to expand inside the ideal
    /// part, and those products are checked to span it.
    Int schubert_quotient_dimension(const Subset& w, int degree) {
        check_degree(degree);
        const int wi = subset_index(w);
        const int sz = generator_count();
        std::vector<char> allowed(static_cast<std::size_t>(sz), 0);
        for (int j = 0; j < sz; ++j) allowed[static_cast<std::size_t>(j)] = leq(j, wi) ? 1 : 0;

        std::string why;
        if (!standard_independent(degree, nullptr, &why)) throw std::logic_error(why);
        certify_spanning(degree);

        std::set<std::vector<int>> ideal_basis;
        Int surviving(0);
        for (const auto& s : standard_sequences(degree)) {
            bool good = true;
            for (int idx : s) good = good && allowed[static_cast<std::size_t>(idx)] != 0;
            if (good)
                ++surviving;
            else
                ideal_basis.insert(s);
        }

        std::map<std::vector<int>, std::vector<std::map<std::vector<int>, Rat>>> blocks;
        std::vector<int> tuple(static_cast<std::size_t>(degree));
        std::function<void(int, bool)> rec = [&](int pos, bool has_bad) {
            if (pos == degree) {
                if (!has_bad) return;
                auto coords = expand_monomial(tuple);
                std::map<std::vector<int>, Rat> row;
                for (const auto& [stdseq, c] : coords) {
                    if (!ideal_basis.count(stdseq))
                        throw std::logic_error("ideal product escaped the expected standard span");
                    Rat v = c.specialize(Rat(2));
                    if (v != 0) row[stdseq] = v;
                }
                blocks[content_of(tuple)].push_back(std::move(row));
                return;
            }
            for (int j = 0; j < sz; ++j) {
                tuple[static_cast<std::size_t>(pos)] = j;
                rec(pos + 1, has_bad || allowed[static_cast<std::size_t>(j)] == 0);
            }
        };
        rec(0, false);

        std::size_t total_rank = 0;
        for (auto& [content, rows] : blocks) total_rank += rows_rank(rows);
        if (total_rank != ideal_basis.size()) throw std::logic_error("ideal span has unexpected dimension");
        return surviving;
    }

    /// Check the graded straightening-law axioms, in the full algebra or in a
    /// Schubert quotient (poset restricted to the interval below w).
    ASLReport verify_asl_axioms(const std::optional<Subset>& w, int degree = 2) {
        check_degree(degree);
        ASLReport rep;
        rep.m = m_;
        rep.n = n_;
        rep.degree = degree;
        const int sz = generator_count();
        std::vector<char> allowed(static_cast<std::size_t>(sz), 1);
        if (w) {
            rep.quotient = true;
            rep.top = *w;
            const int wi = subset_index(*w);
            for (int j = 0; j < sz; ++j) allowed[static_cast<std::size_t>(j)] = leq(j, wi) ? 1 : 0;
        }

        // (1) generators are nonzero and indexed by the poset
        for (int j = 0; j < sz; ++j)
            if (allowed[static_cast<std::size_t>(j)] && minor_nf(j).is_zero()) {
                rep.axiom1_generators = false;
                rep.failures.push_back("generator " + subset_to_string(subsets_[static_cast<std::size_t>(j)]) +
                                       " vanishes");
            }

        // (2) generators are linearly independent in degree 1
        {
            std::string why;
            if (!standard_independent(1, &allowed, &why)) {
                rep.axiom2_degree_one_independent = false;
                rep.failures.push_back(why);
            }
        }

        // (3) standard monomials are independent in each degree up to the budget
        for (int d = 0; d <= degree; ++d) {
            rep.standard_counts.push_back(Int(static_cast<unsigned long>(standard_sequences(d, &allowed).size())));
            std::string why;
            if (d >= 2 && !standard_independent(d, &allowed, &why)) {
                rep.axiom3_standard_independent = false;
                rep.failures.push_back(why);
            }
        }

        auto projected = [&](int i, int j) {
            std::vector<StraightenTermIdx> out;
            for (const auto& t : straighten_pair(i, j))
                if (allowed[static_cast<std::size_t>(t.first)] && allowed[static_cast<std::size_t>(t.second)])
                    out.push_back(t);
            return out;
        };
        auto strictly_below = [&](int a, int b) { return a != b && leq(a, b); };
        // a term brackets the inputs when its first factor lies strictly below
        // both of them and its second factor strictly above both
        auto lower_term = [&](const StraightenTermIdx& t, int i, int j) {
            return strictly_below(t.first, i) && strictly_below(t.first, j) && strictly_below(i, t.second) &&
                   strictly_below(j, t.second);
        };

        // (4) incomparable products expand into terms bracketing the inputs
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j) {
                if (i == j || !allowed[static_cast<std::size_t>(i)] || !allowed[static_cast<std::size_t>(j)])
                    continue;
                if (leq(i, j) || leq(j, i)) continue;
                for (const auto& t : projected(i, j))
                    if (!lower_term(t, i, j)) {
                        rep.axiom4_incomparable_shape = false;
                        rep.failures.push_back(
                            "straightening of " + subset_to_string(subsets_[static_cast<std::size_t>(i)]) +
                            subset_to_string(subsets_[static_cast<std::size_t>(j)]) + " has the non-bracketing term " +
                            subset_to_string(subsets_[static_cast<std::size_t>(t.first)]) +
                            subset_to_string(subsets_[static_cast<std::size_t>(t.second)]));
                    }
            }

        // (5) [I][J] - c [J][I] has only bracketing terms for one nonzero c
        for (int i = 0; i < sz; ++i)
            for (int j = i + 1; j < sz; ++j) {
                if (!allowed[static_cast<std::size_t>(i)] || !allowed[static_cast<std::size_t>(j)]) continue;
                std::map<std::pair<int, int>, QScalar> xi, yj;
                for (const auto& t : projected(i, j))
                    if (!lower_term(t, i, j)) xi[{t.first, t.second}] = t.coeff;
                for (const auto& t : projected(j, i))
                    if (!lower_term(t, i, j)) yj[{t.first, t.second}] = t.coeff;
                bool ok = xi.size() == yj.size();
                if (ok)
                    for (const auto& [key, val] : xi)
                        if (!yj.count(key)) {
                            ok = false;
                            break;
                        }
                if (ok && !xi.empty()) {
                    // coefficients must agree up to one scalar; compare
                    // cross-multiplied so no division is needed
                    const auto& [t0, x0] = *xi.begin();
                    const QScalar y0 = yj.at(t0);
                    for (const auto& [key, x] : xi)
                        if (!(x * y0 == yj.at(key) * x0)) {
                            ok = false;
                            break;
                        }
                }
                if (!ok) {
                    rep.axiom5_commutation_shape = false;
                    rep.failures.push_back("no single scalar straightens " +
                                           subset_to_string(subsets_[static_cast<std::size_t>(i)]) +
                                           subset_to_string(subsets_[static_cast<std::size_t>(j)]) +
                                           " against the reversed product");
                }
            }

        // straightening tables for the report
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j) {
                if (i == j || !allowed[static_cast<std::size_t>(i)] || !allowed[static_cast<std::size_t>(j)])
                    continue;
                StraighteningEntry e;
                e.left = subsets_[static_cast<std::size_t>(i)];
                e.right = subsets_[static_cast<std::size_t>(j)];
                for (const auto& t : projected(i, j))
                    e.expansion.push_back({subsets_[static_cast<std::size_t>(t.first)],
                                           subsets_[static_cast<std::size_t>(t.second)], t.coeff});
                rep.tables.push_back(std::move(e));
            }
        return rep;
    }

    /// Verify that every generator quasi-commutes with the minimal one by a
    /// pure power of q whose exponent is (wt(J),L)-(L,L) up to one global
    /// orientation sign, uniform over all generators.
    CommutationReport minimum_commutation_report() {
        CommutationReport rep;
        rep.exponents.push_back({subsets_[0], Rat(0)});
        const int sz = generator_count();
        if (sz <= 1) return rep;
        const RootDatum d = build_root_datum('A', n_ - 1);
        const Weight lambda = fundamental_weight(d, m_);
        const Rat lamlam = inner(d, lambda, lambda);
        std::optional<int> eps;
        for (int j = 1; j < sz; ++j) {
            const Subset& J = subsets_[static_cast<std::size_t>(j)];
            const auto& terms = straighten_pair(j, 0);
            if (terms.size() != 1 || terms[0].first != 0 || terms[0].second != j ||
                !terms[0].coeff.is_single_term()) {
                rep.holds = false;
                rep.failures.push_back("[" + subset_to_string(J) + "][E] is not a pure q-power times [E][" +
                                       subset_to_string(J) + "]");
                continue;
            }
            const auto& [expo, coeff] = *terms[0].coeff.terms.begin();
            if (coeff != 1) {
                rep.holds = false;
                rep.failures.push_back("commutation scalar for " + subset_to_string(J) + " is not a power of q");
                continue;
            }
            rep.exponents.push_back({J, expo});
            const Rat rhs = Rat(inner(d, subset_weight(d, J), lambda) - lamlam);
            if (rhs == 0) {
                if (expo != 0) {
                    rep.holds = false;
                    rep.failures.push_back("nonzero exponent where the pairing difference vanishes at " +
                                           subset_to_string(J));
                }
                continue;
            }
            int e = 0;
            if (expo == rhs)
                e = 1;
            else if (expo == Rat(-rhs))
                e = -1;
            else {
                rep.holds = false;
                rep.failures.push_back("commutation exponent mismatch at " + subset_to_string(J));
                continue;
            }
            if (!eps) {
                eps = e;
                rep.orientation = e;
            } else if (*eps != e) {
                rep.holds = false;
                rep.failures.push_back("orientation sign flips at " + subset_to_string(J));
            }
        }
        return rep;
    }

    /// Commutative specialization at q = 1: the minor as an ordinary
    /// polynomial, monomials kept as sorted generator words.
    std::map<Word, Rat> classical_minor(int idx) const {
        const Subset& J = subsets_.at(static_cast<std::size_t>(idx));
        std::vector<int> perm(J.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::map<Word, Rat> out;
        do {
            int inv = 0;
            for (std::size_t a = 0; a < perm.size(); ++a)
                for (std::size_t b = a + 1; b < perm.size(); ++b)
                    if (perm[a] > perm[b]) ++inv;
            Word w(J.size());
            for (std::size_t k = 0; k < J.size(); ++k)
                w[k] = algebra_.gen(static_cast<int>(k), J[static_cast<std::size_t>(perm[k])] - 1);
            std::sort(w.begin(), w.end());
            Rat& slot = out[w];
            slot += (inv % 2 == 0) ? Rat(1) : Rat(-1);
            if (slot == 0) out.erase(w);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }

    static std::map<Word, Rat> classical_product(const std::map<Word, Rat>& a, const std::map<Word, Rat>& b) {
        std::map<Word, Rat> out;
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                std::sort(w.begin(), w.end());
                Rat& slot = out[w];
                slot += Rat(ca * cb);
                if (slot == 0) out.erase(w);
            }
        return out;
    }

    /// Re-check one straightening identity in the commutative ring at q = 1,
    /// multiplying classically on both sides (independent of the rewriter).
    bool classical_straightening_check(int i, int j) {
        const auto lhs = classical_product(classical_minor(i), classical_minor(j));
        std::map<Word, Rat> rhs;
        for (const auto& t : straighten_pair(i, j)) {
            const Rat c = t.coeff.specialize(Rat(1));
            if (c == 0) continue;
            for (const auto& [w, v] : classical_product(classical_minor(t.first), classical_minor(t.second))) {
                Rat& slot = rhs[w];
                slot += Rat(c * v);
                if (slot == 0) rhs.erase(w);
            }
        }
        return lhs == rhs;
    }

  private:
    int m_, n_;
    QMatrixAlgebra algebra_;
    std::vector<Subset> subsets_;
    std::map<Subset, int> subset_index_;
    std::vector<NCPolynomial> minors_;
    std::vector<std::vector<char>> leq_;
    std::map<std::pair<int, int>, std::vector<StraightenTermIdx>> straighten_cache_;
    std::map<std::pair<int, int>, NCPolynomial> standard_pair_nf_;
    std::set<int> spanning_certified_;

    static int checked_m(int m, int n) {
        if (m < 1 || n < m) throw std::invalid_argument("Grassmannian needs 1 <= m <= n");
        if (n > 6) throw std::invalid_argument("Grassmannian budget exceeded (n <= 6)");
        return m;
    }

    static void check_degree(int degree) {
        if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
        if (degree > 3) throw std::invalid_argument("degree budget exceeded (degree <= 3)");
    }

    const NCPolynomial& standard_pair_nf(int a, int b) {
        const auto key = std::make_pair(a, b);
        if (auto it = standard_pair_nf_.find(key); it != standard_pair_nf_.end()) return it->second;
        return standard_pair_nf_.emplace(key, algebra_.multiply(minor_nf(a), minor_nf(b))).first->second;
    }

    /// Decode a PBW word of a degree-2 minor product as the signature of a
    /// standard pair: two letters per row, giving the two column sets.
    std::pair<int, int> decode_standard_pair(const Word& w) const {
        const auto stuck = [] { return std::logic_error("straightening solver: leading word is not a standard signature"); };
        if (static_cast<int>(w.size()) != 2 * m_) throw stuck();
        Subset A(static_cast<std::size_t>(m_)), B(static_cast<std::size_t>(m_));
        for (int k = 0; k < m_; ++k) {
            const int g1 = w[static_cast<std::size_t>(2 * k)], g2 = w[static_cast<std::size_t>(2 * k + 1)];
            if (algebra_.row_of(g1) != k || algebra_.row_of(g2) != k) throw stuck();
            A[static_cast<std::size_t>(k)] = algebra_.col_of(g1) + 1;
            B[static_cast<std::size_t>(k)] = algebra_.col_of(g2) + 1;
        }
        for (int k = 0; k + 1 < m_; ++k)
            if (A[static_cast<std::size_t>(k)] >= A[static_cast<std::size_t>(k + 1)] ||
                B[static_cast<std::size_t>(k)] >= B[static_cast<std::size_t>(k + 1)])
                throw stuck();
        const auto ia = subset_index_.find(A), ib = subset_index_.find(B);
        if (ia == subset_index_.end() || ib == subset_index_.end()) throw stuck();
        if (!leq(ia->second, ib->second)) throw stuck();
        return {ia->second, ib->second};
    }

    NCPolynomial product_nf(const std::vector<int>& seq) const {
        NCPolynomial p = NCPolynomial::monomial({});
        for (int idx : seq) p = algebra_.multiply(p, minor_nf(idx));
        return p;
    }

    /// Column multiset of a product (each rewriting rule preserves it).
    std::vector<int> content_of(const std::vector<int>& seq) const {
        std::vector<int> cols;
        for (int idx : seq) {
            const Subset& s = subsets_[static_cast<std::size_t>(idx)];
            cols.insert(cols.end(), s.begin(), s.end());
        }
        std::sort(cols.begin(), cols.end());
        return cols;
    }

    /// Rewrite every ordered product of `degree` generators into the standard
    /// basis; expand_monomial throws if any rewriting step misbehaves.
    void certify_spanning(int degree) {
        if (spanning_certified_.count(degree)) return;
        const int sz = generator_count();
        std::vector<int> tuple(static_cast<std::size_t>(degree));
        std::function<void(int)> rec = [&](int pos) {
            if (pos == degree) {
                expand_monomial(tuple);
                return;
            }
            for (int j = 0; j < sz; ++j) {
                tuple[static_cast<std::size_t>(pos)] = j;
                rec(pos + 1);
            }
        };
        rec(0);
        spanning_certified_.insert(degree);
    }

    template <class K>
    static std::size_t rows_rank(const std::vector<std::map<K, Rat>>& rows) {
        std::map<K, std::size_t> col;
        for (const auto& r : rows)
            for (const auto& [k, v] : r)
                if (!col.count(k)) {
                    const std::size_t next = col.size();
                    col[k] = next;
                }
        RatMat mat(rows.size(), RatVec(col.size(), Rat(0)));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (const auto& [k, v] : rows[i]) mat[i][col.at(k)] = v;
        return rational_rank(std::move(mat));
    }
};

/// Degree-2 straightening with explicit column sets, for direct use.
inline std::vector<std::pair<std::vector<Subset>, QScalar>> straighten_product(int m, int n, const Subset& I,
                                                                               const Subset& J) {
    QGrassmannian g(m, n);
    std::vector<std::pair<std::vector<Subset>, QScalar>> out;
    for (const auto& t : g.straighten_pair(g.subset_index(I), g.subset_index(J)))
        out.push_back({{g.subsets()[static_cast<std::size_t>(t.first)],
                        g.subsets()[static_cast<std::size_t>(t.second)]},
                       t.coeff});
    return out;
}

inline int poset_index_of_subset(const RootDatum& d, const MinusculePoset& p, const Subset& J) {
    auto it = p.index_of_weight.find(subset_weight(d, J).coords);
    if (it == p.index_of_weight.end()) throw std::invalid_argument("subset does not label a poset element");
    return it->second;
}

inline Subset subset_of_poset_index(const RootDatum& d, const MinusculePoset& p, int m, int idx) {
    if (idx < 0 || idx >= static_cast<int>(p.size())) throw std::invalid_argument("poset element out of range");
    for (const auto& J : all_m_subsets(d.rank + 1, m))
        if (poset_index_of_subset(d, p, J) == idx) return J;
    throw std::invalid_argument("no subset labels the requested poset element");
}

/// Cross-module consistency: the componentwise order on m-subsets of {1..n}
/// is isomorphic to the coset poset of omega_m in A_{n-1} via subset weights.
inline bool verify_minor_poset_isomorphism(int n, int m) {
    if (m < 1 || m > n - 1) throw std::invalid_argument("isomorphism check needs 1 <= m <= n-1");
    const RootDatum d = build_root_datum('A', n - 1);
    const MinusculePoset p = build_minuscule_poset(d, m);
    const auto subs = all_m_subsets(n, m);
    if (subs.size() != p.size()) return false;
    std::vector<int> idx(subs.size());
    std::set<int> seen;
    for (std::size_t a = 0; a < subs.size(); ++a) {
        auto it = p.index_of_weight.find(subset_weight(d, subs[a]).coords);
        if (it == p.index_of_weight.end()) return false;
        idx[a] = it->second;
        seen.insert(it->second);
    }
    if (seen.size() != subs.size()) return false;
    for (std::size_t a = 0; a < subs.size(); ++a)
        for (std::size_t b = 0; b < subs.size(); ++b)
            if (subset_leq(subs[a], subs[b]) != bruhat_leq_minuscule(p, idx[a], idx[b])) return false;
    return true;
}

}  // namespace qflag

#endif
