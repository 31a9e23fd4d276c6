// Quantum matrix algebra O_q(M_{m,n}): generators x_{rc}, the standard
// quadratic relations, a confluent rewriting system onto sorted (PBW) words,
// and quantum minors.
#ifndef QFLAG_QMATRIX_HPP
#define QFLAG_QMATRIX_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qflag/qscalar.hpp"

namespace qflag {

/// Word in the free algebra: sequence of generator ids, id = row * n + col
/// (rows and columns 0-based internally).
using Word = std::vector<int>;

/// Noncommutative polynomial: finite sum of words with QScalar coefficients.
struct NCPolynomial {
    std::map<Word, QScalar> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) { return a.terms == b.terms; }

    void add_term(const Word& w, const QScalar& c) {
        if (c.is_zero()) return;
        QScalar& slot = terms[w];
        slot += c;
        if (slot.is_zero()) terms.erase(w);
    }
    NCPolynomial& operator+=(const NCPolynomial& o) {
        for (const auto& [w, c] : o.terms) add_term(w, c);
        return *this;
    }
    NCPolynomial& operator-=(const NCPolynomial& o) {
        for (const auto& [w, c] : o.terms) add_term(w, -c);
        return *this;
    }
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    NCPolynomial scaled(const QScalar& c) const {
        NCPolynomial out;
        for (const auto& [w, k] : terms) out.add_term(w, QScalar(k * c));
        return out;
    }
    static NCPolynomial monomial(const Word& w, const QScalar& c = QScalar::one()) {
        NCPolynomial p;
        p.add_term(w, c);
        return p;
    }
};

enum class ReduceStrategy { leftmost, rightmost };

class QMatrixAlgebra {
  public:
    QMatrixAlgebra(int rows, int cols) : m_(rows), n_(cols) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("matrix algebra needs positive dimensions");
        confluence_self_test();
    }

    int rows() const { return m_; }
    int cols() const { return n_; }
    int generator_count() const { return m_ * n_; }
    int gen(int r, int c) const { return r * n_ + c; }
    int row_of(int g) const { return g / n_; }
    int col_of(int g) const { return g % n_; }

    /// Rewrite the out-of-order adjacent pair x_b x_a (b > a as generator ids)
    /// into a combination of strictly lex-smaller two-letter words.
    std::vector<std::pair<Word, QScalar>> rewrite_pair(int b, int a) const {
        const int rb = row_of(b), cb = col_of(b), ra = row_of(a), ca = col_of(a);
        if (b <= a) throw std::logic_error("rewrite_pair expects a descending pair");
        std::vector<std::pair<Word, QScalar>> out;
        if (rb == ra || cb == ca) {
            // same row or same column: x_a x_b = q x_b x_a, so x_b x_a -> q^{-1} x_a x_b
            out.push_back({{a, b}, QScalar::q_power(Rat(-1))});
        } else if (cb < ca) {
            // strictly south-west: the generators commute
            out.push_back({{a, b}, QScalar::one()});
        } else {
            // strictly south-east: x_b x_a = x_a x_b - (q - q^{-1}) x_{(ra,cb)} x_{(rb,ca)}
            out.push_back({{a, b}, QScalar::one()});
            out.push_back({{gen(ra, cb), gen(rb, ca)}, -QScalar::q_minus_qinv()});
        }
        return out;
    }

    /// Normal form: rewrite until every word is sorted ascending (PBW basis).
    NCPolynomial normal_form(const NCPolynomial& p,
                             ReduceStrategy strategy = ReduceStrategy::leftmost) const {
        NCPolynomial done;
        std::map<Word, QScalar> pending = p.terms;
        while (!pending.empty()) {
            auto it = pending.begin();
            Word w = it->first;
            QScalar c = it->second;
            pending.erase(it);
            if (c.is_zero()) continue;
            int pos = find_inversion(w, strategy);
            if (pos < 0) {
                done.add_term(w, c);
                continue;
            }
            for (const auto& [pair_word, factor] : rewrite_pair(w[pos], w[pos + 1])) {
                Word nw = w;
                nw[pos] = pair_word[0];
                nw[pos + 1] = pair_word[1];
                QScalar& slot = pending[nw];
                slot += QScalar(c * factor);
                if (slot.is_zero()) pending.erase(nw);
            }
        }
        return done;
    }

    NCPolynomial multiply(const NCPolynomial& p, const NCPolynomial& r) const {
        NCPolynomial prod;
        for (const auto& [wp, cp] : p.terms)
            for (const auto& [wr, cr] : r.terms) {
                Word w = wp;
                w.insert(w.end(), wr.begin(), wr.end());
                prod.add_term(w, QScalar(cp * cr));
            }
        return normal_form(prod);
    }

    /// Quantum minor on row set I and column set J (0-based, strictly
    /// increasing, equal sizes): sum over bijections of (-q)^{inversions}.
    NCPolynomial quantum_minor(const std::vector<int>& rows_set, const std::vector<int>& cols_set) const {
        if (rows_set.size() != cols_set.size() || rows_set.empty())
            throw std::invalid_argument("quantum minor needs equal nonempty row/column sets");
        check_index_set(rows_set, m_, "row");
        check_index_set(cols_set, n_, "column");
        const std::size_t k = rows_set.size();
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        NCPolynomial out;
        do {
            int inv = 0;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j)
                    if (perm[i] > perm[j]) ++inv;
            Word w(k);
            for (std::size_t i = 0; i < k; ++i) w[i] = gen(rows_set[i], cols_set[perm[i]]);
            Rat sign = (inv % 2 == 0) ? Rat(1) : Rat(-1);
            out.add_term(w, QScalar::q_power(Rat(inv), sign));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return normal_form(out);
    }

    /// Quantum determinant (full minor); central, which the tests verify.
    NCPolynomial quantum_determinant() const {
        if (m_ != n_) throw std::invalid_argument("quantum determinant needs a square matrix algebra");
        std::vector<int> all(m_);
        std::iota(all.begin(), all.end(), 0);
        return quantum_minor(all, all);
    }

    /// Specialize q to a nonzero rational: word -> rational coefficient.
    std::map<Word, Rat> specialize(const NCPolynomial& p, const Rat& x) const {
        std::map<Word, Rat> out;
        for (const auto& [w, c] : p.terms) {
            Rat v = c.specialize(x);
            if (v != 0) out[w] = v;
        }
        return out;
    }

    std::string word_to_string(const Word& w) const {
        std::ostringstream os;
        for (int g : w) os << "x(" << row_of(g) + 1 << "," << col_of(g) + 1 << ")";
        return os.str();
    }

  private:
    int m_, n_;

    static void check_index_set(const std::vector<int>& s, int bound, const char* what) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= bound) throw std::invalid_argument(std::string(what) + " index out of range");
            if (i > 0 && s[i] <= s[i - 1])
                throw std::invalid_argument(std::string(what) + " set must be strictly increasing");
        }
    }

    static int find_inversion(const Word& w, ReduceStrategy strategy) {
        if (strategy == ReduceStrategy::leftmost) {
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] > w[i + 1]) return static_cast<int>(i);
        } else {
            for (std::size_t i = w.size(); i >= 2; --i)
                if (w[i - 2] > w[i - 1]) return static_cast<int>(i - 2);
        }
        return -1;
    }

    /// Local confluence on all three-letter words (the only overlaps of the
    /// two-letter rules); with termination this gives a confluent system.
    void confluence_self_test() const {
        const int g = generator_count();
        for (int a = 0; a < g; ++a)
            for (int b = 0; b < g; ++b)
                for (int c = 0; c < g; ++c) {
                    NCPolynomial w = NCPolynomial::monomial({a, b, c});
                    if (!(normal_form(w, ReduceStrategy::leftmost) ==
                          normal_form(w, ReduceStrategy::rightmost)))
                        throw std::logic_error("rewriting system failed its confluence self-test");
                }
    }
};

}  // namespace qflag

#endif
