// Finite posets: construction, duality, intervals, the "wonderful" lattice-like
// property, and decreasing-chain counting.
#ifndef QFLAG_POSET_HPP
#define QFLAG_POSET_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qflag/exact.hpp"

namespace qflag {

/// A finite poset on elements 0..n-1, stored as the full relation matrix.
class FinitePoset {
  public:
    FinitePoset() = default;

    /// Builds from a full relation matrix; validates the poset axioms.
    static FinitePoset from_leq(std::vector<std::vector<bool>> leq) {
        FinitePoset p;
        p.leq_ = std::move(leq);
        p.n_ = p.leq_.size();
        for (const auto& row : p.leq_)
            if (row.size() != p.n_) throw std::invalid_argument("relation matrix is not square");
        for (std::size_t a = 0; a < p.n_; ++a)
            if (!p.leq_[a][a]) throw std::invalid_argument("relation is not reflexive");
        for (std::size_t a = 0; a < p.n_; ++a)
            for (std::size_t b = 0; b < p.n_; ++b)
                if (a != b && p.leq_[a][b] && p.leq_[b][a])
                    throw std::invalid_argument("relation is not antisymmetric");
        for (std::size_t a = 0; a < p.n_; ++a)
            for (std::size_t b = 0; b < p.n_; ++b)
                if (p.leq_[a][b])
                    for (std::size_t c = 0; c < p.n_; ++c)
                        if (p.leq_[b][c] && !p.leq_[a][c])
                            throw std::invalid_argument("relation is not transitive");
        return p;
    }

    /// Builds the reflexive-transitive closure of cover edges lo -> hi.
    static FinitePoset from_covers(std::size_t n, const std::vector<std::pair<int, int>>& covers) {
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
        for (std::size_t a = 0; a < n; ++a) leq[a][a] = true;
        for (auto [lo, hi] : covers) {
            if (lo < 0 || hi < 0 || static_cast<std::size_t>(lo) >= n || static_cast<std::size_t>(hi) >= n)
                throw std::invalid_argument("cover edge out of range");
            leq[lo][hi] = true;
        }
        // Floyd-Warshall style closure.
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = 0; a < n; ++a)
                if (leq[a][k])
                    for (std::size_t b = 0; b < n; ++b)
                        if (leq[k][b]) leq[a][b] = true;
        return from_leq(std::move(leq));  // antisymmetry check catches cycles
    }

    std::size_t size() const { return n_; }
    bool leq(int a, int b) const { return leq_[a][b]; }
    bool less(int a, int b) const { return a != b && leq_[a][b]; }
    const std::vector<std::vector<bool>>& relation() const { return leq_; }

    /// Cover relations: b covers a iff a < b with nothing strictly between.
    std::vector<std::pair<int, int>> cover_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b) {
                if (!less(static_cast<int>(a), static_cast<int>(b))) continue;
                bool is_cover = true;
                for (std::size_t c = 0; c < n_ && is_cover; ++c)
                    if (c != a && c != b && leq_[a][c] && leq_[c][b]) is_cover = false;
                if (is_cover) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
            }
        return out;
    }

    /// upper_covers()[z] = sorted list of elements covering z.
    std::vector<std::vector<int>> upper_covers() const {
        std::vector<std::vector<int>> up(n_);
        for (auto [a, b] : cover_pairs()) up[a].push_back(b);
        return up;
    }

    std::vector<int> maximal_elements() const {
        std::vector<int> out;
        for (std::size_t a = 0; a < n_; ++a) {
            bool maximal = true;
            for (std::size_t b = 0; b < n_ && maximal; ++b)
                if (less(static_cast<int>(a), static_cast<int>(b))) maximal = false;
            if (maximal) out.push_back(static_cast<int>(a));
        }
        return out;
    }

    std::vector<int> minimal_elements() const {
        std::vector<int> out;
        for (std::size_t a = 0; a < n_; ++a) {
            bool minimal = true;
            for (std::size_t b = 0; b < n_ && minimal; ++b)
                if (less(static_cast<int>(b), static_cast<int>(a))) minimal = false;
            if (minimal) out.push_back(static_cast<int>(a));
        }
        return out;
    }

  private:
    std::size_t n_ = 0;
    std::vector<std::vector<bool>> leq_;
};

/// The opposite poset (order reversed, same element numbering).
inline FinitePoset dual(const FinitePoset& p) {
    std::size_t n = p.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) leq[a][b] = p.leq(static_cast<int>(b), static_cast<int>(a));
    return FinitePoset::from_leq(std::move(leq));
}

/// The order ideal {x : x <= t} as a poset, plus the map from new indices to
/// the original ones (kept sorted ascending).
struct InducedSubposet {
    FinitePoset poset;
    std::vector<int> original_index;
};

inline InducedSubposet interval_below(const FinitePoset& p, int t) {
    std::vector<int> keep;
    for (std::size_t a = 0; a < p.size(); ++a)
        if (p.leq(static_cast<int>(a), t)) keep.push_back(static_cast<int>(a));
    std::vector<std::vector<bool>> leq(keep.size(), std::vector<bool>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b) leq[a][b] = p.leq(keep[a], keep[b]);
    return {FinitePoset::from_leq(std::move(leq)), std::move(keep)};
}

// ---- the wonderful property -------------------------------------------------

/// A violation certificate: x and y both cover z, u is a strict upper bound of
/// both, yet no common cover of x and y lies below u.  A poset without a
/// unique minimum and maximum is not wonderful either; that case carries the
/// sentinel witness (all fields -1).
struct WonderfulWitness {
    int z = -1, x = -1, y = -1, u = -1;

    bool is_bounds_sentinel() const { return z < 0; }
};

struct WonderfulReport {
    bool wonderful = true;
    std::optional<WonderfulWitness> witness;
};

namespace detail {

inline std::vector<int> common_upper_covers(const FinitePoset& p, const std::vector<std::vector<int>>& up,
                                            int x, int y) {
    std::vector<int> out;
    for (int c : up[x])
        if (std::find(up[y].begin(), up[y].end(), c) != up[y].end()) out.push_back(c);
    return out;
}

inline bool violates(const FinitePoset& p, const std::vector<std::vector<int>>& up, int x, int y, int u) {
    if (!(p.less(x, u) && p.less(y, u))) return false;
    for (int c : common_upper_covers(p, up, x, y))
        if (p.leq(c, u)) return false;
    return true;
}

}  // namespace detail

/// Checks that the poset is bounded (unique minimum and maximum) and that
/// whenever distinct x and y cover a common z and admit a common upper bound
/// u, some common cover of x and y lies below u.
///
/// Scans in two passes so that the most interpretable counterexamples are
/// reported first: pass one looks for cover-siblings with an upper bound but
/// *no* common cover at all (reported with the smallest such u); pass two is
/// the exhaustive scan in ascending (z, x, y, u) order.  Every witness is
/// re-validated before being returned.
inline WonderfulReport check_wonderful(const FinitePoset& p) {
    if (p.size() == 0 || p.minimal_elements().size() != 1 || p.maximal_elements().size() != 1)
        return {false, WonderfulWitness{}};

    const auto up = p.upper_covers();
    const int n = static_cast<int>(p.size());

    auto certify = [&](int z, int x, int y, int u) -> WonderfulReport {
        if (!(p.less(z, x) && p.less(z, y)) || x == y || !detail::violates(p, up, x, y, u))
            throw std::logic_error("internal error: wonderful witness failed re-validation");
        return {false, WonderfulWitness{z, x, y, u}};
    };

    // Pass 1: pairs of covers of z with a common upper bound but no common cover.
    for (int z = 0; z < n; ++z)
        for (std::size_t i = 0; i < up[z].size(); ++i)
            for (std::size_t j = i + 1; j < up[z].size(); ++j) {
                int x = up[z][i], y = up[z][j];
                if (!detail::common_upper_covers(p, up, x, y).empty()) continue;
                for (int u = 0; u < n; ++u)
                    if (p.less(x, u) && p.less(y, u)) return certify(z, x, y, u);
            }

    // Pass 2: exhaustive.
    for (int z = 0; z < n; ++z)
        for (std::size_t i = 0; i < up[z].size(); ++i)
            for (std::size_t j = i + 1; j < up[z].size(); ++j)
                for (int u = 0; u < n; ++u)
                    if (detail::violates(p, up, up[z][i], up[z][j], u))
                        return certify(z, up[z][i], up[z][j], u);

    return {};
}

// ---- chain counting ----------------------------------------------------------

/// Number of weakly decreasing n-tuples (t_1 >= t_2 >= ... >= t_n) in the
/// poset; with `top` set, only tuples with t_1 <= top are counted.
/// n = 0 yields 1 (the empty tuple).
inline Int count_decreasing_chains(const FinitePoset& p, int n, std::optional<int> top = std::nullopt) {
    if (n < 0) throw std::invalid_argument("chain length must be nonnegative");
    if (n == 0) return 1;
    const int sz = static_cast<int>(p.size());
    std::vector<Int> cnt(sz, Int(1));  // tuples of length 1 with given largest element
    for (int step = 1; step < n; ++step) {
        std::vector<Int> next(sz, Int(0));
        for (int a = 0; a < sz; ++a)
            for (int b = 0; b < sz; ++b)
                if (p.leq(b, a)) next[a] += cnt[b];
        cnt = std::move(next);
    }
    Int total(0);
    for (int a = 0; a < sz; ++a)
        if (!top || p.leq(a, *top)) total += cnt[a];
    return total;
}

}  // namespace qflag

#endif
