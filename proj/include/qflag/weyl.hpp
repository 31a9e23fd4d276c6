// Weyl groups and minuscule weight-orbit posets.
//
// Group elements are identified by their images of the fundamental weights
// (a faithful, basis-level key).  Full group enumeration is intentionally
// budgeted to small ranks; the minuscule orbit machinery has no such limit
// because it only ever touches a single W-orbit.
#ifndef QFLAG_WEYL_HPP
#define QFLAG_WEYL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qflag/poset.hpp"
#include "qflag/root_datum.hpp"

namespace qflag {

/// One Weyl group element: images[j] = w(omega_{j+1}) in fundamental coordinates.
using WeylKey = std::vector<std::vector<Int>>;

struct WeylElement {
    WeylKey images;
    Int length{0};
    std::vector<int> word;  // one reduced word, 1-based letters, w = s_{word[0]} ... s_{word.back()}

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.images == b.images; }
};

inline Weight act(const WeylElement& w, const Weight& mu) {
    const std::size_t r = w.images.size();
    std::vector<Int> out(r, Int(0));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) out[k] += mu.coords[j] * w.images[j][k];
    return Weight{out};
}

struct WeylGroup {
    RootDatum datum;
    std::vector<WeylElement> elements;       // sorted by (length, key)
    std::map<WeylKey, int> index_of;         // key -> element index
    std::vector<std::vector<int>> left_mult; // left_mult[i-1][x] = index of s_i * x

    int identity() const { return index_of.at(identity_key(datum.rank)); }

    static WeylKey identity_key(int rank) {
        WeylKey key(rank, std::vector<Int>(rank, Int(0)));
        for (int j = 0; j < rank; ++j) key[j][j] = 1;
        return key;
    }
};

namespace detail {

inline WeylKey left_multiply_key(const RootDatum& d, int i, const WeylKey& key) {
    WeylKey out = key;
    for (auto& image : out) {
        Weight w{image};
        image = apply_simple_reflection(d, i, w).coords;
    }
    return out;
}

}  // namespace detail

/// Enumerates the full Weyl group by breadth-first search over right
/// multiplication.  pre: the group order stays within `budget` elements
/// (defaults to rank <= 4 group sizes).
inline WeylGroup build_weyl_group(const RootDatum& d, std::size_t budget = 1200) {
    WeylGroup g;
    g.datum = d;

    struct Node {
        WeylKey key;
        Int length;
        std::vector<int> word;
    };
    std::map<WeylKey, int> seen;
    std::vector<Node> nodes;
    nodes.push_back({WeylGroup::identity_key(d.rank), 0, {}});
    seen[nodes[0].key] = 0;
    // right multiplication: (w s_i)(omega_j) = w(omega_j) - delta_ij w(alpha_i)
    std::size_t head = 0;
    while (head < nodes.size()) {
        Node cur = nodes[head++];
        for (int i = 1; i <= d.rank; ++i) {
            WeylKey next = cur.key;
            std::vector<Int> w_alpha(d.rank, Int(0));
            for (int k = 0; k < d.rank; ++k)
                for (int j = 0; j < d.rank; ++j) w_alpha[j] += d.cartan[i - 1][k] * cur.key[k][j];
            for (int j = 0; j < d.rank; ++j) next[i - 1][j] -= w_alpha[j];
            if (seen.emplace(next, static_cast<int>(nodes.size())).second) {
                auto word = cur.word;
                word.push_back(i);
                nodes.push_back({std::move(next), cur.length + 1, std::move(word)});
                if (nodes.size() > budget)
                    throw std::domain_error("Weyl group enumeration budget exceeded (full groups are supported up to rank 4)");
            }
        }
    }

    std::vector<int> order(nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (nodes[a].length != nodes[b].length) return nodes[a].length < nodes[b].length;
        return nodes[a].key < nodes[b].key;
    });
    g.elements.reserve(nodes.size());
    for (int idx : order) {
        g.index_of[nodes[idx].key] = static_cast<int>(g.elements.size());
        g.elements.push_back({nodes[idx].key, nodes[idx].length, nodes[idx].word});
    }
    g.left_mult.assign(d.rank, std::vector<int>(g.elements.size(), -1));
    for (int i = 1; i <= d.rank; ++i)
        for (std::size_t x = 0; x < g.elements.size(); ++x)
            g.left_mult[i - 1][x] = g.index_of.at(detail::left_multiply_key(d, i, g.elements[x].images));
    return g;
}

/// Finds the group element with the given action, if present.
inline std::optional<int> find_element(const WeylGroup& g, const WeylKey& key) {
    auto it = g.index_of.find(key);
    if (it == g.index_of.end()) return std::nullopt;
    return it->second;
}

/// Element of a product word s_{w[0]} ... s_{w.back()} (1-based letters).
inline int element_of_word(const WeylGroup& g, const std::vector<int>& word) {
    int cur = g.identity();
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = g.left_mult[*it - 1][cur];
    return cur;
}

/// Bruhat order on the full group, decided by the subword property in its
/// recursive length-descent form: for a left descent s of b,
/// a <= b iff (sa <= sb when sa < a) and (a <= sb otherwise).
inline bool bruhat_leq_general(const WeylGroup& g, int a, int b) {
    while (true) {
        if (a == b) return true;
        const auto& ea = g.elements[a];
        const auto& eb = g.elements[b];
        if (ea.length >= eb.length) return false;  // equal length but distinct already handled
        int i = eb.word.front();                   // s_i b < b
        int sb = g.left_mult[i - 1][b];
        int sa = g.left_mult[i - 1][a];
        if (g.elements[sa].length < ea.length) a = sa;
        b = sb;
    }
}

/// Index of the product a*b (composition of actions).
inline int compose(const WeylGroup& g, int a, int b) {
    WeylKey key(g.datum.rank);
    for (int j = 0; j < g.datum.rank; ++j)
        key[j] = act(g.elements[a], Weight{g.elements[b].images[j]}).coords;
    return g.index_of.at(key);
}

/// The Bruhat order on the whole group as a FinitePoset; element numbering is
/// the group's own (length, key) order.  Quadratic in the group size, so this
/// is meant for the small-rank enumeration range only.
inline FinitePoset bruhat_poset(const WeylGroup& g) {
    const int n = static_cast<int>(g.elements.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) leq[a][b] = bruhat_leq_general(g, a, b);
    return FinitePoset::from_leq(std::move(leq));  // re-validates the order axioms
}

/// All reflections, as (positive-root index -> element index).
inline std::vector<int> reflections(const WeylGroup& g) {
    std::vector<int> out;
    out.reserve(g.datum.positive_roots.size());
    for (const auto& alpha : g.datum.positive_roots) {
        WeylKey key(g.datum.rank);
        for (int j = 1; j <= g.datum.rank; ++j)
            key[j - 1] = apply_reflection(g.datum, alpha, fundamental_weight(g.datum, j)).coords;
        out.push_back(g.index_of.at(key));
    }
    return out;
}

// ---- minuscule orbit posets ------------------------------------------------

/// The W-orbit of a minuscule fundamental weight, organized as a graded poset:
/// the Bruhat order on minimal coset representatives W^S for
/// S = all simple roots except alpha_s.  Element 0 is omega_s itself; covers
/// x -> y subtract one simple root from the weight and are labelled by it.
struct MinusculePoset {
    RootDatum datum;
    int s = 0;
    std::vector<Weight> weights;                         // index -> orbit weight
    std::vector<Int> lengths;                            // index -> length of minimal representative
    std::vector<std::vector<int>> words;                 // index -> reduced word of the representative
    std::vector<std::vector<std::pair<int, int>>> covers_up;  // index -> (simple label, upper element)
    std::map<std::vector<Int>, int> index_of_weight;

    std::size_t size() const { return weights.size(); }
    int bottom() const { return 0; }
    int top() const { return static_cast<int>(weights.size()) - 1; }
    Int max_length() const { return lengths.back(); }
};

/// pre: omega_s is minuscule for the datum.
inline MinusculePoset build_minuscule_poset(const RootDatum& d, int s) {
    {
        auto ms = minuscule_weights(d);
        if (std::find(ms.begin(), ms.end(), s) == ms.end())
            throw std::invalid_argument("omega_" + std::to_string(s) + " is not minuscule for " + d.type_string());
    }
    MinusculePoset p;
    p.datum = d;
    p.s = s;

    std::vector<Weight> layer = {fundamental_weight(d, s)};
    Int depth(0);
    std::map<std::vector<Int>, std::vector<int>> word_of;  // weight -> representative word
    word_of[layer[0].coords] = {};
    std::vector<std::tuple<std::vector<Int>, std::vector<Int>, int>> cover_list;

    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end());
        for (const auto& w : layer) {
            p.index_of_weight[w.coords] = static_cast<int>(p.weights.size());
            p.weights.push_back(w);
            p.lengths.push_back(depth);
            p.words.push_back(word_of.at(w.coords));
        }
        std::vector<Weight> next;
        for (const auto& w : layer) {
            for (int i = 1; i <= d.rank; ++i) {
                const Int& k = w.coords[i - 1];
                if (k <= 0) continue;
                if (k != 1)
                    throw std::logic_error("orbit weight has a coroot pairing outside {-1,0,1}; the weight is not minuscule");
                Weight y = apply_simple_reflection(d, i, w);
                cover_list.emplace_back(w.coords, y.coords, i);
                if (!word_of.count(y.coords)) {
                    auto word = word_of.at(w.coords);
                    word.insert(word.begin(), i);
                    word_of[y.coords] = std::move(word);
                    next.push_back(y);
                }
            }
        }
        layer = std::move(next);
        depth += 1;
    }

    p.covers_up.assign(p.weights.size(), {});
    for (const auto& [lo, hi, label] : cover_list)
        p.covers_up[p.index_of_weight.at(lo)].emplace_back(label, p.index_of_weight.at(hi));
    for (auto& v : p.covers_up) std::sort(v.begin(), v.end());
    return p;
}

/// Bruhat order on W^S through the weight dominance criterion:
/// x <= y iff weight(x) - weight(y) is a nonnegative integer combination of
/// simple roots.
inline bool bruhat_leq_minuscule(const MinusculePoset& p, int x, int y) {
    Weight diff = sub(p.weights[x], p.weights[y]);
    RatVec coords = weight_in_root_coords(p.datum, diff);
    for (const auto& c : coords) {
        if (!is_integer(c)) return false;
        if (c < 0) return false;
    }
    return true;
}

/// The minimal coset representative of x as an element of a full group
/// enumeration (small-rank use only).
inline int representative_in(const WeylGroup& g, const MinusculePoset& p, int x) {
    return element_of_word(g, p.words[x]);
}

/// The full order relation of a MinusculePoset as a FinitePoset (same element
/// numbering); re-validates the poset axioms on construction.
inline FinitePoset order_poset(const MinusculePoset& p) {
    const int n = static_cast<int>(p.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) leq[x][y] = bruhat_leq_minuscule(p, x, y);
    return FinitePoset::from_leq(std::move(leq));
}

}  // namespace qflag

#endif
