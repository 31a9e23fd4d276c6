// Root systems of the finite simple types in Bourbaki numbering, with exact
// arithmetic throughout.  Weights are stored in fundamental-weight
// coordinates, roots in simple-root coordinates.  The invariant bilinear form
// is normalized so that short roots have squared length 2; with
// c[i][j] = <alpha_i, alpha_j^vee> and d_j = (alpha_j, alpha_j)/2 this makes
// (alpha_i, alpha_j) = c[i][j] * d[j] symmetric and integral.
#ifndef QFLAG_ROOT_DATUM_HPP
#define QFLAG_ROOT_DATUM_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qflag/exact.hpp"

namespace qflag {

/// A root written in simple-root coordinates (all entries share one sign).
struct Root {
    std::vector<Int> coords;
    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root& a, const Root& b) { return a.coords <=> b.coords; }
};

/// A weight written in fundamental-weight coordinates.
struct Weight {
    std::vector<Int> coords;
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords <=> b.coords; }
};

struct RootDatum {
    char letter = 0;  // 'A'..'G'
    int rank = 0;
    std::vector<std::vector<Int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
    std::vector<Int> symmetrizer;          // d_i = (alpha_i, alpha_i) / 2
    RatMat fw_in_roots;                    // row i: omega_{i+1} in simple-root coordinates
    std::vector<Root> positive_roots;      // ordered by (height, lex)

    std::string type_string() const { return std::string(1, letter) + std::to_string(rank); }
};

namespace detail {

inline std::vector<std::vector<Int>> cartan_matrix(char letter, int rank) {
    std::vector<std::vector<Int>> c(rank, std::vector<Int>(rank, Int(0)));
    for (int i = 0; i < rank; ++i) c[i][i] = 2;
    auto chain_edge = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
    switch (letter) {
        case 'A':
            for (int i = 0; i + 1 < rank; ++i) chain_edge(i, i + 1);
            break;
        case 'B':
            for (int i = 0; i + 1 < rank; ++i) chain_edge(i, i + 1);
            c[rank - 2][rank - 1] = -2;  // alpha_{n-1} long against short coroot alpha_n^vee
            break;
        case 'C':
            for (int i = 0; i + 1 < rank; ++i) chain_edge(i, i + 1);
            c[rank - 1][rank - 2] = -2;
            break;
        case 'D':
            for (int i = 0; i + 2 < rank; ++i) chain_edge(i, i + 1);
            chain_edge(rank - 3, rank - 1);
            break;
        case 'E':
            chain_edge(0, 2);
            chain_edge(1, 3);  // the branch node alpha_2 hangs off alpha_4
            for (int i = 2; i + 1 < rank; ++i) chain_edge(i, i + 1);
            break;
        case 'F':
            chain_edge(0, 1);
            chain_edge(2, 3);
            c[1][2] = -2;
            c[2][1] = -1;
            break;
        case 'G':
            c[0][1] = -1;
            c[1][0] = -3;
            break;
        default:
            throw std::invalid_argument("unknown type letter");
    }
    return c;
}

inline std::vector<Int> symmetrizer_for(char letter, int rank) {
    std::vector<Int> d(rank, Int(1));
    switch (letter) {
        case 'B':
            for (int i = 0; i + 1 < rank; ++i) d[i] = 2;
            break;
        case 'C':
            d[rank - 1] = 2;
            break;
        case 'F':
            d[0] = d[1] = 2;
            break;
        case 'G':
            d[1] = 3;
            break;
        default:
            break;  // simply laced
    }
    return d;
}

/// Positive roots by closure over root strings, layered by height.
inline std::vector<Root> positive_roots_by_closure(const std::vector<std::vector<Int>>& cartan) {
    const int rank = static_cast<int>(cartan.size());
    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> layer;
    std::vector<Root> out;
    for (int i = 0; i < rank; ++i) {
        std::vector<Int> a(rank, Int(0));
        a[i] = 1;
        layer.push_back(a);
        seen.insert(a);
    }
    auto coroot_pair = [&](const std::vector<Int>& m, int i) {
        Int v(0);
        for (int j = 0; j < rank; ++j) v += m[j] * cartan[j][i];
        return v;  // <alpha, alpha_i^vee>
    };
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end());
        for (const auto& m : layer) out.push_back(Root{m});
        std::vector<std::vector<Int>> next;
        for (const auto& m : layer) {
            for (int i = 0; i < rank; ++i) {
                bool is_simple_i = false;
                {
                    Int total(0);
                    for (const auto& x : m) total += x;
                    is_simple_i = (total == 1 && m[i] == 1);
                }
                if (is_simple_i) continue;  // the string of alpha_i through itself is trivial
                // p = how far the alpha_i-string continues downward from m
                Int p(0);
                std::vector<Int> down = m;
                while (true) {
                    down[i] -= 1;
                    if (down[i] < 0 || !seen.count(down)) break;
                    p += 1;
                }
                Int q = p - coroot_pair(m, i);
                if (q <= 0) continue;
                std::vector<Int> up = m;
                up[i] += 1;
                if (seen.insert(up).second) next.push_back(up);
            }
        }
        layer = std::move(next);
    }
    return out;
}

}  // namespace detail

/// Parses "A3", "D5", "E7", ... into (letter, rank).
inline std::pair<char, int> parse_cartan_type(const std::string& s) {
    if (s.size() < 2 || s[0] < 'A' || s[0] > 'G') throw std::invalid_argument("bad Cartan type: " + s);
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad Cartan type: " + s);
    return {s[0], std::stoi(s.substr(1))};
}

namespace detail {

/// Builds the datum without range validation (used for the D_3 = A_3 datum
/// that the public constructor rejects).
inline RootDatum build_root_datum_unchecked(char letter, int rank) {
    RootDatum d;
    d.letter = letter;
    d.rank = rank;
    d.cartan = cartan_matrix(letter, rank);
    d.symmetrizer = symmetrizer_for(letter, rank);
    RatMat c(rank, RatVec(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) c[i][j] = Rat(d.cartan[i][j]);
    d.fw_in_roots = invert_matrix(c);  // row i solves omega_i = sum_j B[i][j] alpha_j
    d.positive_roots = positive_roots_by_closure(d.cartan);
    return d;
}

}  // namespace detail

inline RootDatum build_root_datum(char letter, int rank) {
    const bool ok = (letter == 'A' && rank >= 1) || ((letter == 'B' || letter == 'C') && rank >= 2) ||
                    (letter == 'D' && rank >= 4) || (letter == 'E' && rank >= 6 && rank <= 8) ||
                    (letter == 'F' && rank == 4) || (letter == 'G' && rank == 2);
    if (!ok)
        throw std::invalid_argument("not a supported simple type: " + std::string(1, letter) +
                                    std::to_string(rank) + (letter == 'D' && rank == 3 ? " (rank-3 type D coincides with A3)" : ""));
    return detail::build_root_datum_unchecked(letter, rank);
}

inline RootDatum build_root_datum(const std::string& type) {
    auto [letter, rank] = parse_cartan_type(type);
    return build_root_datum(letter, rank);
}

/// omega_s, 1-based index.
inline Weight fundamental_weight(const RootDatum& d, int s) {
    if (s < 1 || s > d.rank) throw std::invalid_argument("fundamental weight index out of range");
    std::vector<Int> c(d.rank, Int(0));
    c[s - 1] = 1;
    return Weight{c};
}

inline Weight rho(const RootDatum& d) { return Weight{std::vector<Int>(d.rank, Int(1))}; }

inline Weight zero_weight(const RootDatum& d) { return Weight{std::vector<Int>(d.rank, Int(0))}; }

inline Weight add(const Weight& a, const Weight& b) {
    Weight out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

inline Weight sub(const Weight& a, const Weight& b) {
    Weight out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
    return out;
}

inline Weight scale(const Int& k, const Weight& w) {
    Weight out = w;
    for (auto& c : out.coords) c *= k;
    return out;
}

/// The root rewritten in fundamental-weight coordinates: alpha_j = sum_i c[j][i] omega_i.
inline Weight root_as_weight(const RootDatum& d, const Root& r) {
    std::vector<Int> c(d.rank, Int(0));
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j) c[i] += r.coords[j] * d.cartan[j][i];
    return Weight{c};
}

inline Root simple_root(const RootDatum& d, int i) {
    std::vector<Int> c(d.rank, Int(0));
    c[i - 1] = 1;
    return Root{c};
}

inline Int height(const Root& r) {
    Int h(0);
    for (const auto& c : r.coords) h += c;
    return h;
}

/// Height relative to S: the coefficient sum over simple roots NOT in S
/// (S given as 1-based indices).
inline Int relative_height(const RootDatum& d, const Root& r, const std::set<int>& S) {
    Int h(0);
    for (int i = 1; i <= d.rank; ++i)
        if (!S.count(i)) h += r.coords[i - 1];
    return h;
}

// ---- invariant form ------------------------------------------------------
// (omega_i, alpha_j) = d_j delta_ij, and (alpha_i, alpha_j) = c[i][j] d[j].

inline Rat inner(const RootDatum& d, const Root& a, const Root& b) {
    Rat out(0);
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j) out += Rat(a.coords[i]) * Rat(d.cartan[i][j] * d.symmetrizer[j]) * Rat(b.coords[j]);
    return out;
}

inline Rat inner(const RootDatum& d, const Weight& w, const Root& r) {
    Rat out(0);
    for (int j = 0; j < d.rank; ++j) out += Rat(w.coords[j]) * Rat(d.symmetrizer[j]) * Rat(r.coords[j]);
    return out;
}

inline Rat inner(const RootDatum& d, const Root& r, const Weight& w) { return inner(d, w, r); }

inline Rat inner(const RootDatum& d, const Weight& a, const Weight& b) {
    // express b in simple-root coordinates via the inverse Cartan matrix
    RatVec bc(d.rank, Rat(0));
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j) bc[j] += Rat(b.coords[i]) * d.fw_in_roots[i][j];
    Rat out(0);
    for (int j = 0; j < d.rank; ++j) out += Rat(a.coords[j]) * Rat(d.symmetrizer[j]) * bc[j];
    return out;
}

/// <mu, alpha^vee> = 2 (mu, alpha) / (alpha, alpha); integral on the weight lattice.
inline Int coroot_pairing(const RootDatum& d, const Weight& mu, const Root& alpha) {
    Rat v = Rat(2) * inner(d, mu, alpha) / inner(d, alpha, alpha);
    return to_integer(v);
}

inline bool is_dominant(const Weight& w) {
    return std::all_of(w.coords.begin(), w.coords.end(), [](const Int& c) { return c >= 0; });
}

/// s_i(mu) = mu - <mu, alpha_i^vee> alpha_i  (1-based i).
inline Weight apply_simple_reflection(const RootDatum& d, int i, const Weight& mu) {
    Weight out = mu;
    Int k = mu.coords[i - 1];
    for (int j = 0; j < d.rank; ++j) out.coords[j] -= k * d.cartan[i - 1][j];
    return out;
}

/// Reflection in an arbitrary root.
inline Weight apply_reflection(const RootDatum& d, const Root& alpha, const Weight& mu) {
    Int k = coroot_pairing(d, mu, alpha);
    return sub(mu, scale(k, root_as_weight(d, alpha)));
}

/// s_i acting on a root in simple-root coordinates.
inline Root apply_simple_reflection(const RootDatum& d, int i, const Root& beta) {
    Int k(0);
    for (int j = 0; j < d.rank; ++j) k += beta.coords[j] * d.cartan[j][i - 1];
    Root out = beta;
    out.coords[i - 1] -= k;
    return out;
}

/// The W-dominant representative of a weight.
inline Weight dominant_representative(const RootDatum& d, Weight mu) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i <= d.rank; ++i) {
            if (mu.coords[i - 1] < 0) {
                mu = apply_simple_reflection(d, i, mu);
                moved = true;
            }
        }
    }
    return mu;
}

inline const Root& highest_root(const RootDatum& d) {
    return d.positive_roots.back();  // closure lists by height; the top layer is a single root
}

/// 1-based indices s such that omega_s is minuscule:
/// <omega_s, alpha^vee> in {0,1} for every positive root alpha.
inline std::vector<int> minuscule_weights(const RootDatum& d) {
    std::vector<int> out;
    for (int s = 1; s <= d.rank; ++s) {
        Weight w = fundamental_weight(d, s);
        bool ok = true;
        for (const auto& alpha : d.positive_roots) {
            Int p = coroot_pairing(d, w, alpha);
            if (p != 0 && p != 1) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(s);
    }
    return out;
}

/// Writes a weight as rational coordinates in the simple-root basis.
inline RatVec weight_in_root_coords(const RootDatum& d, const Weight& w) {
    RatVec out(d.rank, Rat(0));
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j) out[j] += Rat(w.coords[i]) * d.fw_in_roots[i][j];
    return out;
}

}  // namespace qflag

#endif
