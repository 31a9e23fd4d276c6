// Weyl dimension formula, Freudenthal weight multiplicities, and the
// decreasing-chain character identity for minuscule weights.
#ifndef QFLAG_CHARACTER_HPP
#define QFLAG_CHARACTER_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "qflag/poset.hpp"
#include "qflag/root_datum.hpp"
#include "qflag/weyl.hpp"

namespace qflag {

/// dim V(mu) by the Weyl dimension formula (exact rational product).
inline Int weyl_dim(const RootDatum& d, const Weight& mu) {
    if (!is_dominant(mu)) throw std::invalid_argument("weyl_dim requires a dominant weight");
    Rat num(1), den(1);
    const Weight mr = add(mu, rho(d));
    const Weight r = rho(d);
    for (const auto& alpha : d.positive_roots) {
        num *= inner(d, mr, alpha);
        den *= inner(d, r, alpha);
    }
    Rat dim = num / den;
    Int result = to_integer(dim);
    if (result <= 0) throw std::logic_error("Weyl dimension came out nonpositive");
    return result;
}

/// Weight multiplicities of V(lambda); keys are fundamental coordinates.
struct CharacterTable {
    std::map<std::vector<Int>, Int> dominant;  // dominant weights only
    std::map<std::vector<Int>, Int> all;       // full Weyl-orbit expansion
    Int dimension{0};
};

/// Full W-orbit of a weight (breadth-first closure under simple reflections).
inline std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& start) {
    std::set<std::vector<Int>> seen = {start.coords};
    std::vector<Weight> out = {start};
    for (std::size_t head = 0; head < out.size(); ++head) {
        Weight cur = out[head];
        for (int i = 1; i <= d.rank; ++i) {
            Weight next = apply_simple_reflection(d, i, cur);
            if (seen.insert(next.coords).second) out.push_back(next);
        }
    }
    return out;
}

/// Weight multiplicities of the irreducible module V(lambda) by Freudenthal's
/// recursion, run over the dominant weights ordered by depth below lambda.
inline CharacterTable freudenthal_character(const RootDatum& d, const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("freudenthal_character requires a dominant weight");

    // Candidate dominant weights: mu = lambda - beta with beta in the box
    // 0 <= beta <= lambda - w0(lambda) componentwise in simple-root coordinates.
    const Weight lowest_dual = dominant_representative(d, scale(Int(-1), lambda));  // = -w0(lambda)
    const RatVec bound_rat = weight_in_root_coords(d, add(lambda, lowest_dual));
    std::vector<Int> bound(d.rank);
    for (int i = 0; i < d.rank; ++i) {
        bound[i] = to_integer(bound_rat[i]);
        if (bound[i] < 0) throw std::logic_error("negative root-coordinate span for a dominant weight");
    }

    // Depth-ordered dominant weights below lambda.  All of them carry nonzero
    // multiplicity (the weight system of V(lambda) is saturated).
    std::map<Int, std::vector<Weight>> by_depth;
    {
        std::vector<Int> c(d.rank, Int(0));
        while (true) {
            Weight mu = lambda;
            Int depth(0);
            for (int i = 0; i < d.rank; ++i) {
                mu = sub(mu, scale(c[i], root_as_weight(d, simple_root(d, i + 1))));
                depth += c[i];
            }
            if (is_dominant(mu)) by_depth[depth].push_back(mu);
            int pos = 0;
            while (pos < d.rank && c[pos] == bound[pos]) c[pos++] = 0;
            if (pos == d.rank) break;
            c[pos] += 1;
        }
    }

    CharacterTable table;
    const Weight r = rho(d);
    const Rat top_norm = inner(d, add(lambda, r), add(lambda, r));
    for (const auto& [depth, mus] : by_depth) {
        for (const auto& mu : mus) {
            if (depth == 0) {
                table.dominant[mu.coords] = 1;
                continue;
            }
            Rat rhs(0);
            for (const auto& alpha : d.positive_roots) {
                const Weight aw = root_as_weight(d, alpha);
                Weight shifted = mu;
                for (Int k(1);; k += 1) {
                    shifted = add(shifted, aw);
                    auto it = table.dominant.find(dominant_representative(d, shifted).coords);
                    if (it == table.dominant.end()) break;  // the alpha-string has ended
                    rhs += Rat(it->second) * inner(d, shifted, alpha);
                }
            }
            const Rat denom = top_norm - inner(d, add(mu, r), add(mu, r));
            if (denom == 0) throw std::logic_error("vanishing Freudenthal denominator at a proper weight");
            Rat mult = 2 * rhs / denom;
            table.dominant[mu.coords] = to_integer(mult);
        }
    }

    for (const auto& [coords, mult] : table.dominant) {
        for (const auto& w : weyl_orbit(d, Weight{coords})) {
            table.all[w.coords] = mult;
            table.dimension += mult;
        }
    }
    return table;
}

/// Multiset of total weights w_1(lambda)+...+w_n(lambda) over weakly
/// decreasing n-chains in the minuscule poset (n = 0 gives {0 : 1}).
inline std::map<std::vector<Int>, Int> chain_weight_multiset(const MinusculePoset& p, const FinitePoset& order,
                                                             int n) {
    const int sz = static_cast<int>(p.size());
    std::map<std::vector<Int>, Int> zero = {{zero_weight(p.datum).coords, Int(1)}};
    if (n == 0) return zero;
    // dp[x] = multiset of partial sums over decreasing chains (t_1 >= ... >= t_j) with t_j = x
    std::vector<std::map<std::vector<Int>, Int>> dp(sz);
    for (int x = 0; x < sz; ++x) dp[x][p.weights[x].coords] = 1;
    for (int j = 1; j < n; ++j) {
        std::vector<std::map<std::vector<Int>, Int>> next(sz);
        for (int y = 0; y < sz; ++y)
            for (int x = 0; x < sz; ++x)
                if (order.leq(y, x))
                    for (const auto& [coords, cnt] : dp[x])
                        next[y][add(Weight{coords}, p.weights[y]).coords] += cnt;
        dp = std::move(next);
    }
    std::map<std::vector<Int>, Int> total;
    for (int x = 0; x < sz; ++x)
        for (const auto& [coords, cnt] : dp[x]) total[coords] += cnt;
    return total;
}

/// Certifies that degree-n standard monomials match the irreducible character
/// of V(n omega_s): dimension count always, and the full weight multiset
/// (against Freudenthal) when the rank is at most 4.
inline bool verify_character_identity(const RootDatum& d, int s, int n) {
    auto p = build_minuscule_poset(d, s);
    auto order = order_poset(p);
    const Weight lambda = scale(Int(n), fundamental_weight(d, s));
    if (count_decreasing_chains(order, n) != weyl_dim(d, lambda)) return false;
    if (d.rank <= 4) {
        auto chains = chain_weight_multiset(p, order, n);
        auto character = freudenthal_character(d, lambda);
        if (chains != character.all) return false;
    }
    return true;
}

}  // namespace qflag

#endif
