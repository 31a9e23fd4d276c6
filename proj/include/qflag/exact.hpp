// Exact arithmetic substrate: arbitrary-precision integers and rationals
// (GMP) plus the small dense linear algebra used across the library.
// No floating point is used anywhere.
#ifndef QFLAG_EXACT_HPP
#define QFLAG_EXACT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qflag {

using Int = mpz_class;
using Rat = mpq_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Exact string form: integers as "n", non-integers as "p/q".
inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// The integer a rational is known to be; throws if it is not one.
inline Int to_integer(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("expected an integer, got " + r.get_str());
    return r.get_num();
}

inline Int binomial(const Int& n, unsigned long k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    Int out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

/// x^e for integer e (negative allowed when x != 0).
inline Rat pow_rat(const Rat& x, const Int& e) {
    if (e == 0) return Rat(1);
    if (x == 0 && e < 0) throw std::domain_error("pow_rat: 0 to a negative power");
    unsigned long mag = mpz_get_ui(Int(abs(e)).get_mpz_t());
    Rat base = e > 0 ? x : Rat(1) / x;
    Rat out(1);
    for (unsigned long i = 0; i < mag; ++i) out *= base;
    return out;
}

inline RatMat identity_matrix(std::size_t n) {
    RatMat m(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline RatVec mat_vec(const RatMat& m, const RatVec& v) {
    RatVec out(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

/// Exact inverse by Gauss-Jordan elimination; throws on singular input.
inline RatMat invert_matrix(RatMat a) {
    const std::size_t n = a.size();
    RatMat inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("invert_matrix: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

/// Rank of a rational matrix by exact row reduction (the matrix is consumed).
inline std::size_t rational_rank(RatMat m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        Rat d = m[rank][col];
        for (std::size_t j = col; j < cols; ++j) m[rank][j] /= d;
        for (std::size_t row = 0; row < rows; ++row) {
            if (row == rank || m[row][col] == 0) continue;
            Rat f = m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[row][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace qflag

#endif
