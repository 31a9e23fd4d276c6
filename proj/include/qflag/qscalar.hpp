// Exact scalars for the quantum algebra: finite sums of rational multiples of
// rational powers of q, stored sparsely as exponent -> coefficient.
#ifndef QFLAG_QSCALAR_HPP
#define QFLAG_QSCALAR_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qflag/exact.hpp"

namespace qflag {

struct QScalar {
    std::map<Rat, Rat> terms;  // exponent -> nonzero coefficient

    static QScalar zero() { return {}; }
    static QScalar one() { return from_rat(Rat(1)); }
    static QScalar from_rat(const Rat& c) {
        QScalar s;
        if (c != 0) s.terms[Rat(0)] = c;
        return s;
    }
    static QScalar q_power(const Rat& e, const Rat& c = Rat(1)) {
        QScalar s;
        if (c != 0) s.terms[e] = c;
        return s;
    }
    /// q - q^{-1}, the ubiquitous structure constant.
    static QScalar q_minus_qinv() {
        QScalar s;
        s.terms[Rat(1)] = 1;
        s.terms[Rat(-1)] = -1;
        return s;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_single_term() const { return terms.size() == 1; }

    friend bool operator==(const QScalar& a, const QScalar& b) { return a.terms == b.terms; }

    QScalar& operator+=(const QScalar& o) {
        for (const auto& [e, c] : o.terms) {
            Rat& slot = terms[e];
            slot += c;
            if (slot == 0) terms.erase(e);
        }
        return *this;
    }
    QScalar& operator-=(const QScalar& o) {
        for (const auto& [e, c] : o.terms) {
            Rat& slot = terms[e];
            slot -= c;
            if (slot == 0) terms.erase(e);
        }
        return *this;
    }
    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator-(const QScalar& a) {
        QScalar out;
        for (const auto& [e, c] : a.terms) out.terms[e] = Rat(-c);
        return out;
    }
    friend QScalar operator*(const QScalar& a, const QScalar& b) {
        QScalar out;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                Rat e = Rat(ea + eb);
                Rat& slot = out.terms[e];
                slot += Rat(ca * cb);
                if (slot == 0) out.terms.erase(e);
            }
        return out;
    }

    /// Inverse, defined exactly when the scalar is a single term.
    QScalar inverse() const {
        if (!is_single_term()) throw std::domain_error("QScalar is invertible only when it has a single term");
        const auto& [e, c] = *terms.begin();
        return q_power(Rat(-e), Rat(1 / c));
    }

    /// Value at q = x (x nonzero); requires all exponents integral.
    Rat specialize(const Rat& x) const {
        Rat out(0);
        for (const auto& [e, c] : terms) out += Rat(c * pow_rat(x, to_integer(e)));
        return out;
    }

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms) {
            if (!first) os << " + ";
            os << ::qflag::to_string(c);
            if (e != 0) os << "*q^(" << ::qflag::to_string(e) << ")";
            first = false;
        }
        return os.str();
    }
};

}  // namespace qflag

#endif
