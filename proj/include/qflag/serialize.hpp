// Deterministic JSON serialization of the library's report types.  All
// numbers are emitted as exact decimal strings (rationals as "p/q"), q-power
// scalars as exponent/coefficient pair lists, and every object carries its
// fields in a fixed order so identical inputs render identical bytes.
#ifndef QFLAG_SERIALIZE_HPP
#define QFLAG_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qflag/hilbert.hpp"
#include "qflag/poset.hpp"
#include "qflag/qgrass.hpp"
#include "qflag/verify.hpp"
#include "qflag/weyl.hpp"

namespace qflag {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline std::string int_str(const Int& v) { return v.get_str(); }
inline std::string rat_str(const Rat& v) {
    Rat c = v;
    c.canonicalize();  // two-argument construction does not reduce the fraction
    return c.get_str();
}

inline Json int_vec_json(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(int_str(x));
    return a;
}

/// Exact Laurent scalar as a sorted list of [exponent, coefficient] pairs.
inline Json qscalar_json(const QScalar& s) {
    Json a = Json::array();
    for (const auto& [e, c] : s.terms) a.push_back(Json::array({rat_str(e), rat_str(c)}));
    return a;
}

inline Json weight_json(const Weight& w) { return int_vec_json(w.coords); }

inline Json series_json(const HilbertSeries& h) {
    Json j;
    j["numerator"] = int_vec_json(h.numerator);
    j["denominator_exponents"] = h.denominator_exponents;
    j["display"] = series_to_string(h);
    return j;
}

inline Json gorenstein_json(const GorensteinCertificate& c) {
    Json j;
    j["holds"] = c.holds;
    if (c.holds) {
        j["shift"] = int_str(c.m);
        j["sign"] = c.sign;
    }
    return j;
}

inline Json wonderful_json(const WonderfulReport& r) {
    Json j;
    j["wonderful"] = r.wonderful;
    if (r.witness) {
        Json w;
        w["bounds_sentinel"] = r.witness->is_bounds_sentinel();
        w["z"] = r.witness->z;
        w["x"] = r.witness->x;
        w["y"] = r.witness->y;
        w["u"] = r.witness->u;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

inline Json poset_json(const MinusculePoset& p) {
    Json j;
    j["type"] = p.datum.type_string();
    j["s"] = p.s;
    j["size"] = p.size();
    Json elements = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        Json e;
        e["index"] = i;
        e["length"] = int_str(p.lengths[i]);
        e["word"] = p.words[i];
        e["weight"] = weight_json(p.weights[i]);
        elements.push_back(e);
    }
    j["elements"] = elements;
    Json covers = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (const auto& [label, upper] : p.covers_up[i])
            covers.push_back(Json{{"from", i}, {"label", label}, {"to", upper}});
    j["covers"] = covers;
    return j;
}

inline Json subset_json(const Subset& s) { return Json(s); }

inline Json straightening_entry_json(const StraighteningEntry& e) {
    Json j;
    j["left"] = subset_json(e.left);
    j["right"] = subset_json(e.right);
    Json terms = Json::array();
    for (const auto& t : e.expansion)
        terms.push_back(Json{{"first", subset_json(t.first)},
                             {"second", subset_json(t.second)},
                             {"coeff", qscalar_json(t.coeff)}});
    j["expansion"] = terms;
    return j;
}

inline Json asl_json(const ASLReport& r, bool include_tables = false) {
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["quotient"] = r.quotient;
    if (r.quotient) j["top"] = subset_json(r.top);
    j["degree"] = r.degree;
    j["axioms"] = Json{{"generators_nonzero", r.axiom1_generators},
                       {"degree_one_independent", r.axiom2_degree_one_independent},
                       {"standard_independent", r.axiom3_standard_independent},
                       {"incomparable_bracketing", r.axiom4_incomparable_shape},
                       {"reversal_scalar", r.axiom5_commutation_shape}};
    j["standard_counts"] = int_vec_json(r.standard_counts);
    j["pass"] = r.all_pass();
    j["failures"] = r.failures;
    if (include_tables) {
        Json tables = Json::array();
        for (const auto& e : r.tables) tables.push_back(straightening_entry_json(e));
        j["straightening_tables"] = tables;
    }
    return j;
}

inline Json commutation_json(const CommutationReport& r) {
    Json j;
    j["holds"] = r.holds;
    j["orientation"] = r.orientation;
    Json exps = Json::array();
    for (const auto& [subset, k] : r.exponents)
        exps.push_back(Json{{"subset", subset_json(subset)}, {"exponent", rat_str(k)}});
    j["exponents"] = exps;
    j["failures"] = r.failures;
    return j;
}

inline Json criterion_json(const CriterionResult& r) {
    Json j;
    j["criterion"] = r.number;
    j["title"] = r.title;
    j["pass"] = r.pass;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json line;
        line["name"] = c.name;
        line["pass"] = c.pass;
        if (!c.detail.empty()) line["detail"] = c.detail;
        checks.push_back(line);
    }
    j["checks"] = checks;
    return j;
}

inline Json criteria_json(const std::vector<CriterionResult>& rs) {
    Json a = Json::array();
    for (const auto& r : rs) a.push_back(criterion_json(r));
    return a;
}

/// Standard envelope for command output: schema version first, then the
/// command name, then command-specific fields added by the caller.
inline Json report_envelope(const std::string& command) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

}  // namespace qflag

#endif
