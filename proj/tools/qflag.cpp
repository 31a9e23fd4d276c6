// Command-line frontend: every verification in the library as a reproducible
// command with text or deterministic JSON output.
//
// Exit codes: 0 all requested checks pass, 1 a mathematical check failed,
// 2 usage or budget error.
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qflag/serialize.hpp"
#include "qflag/verify.hpp"

namespace {

using namespace qflag;

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "also write the output to this file");
}

int emit(const OutputOptions& opts, const std::string& text, const Json& json, bool pass) {
    const std::string payload = opts.format == "json" ? json.dump(2) + "\n" : text;
    std::cout << payload;
    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path);
        if (!f) throw std::invalid_argument("cannot open output file: " + opts.out_path);
        f << payload;
    }
    return pass ? 0 : 1;
}

std::pair<char, int> parse_type(const std::string& t) {
    if (t.size() < 2 || !std::isalpha(static_cast<unsigned char>(t[0])))
        throw std::invalid_argument("type must be a letter followed by a rank, e.g. A3");
    int rank = 0;
    try {
        std::size_t used = 0;
        rank = std::stoi(t.substr(1), &used);
        if (used + 1 != t.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rank in type string: " + t);
    }
    return {static_cast<char>(std::toupper(static_cast<unsigned char>(t[0]))), rank};
}

std::string word_str(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << "s" << word[i];
    return os.str();
}

std::string check_line(const std::string& name, bool pass, const std::string& extra = "") {
    return "check " + name + ": " + (pass ? "pass" : "FAIL") + (extra.empty() ? "" : " (" + extra + ")") + "\n";
}

// ---- roots -------------------------------------------------------------------

int run_roots(const std::string& type, const OutputOptions& opts) {
    const auto [letter, rank] = parse_type(type);
    const RootDatum d = build_root_datum(letter, rank);
    const auto minuscule = minuscule_weights(d);
    const Weight r = rho(d);

    std::ostringstream text;
    text << "type " << d.type_string() << "\n";
    text << "rank " << d.rank << "\n";
    text << "positive roots " << d.positive_roots.size() << "\n";
    text << "minuscule weight indices";
    if (minuscule.empty()) text << " none";
    for (int s : minuscule) text << " " << s;
    text << "\n";

    Json j = report_envelope("roots");
    j["type"] = d.type_string();
    j["rank"] = d.rank;
    j["positive_roots"] = d.positive_roots.size();
    j["minuscule"] = minuscule;
    j["rho"] = weight_json(r);
    j["pass"] = true;
    return emit(opts, text.str(), j, true);
}

// ---- wonderful -----------------------------------------------------------------

int run_wonderful_symmetric(int n, const OutputOptions& opts) {
    if (n < 2 || n > 6) throw std::invalid_argument("symmetric-group budget allows 2 <= n <= 6");
    const RootDatum d = build_root_datum('A', n - 1);
    const WeylGroup g = build_weyl_group(d);
    const FinitePoset p = bruhat_poset(g);
    const WonderfulReport rep = check_wonderful(p);

    std::ostringstream text;
    text << "full Bruhat order on the symmetric group S" << n << ", " << p.size() << " elements\n";
    text << check_line("poset-wonderful", rep.wonderful);
    Json j = report_envelope("wonderful");
    j["mode"] = "symmetric-group";
    j["group"] = "S" + std::to_string(n);
    j["size"] = p.size();
    j["report"] = wonderful_json(rep);
    if (rep.witness && !rep.witness->is_bounds_sentinel()) {
        const auto& w = *rep.witness;
        text << "witness: z = " << word_str(g.elements[w.z].word) << ", x = " << word_str(g.elements[w.x].word)
             << ", y = " << word_str(g.elements[w.y].word) << ", u = " << word_str(g.elements[w.u].word) << "\n";
        j["witness_words"] = Json{{"z", word_str(g.elements[w.z].word)},
                                  {"x", word_str(g.elements[w.x].word)},
                                  {"y", word_str(g.elements[w.y].word)},
                                  {"u", word_str(g.elements[w.u].word)}};
    }
    j["pass"] = rep.wonderful;
    return emit(opts, text.str(), j, rep.wonderful);
}

int run_wonderful(const std::string& type, int s, bool intervals, const OutputOptions& opts) {
    const auto [letter, rank] = parse_type(type);
    const RootDatum d = build_root_datum(letter, rank);
    const MinusculePoset mp = build_minuscule_poset(d, s);  // rejects non-minuscule s
    const FinitePoset p = order_poset(mp);

    const bool main_ok = check_wonderful(p).wonderful;
    const bool dual_ok = check_wonderful(dual(p)).wonderful;
    bool intervals_ok = true;
    if (intervals)
        for (int t = 0; t < static_cast<int>(p.size()); ++t) {
            const FinitePoset q = interval_below(p, t).poset;
            intervals_ok = intervals_ok && check_wonderful(q).wonderful && check_wonderful(dual(q)).wonderful;
        }
    const bool pass = main_ok && dual_ok && intervals_ok;

    std::ostringstream text;
    text << "coset poset " << d.type_string() << " s=" << s << ", " << p.size() << " elements\n";
    text << check_line("poset-wonderful", main_ok);
    text << check_line("dual-wonderful", dual_ok);
    if (intervals) text << check_line("interval-wonderful", intervals_ok, std::to_string(p.size()) + " intervals and duals");

    Json j = report_envelope("wonderful");
    j["mode"] = "coset";
    j["type"] = d.type_string();
    j["s"] = s;
    j["size"] = p.size();
    Json checks = Json::array();
    checks.push_back(Json{{"name", "poset-wonderful"}, {"pass", main_ok}});
    checks.push_back(Json{{"name", "dual-wonderful"}, {"pass", dual_ok}});
    if (intervals) checks.push_back(Json{{"name", "interval-wonderful"}, {"pass", intervals_ok}});
    j["checks"] = checks;
    j["pass"] = pass;
    return emit(opts, text.str(), j, pass);
}

// ---- hilbert --------------------------------------------------------------------

int run_hilbert(const std::string& type, int s, bool big_cell, const std::string& compare,
                const OutputOptions& opts) {
    const auto [letter, rank] = parse_type(type);
    const RootDatum d = build_root_datum(letter, rank);
    const HilbertSeries flag = flag_hilbert_series(d, s);  // rejects unsupported weights
    const GorensteinCertificate cert = gorenstein_certificate(flag);
    bool pass = cert.holds;

    std::ostringstream text;
    text << "flag series " << d.type_string() << " s=" << s << ": " << series_to_string(flag) << "\n";
    text << "growth " << gkdim(flag) << "\n";
    text << check_line("hilbert-palindromy", cert.holds,
                       cert.holds ? "shift " + int_str(cert.m) + ", sign " + std::to_string(cert.sign) : "");

    Json j = report_envelope("hilbert");
    j["type"] = d.type_string();
    j["s"] = s;
    j["flag_series"] = series_json(flag);
    j["growth"] = gkdim(flag);
    j["palindromy"] = gorenstein_json(cert);

    const auto ms = minuscule_weights(d);
    const bool ade = letter == 'A' || letter == 'D' || letter == 'E';
    if (ade && std::find(ms.begin(), ms.end(), s) != ms.end()) {
        const bool rec = reciprocity_check(d, s);
        pass = pass && rec;
        text << check_line("dimension-reciprocity", rec);
        j["reciprocity"] = rec;
    }

    if (big_cell) {
        const HilbertSeries cell = big_cell_hilbert_series(d, s);
        const GorensteinCertificate cc = gorenstein_certificate(cell);
        pass = pass && cc.holds;
        text << "big-cell series: " << series_to_string(cell) << "\n";
        text << check_line("big-cell-palindromy", cc.holds,
                           cc.holds ? "shift " + int_str(cc.m) + ", sign " + std::to_string(cc.sign) : "");
        j["big_cell"] = Json{{"series", series_json(cell)}, {"palindromy", gorenstein_json(cc)}};
    }

    if (!compare.empty()) {
        const auto colon = compare.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--compare expects TYPE:S, e.g. D4:4");
        const auto [cl, cr] = parse_type(compare.substr(0, colon));
        const int cs = std::stoi(compare.substr(colon + 1));
        const RootDatum d2 = build_root_datum(cl, cr);
        const bool equal = series_equal(flag, flag_hilbert_series(d2, cs));
        pass = pass && equal;
        text << check_line("series-coincidence", equal,
                           d.type_string() + " s=" + std::to_string(s) + " vs " + d2.type_string() +
                               " s=" + std::to_string(cs));
        j["compare"] = Json{{"type", d2.type_string()}, {"s", cs}, {"equal", equal}};
    }

    j["pass"] = pass;
    return emit(opts, text.str(), j, pass);
}

// ---- asl -----------------------------------------------------------------------

int run_asl(const std::vector<int>& grassmann, int degree, const std::optional<int>& schubert,
            const OutputOptions& opts) {
    const int m = grassmann[0], n = grassmann[1];
    QGrassmannian g(m, n);  // rejects budget violations

    std::optional<Subset> w;
    std::optional<MinusculePoset> mp;
    std::optional<FinitePoset> order;
    if (m < n) {
        const RootDatum d = build_root_datum('A', n - 1);
        mp = build_minuscule_poset(d, m);
        order = order_poset(*mp);
        if (schubert) w = subset_of_poset_index(d, *mp, m, *schubert);
    } else if (schubert) {
        throw std::invalid_argument("--schubert requires m < n");
    }

    const ASLReport rep = g.verify_asl_axioms(w, degree);
    bool dims_ok = true;
    std::vector<Int> dims, chains;
    for (int deg = 0; deg <= degree; ++deg) {
        const Int dim = w ? g.schubert_quotient_dimension(*w, deg) : g.component_dimension(deg);
        Int expected(1);
        if (order)
            expected = count_decreasing_chains(*order, deg,
                                               w ? std::optional<int>(*schubert) : std::optional<int>{});
        dims.push_back(dim);
        chains.push_back(expected);
        dims_ok = dims_ok && dim == expected;
    }
    bool pass = rep.all_pass() && dims_ok;

    std::ostringstream text;
    text << "minor algebra G_q(" << m << "," << n << "), degree " << degree;
    if (w) text << ", quotient below " << subset_to_string(*w);
    text << "\n";
    text << "standard monomial counts";
    for (const auto& c : rep.standard_counts) text << " " << int_str(c);
    text << "\n";
    text << check_line("straightening-axioms", rep.all_pass());
    for (const auto& f : rep.failures) text << "  failure: " << f << "\n";
    {
        std::ostringstream ds;
        for (std::size_t i = 0; i < dims.size(); ++i) ds << (i ? " " : "") << int_str(dims[i]);
        text << check_line("standard-dimension", dims_ok, "degrees 0.." + std::to_string(degree) + ": " + ds.str());
    }

    Json j = report_envelope("asl");
    j["m"] = m;
    j["n"] = n;
    j["degree"] = degree;
    if (w) j["schubert"] = Json{{"index", *schubert}, {"top", subset_json(*w)}};
    j["report"] = asl_json(rep, true);
    j["dimensions"] = Json{{"certified", int_vec_json(dims)}, {"chain_counts", int_vec_json(chains)}, {"match", dims_ok}};

    if (!w) {
        const CommutationReport comm = g.minimum_commutation_report();
        pass = pass && comm.holds;
        text << check_line("minimum-commutation", comm.holds,
                           "orientation " + std::string(comm.orientation > 0 ? "+1" : "-1"));
        j["commutation"] = commutation_json(comm);
    }

    j["pass"] = pass;
    return emit(opts, text.str(), j, pass);
}

// ---- verify-all -------------------------------------------------------------------

int run_verify_all(int max_rank, const std::string& json_path, const OutputOptions& opts) {
    if (max_rank < 1) throw std::invalid_argument("--max-rank must be at least 1");
    const std::vector<CriterionResult> results = verify_all(max_rank);
    bool pass = true;
    int total_checks = 0;

    std::ostringstream text;
    for (const auto& r : results) {
        pass = pass && r.pass;
        total_checks += static_cast<int>(r.checks.size());
        std::ostringstream name;
        name << "criterion " << (r.number < 10 ? " " : "") << r.number << " " << r.title;
        std::string padded = name.str();
        padded.resize(45, ' ');
        text << padded << (r.pass ? "pass" : "FAIL") << " (" << r.checks.size() << " checks)\n";
        for (const auto& c : r.checks)
            if (!c.pass) text << "  FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    text << "result: " << (pass ? "all" : "NOT all") << " " << results.size() << " criteria pass, " << total_checks
         << " checks\n";

    Json j = report_envelope("verify-all");
    j["max_rank"] = max_rank;
    j["criteria"] = criteria_json(results);
    j["pass"] = pass;

    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw std::invalid_argument("cannot open output file: " + json_path);
        f << j.dump(2) << "\n";
    }
    return emit(opts, text.str(), j, pass);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for minuscule flag-manifold combinatorics"};
    app.require_subcommand(1);

    OutputOptions roots_opts, wonderful_opts, hilbert_opts, asl_opts, verify_opts;

    auto* roots = app.add_subcommand("roots", "summarize a root datum");
    std::string roots_type;
    roots->add_option("type", roots_type, "Cartan type, e.g. A3")->required();
    add_output_options(roots, roots_opts);

    auto* wonderful = app.add_subcommand("wonderful", "check the wonderful property of a coset poset");
    std::string wonderful_type;
    int wonderful_s = 1;
    bool wonderful_intervals = false;
    int symmetric_group = 0;
    wonderful->add_option("type", wonderful_type, "Cartan type, e.g. A3");
    wonderful->add_option("--s", wonderful_s, "fundamental weight index");
    wonderful->add_flag("--intervals", wonderful_intervals, "also check every interval and its dual");
    wonderful->add_option("--symmetric-group", symmetric_group, "check the full Bruhat order on S_n instead");
    add_output_options(wonderful, wonderful_opts);

    auto* hilbert = app.add_subcommand("hilbert", "graded series, palindromy and reciprocity certificates");
    std::string hilbert_type, hilbert_compare;
    int hilbert_s = 1;
    bool hilbert_big_cell = false;
    hilbert->add_option("type", hilbert_type, "Cartan type, e.g. A3")->required();
    hilbert->add_option("--s", hilbert_s, "fundamental weight index")->required();
    hilbert->add_flag("--big-cell", hilbert_big_cell, "also emit the big-cell series and its certificate");
    hilbert->add_option("--compare", hilbert_compare, "compare against the flag series of TYPE:S");
    add_output_options(hilbert, hilbert_opts);

    auto* asl = app.add_subcommand("asl", "straightening-law axioms and certified graded dimensions");
    std::vector<int> grassmann;
    int asl_degree = 2;
    int asl_schubert = -1;
    asl->add_option("--grassmann", grassmann, "minor algebra size M N")->expected(2)->required();
    asl->add_option("--degree", asl_degree, "degree bound for the axiom checks")->capture_default_str();
    asl->add_option("--schubert", asl_schubert, "restrict to the Schubert quotient below this poset index");
    add_output_options(asl, asl_opts);

    auto* verify = app.add_subcommand("verify-all", "run the complete verification matrix");
    int max_rank = 7;
    std::string verify_json;
    verify->add_option("--max-rank", max_rank, "restrict rank-parametrized case lists")->capture_default_str();
    verify->add_option("--json", verify_json, "write the JSON report to this file");
    add_output_options(verify, verify_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (roots->parsed()) return run_roots(roots_type, roots_opts);
        if (wonderful->parsed()) {
            if (symmetric_group > 0) return run_wonderful_symmetric(symmetric_group, wonderful_opts);
            if (wonderful_type.empty())
                throw std::invalid_argument("wonderful needs a Cartan type or --symmetric-group");
            return run_wonderful(wonderful_type, wonderful_s, wonderful_intervals, wonderful_opts);
        }
        if (hilbert->parsed())
            return run_hilbert(hilbert_type, hilbert_s, hilbert_big_cell, hilbert_compare, hilbert_opts);
        if (asl->parsed())
            return run_asl(grassmann, asl_degree,
                           asl_schubert >= 0 ? std::optional<int>(asl_schubert) : std::nullopt, asl_opts);
        if (verify->parsed()) return run_verify_all(max_rank, verify_json, verify_opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
