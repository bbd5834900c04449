#pragma once

/**
 * @file cli.hpp
 * @brief Digraph file format and the command implementations behind the
 *        `gzeta` tool. Commands return their rendered output instead of
 *        printing, so identical inputs give byte-identical results.
 *
 * File format (line oriented, '#' starts a comment):
 *
 *     digraph <name>
 *     vertices <n>
 *     arc <id> <tail> <head> [tau=<rat>] [upsilon=<rat>]
 *     inverse <id> <id>
 *     edge <u> <v>
 *
 * Rationals are "p" or "p/q" with q > 0. A file made only of `edge` lines
 * describes an undirected graph and is read as its symmetric digraph.
 */

#include "gzeta/verify.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gzeta::cli {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct DigraphFile {
    std::string name = "unnamed";
    std::size_t vertex_count = 0;
    std::vector<Arc> arcs;
    std::map<std::string, Rational> tau, upsilon;
    std::vector<std::pair<std::string, std::string>> inverse_pairs;
    std::vector<VertexPair> edges;

    bool is_undirected() const { return arcs.empty() && !edges.empty(); }
    UndirectedGraph graph() const { return {vertex_count, edges}; }
};

inline std::vector<std::string> split_words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> words;
    for (std::string w; in >> w;) words.push_back(w);
    return words;
}

namespace detail {

inline std::size_t parse_count(const std::string& s, std::size_t line, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line, std::string("expected ") + what + ", got '" + s + "'");
    try {
        return std::stoul(s);
    } catch (const std::exception&) {
        throw ParseError(line, std::string(what) + " out of range: '" + s + "'");
    }
}

inline Rational parse_weight(const std::string& s, std::size_t line) {
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
    }
}

} // namespace detail

/// Parses and validates a digraph (or undirected graph) file.
inline DigraphFile parse_digraph_file(const std::string& text) {
    DigraphFile f;
    std::optional<std::size_t> vertices_line;
    std::map<std::string, std::size_t> arc_line;
    std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> inverse_lines;
    std::vector<std::size_t> edge_lines;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto w = split_words(raw);
        if (w.empty()) continue;
        const std::string& kw = w[0];
        if (kw == "digraph" || kw == "graph") {
            if (w.size() != 2) throw ParseError(lineno, "expected '" + kw + " <name>'");
            f.name = w[1];
        } else if (kw == "vertices") {
            if (w.size() != 2) throw ParseError(lineno, "expected 'vertices <n>'");
            if (vertices_line) throw ParseError(lineno, "vertices declared twice");
            f.vertex_count = detail::parse_count(w[1], lineno, "vertex count");
            vertices_line = lineno;
        } else if (kw == "arc") {
            if (w.size() < 4 || w.size() > 6) throw ParseError(lineno, "expected 'arc <id> <tail> <head> [tau=<rat>] [upsilon=<rat>]'");
            Arc a{w[1], detail::parse_count(w[2], lineno, "tail vertex"), detail::parse_count(w[3], lineno, "head vertex")};
            if (!arc_line.emplace(a.id, lineno).second) throw ParseError(lineno, "duplicate arc id '" + a.id + "'");
            for (std::size_t k = 4; k < w.size(); ++k) {
                const auto eq = w[k].find('=');
                const std::string key = w[k].substr(0, eq);
                if (eq == std::string::npos || (key != "tau" && key != "upsilon"))
                    throw ParseError(lineno, "unknown arc attribute '" + w[k] + "'");
                auto& target = key == "tau" ? f.tau : f.upsilon;
                if (!target.emplace(a.id, detail::parse_weight(w[k].substr(eq + 1), lineno)).second)
                    throw ParseError(lineno, key + " given twice");
            }
            f.arcs.push_back(std::move(a));
        } else if (kw == "inverse") {
            if (w.size() != 3) throw ParseError(lineno, "expected 'inverse <id> <id>'");
            inverse_lines.push_back({lineno, {w[1], w[2]}});
        } else if (kw == "edge") {
            if (w.size() != 3) throw ParseError(lineno, "expected 'edge <u> <v>'");
            f.edges.emplace_back(detail::parse_count(w[1], lineno, "vertex"), detail::parse_count(w[2], lineno, "vertex"));
            edge_lines.push_back(lineno);
        } else {
            throw ParseError(lineno, "unknown directive '" + kw + "'");
        }
    }

    if (!f.arcs.empty() && !f.edges.empty()) throw ParseError(edge_lines.front(), "a file holds either arcs or edges, not both");
    if ((!f.arcs.empty() || !f.edges.empty()) && !vertices_line)
        throw ParseError(lineno, "missing 'vertices <n>' declaration");
    for (const Arc& a : f.arcs)
        for (Vertex v : {a.tail, a.head})
            if (v < 1 || v > f.vertex_count)
                throw ParseError(arc_line[a.id], "vertex " + std::to_string(v) + " of arc '" + a.id + "' is not declared");
    for (std::size_t k = 0; k < f.edges.size(); ++k)
        for (Vertex v : {f.edges[k].first, f.edges[k].second})
            if (v < 1 || v > f.vertex_count)
                throw ParseError(edge_lines[k], "vertex " + std::to_string(v) + " is not declared");

    std::map<std::string, const Arc*> by_id;
    for (const Arc& a : f.arcs) by_id[a.id] = &a;
    for (const auto& [line, pair] : inverse_lines) {
        const auto x = by_id.find(pair.first), y = by_id.find(pair.second);
        if (x == by_id.end()) throw ParseError(line, "unknown arc '" + pair.first + "'");
        if (y == by_id.end()) throw ParseError(line, "unknown arc '" + pair.second + "'");
        if (x->second->tail != y->second->head || x->second->head != y->second->tail)
            throw ParseError(line, "inverse must join opposite arcs");
        if (x->second->is_loop() && pair.first != pair.second)
            throw ParseError(line, "loops are self-inverse; cannot pair distinct loops");
        f.inverse_pairs.push_back(pair);
    }
    // surfaces non-extendable user pairings (e.g. an arc paired twice) with a line number
    try {
        canonical_inverse_pairing(Digraph(f.vertex_count, f.arcs), f.inverse_pairs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(inverse_lines.empty() ? lineno : inverse_lines.back().first, e.what());
    }
    return f;
}

struct WeightOptions {
    std::optional<Preset> preset;
    std::optional<Rational> q;
};

/// Digraph + completed pairing + weights for a parsed file under the chosen weights.
inline WeightedDigraph load(const DigraphFile& f, const WeightOptions& w = {}) {
    Digraph d;
    InversePairing p;
    if (f.is_undirected()) {
        std::tie(d, p) = symmetrize(f.graph());
    } else {
        d = Digraph(f.vertex_count, f.arcs);
        p = canonical_inverse_pairing(d, f.inverse_pairs);
    }
    WeightScheme file_weights = weights_from_maps(d, f.tau, f.upsilon);
    if (!w.preset) return {std::move(d), std::move(p), std::move(file_weights)};
    WeightScheme ws = preset_weights(d, *w.preset, w.q, file_weights.tau);
    return {std::move(d), std::move(p), std::move(ws)};
}

struct CommandResult {
    int exit_code = 0; // 0 ok, 1 verification failure, 2 usage or parse error
    std::string text;
};

struct GlobalOptions {
    WeightOptions weights;
    std::size_t order = kDefaultSeriesOrder;
    std::size_t max_enum = kDefaultEnumerationLimit;
    bool machine = false;
};

namespace detail {

/// Collects "label: value" lines, or "key=value" lines in machine mode.
class Output {
public:
    explicit Output(bool machine) : machine_(machine) {}

    void field(const std::string& label, const std::string& key, const std::string& value) {
        if (machine_)
            out_ << key << "=" << value << "\n";
        else
            out_ << label << ": " << value << "\n";
    }
    void text(const std::string& line) {
        if (!machine_) out_ << line << "\n";
    }
    void machine_only(const std::string& key, const std::string& value) {
        if (machine_) out_ << key << "=" << value << "\n";
    }
    bool machine() const { return machine_; }
    std::string str() const { return out_.str(); }

private:
    bool machine_;
    std::ostringstream out_;
};

inline std::string pair_set(const std::vector<VertexPair>& pairs) {
    std::string s = "{";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) s += ", ";
        s += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
    }
    return s + "}";
}

inline std::string arc_set(const Digraph& d, const std::vector<ArcIndex>& arcs) {
    std::string s = "{";
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (i) s += ", ";
        s += d.arc(arcs[i]).id;
    }
    return s + "}";
}

} // namespace detail

inline CommandResult cmd_info(const DigraphFile& f, const GlobalOptions& g) {
    const WeightedDigraph wd = load(f, g.weights);
    const Digraph& d = wd.graph();
    const ArcClassification& c = wd.classes();
    detail::Output out(g.machine);
    out.field("digraph", "name", f.name);
    out.field("vertices", "vertices", std::to_string(d.vertex_count()));
    out.field("arcs", "arcs", std::to_string(d.arc_count()));
    const bool connected = is_connected(d);
    out.field("connected", "connected", connected ? "yes" : "no");
    if (!connected) out.text("warning: not connected");
    out.field("Phi(1)", "phi1", detail::pair_set(c.phi1));
    out.field("Phi(2)", "phi2", detail::pair_set(c.phi2));
    out.field("Phi(3)", "phi3", detail::pair_set(c.phi3));
    out.field("A(1)", "a1", detail::arc_set(d, c.a1));
    out.field("A(-1)", "a_inv", detail::arc_set(d, c.a_inv));
    out.field("A(1)bar", "a1_bar", detail::arc_set(d, c.a1_bar));
    out.field("A(2)", "a2", detail::arc_set(d, c.a2));
    out.field("A(3)", "a3", detail::arc_set(d, c.a3));
    std::string pairs;
    for (auto [a, b] : wd.pairing().pairs()) {
        if (!pairs.empty()) pairs += ", ";
        pairs += d.arc(a).id + "<->" + d.arc(b).id;
    }
    out.field("inverse pairs", "pairs", pairs.empty() ? "none" : pairs);
    out.text("arcs (id tail head class tau upsilon c_a(t)):");
    for (ArcIndex a = 0; a < d.arc_count(); ++a) {
        const Arc& arc = d.arc(a);
        const std::string cls = class_name(c.class_of[a]);
        const std::string ca = to_string(c_factor(wd, a));
        out.text("  " + arc.id + " " + std::to_string(arc.tail) + " " + std::to_string(arc.head) + " " + cls + " " +
                 to_string(wd.tau(a)) + " " + to_string(wd.upsilon(a)) + " " + ca);
        out.machine_only("arc." + arc.id, std::to_string(arc.tail) + " " + std::to_string(arc.head) + " " + cls + " " +
                                              to_string(wd.tau(a)) + " " + to_string(wd.upsilon(a)) + " " + ca);
    }
    return {0, out.str()};
}

enum class ZetaForm { hashimoto, ihara, both };

inline CommandResult cmd_zeta(const DigraphFile& f, const GlobalOptions& g, ZetaForm form = ZetaForm::both) {
    const WeightedDigraph wd = load(f, g.weights);
    detail::Output out(g.machine);
    if (!is_connected(wd.graph())) out.text("warning: not connected");
    std::optional<RationalFunction> h, i;
    if (form != ZetaForm::ihara) {
        h = hashimoto_zeta(wd);
        out.text("Hashimoto expression 1/det(I - tM):");
        out.field("  Z", "hashimoto", to_string(*h));
        out.field("  numerator", "hashimoto.num", to_string(h->num()));
        out.field("  denominator", "hashimoto.den", to_string(h->den()));
    }
    if (form != ZetaForm::hashimoto) {
        const IharaResult r = ihara_zeta(wd);
        i = r.zeta;
        out.text("Ihara expression 1/(det(I + tJ) det(I - tA + t^2 B)):");
        out.field("  det(I + tJ)", "ihara.jdet", to_string(r.j_determinant));
        out.field("  det(I - tA + t^2 B)", "ihara.vdet", to_string(r.vertex_determinant));
        out.field("  Z", "ihara", to_string(r.zeta));
        out.field("  numerator", "ihara.num", to_string(r.zeta.num()));
        out.field("  denominator", "ihara.den", to_string(r.zeta.den()));
    }
    const RationalFunction& z = h ? *h : *i;
    out.text("Z = " + to_string(z));
    if (form == ZetaForm::both) {
        const bool ok = *h == *i;
        out.field("MAIN THEOREM", "main_theorem", ok ? "OK" : "FAIL");
        return {ok ? 0 : 1, out.str()};
    }
    return {0, out.str()};
}

inline CommandResult cmd_series(const DigraphFile& f, const GlobalOptions& g) {
    if (g.order == 0) throw std::invalid_argument("order must be positive");
    const WeightedDigraph wd = load(f, g.weights);
    detail::Output out(g.machine);
    const auto traces = n_m_traces(wd, g.order);
    out.text("m  N_m(trace)  N_m(brute force)");
    bool brute_ok = true;
    for (std::size_t m = 1; m <= g.order; ++m) {
        std::string brute = "-";
        if (brute_ok) {
            try {
                brute = to_string(n_m_bruteforce(wd, m, g.max_enum));
            } catch (const EnumerationLimitExceeded&) {
                brute_ok = false;
            }
        }
        out.text(std::to_string(m) + "  " + to_string(traces[m - 1]) + "  " + brute);
        out.machine_only("N_" + std::to_string(m), to_string(traces[m - 1]));
        if (brute != "-") out.machine_only("N_" + std::to_string(m) + ".brute", brute);
    }
    const TruncatedSeries z = exp_expression_series(wd, g.order);
    out.field("Z coefficients", "z", to_string(z));
    return {0, out.str()};
}

inline CommandResult cmd_primes(const DigraphFile& f, const GlobalOptions& g, std::size_t max_len) {
    if (max_len == 0) throw std::invalid_argument("max-len must be positive");
    const WeightedDigraph wd = load(f, g.weights);
    detail::Output out(g.machine);
    const auto primes = enumerate_prime_cycles(wd, max_len, g.max_enum);
    out.field("prime cycles with period <= " + std::to_string(max_len), "prime_count", std::to_string(primes.size()));
    for (std::size_t k = 0; k < primes.size(); ++k) {
        const PrimeCycle& c = primes[k];
        const std::string section = section_string(wd.graph(), c.representative.section);
        out.text("  period " + std::to_string(c.period) + "  circ " + to_string(c.circ) + "  [" + section + "]");
        out.machine_only("prime." + std::to_string(k + 1), std::to_string(c.period) + " " + to_string(c.circ) + " " + section);
    }
    const bool ok = euler_product_series(wd, max_len, g.max_enum) == series_from_ratfun(hashimoto_zeta(wd), max_len);
    out.field("EULER == HASHIMOTO up to t^" + std::to_string(max_len), "euler_vs_hashimoto", ok ? "OK" : "FAIL");
    return {ok ? 0 : 1, out.str()};
}

inline void render_report(detail::Output& out, const CheckReport& r, const std::string& prefix = "") {
    for (const auto& c : r.checks) {
        std::string line = std::string(status_name(c.status)) + "  " + c.name;
        if (!c.detail.empty()) line += "  (" + c.detail + ")";
        out.text(prefix + line);
        out.machine_only(prefix + "check." + c.name, status_name(c.status));
    }
}

inline CommandResult cmd_verify(const DigraphFile& f, const GlobalOptions& g, const VerifyOptions& v) {
    const WeightedDigraph wd = load(f, g.weights);
    detail::Output out(g.machine);
    if (!is_connected(wd.graph())) out.text("warning: not connected");
    const CheckReport r = verify_all(wd, v);
    render_report(out, r);
    out.field("verdict", "verdict", r.ok() ? "PASS" : "FAIL");
    return {r.ok() ? 0 : 1, out.str()};
}

struct RandomVerifyOptions {
    std::size_t trials = 200;
    std::uint64_t seed = 7;
    RandomDigraphParams params;
};

/// Runs the battery on a seeded stream of random digraphs; one summary line per trial.
inline CommandResult cmd_verify_random(const GlobalOptions& g, const VerifyOptions& v, const RandomVerifyOptions& rv) {
    RandomDigraphGenerator gen(rv.seed, rv.params);
    detail::Output out(g.machine);
    std::size_t passed = 0;
    for (std::size_t k = 1; k <= rv.trials; ++k) {
        RandomInstance inst = gen.next();
        if (g.weights.preset) inst.weights = preset_weights(inst.graph, *g.weights.preset, g.weights.q, inst.weights.tau);
        const WeightedDigraph wd(inst.graph, canonical_inverse_pairing(inst.graph), inst.weights);
        const CheckReport r = verify_all(wd, v);
        const std::string tag = "trial " + std::to_string(k) + " (|V|=" + std::to_string(wd.vertex_count()) +
                                ", |A|=" + std::to_string(wd.arc_count()) + ")";
        if (r.ok()) ++passed;
        out.text(tag + ": " + (r.ok() ? "PASS" : "FAIL"));
        out.machine_only("trial." + std::to_string(k), r.ok() ? "PASS" : "FAIL");
        if (!r.ok())
            for (const auto& c : r.checks)
                if (c.status == CheckStatus::fail) out.text("    FAIL  " + c.name + "  (" + c.detail + ")");
    }
    out.field("random trials", "passed", std::to_string(passed) + "/" + std::to_string(rv.trials) + " PASS");
    return {passed == rv.trials ? 0 : 1, out.str()};
}

/// Renders a digraph (and its inverse pairs) in the file format.
inline std::string render_digraph_file(const std::string& name, const Digraph& d, const InversePairing& p) {
    std::ostringstream out;
    out << "digraph " << name << "\n";
    out << "vertices " << d.vertex_count() << "\n";
    for (const Arc& a : d.arcs()) out << "arc " << a.id << " " << a.tail << " " << a.head << "\n";
    for (auto [a, b] : p.pairs())
        if (a != b) out << "inverse " << d.arc(a).id << " " << d.arc(b).id << "\n";
    return out.str();
}

inline CommandResult cmd_symmetrize(const DigraphFile& f) {
    if (!f.arcs.empty()) throw std::invalid_argument("symmetrize expects an undirected graph file (edge lines)");
    const auto [d, p] = symmetrize(f.graph());
    return {0, "# symmetric digraph of " + f.name + "\n" + render_digraph_file(f.name, d, p)};
}

} // namespace gzeta::cli
