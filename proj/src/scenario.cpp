#include "signet/scenario.hpp"

#include "signet/errors.hpp"

#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

namespace signet {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

double parse_number(const std::string& tok, int line, const char* what) {
    std::istringstream in(tok);
    double value = 0.0;
    in >> value;
    if (in.fail() || !in.eof() || !std::isfinite(value))
        throw ParseError(line, std::string("expected a number for ") + what + ", got '" + tok + "'");
    return value;
}

void check_label(const std::string& tok, int line) {
    for (char c : tok)
        if (c == '#' || std::isspace(static_cast<unsigned char>(c)))
            throw ParseError(line, "bad node label '" + tok + "'");
}

} // namespace

Scenario parse_scenario(const std::string& text) {
    Scenario sc;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool header_seen = false;
    Mode* mode = nullptr;
    std::vector<int> mode_lines;

    while (std::getline(in, raw)) {
        ++lineno;
        auto tokens = tokenize(raw);
        if (tokens.empty()) continue;
        const std::string& kw = tokens[0];

        if (kw == "scenario") {
            if (header_seen) throw ParseError(lineno, "duplicate scenario header");
            if (tokens.size() != 5 || tokens[1] != "k1" || tokens[3] != "dt")
                throw ParseError(lineno, "expected 'scenario k1 <value> dt <value>'");
            sc.k1 = parse_number(tokens[2], lineno, "k1");
            sc.dt = parse_number(tokens[4], lineno, "dt");
            if (sc.k1 <= 0.0) throw ParseError(lineno, "k1 must be positive");
            if (sc.dt <= 0.0) throw ParseError(lineno, "dt must be positive");
            header_seen = true;
        } else if (kw == "mode") {
            if (!header_seen) throw ParseError(lineno, "mode before scenario header");
            if (tokens.size() != 6 || tokens[2] != "duration" || tokens[4] != "alpha")
                throw ParseError(lineno, "expected 'mode <id> duration <s> alpha <a>'");
            Mode m;
            m.id = tokens[1];
            m.duration = parse_number(tokens[3], lineno, "duration");
            m.alpha = parse_number(tokens[5], lineno, "alpha");
            if (m.duration <= 0.0) throw ParseError(lineno, "duration must be positive");
            if (m.alpha <= 0.0) throw ParseError(lineno, "alpha must be positive");
            sc.modes.push_back(std::move(m));
            mode = &sc.modes.back();
            mode_lines.push_back(lineno);
        } else if (kw == "join" || kw == "node" || kw == "edge") {
            if (!mode) throw ParseError(lineno, "'" + kw + "' outside a mode block");
            if (kw == "join") {
                if (tokens.size() != 3) throw ParseError(lineno, "expected 'join <node> <x0>'");
                check_label(tokens[1], lineno);
                if (mode->joins.count(tokens[1]))
                    throw ParseError(lineno, "duplicate join for node " + tokens[1]);
                mode->joins[tokens[1]] = parse_number(tokens[2], lineno, "join state");
                mode->graph.add_node(tokens[1]);
            } else if (kw == "node") {
                if (tokens.size() != 2) throw ParseError(lineno, "expected 'node <node>'");
                check_label(tokens[1], lineno);
                mode->graph.add_node(tokens[1]);
            } else {
                if (tokens.size() != 5 || tokens[2] != "->" || (tokens[4] != "+" && tokens[4] != "-"))
                    throw ParseError(lineno, "expected 'edge <tail> -> <head> +|-'");
                check_label(tokens[1], lineno);
                check_label(tokens[3], lineno);
                mode->graph.add_edge(tokens[1], tokens[3], tokens[4] == "+" ? +1 : -1);
            }
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }

    if (!header_seen) throw ParseError(lineno == 0 ? 1 : lineno, "missing scenario header");
    if (sc.modes.empty()) throw ParseError(lineno, "scenario has no modes");

    for (size_t l = 0; l < sc.modes.size(); ++l) {
        const Mode& m = sc.modes[l];
        int at = mode_lines[l];
        for (const auto& v : validate(m.graph))
            throw ParseError(at, "mode " + m.id + ": " + v);
        if (!is_weakly_connected(m.graph))
            throw ParseError(at, "mode " + m.id + ": graph is not weakly connected");
        if (l == 0) {
            for (const auto& label : m.graph.nodes)
                if (!m.joins.count(label))
                    throw ParseError(at, "mode " + m.id + ": node " + label +
                                             " needs a join line with its initial state");
        } else {
            const SignedDigraph& prev = sc.modes[l - 1].graph;
            for (const auto& label : m.graph.nodes)
                if (prev.node_index(label) < 0 && !m.joins.count(label))
                    throw ParseError(at, "mode " + m.id + ": node " + label +
                                             " is new here and needs a join state");
        }
        for (const auto& [label, x0] : m.joins) {
            (void)x0;
            if (l > 0 && sc.modes[l - 1].graph.node_index(label) >= 0)
                throw ParseError(at, "mode " + m.id + ": node " + label +
                                         " carries over and must not be re-joined");
        }
    }
    return sc;
}

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "scenario k1 " << s.k1 << " dt " << s.dt << "\n";
    for (const auto& m : s.modes) {
        out << "mode " << m.id << " duration " << m.duration << " alpha " << m.alpha << "\n";
        for (const auto& label : m.graph.nodes) {
            auto it = m.joins.find(label);
            if (it != m.joins.end())
                out << "  join " << label << " " << it->second << "\n";
            else
                out << "  node " << label << "\n";
        }
        for (const auto& e : m.graph.edges)
            out << "  edge " << m.graph.nodes[e.tail] << " -> " << m.graph.nodes[e.head] << " "
                << (e.sign > 0 ? "+" : "-") << "\n";
    }
    return out.str();
}

void check_removals(const Scenario& s) {
    if (s.modes.empty()) return;
    const SignedDigraph& initial = s.modes.front().graph;
    for (size_t l = 1; l < s.modes.size(); ++l) {
        for (const auto& label : s.modes[l - 1].graph.nodes) {
            if (s.modes[l].graph.node_index(label) >= 0) continue;
            if (initial.node_index(label) >= 0)
                throw PreconditionError("mode " + s.modes[l].id + " removes node " + label +
                                        ", which was present from the start");
        }
    }
}

} // namespace signet
