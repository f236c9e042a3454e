#include "signet/report.hpp"

#include "signet/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace signet {

namespace {

template <typename Fn>
auto with_mode_context(const std::string& mode_id, Fn&& fn) {
    try {
        return fn();
    } catch (const PreconditionError& e) {
        throw PreconditionError("mode " + mode_id + ": " + e.what());
    } catch (const StructuralError& e) {
        throw StructuralError("mode " + mode_id + ": " + e.what());
    } catch (const AmbiguousSpectrumError& e) {
        throw AmbiguousSpectrumError("mode " + mode_id + ": " + e.what());
    } catch (const WrongTheoremError& e) {
        throw WrongTheoremError("mode " + mode_id + ": " + e.what());
    }
}

std::string fmt(double v) {
    std::ostringstream out;
    out << std::setprecision(12) << v;
    return out.str();
}

} // namespace

RunResult run(const Scenario& sc_in, const RunOptions& opt) {
    RunResult res;
    res.scenario = sc_in;
    if (opt.dt > 0.0) res.scenario.dt = opt.dt;
    if (opt.scale_durations != 1.0)
        for (auto& m : res.scenario.modes) m.duration *= opt.scale_durations;
    if (opt.strict_removals) check_removals(res.scenario);

    const Scenario& sc = res.scenario;
    RunReport& rep = res.report;
    rep.k1 = sc.k1;
    rep.dt = sc.dt;

    for (const auto& m : sc.modes) {
        ModeAnalysis a =
            with_mode_context(m.id, [&] { return analyze_mode(m.graph, opt.zero_tol); });
        LyapunovCertificate cert =
            with_mode_context(m.id, [&] { return certify_mode(a, m.alpha); });
        Objective obj = classify_objective(a);

        ModeReport mr;
        mr.id = m.id;
        mr.nodes = m.graph.num_nodes();
        mr.edges = m.graph.num_edges();
        mr.balanced = a.balance.balanced;
        mr.spanning_tree = a.spanning_tree;
        mr.leader_groups = a.leaders.group_count();
        mr.predicted_xi = a.predicted_xi;
        mr.numeric_xi = a.zero.algebraic;
        mr.alpha = cert.alpha;
        mr.lambda_min = cert.lambda_min;
        mr.lambda_max = cert.lambda_max;
        mr.residual = cert.residual;
        mr.objective = objective_name(obj.cls);
        mr.evidence = obj.evidence;
        rep.modes.push_back(std::move(mr));

        res.analyses.push_back(std::move(a));
        res.certificates.push_back(std::move(cert));
    }

    if (opt.modes_only) {
        rep.all_pass = true;
        for (const auto& mr : rep.modes)
            rep.all_pass = rep.all_pass && mr.predicted_xi == mr.numeric_xi;
        return res;
    }

    rep.dwell = check_dwell(sc, res.certificates);
    res.trace = simulate(sc, res.analyses, res.certificates);
    rep.warnings = res.trace.warnings;
    rep.simulated = true;
    rep.jumps = verify_jump_bounds(res.trace);
    rep.decay = verify_mode_decay(res.trace, sc, res.certificates);
    Objective final_obj = classify_objective(res.analyses.back());
    rep.objective_check =
        verify_objective(res.trace, res.analyses.back(), final_obj, opt.tol);
    rep.tail_error_norm = res.trace.samples.back().ebar.norm();

    rep.all_pass = rep.dwell.all_pass && rep.jumps.all_pass && rep.decay.envelope_pass &&
                   rep.decay.identity_pass && rep.objective_check.pass;
    for (const auto& mr : rep.modes)
        rep.all_pass = rep.all_pass && mr.predicted_xi == mr.numeric_xi;
    return res;
}

std::string format_report(const RunReport& r) {
    std::ostringstream out;
    out << "run: k1 " << fmt(r.k1) << ", dt " << fmt(r.dt) << ", " << r.modes.size()
        << " mode(s)\n\n";

    out << "modes:\n";
    for (const auto& m : r.modes) {
        out << "  " << m.id << ": N=" << m.nodes << " M=" << m.edges
            << (m.balanced ? " balanced" : " unbalanced")
            << (m.spanning_tree ? ", spanning tree" : ", no spanning tree")
            << ", leader groups " << m.leader_groups << "\n";
        out << "    zero multiplicity: predicted " << m.predicted_xi << ", numeric "
            << m.numeric_xi << (m.predicted_xi == m.numeric_xi ? " (match)" : " (MISMATCH)")
            << "\n";
        out << "    certificate: alpha " << fmt(m.alpha) << ", lambda_min " << fmt(m.lambda_min)
            << ", lambda_max " << fmt(m.lambda_max) << ", residual " << fmt(m.residual) << "\n";
        out << "    objective: " << m.objective << " (" << m.evidence << ")\n";
    }

    if (!r.dwell.entries.empty()) {
        out << "\ndwell times:\n";
        for (const auto& d : r.dwell.entries)
            out << "  mode " << r.modes[d.from_mode].id << " -> " << r.modes[d.to_mode].id
                << ": gamma " << fmt(d.gamma) << ", omega " << fmt(d.omega) << ", tau_min "
                << fmt(d.tau_min) << ", duration " << fmt(d.duration) << " -> "
                << (d.pass ? "pass" : "FAIL") << "\n";
    }

    if (r.simulated) {
        out << "\njumps: " << r.jumps.passed << "/" << r.jumps.total
            << " bounds hold, max |phi| " << fmt(r.jumps.max_phi_norm) << "\n";
        out << "decay: envelope " << (r.decay.envelope_pass ? "pass" : "FAIL") << " (ratio "
            << fmt(r.decay.max_envelope_ratio) << "), derivative identity "
            << (r.decay.identity_pass ? "pass" : "FAIL") << " (rel err "
            << fmt(r.decay.max_identity_rel_err) << ")\n";
        out << "objective check: " << (r.objective_check.pass ? "pass" : "FAIL") << " ("
            << r.objective_check.detail << " = " << fmt(r.objective_check.worst) << ")\n";
        out << "tail |ebar|: " << fmt(r.tail_error_norm) << "\n";
    }

    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
    out << "\noverall: " << (r.all_pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string report_json(const RunReport& r) {
    nlohmann::json j;
    j["k1"] = r.k1;
    j["dt"] = r.dt;
    j["all_pass"] = r.all_pass;
    j["simulated"] = r.simulated;
    j["warnings"] = r.warnings;

    j["modes"] = nlohmann::json::array();
    for (const auto& m : r.modes) {
        nlohmann::json jm;
        jm["id"] = m.id;
        jm["nodes"] = m.nodes;
        jm["edges"] = m.edges;
        jm["balanced"] = m.balanced;
        jm["spanning_tree"] = m.spanning_tree;
        jm["leader_groups"] = m.leader_groups;
        jm["predicted_xi"] = m.predicted_xi;
        jm["numeric_xi"] = m.numeric_xi;
        jm["alpha"] = m.alpha;
        jm["lambda_min"] = m.lambda_min;
        jm["lambda_max"] = m.lambda_max;
        jm["residual"] = m.residual;
        jm["objective"] = m.objective;
        jm["evidence"] = m.evidence;
        j["modes"].push_back(std::move(jm));
    }

    j["dwell"] = nlohmann::json::array();
    for (const auto& d : r.dwell.entries)
        j["dwell"].push_back({{"from", d.from_mode},
                              {"to", d.to_mode},
                              {"gamma", d.gamma},
                              {"omega", d.omega},
                              {"tau_min", d.tau_min},
                              {"duration", d.duration},
                              {"pass", d.pass}});
    j["dwell_all_pass"] = r.dwell.all_pass;

    if (r.simulated) {
        j["jumps"] = {{"total", r.jumps.total},
                      {"passed", r.jumps.passed},
                      {"max_phi_norm", r.jumps.max_phi_norm},
                      {"all_pass", r.jumps.all_pass}};
        j["decay"] = {{"envelope_pass", r.decay.envelope_pass},
                      {"max_envelope_ratio", r.decay.max_envelope_ratio},
                      {"identity_pass", r.decay.identity_pass},
                      {"max_identity_rel_err", r.decay.max_identity_rel_err}};
        j["objective_check"] = {{"pass", r.objective_check.pass},
                                {"worst", r.objective_check.worst},
                                {"detail", r.objective_check.detail}};
        j["tail_error_norm"] = r.tail_error_norm;
    }
    return j.dump(2);
}

void write_trace(const SimulationTrace& trace, const Scenario& sc, const std::string& path,
                 int sample_every) {
    if (sample_every < 1) throw PreconditionError("sample stride must be at least 1");

    // Union of node labels over all modes, first-appearance order, plus the
    // widest edge index range.
    std::vector<std::string> labels;
    int max_edges = 0;
    for (const auto& m : sc.modes) {
        for (const auto& l : m.graph.nodes)
            if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
        max_edges = std::max(max_edges, m.graph.num_edges());
    }

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open trace file " + path);
    out << std::setprecision(17);

    out << "t,mode";
    for (const auto& l : labels) out << ",x:" << l;
    for (int k = 1; k <= max_edges; ++k) out << ",e:" << k;
    for (int k = 1; k <= max_edges; ++k) out << ",ebar:" << k;
    out << ",V\n";

    for (size_t i = 0; i < trace.samples.size(); i += static_cast<size_t>(sample_every)) {
        const Sample& s = trace.samples[i];
        const Mode& m = sc.modes[s.mode];
        out << s.t << "," << m.id;
        for (const auto& l : labels) {
            int idx = m.graph.node_index(l);
            out << ",";
            if (idx >= 0) out << s.x(idx);
        }
        for (int k = 0; k < max_edges; ++k) {
            out << ",";
            if (k < s.e.size()) out << s.e(k);
        }
        for (int k = 0; k < max_edges; ++k) {
            out << ",";
            if (k < s.ebar.size()) out << s.ebar(k);
        }
        out << "," << s.v << "\n";
    }
}

} // namespace signet
