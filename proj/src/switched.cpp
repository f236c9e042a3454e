#include "signet/switched.hpp"

#include "signet/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace signet {

ModeAnalysis analyze_mode(const SignedDigraph& g, double zero_tol) {
    ModeAnalysis a;
    a.graph = g;
    a.matrices = build_matrices(g);
    a.balance = structural_balance(g);
    a.sccs = condensation(g);
    a.leaders = leader_structure(g);
    a.spanning_tree = has_directed_spanning_tree(g);
    a.assumption3 = a.leaders.group_count() > 1 && check_assumption3(g, a.leaders);
    a.predicted_xi = predicted_zero_multiplicity(g, a.balance, a.leaders);
    a.zero = zero_structure(a.matrices.edge_laplacian, zero_tol);
    return a;
}

LyapunovCertificate certify_mode(const ModeAnalysis& a, double alpha) {
    const int m = static_cast<int>(a.matrices.edge_laplacian.rows());
    Eigen::MatrixXd q = Eigen::MatrixXd::Identity(m, m);
    if (a.zero.algebraic == 0) return solve_tree(a.matrices.edge_laplacian, q);
    return solve_shifted(a.matrices.edge_laplacian, q, alpha, a.zero.projector);
}

Transition build_transition(const ModeAnalysis& prev, const ModeAnalysis& next,
                            const Eigen::VectorXd& x_at_switch,
                            const std::map<std::string, double>& joins, double time) {
    if (x_at_switch.size() != prev.graph.num_nodes())
        throw PreconditionError("build_transition: state dimension does not match previous mode");

    Transition tr;
    tr.time = time;

    const int n_next = next.graph.num_nodes();
    tr.x_next.resize(n_next);
    for (int i = 0; i < n_next; ++i) {
        const std::string& label = next.graph.nodes[i];
        int pi = prev.graph.node_index(label);
        if (pi >= 0) {
            tr.x_next(i) = x_at_switch(pi);
        } else {
            auto it = joins.find(label);
            if (it == joins.end())
                throw PreconditionError("node " + label + " joins without an initial state");
            tr.x_next(i) = it->second;
        }
    }

    const int m_prev = prev.graph.num_edges();
    const int m_next = next.graph.num_edges();
    tr.xi = Eigen::MatrixXd::Zero(m_next, m_prev);
    for (int k = 0; k < m_next; ++k) {
        const auto& e = next.graph.edges[k];
        const std::string& tail = next.graph.nodes[e.tail];
        const std::string& head = next.graph.nodes[e.head];
        for (int kp = 0; kp < m_prev; ++kp) {
            const auto& ep = prev.graph.edges[kp];
            if (ep.sign == e.sign && prev.graph.nodes[ep.tail] == tail &&
                prev.graph.nodes[ep.head] == head) {
                tr.xi(k, kp) = 1.0;
                break;  // edges are unique, so at most one match exists
            }
        }
    }

    Eigen::VectorXd e_prev = edge_states(prev.matrices.incidence, x_at_switch);
    tr.ebar_prev = sync_error(prev.zero, e_prev);
    Eigen::VectorXd e_next = edge_states(next.matrices.incidence, tr.x_next);
    tr.ebar_next = sync_error(next.zero, e_next);
    tr.phi = tr.ebar_next - tr.xi * tr.ebar_prev;
    return tr;
}

namespace {

double lyapunov_value(const Eigen::MatrixXd& p, const Eigen::VectorXd& ebar) {
    return 0.5 * ebar.dot(p * ebar);
}

void rk4_step(const Eigen::MatrixXd& a, Eigen::VectorXd& x, double h) {
    Eigen::VectorXd k1 = a * x;
    Eigen::VectorXd k2 = a * (x + 0.5 * h * k1);
    Eigen::VectorXd k3 = a * (x + 0.5 * h * k2);
    Eigen::VectorXd k4 = a * (x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

long mode_steps(double duration, double dt) {
    return std::max<long>(1, std::lround(duration / dt));
}

Eigen::VectorXd initial_state(const Mode& m) {
    Eigen::VectorXd x(m.graph.num_nodes());
    for (int i = 0; i < m.graph.num_nodes(); ++i) {
        auto it = m.joins.find(m.graph.nodes[i]);
        if (it == m.joins.end())
            throw PreconditionError("node " + m.graph.nodes[i] +
                                    " has no initial state in the first mode");
        x(i) = it->second;
    }
    return x;
}

void check_step_size(const Eigen::MatrixXd& laplacian, double k1, double dt, int mode_index,
                     std::vector<std::string>& warnings) {
    if (laplacian.rows() == 0) return;
    Eigen::EigenSolver<Eigen::MatrixXd> es(laplacian, false);
    double max_re = es.eigenvalues().real().maxCoeff();
    // Real-axis stability boundary of the classical 4th-order scheme.
    if (k1 * max_re * dt >= 2.785) {
        std::ostringstream msg;
        msg << "mode " << mode_index + 1 << ": step " << dt
            << " exceeds the explicit stability limit " << 2.785 / (k1 * max_re);
        warnings.push_back(msg.str());
    }
}

void require_finite(const Eigen::VectorXd& x, double t, int mode_index) {
    if (x.allFinite()) return;
    std::ostringstream msg;
    msg << "state became non-finite at t = " << t << " in mode " << mode_index + 1;
    throw IntegrationError(msg.str());
}

} // namespace

SimulationTrace simulate(const Scenario& sc, const std::vector<ModeAnalysis>& analyses,
                         const std::vector<LyapunovCertificate>& certs) {
    if (analyses.size() != sc.modes.size() || certs.size() != sc.modes.size())
        throw PreconditionError("simulate: one analysis and certificate per mode required");
    if (sc.modes.empty()) return {};

    SimulationTrace trace;
    Eigen::VectorXd x = initial_state(sc.modes.front());
    double t = 0.0;

    for (size_t l = 0; l < sc.modes.size(); ++l) {
        const ModeAnalysis& a = analyses[l];
        const Eigen::MatrixXd flow = -sc.k1 * a.matrices.laplacian;
        check_step_size(a.matrices.laplacian, sc.k1, sc.dt, static_cast<int>(l), trace.warnings);

        const long steps = mode_steps(sc.modes[l].duration, sc.dt);
        const double t0 = t;
        const int first = static_cast<int>(trace.samples.size());

        for (long i = 0; i < steps; ++i) {
            Sample s;
            s.t = t0 + static_cast<double>(i) * sc.dt;
            s.mode = static_cast<int>(l);
            s.x = x;
            s.e = edge_states(a.matrices.incidence, x);
            s.ebar = sync_error(a.zero, s.e);
            s.v = lyapunov_value(certs[l].P, s.ebar);
            trace.samples.push_back(std::move(s));
            rk4_step(flow, x, sc.dt);
            require_finite(x, t0 + static_cast<double>(i + 1) * sc.dt, static_cast<int>(l));
        }
        t = t0 + static_cast<double>(steps) * sc.dt;

        if (l + 1 == sc.modes.size()) {
            Sample s;
            s.t = t;
            s.mode = static_cast<int>(l);
            s.x = x;
            s.e = edge_states(a.matrices.incidence, x);
            s.ebar = sync_error(a.zero, s.e);
            s.v = lyapunov_value(certs[l].P, s.ebar);
            trace.samples.push_back(std::move(s));
        } else {
            Transition tr =
                build_transition(a, analyses[l + 1], x, sc.modes[l + 1].joins, t);
            SwitchRecord rec;
            rec.t = t;
            rec.from_mode = static_cast<int>(l);
            rec.to_mode = static_cast<int>(l + 1);
            rec.xi = tr.xi;
            rec.phi = tr.phi;
            rec.v_before = lyapunov_value(certs[l].P, tr.ebar_prev);
            rec.v_after = lyapunov_value(certs[l + 1].P, tr.ebar_next);
            rec.omega = 1.0 + 2.0 * certs[l + 1].lambda_max / certs[l].lambda_min;
            rec.theta = certs[l + 1].lambda_max * tr.phi.squaredNorm();
            rec.bound_holds = rec.v_after <= rec.omega * rec.v_before + rec.theta +
                                                 1e-12 * (1.0 + rec.v_before);
            trace.switches.push_back(std::move(rec));
            x = tr.x_next;
        }
        trace.mode_ranges.emplace_back(first, static_cast<int>(trace.samples.size()) - 1);
    }
    return trace;
}

EdgeCrossCheck simulate_edges(const Scenario& sc, const std::vector<ModeAnalysis>& analyses) {
    if (analyses.size() != sc.modes.size())
        throw PreconditionError("simulate_edges: one analysis per mode required");
    EdgeCrossCheck cc;
    if (sc.modes.empty()) return cc;

    Eigen::VectorXd x = initial_state(sc.modes.front());
    double t = 0.0;

    for (size_t l = 0; l < sc.modes.size(); ++l) {
        const ModeAnalysis& a = analyses[l];
        const Eigen::MatrixXd node_flow = -sc.k1 * a.matrices.laplacian;
        const Eigen::MatrixXd edge_flow = -sc.k1 * a.matrices.edge_laplacian;

        Eigen::VectorXd e = edge_states(a.matrices.incidence, x);
        Eigen::VectorXd ebar = sync_error(a.zero, e);

        const long steps = mode_steps(sc.modes[l].duration, sc.dt);
        for (long i = 0; i <= steps; ++i) {
            Eigen::VectorXd e_from_x = edge_states(a.matrices.incidence, x);
            Eigen::VectorXd ebar_from_x = sync_error(a.zero, e_from_x);
            if (e.size() > 0) {
                cc.max_e_deviation =
                    std::max(cc.max_e_deviation, (e_from_x - e).cwiseAbs().maxCoeff());
                cc.max_ebar_deviation =
                    std::max(cc.max_ebar_deviation, (ebar_from_x - ebar).cwiseAbs().maxCoeff());
                cc.max_projector_leak = std::max(
                    cc.max_projector_leak, (a.zero.projector * ebar).cwiseAbs().maxCoeff());
            }
            if (i == steps) break;
            rk4_step(node_flow, x, sc.dt);
            rk4_step(edge_flow, e, sc.dt);
            rk4_step(edge_flow, ebar, sc.dt);
            require_finite(x, t + static_cast<double>(i + 1) * sc.dt, static_cast<int>(l));
        }
        t += static_cast<double>(steps) * sc.dt;

        if (l + 1 < sc.modes.size()) {
            Transition tr =
                build_transition(a, analyses[l + 1], x, sc.modes[l + 1].joins, t);
            x = tr.x_next;
        }
    }
    return cc;
}

DwellReport check_dwell(const Scenario& sc, const std::vector<LyapunovCertificate>& certs) {
    if (certs.size() != sc.modes.size())
        throw PreconditionError("check_dwell: one certificate per mode required");
    DwellReport rep;
    rep.mode_time.resize(sc.modes.size(), 0.0);
    for (size_t l = 0; l < sc.modes.size(); ++l)
        rep.mode_time[l] =
            static_cast<double>(mode_steps(sc.modes[l].duration, sc.dt)) * sc.dt;
    for (size_t l = 1; l < sc.modes.size(); ++l) {
        ModeConstants mc = mode_constants(certs[l], certs[l - 1], sc.k1);
        DwellEntry entry;
        entry.from_mode = static_cast<int>(l - 1);
        entry.to_mode = static_cast<int>(l);
        entry.gamma = mc.gamma;
        entry.omega = mc.omega;
        entry.tau_min = mc.tau_min;
        entry.duration = rep.mode_time[l];
        entry.pass = entry.duration >= entry.tau_min;
        rep.all_pass = rep.all_pass && entry.pass;
        rep.entries.push_back(entry);
    }
    return rep;
}

DecayReport verify_mode_decay(const SimulationTrace& trace, const Scenario& sc,
                              const std::vector<LyapunovCertificate>& certs) {
    DecayReport rep;
    const double dt = sc.dt;
    for (auto [first, last] : trace.mode_ranges) {
        const Sample& head = trace.samples[first];
        const double gamma = sc.k1 / certs[head.mode].lambda_max;
        const double v0 = head.v;

        double max_drive = 0.0;
        for (int i = first; i <= last; ++i)
            max_drive = std::max(max_drive, 0.5 * sc.k1 * trace.samples[i].ebar.squaredNorm());

        for (int i = first; i <= last; ++i) {
            const Sample& s = trace.samples[i];
            double envelope = v0 * std::exp(-gamma * (s.t - head.t)) * (1.0 + 1e-6) + 1e-250;
            rep.max_envelope_ratio = std::max(rep.max_envelope_ratio, s.v / envelope);
            if (s.v > envelope) rep.envelope_pass = false;

            if (i - first < 2 || last - i < 2) continue;
            double fd = (-trace.samples[i + 2].v + 8.0 * trace.samples[i + 1].v -
                         8.0 * trace.samples[i - 1].v + trace.samples[i - 2].v) /
                        (12.0 * dt);
            double analytic = -0.5 * sc.k1 * s.ebar.squaredNorm();
            if (std::abs(analytic) <= 1e-6 * max_drive) continue;
            double rel = std::abs(fd - analytic) / std::abs(analytic);
            rep.max_identity_rel_err = std::max(rep.max_identity_rel_err, rel);
        }
    }
    rep.identity_pass = rep.max_identity_rel_err < 1e-4;
    return rep;
}

JumpReport verify_jump_bounds(const SimulationTrace& trace) {
    JumpReport rep;
    rep.total = static_cast<int>(trace.switches.size());
    for (const auto& rec : trace.switches) {
        if (rec.bound_holds) ++rep.passed;
        rep.all_pass = rep.all_pass && rec.bound_holds;
        rep.max_phi_norm = std::max(rep.max_phi_norm, rec.phi.norm());
    }
    return rep;
}

const char* objective_name(ObjectiveClass c) {
    switch (c) {
        case ObjectiveClass::BipartiteConsensus: return "bipartite-consensus";
        case ObjectiveClass::TrivialConsensus: return "trivial-consensus";
        case ObjectiveClass::IntervalBipartiteConsensus: return "interval-bipartite-consensus";
        case ObjectiveClass::BipartiteContainment: return "bipartite-containment";
        case ObjectiveClass::Unclassifiable: return "unclassifiable";
    }
    return "unclassifiable";
}

Objective classify_objective(const ModeAnalysis& a) {
    Objective obj;
    const int groups = a.leaders.group_count();
    const int l1 = static_cast<int>(a.leaders.root_nodes.size());
    const int l2sb = static_cast<int>(a.leaders.sb_rooted_sccs.size());

    if (groups > 1) {
        if (a.assumption3) {
            obj.cls = ObjectiveClass::BipartiteContainment;
            std::ostringstream ev;
            ev << groups << " leader groups, every follower reachable from a leader";
            obj.evidence = ev.str();
        } else {
            obj.evidence = "multiple leader groups but some follower is unreachable from them";
        }
        return obj;
    }
    if (!a.spanning_tree) {
        obj.evidence = "no directed spanning tree";
        return obj;
    }
    if (a.balance.balanced) {
        obj.cls = ObjectiveClass::BipartiteConsensus;
        obj.evidence = "structurally balanced with a directed spanning tree";
    } else if (l1 + l2sb >= 1) {
        obj.cls = ObjectiveClass::IntervalBipartiteConsensus;
        obj.evidence = l1 > 0 ? "unbalanced with a root node"
                              : "unbalanced with a balanced rooted strong component";
    } else {
        obj.cls = ObjectiveClass::TrivialConsensus;
        obj.evidence = "unbalanced, rooted in an unbalanced strong component";
    }
    return obj;
}

ObjectiveCheck verify_objective(const SimulationTrace& trace, const ModeAnalysis& final_mode,
                                const Objective& obj, double tol) {
    ObjectiveCheck chk;
    if (trace.mode_ranges.empty()) {
        chk.detail = "empty trace";
        return chk;
    }
    auto [first, last] = trace.mode_ranges.back();
    int tail_start = first + static_cast<int>(0.8 * (last - first));
    const int n = final_mode.graph.num_nodes();

    switch (obj.cls) {
        case ObjectiveClass::BipartiteConsensus: {
            const auto& gauge = final_mode.balance.gauge;
            for (int i = tail_start; i <= last; ++i) {
                double lo = std::numeric_limits<double>::infinity(), hi = -lo;
                for (int j = 0; j < n; ++j) {
                    double v = gauge[j] * trace.samples[i].x(j);
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
                chk.worst = std::max(chk.worst, hi - lo);
            }
            chk.detail = "max gauge-aligned spread over the tail";
            break;
        }
        case ObjectiveClass::TrivialConsensus: {
            for (int i = tail_start; i <= last; ++i)
                chk.worst = std::max(chk.worst, trace.samples[i].x.cwiseAbs().maxCoeff());
            chk.detail = "max |x| over the tail";
            break;
        }
        case ObjectiveClass::IntervalBipartiteConsensus: {
            double theta = 0.0;
            for (int j : final_mode.leaders.leaders)
                theta = std::max(theta, std::abs(trace.samples[tail_start].x(j)));
            for (int i = tail_start; i <= last; ++i)
                for (int j = 0; j < n; ++j)
                    chk.worst = std::max(
                        chk.worst, std::abs(trace.samples[i].x(j)) - theta);
            chk.worst = std::max(chk.worst, 0.0);
            chk.detail = "max excursion beyond the leader amplitude interval";
            break;
        }
        case ObjectiveClass::BipartiteContainment: {
            for (int i = tail_start; i <= last; ++i) {
                double lead = 0.0;
                for (int j : final_mode.leaders.leaders)
                    lead = std::max(lead, std::abs(trace.samples[i].x(j)));
                for (int j : final_mode.leaders.followers)
                    chk.worst =
                        std::max(chk.worst, std::abs(trace.samples[i].x(j)) - lead);
            }
            chk.worst = std::max(chk.worst, 0.0);
            chk.detail = "max follower magnitude beyond the leader envelope";
            break;
        }
        case ObjectiveClass::Unclassifiable:
            chk.detail = "unclassifiable: " + obj.evidence;
            return chk;
    }
    chk.pass = chk.worst < tol;
    return chk;
}

} // namespace signet
