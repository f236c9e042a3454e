#ifndef SIGNET_SWITCHED_HPP
#define SIGNET_SWITCHED_HPP

#include "signet/algebra.hpp"
#include "signet/lyapunov.hpp"
#include "signet/scenario.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace signet {

/// Everything derived from one mode's graph: matrices, structure verdicts,
/// predicted and numeric zero multiplicity, spectral projector.
struct ModeAnalysis {
    SignedDigraph graph;
    ModeMatrices matrices;
    BalanceVerdict balance;
    LeaderStructure leaders;
    Condensation sccs;
    bool spanning_tree = false;
    bool assumption3 = false;  // meaningful only with more than one leader group
    int predicted_xi = 0;
    ZeroStructure zero;
};

ModeAnalysis analyze_mode(const SignedDigraph& g, double zero_tol = 1e-9);

/// Certificate dispatch with Q = I: plain solve when the edge Laplacian has
/// no zero eigenvalues, shifted solve through the projector otherwise.
LyapunovCertificate certify_mode(const ModeAnalysis& a, double alpha);

/// Edge bookkeeping across one switch. xi[k][k'] = 1 iff new edge k and old
/// edge k' connect the same labeled pair in the same direction with the same
/// sign; any flip breaks the identity and the change lands in phi.
struct Transition {
    double time = 0.0;
    Eigen::MatrixXd xi;         // M_new x M_old, 0/1, at most one 1 per row/column
    Eigen::VectorXd phi;        // ebar_next - xi * ebar_prev
    Eigen::VectorXd x_next;     // post-switch node states, next-mode order
    Eigen::VectorXd ebar_prev;  // at the switch instant, previous mode
    Eigen::VectorXd ebar_next;
};

/// x_at_switch is in prev-mode node order; nodes new to `next` take their
/// state from joins (missing entry -> PreconditionError).
Transition build_transition(const ModeAnalysis& prev, const ModeAnalysis& next,
                            const Eigen::VectorXd& x_at_switch,
                            const std::map<std::string, double>& joins, double time);

struct Sample {
    double t = 0.0;
    int mode = 0;  // index into Scenario::modes
    Eigen::VectorXd x;
    Eigen::VectorXd e;
    Eigen::VectorXd ebar;
    double v = 0.0;
};

struct SwitchRecord {
    double t = 0.0;
    int from_mode = 0;
    int to_mode = 0;
    Eigen::MatrixXd xi;
    Eigen::VectorXd phi;
    double v_before = 0.0;
    double v_after = 0.0;
    double omega = 0.0;
    double theta = 0.0;  // lambda_max(P_next) * |phi|^2
    bool bound_holds = false;
};

struct SimulationTrace {
    std::vector<Sample> samples;
    std::vector<SwitchRecord> switches;
    std::vector<std::string> warnings;

    /// [first, last] sample index of one mode's run.
    std::vector<std::pair<int, int>> mode_ranges;
};

/// Fixed-step classical 4th-order integration of x' = -k1 L_s x per mode.
/// Mode durations snap to whole steps. Samples cover t_start .. t_end - dt
/// within each mode (the pre-switch state lives in the SwitchRecord); the
/// final mode also records its last instant. A step size beyond the explicit
/// stability limit adds a warning; a non-finite state raises
/// IntegrationError with time and mode.
SimulationTrace simulate(const Scenario& sc, const std::vector<ModeAnalysis>& analyses,
                         const std::vector<LyapunovCertificate>& certs);

/// Cross-validation: integrates the edge states e and the synchronization
/// errors ebar in edge coordinates (e' = -k1 L_e e) alongside the node-level
/// run and reports the worst disagreements.
struct EdgeCrossCheck {
    double max_e_deviation = 0.0;     // max_t |E_s^T x(t) - e_edge(t)|
    double max_ebar_deviation = 0.0;  // same for ebar
    double max_projector_leak = 0.0;  // max_t |Pi ebar(t)|, zero at each mode start
};

EdgeCrossCheck simulate_edges(const Scenario& sc, const std::vector<ModeAnalysis>& analyses);

/// Dwell-time audit of the schedule against the per-transition constants.
struct DwellEntry {
    int from_mode = 0;
    int to_mode = 0;
    double gamma = 0.0;
    double omega = 0.0;
    double tau_min = 0.0;
    double duration = 0.0;  // realized duration of the incoming mode
    bool pass = false;
};

struct DwellReport {
    std::vector<DwellEntry> entries;
    std::vector<double> mode_time;  // total active time per scenario mode
    bool all_pass = true;
};

DwellReport check_dwell(const Scenario& sc, const std::vector<LyapunovCertificate>& certs);

/// Per-mode decay audit: the exponential envelope
///   V(t) <= V(t_start) exp(-gamma (t - t_start)) * (1 + 1e-6)
/// and the derivative identity dV/dt = -(k1/2)|ebar|^2 via centered
/// 4th-order finite differences on interior samples.
struct DecayReport {
    double max_envelope_ratio = 0.0;  // max V / envelope over all samples
    double max_identity_rel_err = 0.0;
    bool envelope_pass = true;
    bool identity_pass = true;  // rel. err < 1e-4 where the derivative is not negligible
};

DecayReport verify_mode_decay(const SimulationTrace& trace, const Scenario& sc,
                              const std::vector<LyapunovCertificate>& certs);

struct JumpReport {
    int total = 0;
    int passed = 0;
    double max_phi_norm = 0.0;
    bool all_pass = true;
};

JumpReport verify_jump_bounds(const SimulationTrace& trace);

enum class ObjectiveClass {
    BipartiteConsensus,
    TrivialConsensus,
    IntervalBipartiteConsensus,
    BipartiteContainment,
    Unclassifiable,
};

const char* objective_name(ObjectiveClass c);

struct Objective {
    ObjectiveClass cls = ObjectiveClass::Unclassifiable;
    std::string evidence;
};

/// Decision table on the structural verdicts:
///   balanced + directed spanning tree           -> BipartiteConsensus
///   unbalanced + tree + only a SUB-rooted SCC   -> TrivialConsensus
///   unbalanced + tree + root or SB-rooted SCC   -> IntervalBipartiteConsensus
///   >1 leader group + every follower reachable  -> BipartiteContainment
/// anything else -> Unclassifiable with the evidence spelled out.
Objective classify_objective(const ModeAnalysis& a);

struct ObjectiveCheck {
    bool pass = false;
    double worst = 0.0;  // largest defect of the class predicate over the tail
    std::string detail;
};

/// Evaluates the class predicate over the last 20% of the final mode's
/// samples (node magnitudes agree and match the gauge; all states vanish;
/// states confined to the leader amplitude interval; follower magnitudes
/// dominated by the leaders').
ObjectiveCheck verify_objective(const SimulationTrace& trace, const ModeAnalysis& final_mode,
                                const Objective& obj, double tol);

} // namespace signet

#endif
