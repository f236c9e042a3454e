#ifndef SIGNET_REPORT_HPP
#define SIGNET_REPORT_HPP

#include "signet/switched.hpp"

#include <string>
#include <vector>

namespace signet {

struct RunOptions {
    double dt = 0.0;              // > 0 overrides the scenario's step
    double tol = 1e-3;            // objective verification tolerance
    double scale_durations = 1.0; // multiplies every mode duration
    double zero_tol = 1e-9;
    int sample_every = 1;         // CSV row stride
    bool strict_removals = false; // only nodes added after mode 1 may leave
    bool modes_only = false;      // structural analysis, no simulation
};

struct ModeReport {
    std::string id;
    int nodes = 0;
    int edges = 0;
    bool balanced = false;
    bool spanning_tree = false;
    int leader_groups = 0;
    int predicted_xi = 0;
    int numeric_xi = 0;
    double alpha = 0.0;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double residual = 0.0;
    std::string objective;
    std::string evidence;
};

struct RunReport {
    double k1 = 0.0;
    double dt = 0.0;
    std::vector<ModeReport> modes;
    DwellReport dwell;
    JumpReport jumps;
    DecayReport decay;
    ObjectiveCheck objective_check;
    double tail_error_norm = 0.0;  // |ebar| at the final instant
    std::vector<std::string> warnings;
    bool simulated = false;
    bool all_pass = false;
};

struct RunResult {
    Scenario scenario;  // after dt/duration adjustments
    RunReport report;
    SimulationTrace trace;
    std::vector<ModeAnalysis> analyses;
    std::vector<LyapunovCertificate> certificates;
};

/// Full pipeline: analyze every mode, certify, check dwell times, simulate,
/// verify decay/jump bounds/final objective. Module faults are rethrown with
/// the offending mode named.
RunResult run(const Scenario& sc, const RunOptions& opt = {});

/// Plain-text report, numbers at 12 significant digits.
std::string format_report(const RunReport& r);

/// Machine-readable twin of format_report (JSON).
std::string report_json(const RunReport& r);

/// CSV trace: header `t,mode,x:<node>...,e:<k>...,ebar:<k>...,V` over the
/// union of nodes (first-appearance order) and edge indices of all modes;
/// absent entries stay empty; full 17-digit precision.
void write_trace(const SimulationTrace& trace, const Scenario& sc, const std::string& path,
                 int sample_every = 1);

} // namespace signet

#endif
