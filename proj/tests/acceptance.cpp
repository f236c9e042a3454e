// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here on purpose.

#include "canonical.hpp"
#include "oracles.hpp"
#include "signet/errors.hpp"
#include "signet/report.hpp"

#include <Eigen/SVD>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace signet;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::cout << "criterion " << number << " (" << name << "): " << (pass ? "PASS" : "FAIL")
              << " -- " << detail << "\n";
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixture_path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

Scenario load_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

/// Random corpus satisfying the structural hypotheses: spanning-tree graphs
/// and multi-leader graphs, weakly connected, N <= 10.
std::vector<SignedDigraph> build_corpus(int count) {
    std::mt19937 rng(2024);
    std::vector<SignedDigraph> corpus;
    while (static_cast<int>(corpus.size()) < count) {
        auto g = corpus.size() % 2 ? oracle::rand_tree_graph(rng)
                                   : oracle::rand_multileader(rng);
        if (!is_weakly_connected(g) || g.num_edges() == 0) continue;
        corpus.push_back(std::move(g));
    }
    return corpus;
}

/// Largest backward error when matching the nonzero spectra of the node and
/// edge Laplacians against each other.
double spectral_mismatch(const Eigen::MatrixXd& ls, const Eigen::MatrixXd& le, int zeros_ls,
                         int zeros_le) {
    auto nonzero_eigs = [](const Eigen::MatrixXd& a, int zeros) {
        Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
        Eigen::VectorXcd ev = es.eigenvalues();
        std::vector<std::complex<double>> out(ev.data(), ev.data() + ev.size());
        std::sort(out.begin(), out.end(),
                  [](auto x, auto y) { return std::abs(x) < std::abs(y); });
        out.erase(out.begin(), out.begin() + zeros);  // drop the zero group
        return out;
    };
    auto sigma_min = [](const Eigen::MatrixXd& a, std::complex<double> lambda) {
        Eigen::MatrixXcd shifted = a.cast<std::complex<double>>();
        shifted.diagonal().array() -= lambda;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
        return svd.singularValues()(svd.singularValues().size() - 1);
    };
    double worst = 0.0;
    for (auto lambda : nonzero_eigs(ls, zeros_ls)) worst = std::max(worst, sigma_min(le, lambda));
    for (auto lambda : nonzero_eigs(le, zeros_le)) worst = std::max(worst, sigma_min(ls, lambda));
    return worst;
}

void criterion_1_and_2(const std::vector<SignedDigraph>& corpus) {
    auto t0 = Clock::now();
    int mismatches = 0;
    double worst_backward = 0.0;
    bool counts_ok = true;
    for (const auto& g : corpus) {
        auto mm = build_matrices(g);
        int predicted =
            predicted_zero_multiplicity(g, structural_balance(g), leader_structure(g));
        auto zs_e = zero_structure(mm.edge_laplacian);
        if (zs_e.algebraic != predicted) ++mismatches;

        auto zs_s = zero_structure(mm.laplacian);
        // nonzero counts must agree: N - z_s == M - xi_e
        if (g.num_nodes() - zs_s.algebraic != g.num_edges() - zs_e.algebraic)
            counts_ok = false;
        double scale = std::max(1.0, mm.laplacian.norm());
        worst_backward = std::max(
            worst_backward,
            spectral_mismatch(mm.laplacian, mm.edge_laplacian, zs_s.algebraic, zs_e.algebraic) /
                scale);
    }
    double dt = seconds_since(t0);
    {
        std::ostringstream d;
        d << corpus.size() << " graphs, " << mismatches << " mismatches, " << dt << " s";
        report(1, "zero-multiplicity formula", mismatches == 0 && dt < 30.0, d.str());
    }
    {
        std::ostringstream d;
        d << "max relative backward error " << worst_backward << ", counts "
          << (counts_ok ? "consistent" : "inconsistent");
        report(2, "spectral coincidence", counts_ok && worst_backward < 1e-8, d.str());
    }
}

void criterion_3(const std::vector<SignedDigraph>& corpus) {
    bool ok = true;
    double worst_residual = 0.0;
    for (const auto& g : corpus) {
        auto mm = build_matrices(g);
        auto zs = zero_structure(mm.edge_laplacian);
        Eigen::MatrixXd q =
            Eigen::MatrixXd::Identity(mm.edge_laplacian.rows(), mm.edge_laplacian.cols());
        LyapunovCertificate cert = zs.algebraic == 0
                                       ? solve_tree(mm.edge_laplacian, q)
                                       : solve_shifted(mm.edge_laplacian, q, 1.0, zs.projector);
        ok = ok && (cert.P - cert.P.transpose()).norm() < 1e-10 && cert.lambda_min > 0.0;
        worst_residual = std::max(worst_residual, cert.residual);
    }
    ok = ok && worst_residual < 1e-8;

    // hand-derived value for the cooperative two-edge path
    SignedDigraph path;
    path.add_edge("1", "2", 1);
    path.add_edge("2", "3", 1);
    auto mm = build_matrices(path);
    auto cert = solve_tree(mm.edge_laplacian,
                           Eigen::MatrixXd::Identity(2, 2));
    Eigen::MatrixXd expected(2, 2);
    expected << 0.75, 0.25, 0.25, 0.5;
    double hand_err = (cert.P - expected).cwiseAbs().maxCoeff();
    ok = ok && hand_err < 1e-12;

    std::ostringstream d;
    d << "max residual " << worst_residual << ", path example error " << hand_err;
    report(3, "certificate validity", ok, d.str());
}

void criterion_4(const std::vector<SignedDigraph>& corpus) {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> state(-2.0, 2.0);
    int runs = 0;
    double worst_rel = 0.0, worst_ratio = 0.0;
    for (const auto& g : corpus) {
        if (runs >= 25) break;
        Scenario sc;
        sc.k1 = 1.0;
        sc.dt = 1e-3;
        Mode m;
        m.id = "1";
        m.graph = g;
        m.duration = 6.0;
        m.alpha = 1.0;
        for (const auto& label : g.nodes) m.joins[label] = state(rng);
        sc.modes.push_back(std::move(m));

        auto a = analyze_mode(g);
        auto cert = certify_mode(a, 1.0);
        auto trace = simulate(sc, {a}, {cert});
        auto decay = verify_mode_decay(trace, sc, {cert});
        worst_rel = std::max(worst_rel, decay.max_identity_rel_err);
        worst_ratio = std::max(worst_ratio, decay.max_envelope_ratio);
        if (!decay.envelope_pass || !decay.identity_pass) {
            report(4, "decay identity", false, "single-mode run violated decay checks");
            return;
        }
        ++runs;
    }
    std::ostringstream d;
    d << runs << " runs, max derivative rel err " << worst_rel << ", max envelope ratio "
      << worst_ratio;
    report(4, "decay identity", runs >= 20 && worst_rel < 1e-4 && worst_ratio <= 1.0, d.str());
}

void criterion_5_and_6() {
    auto t0 = Clock::now();
    auto sc = load_fixture("switching_demo.scn");
    auto res = run(sc);
    double elapsed = seconds_since(t0);

    {
        std::ostringstream d;
        d << res.report.jumps.passed << "/" << res.report.jumps.total
          << " switch bounds hold, max |phi| " << res.report.jumps.max_phi_norm;
        report(5, "jump bound", res.report.jumps.total == 8 && res.report.jumps.all_pass,
               d.str());
    }

    RunOptions squeeze;
    squeeze.scale_durations = 0.05;
    auto bad = run(sc, squeeze);
    bool pass = res.report.dwell.all_pass && res.report.tail_error_norm < 0.1 &&
                !bad.report.dwell.all_pass &&
                bad.report.tail_error_norm >= 5.0 * res.report.tail_error_norm &&
                elapsed < 10.0;
    std::ostringstream d;
    d << "tail |ebar| " << res.report.tail_error_norm << " (scaled: "
      << bad.report.tail_error_norm << "), dwell " << (res.report.dwell.all_pass ? "pass" : "fail")
      << " (scaled: " << (bad.report.dwell.all_pass ? "pass" : "fail") << "), " << elapsed
      << " s";
    report(6, "nine-mode end-to-end", pass, d.str());
}

void criterion_7() {
    struct Case {
        const char* file;
        ObjectiveClass expected;
    };
    const Case cases[] = {
        {"sb_tree.scn", ObjectiveClass::BipartiteConsensus},
        {"sub_cycle.scn", ObjectiveClass::TrivialConsensus},
        {"sub_root.scn", ObjectiveClass::IntervalBipartiteConsensus},
        {"multi_leader.scn", ObjectiveClass::BipartiteContainment},
    };
    bool ok = true;
    std::ostringstream d;
    for (const auto& c : cases) {
        auto sc = load_fixture(c.file);
        auto a = analyze_mode(sc.modes.back().graph);
        auto obj = classify_objective(a);
        auto res = run(sc);
        bool this_ok = obj.cls == c.expected && res.report.objective_check.pass;
        ok = ok && this_ok;
        d << c.file << "=" << objective_name(obj.cls) << (this_ok ? "(ok) " : "(BAD) ");
    }
    report(7, "objective verification", ok, d.str());
}

void criterion_8() {
    double worst = 0.0;
    for (const char* name : {"minimal.scn", "sb_tree.scn", "sub_cycle.scn", "sub_root.scn",
                             "multi_leader.scn", "switching_demo.scn"}) {
        auto sc = load_fixture(name);
        std::vector<ModeAnalysis> analyses;
        for (const auto& m : sc.modes) analyses.push_back(analyze_mode(m.graph));
        auto cc = simulate_edges(sc, analyses);
        worst = std::max({worst, cc.max_e_deviation, cc.max_ebar_deviation});
    }
    std::ostringstream d;
    d << "max node/edge integration deviation " << worst;
    report(8, "integrator cross-check", worst < 1e-6, d.str());
}

void criterion_9() {
    bool ok = true;
    for (const char* name : {"minimal.scn", "sb_tree.scn", "sub_cycle.scn", "sub_root.scn",
                             "multi_leader.scn", "switching_demo.scn"}) {
        std::ifstream in(fixture_path(name), std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        Scenario once = parse_scenario(buf.str());
        Scenario twice = parse_scenario(serialize_scenario(once));
        ok = ok && once == twice;
    }

    std::mt19937 rng(31);
    std::uniform_int_distribution<int> len(0, 300);
    std::uniform_int_distribution<int> byte(0, 255);
    int crashes = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::string input;
        int n = len(rng);
        for (int i = 0; i < n; ++i) input.push_back(static_cast<char>(byte(rng)));
        try {
            parse_scenario(input);
        } catch (const ParseError&) {
            // expected: positioned diagnostic
        } catch (...) {
            ++crashes;
        }
    }
    std::ostringstream d;
    d << "round-trip " << (ok ? "identical" : "DIFFERS") << ", " << crashes
      << " non-diagnostic failures over 10000 fuzz inputs";
    report(9, "parser robustness", ok && crashes == 0, d.str());
}

} // namespace

int main() {
    auto corpus = build_corpus(250);
    criterion_1_and_2(corpus);
    criterion_3(corpus);
    criterion_4(corpus);
    criterion_5_and_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::cout << (g_failures == 0 ? "all criteria passed" : "FAILURES PRESENT") << "\n";
    return g_failures == 0 ? 0 : 1;
}
