// Command-line front end: structural analysis, certification, simulation,
// dwell-time checking, and verification of switching scenarios.

#include "signet/errors.hpp"
#include "signet/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read scenario file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommonArgs {
    std::string scenario_path;
    std::string out_dir = ".";
    signet::RunOptions opt;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_sim_flags) {
    cmd->add_option("--scenario", args.scenario_path, "scenario file")->required();
    cmd->add_option("--out", args.out_dir, "output directory for trace/report files");
    cmd->add_flag("--strict-removals", args.opt.strict_removals,
                  "reject removal of nodes present since mode 1");
    if (with_sim_flags) {
        cmd->add_option("--dt", args.opt.dt, "override integration step");
        cmd->add_option("--tol", args.opt.tol, "objective verification tolerance");
        cmd->add_option("--sample-every", args.opt.sample_every, "CSV row stride");
        cmd->add_option("--scale-durations", args.opt.scale_durations,
                        "multiply every mode duration");
        cmd->add_flag("--modes-only", args.opt.modes_only, "structural analysis only");
    }
}

int execute(const CommonArgs& args, bool structural_only, bool dwell_only, bool write_files) {
    signet::Scenario sc = signet::parse_scenario(slurp(args.scenario_path));

    signet::RunOptions opt = args.opt;
    if (structural_only || dwell_only) opt.modes_only = true;

    signet::RunResult res = signet::run(sc, opt);
    if (dwell_only) {
        // Schedule audit only, no simulation.
        res.report.dwell = signet::check_dwell(res.scenario, res.certificates);
        res.report.all_pass = res.report.all_pass && res.report.dwell.all_pass;
    }

    std::cout << signet::format_report(res.report);

    if (write_files && res.report.simulated) {
        std::filesystem::create_directories(args.out_dir);
        auto dir = std::filesystem::path(args.out_dir);
        signet::write_trace(res.trace, res.scenario, (dir / "trace.csv").string(),
                            opt.sample_every);
        std::ofstream rpt(dir / "report.txt");
        rpt << signet::format_report(res.report);
        std::ofstream js(dir / "report.json");
        js << signet::report_json(res.report) << "\n";
        std::cout << "trace and report written to " << dir.string() << "\n";
    }
    return res.report.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed-graph switching scenario analyzer"};
    app.require_subcommand(1);

    CommonArgs args;
    auto* analyze = app.add_subcommand("analyze", "structural analysis of every mode");
    auto* certify = app.add_subcommand("certify", "Lyapunov certificates for every mode");
    auto* simulate = app.add_subcommand("simulate", "integrate the scenario, write a trace");
    auto* dwell = app.add_subcommand("check-dwell", "audit the schedule's dwell times");
    auto* verify = app.add_subcommand("verify", "simulate and verify all runtime properties");
    auto* runcmd = app.add_subcommand("run", "full pipeline with trace and report files");
    add_common(analyze, args, false);
    add_common(certify, args, false);
    add_common(simulate, args, true);
    add_common(dwell, args, false);
    add_common(verify, args, true);
    add_common(runcmd, args, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed() || certify->parsed())
            return execute(args, true, false, false);
        if (dwell->parsed()) return execute(args, false, true, false);
        if (verify->parsed()) return execute(args, false, false, false);
        // simulate and run both produce files
        return execute(args, false, false, true);
    } catch (const signet::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
