// Python bindings for the core operations: graph construction and analysis,
// certificates, scenario parsing, simulation, and the full pipeline.

#include "signet/errors.hpp"
#include "signet/report.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace signet;

PYBIND11_MODULE(_signet, m) {
    m.doc() = "signed-graph switching toolkit";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<StructuralError>(m, "StructuralError", PyExc_RuntimeError);
    py::register_exception<AmbiguousSpectrumError>(m, "AmbiguousSpectrumError",
                                                   PyExc_RuntimeError);
    py::register_exception<WrongTheoremError>(m, "WrongTheoremError", PyExc_RuntimeError);
    py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_RuntimeError);
    static py::exception<ParseError> parse_exc(m, "ScenarioParseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse_exc, e.what());
        }
    });

    py::class_<SignedEdge>(m, "SignedEdge")
        .def_readonly("tail", &SignedEdge::tail)
        .def_readonly("head", &SignedEdge::head)
        .def_readonly("sign", &SignedEdge::sign);

    py::class_<SignedDigraph>(m, "SignedDigraph")
        .def(py::init<>())
        .def_readonly("nodes", &SignedDigraph::nodes)
        .def_readonly("edges", &SignedDigraph::edges)
        .def("num_nodes", &SignedDigraph::num_nodes)
        .def("num_edges", &SignedDigraph::num_edges)
        .def("add_node", &SignedDigraph::add_node)
        .def("add_edge", &SignedDigraph::add_edge);

    m.def("validate", &validate);
    m.def("is_weakly_connected", &is_weakly_connected);
    m.def("has_directed_spanning_tree", &has_directed_spanning_tree);

    py::class_<BalanceVerdict>(m, "BalanceVerdict")
        .def_readonly("balanced", &BalanceVerdict::balanced)
        .def_readonly("gauge", &BalanceVerdict::gauge);
    m.def("structural_balance", &structural_balance);

    py::class_<LeaderStructure>(m, "LeaderStructure")
        .def_readonly("root_nodes", &LeaderStructure::root_nodes)
        .def_readonly("sb_rooted_sccs", &LeaderStructure::sb_rooted_sccs)
        .def_readonly("sub_rooted_sccs", &LeaderStructure::sub_rooted_sccs)
        .def_readonly("leaders", &LeaderStructure::leaders)
        .def_readonly("followers", &LeaderStructure::followers)
        .def("group_count", &LeaderStructure::group_count);
    m.def("leader_structure", &leader_structure);

    py::class_<ModeMatrices>(m, "ModeMatrices")
        .def_readonly("incidence", &ModeMatrices::incidence)
        .def_readonly("in_incidence", &ModeMatrices::in_incidence)
        .def_readonly("laplacian", &ModeMatrices::laplacian)
        .def_readonly("edge_laplacian", &ModeMatrices::edge_laplacian);
    m.def("build_matrices", &build_matrices);
    m.def("predicted_zero_multiplicity", &predicted_zero_multiplicity);

    py::class_<ZeroStructure>(m, "ZeroStructure")
        .def_readonly("algebraic", &ZeroStructure::algebraic)
        .def_readonly("geometric", &ZeroStructure::geometric)
        .def_readonly("projector", &ZeroStructure::projector)
        .def_readonly("eigenvalues", &ZeroStructure::eigenvalues);
    m.def("zero_structure", &zero_structure, py::arg("edge_laplacian"),
          py::arg("zero_tol") = 1e-9);

    py::class_<LyapunovCertificate>(m, "LyapunovCertificate")
        .def_readonly("P", &LyapunovCertificate::P)
        .def_readonly("Q", &LyapunovCertificate::Q)
        .def_readonly("alpha", &LyapunovCertificate::alpha)
        .def_readonly("residual", &LyapunovCertificate::residual)
        .def_readonly("lambda_min", &LyapunovCertificate::lambda_min)
        .def_readonly("lambda_max", &LyapunovCertificate::lambda_max);
    m.def("solve_tree", &solve_tree);
    m.def("solve_shifted", &solve_shifted);

    py::class_<ModeAnalysis>(m, "ModeAnalysis")
        .def_readonly("graph", &ModeAnalysis::graph)
        .def_readonly("matrices", &ModeAnalysis::matrices)
        .def_readonly("balance", &ModeAnalysis::balance)
        .def_readonly("leaders", &ModeAnalysis::leaders)
        .def_readonly("spanning_tree", &ModeAnalysis::spanning_tree)
        .def_readonly("predicted_xi", &ModeAnalysis::predicted_xi)
        .def_readonly("zero", &ModeAnalysis::zero);
    m.def("analyze_mode", &analyze_mode, py::arg("graph"), py::arg("zero_tol") = 1e-9);
    m.def("certify_mode", &certify_mode);

    py::enum_<ObjectiveClass>(m, "ObjectiveClass")
        .value("BipartiteConsensus", ObjectiveClass::BipartiteConsensus)
        .value("TrivialConsensus", ObjectiveClass::TrivialConsensus)
        .value("IntervalBipartiteConsensus", ObjectiveClass::IntervalBipartiteConsensus)
        .value("BipartiteContainment", ObjectiveClass::BipartiteContainment)
        .value("Unclassifiable", ObjectiveClass::Unclassifiable);
    py::class_<Objective>(m, "Objective")
        .def_readonly("cls", &Objective::cls)
        .def_readonly("evidence", &Objective::evidence);
    m.def("classify_objective", &classify_objective);

    py::class_<Mode>(m, "Mode")
        .def_readonly("id", &Mode::id)
        .def_readonly("graph", &Mode::graph)
        .def_readonly("duration", &Mode::duration)
        .def_readonly("alpha", &Mode::alpha)
        .def_readonly("joins", &Mode::joins);
    py::class_<Scenario>(m, "Scenario")
        .def_readonly("k1", &Scenario::k1)
        .def_readonly("dt", &Scenario::dt)
        .def_readonly("modes", &Scenario::modes);
    m.def("parse_scenario", &parse_scenario);
    m.def("serialize_scenario", &serialize_scenario);

    py::class_<Sample>(m, "Sample")
        .def_readonly("t", &Sample::t)
        .def_readonly("mode", &Sample::mode)
        .def_readonly("x", &Sample::x)
        .def_readonly("e", &Sample::e)
        .def_readonly("ebar", &Sample::ebar)
        .def_readonly("v", &Sample::v);
    py::class_<SwitchRecord>(m, "SwitchRecord")
        .def_readonly("t", &SwitchRecord::t)
        .def_readonly("xi", &SwitchRecord::xi)
        .def_readonly("phi", &SwitchRecord::phi)
        .def_readonly("v_before", &SwitchRecord::v_before)
        .def_readonly("v_after", &SwitchRecord::v_after)
        .def_readonly("omega", &SwitchRecord::omega)
        .def_readonly("theta", &SwitchRecord::theta)
        .def_readonly("bound_holds", &SwitchRecord::bound_holds);
    py::class_<SimulationTrace>(m, "SimulationTrace")
        .def_readonly("samples", &SimulationTrace::samples)
        .def_readonly("switches", &SimulationTrace::switches)
        .def_readonly("warnings", &SimulationTrace::warnings);
    m.def("simulate", &simulate);

    py::class_<DwellEntry>(m, "DwellEntry")
        .def_readonly("from_mode", &DwellEntry::from_mode)
        .def_readonly("to_mode", &DwellEntry::to_mode)
        .def_readonly("gamma", &DwellEntry::gamma)
        .def_readonly("omega", &DwellEntry::omega)
        .def_readonly("tau_min", &DwellEntry::tau_min)
        .def_readonly("duration", &DwellEntry::duration)
        .def_readonly("pass_", &DwellEntry::pass);
    py::class_<DwellReport>(m, "DwellReport")
        .def_readonly("entries", &DwellReport::entries)
        .def_readonly("all_pass", &DwellReport::all_pass);
    m.def("check_dwell", &check_dwell);

    py::class_<RunOptions>(m, "RunOptions")
        .def(py::init<>())
        .def_readwrite("dt", &RunOptions::dt)
        .def_readwrite("tol", &RunOptions::tol)
        .def_readwrite("scale_durations", &RunOptions::scale_durations)
        .def_readwrite("zero_tol", &RunOptions::zero_tol)
        .def_readwrite("sample_every", &RunOptions::sample_every)
        .def_readwrite("strict_removals", &RunOptions::strict_removals)
        .def_readwrite("modes_only", &RunOptions::modes_only);
    py::class_<ModeReport>(m, "ModeReport")
        .def_readonly("id", &ModeReport::id)
        .def_readonly("balanced", &ModeReport::balanced)
        .def_readonly("spanning_tree", &ModeReport::spanning_tree)
        .def_readonly("leader_groups", &ModeReport::leader_groups)
        .def_readonly("predicted_xi", &ModeReport::predicted_xi)
        .def_readonly("numeric_xi", &ModeReport::numeric_xi)
        .def_readonly("lambda_min", &ModeReport::lambda_min)
        .def_readonly("lambda_max", &ModeReport::lambda_max)
        .def_readonly("residual", &ModeReport::residual)
        .def_readonly("objective", &ModeReport::objective);
    py::class_<ObjectiveCheck>(m, "ObjectiveCheck")
        .def_readonly("pass_", &ObjectiveCheck::pass)
        .def_readonly("worst", &ObjectiveCheck::worst)
        .def_readonly("detail", &ObjectiveCheck::detail);
    py::class_<JumpReport>(m, "JumpReport")
        .def_readonly("total", &JumpReport::total)
        .def_readonly("passed", &JumpReport::passed)
        .def_readonly("max_phi_norm", &JumpReport::max_phi_norm)
        .def_readonly("all_pass", &JumpReport::all_pass);
    py::class_<DecayReport>(m, "DecayReport")
        .def_readonly("envelope_pass", &DecayReport::envelope_pass)
        .def_readonly("identity_pass", &DecayReport::identity_pass)
        .def_readonly("max_envelope_ratio", &DecayReport::max_envelope_ratio)
        .def_readonly("max_identity_rel_err", &DecayReport::max_identity_rel_err);
    py::class_<RunReport>(m, "RunReport")
        .def_readonly("k1", &RunReport::k1)
        .def_readonly("dt", &RunReport::dt)
        .def_readonly("modes", &RunReport::modes)
        .def_readonly("dwell", &RunReport::dwell)
        .def_readonly("jumps", &RunReport::jumps)
        .def_readonly("decay", &RunReport::decay)
        .def_readonly("objective_check", &RunReport::objective_check)
        .def_readonly("tail_error_norm", &RunReport::tail_error_norm)
        .def_readonly("simulated", &RunReport::simulated)
        .def_readonly("all_pass", &RunReport::all_pass);
    py::class_<RunResult>(m, "RunResult")
        .def_readonly("scenario", &RunResult::scenario)
        .def_readonly("report", &RunResult::report)
        .def_readonly("trace", &RunResult::trace);
    m.def("run", &run, py::arg("scenario"), py::arg("options") = RunOptions{});
    m.def("format_report", &format_report);
    m.def("report_json", &report_json);
    m.def("write_trace", &write_trace, py::arg("trace"), py::arg("scenario"), py::arg("path"),
          py::arg("sample_every") = 1);
}
