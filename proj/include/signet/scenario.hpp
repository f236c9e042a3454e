#ifndef SIGNET_SCENARIO_HPP
#define SIGNET_SCENARIO_HPP

#include "signet/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace signet {

/// One mode of a switching scenario. Nodes listed in `joins` enter with the
/// given initial state; every other node of the graph carries its state over
/// from the previous mode.
struct Mode {
    std::string id;
    SignedDigraph graph;
    double duration = 0.0;
    double alpha = 1.0;
    std::map<std::string, double> joins;

    bool operator==(const Mode&) const = default;
};

struct Scenario {
    double k1 = 1.0;
    double dt = 1e-3;
    std::vector<Mode> modes;

    bool operator==(const Scenario&) const = default;
};

/// Parses the line-oriented scenario format:
///
///   scenario k1 4.0 dt 0.001
///   mode <id> duration <seconds> alpha <a>
///     join <node> <x0>          # node new in this mode
///     node <node>               # carried-over node
///     edge <tail> -> <head> +|-
///
/// '#' starts a comment. Mode 1 join lines define the initial states. A node
/// absent from a mode's node/join/edge lines is removed. All diagnostics
/// carry 1-based line numbers (ParseError); graph invariant violations and
/// disconnected mode graphs are surfaced as parse errors too.
Scenario parse_scenario(const std::string& text);

/// Canonical text form; parse(serialize(s)) == s.
std::string serialize_scenario(const Scenario& s);

/// Nodes present in the previous mode but not in this one must have joined
/// after mode 1. Throws PreconditionError on the first offending node.
void check_removals(const Scenario& s);

} // namespace signet

#endif
