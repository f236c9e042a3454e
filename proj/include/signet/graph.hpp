#ifndef SIGNET_GRAPH_HPP
#define SIGNET_GRAPH_HPP

#include <string>
#include <vector>

namespace signet {

/// Directed signed edge: information flows tail -> head, sign in {+1,-1}.
struct SignedEdge {
    int tail = 0;
    int head = 0;
    int sign = +1;

    bool operator==(const SignedEdge&) const = default;
};

/// One mode's interaction topology: labeled nodes plus directed signed
/// edges, both kept in declaration order (matrix indices follow it).
struct SignedDigraph {
    std::vector<std::string> nodes;
    std::vector<SignedEdge> edges;

    int num_nodes() const { return static_cast<int>(nodes.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    /// Index of a label, -1 if absent.
    int node_index(const std::string& label) const;

    /// Appends the label if new, returns its index either way.
    int add_node(const std::string& label);

    void add_edge(const std::string& tail, const std::string& head, int sign);

    bool operator==(const SignedDigraph&) const = default;
};

/// Invariant check: self-loops, weights outside {+1,-1}, digon sign
/// asymmetry, duplicate edges. Empty result means the graph is valid.
std::vector<std::string> validate(const SignedDigraph& g);

/// Connectivity of the underlying undirected graph. Empty and single-node
/// graphs count as connected.
bool is_weakly_connected(const SignedDigraph& g);

/// True iff some node reaches every other node along directed paths.
bool has_directed_spanning_tree(const SignedDigraph& g);

/// Balance certificate. gauge[i] in {+1,-1} is set iff balanced, with the
/// lowest-indexed node of each weak component fixed to +1.
struct BalanceVerdict {
    bool balanced = false;
    std::vector<int> gauge;
};

/// Sign-propagating traversal on the underlying undirected signed graph;
/// any sign conflict on a cycle makes the graph unbalanced.
BalanceVerdict structural_balance(const SignedDigraph& g);

/// Strongly connected components and the DAG they induce. Components are
/// ordered by their smallest member index.
struct Condensation {
    std::vector<int> component_of;               // node -> component id
    std::vector<std::vector<int>> components;    // component id -> sorted nodes
    std::vector<std::pair<int, int>> dag_edges;  // unique, between distinct components
};

Condensation condensation(const SignedDigraph& g);

/// Leader/follower split. A leader group is a root node (in-degree 0) or a
/// rooted SCC, classified SB/SUB on its induced subgraph.
struct LeaderStructure {
    std::vector<int> root_nodes;                    // count l_1
    std::vector<std::vector<int>> sb_rooted_sccs;   // count l_2SB
    std::vector<std::vector<int>> sub_rooted_sccs;  // count l_2SUB
    std::vector<int> leaders;                       // union of all groups
    std::vector<int> followers;

    int group_count() const {
        return static_cast<int>(root_nodes.size() + sb_rooted_sccs.size() +
                                sub_rooted_sccs.size());
    }
};

LeaderStructure leader_structure(const SignedDigraph& g);

/// Every follower reachable from at least one leader node. Requires more
/// than one leader group.
bool check_assumption3(const SignedDigraph& g, const LeaderStructure& ls);

} // namespace signet

#endif
