#include "signet/graph.hpp"

#include "signet/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stack>

namespace signet {

int SignedDigraph::node_index(const std::string& label) const {
    for (int i = 0; i < num_nodes(); ++i)
        if (nodes[i] == label) return i;
    return -1;
}

int SignedDigraph::add_node(const std::string& label) {
    int idx = node_index(label);
    if (idx >= 0) return idx;
    nodes.push_back(label);
    return num_nodes() - 1;
}

void SignedDigraph::add_edge(const std::string& tail, const std::string& head, int sign) {
    int t = add_node(tail);
    int h = add_node(head);
    edges.push_back({t, h, sign});
}

std::vector<std::string> validate(const SignedDigraph& g) {
    std::vector<std::string> violations;
    std::map<std::pair<int, int>, int> seen;  // (tail,head) -> sign
    for (const auto& e : g.edges) {
        if (e.tail < 0 || e.tail >= g.num_nodes() || e.head < 0 || e.head >= g.num_nodes()) {
            violations.push_back("edge references unknown node index");
            continue;
        }
        const std::string& t = g.nodes[e.tail];
        const std::string& h = g.nodes[e.head];
        if (e.tail == e.head)
            violations.push_back("self-loop at " + t);
        if (e.sign != 1 && e.sign != -1)
            violations.push_back("edge " + t + " -> " + h + " has weight outside {+1,-1}");
        auto key = std::make_pair(e.tail, e.head);
        if (seen.count(key)) {
            violations.push_back("duplicate edge " + t + " -> " + h);
        } else {
            seen[key] = e.sign;
        }
        auto rev = seen.find(std::make_pair(e.head, e.tail));
        if (rev != seen.end() && rev->second != e.sign && e.tail != e.head)
            violations.push_back("digon sign violation between " + t + " and " + h);
    }
    std::set<std::string> labels(g.nodes.begin(), g.nodes.end());
    if (static_cast<int>(labels.size()) != g.num_nodes())
        violations.push_back("duplicate node labels");
    return violations;
}

namespace {

std::vector<std::vector<int>> out_adjacency(const SignedDigraph& g) {
    std::vector<std::vector<int>> adj(g.num_nodes());
    for (const auto& e : g.edges) adj[e.tail].push_back(e.head);
    return adj;
}

std::vector<bool> reachable_from(const std::vector<std::vector<int>>& adj,
                                 const std::vector<int>& sources) {
    std::vector<bool> seen(adj.size(), false);
    std::stack<int> st;
    for (int s : sources) {
        if (!seen[s]) { seen[s] = true; st.push(s); }
    }
    while (!st.empty()) {
        int u = st.top();
        st.pop();
        for (int v : adj[u])
            if (!seen[v]) { seen[v] = true; st.push(v); }
    }
    return seen;
}

} // namespace

bool is_weakly_connected(const SignedDigraph& g) {
    if (g.num_nodes() <= 1) return true;
    std::vector<std::vector<int>> adj(g.num_nodes());
    for (const auto& e : g.edges) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }
    auto seen = reachable_from(adj, {0});
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool has_directed_spanning_tree(const SignedDigraph& g) {
    if (g.num_nodes() <= 1) return true;
    auto adj = out_adjacency(g);
    for (int r = 0; r < g.num_nodes(); ++r) {
        auto seen = reachable_from(adj, {r});
        if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return true;
    }
    return false;
}

BalanceVerdict structural_balance(const SignedDigraph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.num_nodes());  // (neighbor, sign)
    for (const auto& e : g.edges) {
        adj[e.tail].push_back({e.head, e.sign});
        adj[e.head].push_back({e.tail, e.sign});
    }
    std::vector<int> gauge(g.num_nodes(), 0);
    for (int start = 0; start < g.num_nodes(); ++start) {
        if (gauge[start] != 0) continue;
        gauge[start] = +1;  // lowest-indexed node of this weak component
        std::stack<int> st;
        st.push(start);
        while (!st.empty()) {
            int u = st.top();
            st.pop();
            for (auto [v, s] : adj[u]) {
                int want = gauge[u] * s;
                if (gauge[v] == 0) {
                    gauge[v] = want;
                    st.push(v);
                } else if (gauge[v] != want) {
                    return {false, {}};
                }
            }
        }
    }
    return {true, gauge};
}

namespace {

// Iterative Tarjan; components come out in reverse topological order.
std::vector<std::vector<int>> tarjan_sccs(const SignedDigraph& g) {
    const int n = g.num_nodes();
    auto adj = out_adjacency(g);
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stk;
    std::vector<std::vector<int>> comps;
    int counter = 0;

    struct Frame { int node; size_t next_edge; };
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::stack<Frame> call;
        call.push({root, 0});
        index[root] = low[root] = counter++;
        stk.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& fr = call.top();
            if (fr.next_edge < adj[fr.node].size()) {
                int v = adj[fr.node][fr.next_edge++];
                if (index[v] < 0) {
                    index[v] = low[v] = counter++;
                    stk.push_back(v);
                    on_stack[v] = true;
                    call.push({v, 0});
                } else if (on_stack[v]) {
                    low[fr.node] = std::min(low[fr.node], index[v]);
                }
            } else {
                int u = fr.node;
                call.pop();
                if (!call.empty())
                    low[call.top().node] = std::min(low[call.top().node], low[u]);
                if (low[u] == index[u]) {
                    std::vector<int> comp;
                    while (true) {
                        int w = stk.back();
                        stk.pop_back();
                        on_stack[w] = false;
                        comp.push_back(w);
                        if (w == u) break;
                    }
                    comps.push_back(std::move(comp));
                }
            }
        }
    }
    return comps;
}

SignedDigraph induced_subgraph(const SignedDigraph& g, const std::vector<int>& members) {
    SignedDigraph sub;
    std::vector<int> remap(g.num_nodes(), -1);
    for (int u : members) {
        remap[u] = sub.num_nodes();
        sub.nodes.push_back(g.nodes[u]);
    }
    for (const auto& e : g.edges)
        if (remap[e.tail] >= 0 && remap[e.head] >= 0)
            sub.edges.push_back({remap[e.tail], remap[e.head], e.sign});
    return sub;
}

} // namespace

Condensation condensation(const SignedDigraph& g) {
    auto comps = tarjan_sccs(g);
    for (auto& c : comps) std::sort(c.begin(), c.end());
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    Condensation out;
    out.components = std::move(comps);
    out.component_of.assign(g.num_nodes(), -1);
    for (int c = 0; c < static_cast<int>(out.components.size()); ++c)
        for (int u : out.components[c]) out.component_of[u] = c;
    std::set<std::pair<int, int>> dag;
    for (const auto& e : g.edges) {
        int a = out.component_of[e.tail], b = out.component_of[e.head];
        if (a != b) dag.insert({a, b});
    }
    out.dag_edges.assign(dag.begin(), dag.end());
    return out;
}

LeaderStructure leader_structure(const SignedDigraph& g) {
    auto cond = condensation(g);
    std::vector<bool> has_incoming(cond.components.size(), false);
    for (auto [a, b] : cond.dag_edges) has_incoming[b] = true;

    LeaderStructure ls;
    std::vector<bool> is_leader(g.num_nodes(), false);
    for (int c = 0; c < static_cast<int>(cond.components.size()); ++c) {
        if (has_incoming[c]) continue;
        const auto& comp = cond.components[c];
        if (comp.size() == 1) {
            ls.root_nodes.push_back(comp.front());
        } else {
            auto verdict = structural_balance(induced_subgraph(g, comp));
            (verdict.balanced ? ls.sb_rooted_sccs : ls.sub_rooted_sccs).push_back(comp);
        }
        for (int u : comp) is_leader[u] = true;
    }
    for (int u = 0; u < g.num_nodes(); ++u)
        (is_leader[u] ? ls.leaders : ls.followers).push_back(u);
    return ls;
}

bool check_assumption3(const SignedDigraph& g, const LeaderStructure& ls) {
    if (ls.group_count() <= 1)
        throw PreconditionError("assumption-3 check needs more than one leader group");
    auto adj = out_adjacency(g);
    auto seen = reachable_from(adj, ls.leaders);
    for (int f : ls.followers)
        if (!seen[f]) return false;
    return true;
}

} // namespace signet
