// The nine mode graphs of the switching demonstration plus the three-leader
// containment graph, with their expected zero multiplicities.
#ifndef SIGNET_TEST_CANONICAL_HPP
#define SIGNET_TEST_CANONICAL_HPP

#include "oracles.hpp"

namespace canonical {

using oracle::from_edges;

inline signet::SignedDigraph g1() {
    return from_edges(4, {{0, 1, -1}, {2, 0, 1}, {1, 3, 1}, {2, 3, -1}});
}
inline signet::SignedDigraph g2() {
    return from_edges(5, {{0, 1, -1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}, {4, 0, 1}});
}
inline std::vector<std::tuple<int, int, int>> stem6() {
    return {{0, 1, -1}, {0, 2, 1}, {1, 3, 1}, {2, 3, -1}, {0, 4, 1}, {2, 5, -1}};
}
inline signet::SignedDigraph g3() { return from_edges(6, stem6()); }
inline signet::SignedDigraph g4() {
    auto e = stem6();
    e.insert(e.end(), {{0, 6, -1}, {6, 7, 1}, {7, 0, -1}});
    return from_edges(8, e);
}
inline signet::SignedDigraph g5() {
    auto e = stem6();
    e.insert(e.end(), {{6, 0, -1}, {6, 7, 1}, {7, 0, -1}, {8, 2, 1}});
    return from_edges(9, e);
}
inline signet::SignedDigraph g6() {
    auto e = stem6();
    e.insert(e.end(), {{0, 6, 1}, {6, 7, 1}, {7, 0, 1}, {8, 2, 1}});
    return from_edges(9, e);
}
inline signet::SignedDigraph g7() {
    auto e = stem6();
    e.insert(e.end(), {{0, 6, -1}, {6, 7, 1}, {7, 0, 1}, {8, 2, 1}});
    return from_edges(9, e);
}
inline signet::SignedDigraph g8() {
    return from_edges(6, {{0, 1, -1}, {2, 0, 1}, {1, 3, 1}, {3, 2, -1}, {0, 4, 1}, {5, 2, -1}});
}
inline signet::SignedDigraph g9() {
    return from_edges(
        6, {{0, 1, -1}, {2, 0, 1}, {1, 3, 1}, {3, 2, -1}, {0, 4, 1}, {5, 2, -1}, {4, 5, 1}});
}

/// Three leader groups (balanced 4-cycle, unbalanced 3-cycle, lone root)
/// plus one follower hearing all three.
inline signet::SignedDigraph three_leader_groups() {
    return from_edges(9, {{0, 1, -1},
                          {2, 0, 1},
                          {1, 3, 1},
                          {3, 2, -1},
                          {4, 5, 1},
                          {5, 6, 1},
                          {6, 4, -1},
                          {1, 8, -1},
                          {4, 8, 1},
                          {7, 8, -1}});
}

inline std::vector<std::pair<signet::SignedDigraph, int>> all_with_xi() {
    return {{g1(), 1}, {g2(), 1}, {g3(), 1}, {g4(), 2}, {g5(), 3},
            {g6(), 3}, {g7(), 2}, {g8(), 1}, {g9(), 1}, {three_leader_groups(), 3}};
}

} // namespace canonical

#endif
