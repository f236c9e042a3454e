#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "signet/errors.hpp"
#include "signet/scenario.hpp"

#include <fstream>
#include <random>
#include <sstream>

using namespace signet;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* kMinimal =
    "scenario k1 1.0 dt 0.001\n"
    "mode 1 duration 5.0 alpha 1.0\n"
    "  join 1 1.0\n"
    "  join 2 0.0\n"
    "  edge 1 -> 2 +\n";

int error_line(const std::string& text) {
    try {
        parse_scenario(text);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

} // namespace

TEST_CASE("minimal scenario parses") {
    auto sc = parse_scenario(kMinimal);
    CHECK(sc.k1 == 1.0);
    CHECK(sc.dt == 0.001);
    REQUIRE(sc.modes.size() == 1);
    const auto& m = sc.modes[0];
    CHECK(m.id == "1");
    CHECK(m.duration == 5.0);
    CHECK(m.alpha == 1.0);
    CHECK(m.graph.num_nodes() == 2);
    CHECK(m.graph.num_edges() == 1);
    CHECK(m.joins.at("1") == 1.0);
}

TEST_CASE("comments and blank lines are ignored") {
    std::string text = std::string("# header comment\n\n") + kMinimal +
                       "  # trailing comment line\n";
    CHECK(parse_scenario(text).modes.size() == 1);
}

TEST_CASE("diagnostics carry the offending line number") {
    CHECK(error_line("") >= 1);
    CHECK(error_line("mode 1 duration 1 alpha 1\n") == 1);  // before header
    CHECK(error_line("scenario k1 1 dt 0.001\nscenario k1 1 dt 0.001\n") == 2);
    CHECK(error_line("scenario k1 0 dt 0.001\n") == 1);
    CHECK(error_line("scenario k1 1 dt 0.001\nmode 1 duration -3 alpha 1\n") == 2);
    CHECK(error_line("scenario k1 1 dt 0.001\nmode 1 duration x alpha 1\n") == 2);
    CHECK(error_line("scenario k1 1 dt 0.001\nbogus\n") == 2);
    CHECK(error_line("scenario k1 1 dt 0.001\njoin 1 0\n") == 2);  // outside a mode

    // self-loop surfaces as a parse diagnostic pointing at the mode
    std::string selfloop =
        "scenario k1 1 dt 0.001\n"
        "mode 1 duration 1 alpha 1\n"
        "  join 1 0\n"
        "  edge 1 -> 1 +\n";
    CHECK(error_line(selfloop) == 2);

    // digon sign violation
    std::string digon =
        "scenario k1 1 dt 0.001\n"
        "mode 1 duration 1 alpha 1\n"
        "  join 1 0\n  join 2 0\n"
        "  edge 1 -> 2 +\n  edge 2 -> 1 -\n";
    CHECK(error_line(digon) == 2);

    // missing join for a node new in mode 2
    std::string missing_join = std::string(kMinimal) +
                               "mode 2 duration 1 alpha 1\n"
                               "  node 1\n  node 2\n  node 3\n"
                               "  edge 1 -> 3 +\n  edge 1 -> 2 +\n";
    CHECK(error_line(missing_join) == 6);

    // missing initial state in mode 1
    std::string missing_x0 =
        "scenario k1 1 dt 0.001\n"
        "mode 1 duration 1 alpha 1\n"
        "  node 1\n  join 2 0\n"
        "  edge 1 -> 2 +\n";
    CHECK(error_line(missing_x0) == 2);

    // disconnected mode graph
    std::string disconnected =
        "scenario k1 1 dt 0.001\n"
        "mode 1 duration 1 alpha 1\n"
        "  join 1 0\n  join 2 0\n  join 3 0\n  join 4 0\n"
        "  edge 1 -> 2 +\n  edge 3 -> 4 +\n";
    CHECK(error_line(disconnected) == 2);
}

TEST_CASE("re-joining a carried-over node is rejected") {
    std::string text = std::string(kMinimal) +
                       "mode 2 duration 1 alpha 1\n"
                       "  join 1 5.0\n  node 2\n"
                       "  edge 1 -> 2 +\n";
    CHECK_THROWS_AS(parse_scenario(text), ParseError);
}

TEST_CASE("round-trip identity on every shipped fixture") {
    for (const char* name : {"minimal.scn", "sb_tree.scn", "sub_cycle.scn", "sub_root.scn",
                             "multi_leader.scn", "switching_demo.scn"}) {
        auto text = slurp(std::string(FIXTURES_DIR) + "/" + name);
        Scenario once = parse_scenario(text);
        std::string canon = serialize_scenario(once);
        Scenario twice = parse_scenario(canon);
        CHECK(once == twice);
        CHECK(serialize_scenario(twice) == canon);
    }
}

TEST_CASE("round trip preserves full double precision") {
    Scenario sc = parse_scenario(kMinimal);
    sc.k1 = 0.1 + 0.2;  // not exactly representable as a short decimal
    sc.modes[0].joins["1"] = 1.0 / 3.0;
    Scenario back = parse_scenario(serialize_scenario(sc));
    CHECK(back.k1 == sc.k1);
    CHECK(back.modes[0].joins.at("1") == sc.modes[0].joins.at("1"));
}

TEST_CASE("strict removal policy") {
    // node 2 joins in mode 2 and leaves in mode 3: allowed
    std::string ok_text =
        "scenario k1 1 dt 0.001\n"
        "mode 1 duration 1 alpha 1\n  join 1 0\n  join 3 1\n  edge 1 -> 3 +\n"
        "mode 2 duration 1 alpha 1\n  node 1\n  node 3\n  join 2 2\n"
        "  edge 1 -> 3 +\n  edge 1 -> 2 +\n"
        "mode 3 duration 1 alpha 1\n  node 1\n  node 3\n  edge 1 -> 3 +\n";
    CHECK_NOTHROW(check_removals(parse_scenario(ok_text)));

    // node 3 was present from the start: rejected
    std::string bad_text =
        "scenario k1 1 dt 0.001\n"
        "mode 1 duration 1 alpha 1\n  join 1 0\n  join 3 1\n  edge 1 -> 3 +\n"
        "mode 2 duration 1 alpha 1\n  node 1\n  join 2 2\n  edge 1 -> 2 +\n";
    CHECK_THROWS_AS(check_removals(parse_scenario(bad_text)), PreconditionError);
}

TEST_CASE("fuzzed byte strings always yield a diagnostic, never a crash") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> len(0, 200);
    std::uniform_int_distribution<int> byte(0, 255);
    const std::string words[] = {"scenario", "mode",  "join", "node", "edge", "->",
                                 "+",        "-",     "k1",   "dt",   "1",    "2.5",
                                 "duration", "alpha", "\n",   " ",    "#",    "nan"};
    for (int trial = 0; trial < 10000; ++trial) {
        std::string input;
        if (trial % 2 == 0) {
            int n = len(rng);
            for (int i = 0; i < n; ++i) input.push_back(static_cast<char>(byte(rng)));
        } else {
            // token soup: structurally plausible garbage
            int n = len(rng) / 4;
            for (int i = 0; i < n; ++i) {
                input += words[rng() % (sizeof(words) / sizeof(words[0]))];
                input += rng() % 3 ? " " : "\n";
            }
        }
        try {
            parse_scenario(input);
        } catch (const ParseError& e) {
            CHECK(e.line >= 1);
        }
        // anything else escaping is a test failure (uncaught exception)
    }
}
