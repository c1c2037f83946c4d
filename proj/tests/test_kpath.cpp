#include <doctest.h>

#include "kpath/detector.hpp"
#include "kpath/error.hpp"
#include "kpath/generate.hpp"
#include "kpath/graph.hpp"
#include "kpath/oracle.hpp"

using namespace kpath;

namespace {

Graph triangle() {
    Graph g(3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    return g;
}

Graph star4() {
    Graph g(4);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(1, 4);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

}  // namespace

TEST_CASE("per-trial success rate on yes-instances") {
    const Graph k3 = triangle();
    int hits = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) hits += detect_trial(k3, 3, RngStream(t)) ? 1 : 0;
    CHECK(double(hits) / trials >= 0.2);

    const Graph p4 = path_graph(4);
    hits = 0;
    for (int t = 0; t < trials; ++t) hits += detect_trial(p4, 4, RngStream(t)) ? 1 : 0;
    CHECK(double(hits) / trials >= 0.2);
}

TEST_CASE("trials on no-instances never fire") {
    const Graph star = star4();
    for (int t = 0; t < 400; ++t) CHECK(!detect_trial(star, 4, RngStream(t)));
    const Graph p4 = path_graph(4);
    for (int t = 0; t < 400; ++t) CHECK(!detect_trial(p4, 5, RngStream(t)));
}

TEST_CASE("detect basics and edge cases") {
    const Graph p4 = path_graph(4);
    const Decision yes = detect(p4, 4, kDefaultTrials, 7);
    CHECK(yes.yes);
    CHECK(yes.trials_used >= 1);
    CHECK(yes.seed == 7);

    CHECK(!detect(star4(), 4, kDefaultTrials, 7).yes);

    Graph empty(5);
    CHECK(!detect(empty, 2, kDefaultTrials, 1).yes);

    // k = 1: any graph with a vertex qualifies; path is trivially [1].
    CHECK(detect(empty, 1, 1, 1).yes);
    CHECK(!detect(Graph(0), 1, 1, 1).yes);

    // k > n is an immediate no.
    CHECK(!detect(triangle(), 4, 1, 1).yes);
    CHECK(detect(triangle(), 4, 1, 1).trials_used == 0);

    CHECK_THROWS_AS(detect(p4, 0, 1, 1), param_error);
    CHECK_THROWS_AS(detect(p4, 2, 0, 1), param_error);
}

TEST_CASE("Hamiltonian instances are found at the default trial budget") {
    // n = k = 8: per-trial rate is about 0.25, so 64 trials miss with
    // probability well under 1e-6.
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = generate_instance("hampath", 8, 0.0, 3000 + seed);
        CHECK(detect(g, 8, kDefaultTrials, seed).yes);
    }
}

TEST_CASE("detect_trial edge cases") {
    CHECK(!detect_trial(star4(), 5, RngStream(1)));  // k > n
    CHECK_THROWS_AS(detect_trial(star4(), 0, RngStream(1)), param_error);
}

TEST_CASE("detect is deterministic in the seed") {
    const Graph g = generate_instance("random", 10, 0.3, 555);
    const Decision a = detect(g, 4, 16, 99);
    const Decision b = detect(g, 4, 16, 99);
    CHECK(a.yes == b.yes);
    CHECK(a.trials_used == b.trials_used);
}

TEST_CASE("detect is monotone: longer paths witness smaller k") {
    const Graph p6 = path_graph(6);
    CHECK(detect(p6, 3, kDefaultTrials, 5).yes);
    CHECK(detect(p6, 6, kDefaultTrials, 5).yes);
}

TEST_CASE("directed graphs honor arc direction") {
    Graph g(3, true);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    CHECK(detect(g, 3, kDefaultTrials, 2).yes);
    const auto p = find_path(g, 3, 2);
    REQUIRE(p.has_value());
    CHECK(*p == Path{1, 2, 3});

    Graph rev(3, true);
    rev.add_edge(2, 1);
    rev.add_edge(3, 2);
    const auto q = find_path(rev, 3, 2);
    REQUIRE(q.has_value());
    CHECK(*q == Path{3, 2, 1});

    // Arcs that only converge have no directed 3-path.
    Graph conv(3, true);
    conv.add_edge(1, 2);
    conv.add_edge(3, 2);
    CHECK(!detect(conv, 3, kDefaultTrials, 2).yes);
}

TEST_CASE("find on canonical small graphs") {
    const auto p = find_path(path_graph(4), 4, 1);
    REQUIRE(p.has_value());
    const bool forward = *p == Path{1, 2, 3, 4};
    const bool backward = *p == Path{4, 3, 2, 1};
    CHECK((forward || backward));

    const Graph k3 = triangle();
    const auto q = find_path(k3, 3, 1);
    REQUIRE(q.has_value());
    CHECK(oracle::verify_path(k3, *q, 3));

    CHECK(!find_path(star4(), 4, 1).has_value());
    CHECK(find_path(star4(), 1, 1) == Path{1});
    CHECK(!find_path(Graph(2), 3, 1).has_value());
}

TEST_CASE("find agrees with the exhaustive oracle on random instances") {
    RngStream seeds(404);
    int found = 0;
    for (int rep = 0; rep < 100; ++rep) {
        const Graph g = generate_instance("random", 12, 0.4, seeds.next_u64());
        const bool truth = oracle::brute_force_kpath(g, 6).has_value();
        const auto p = find_path(g, 6, seeds.next_u64());
        REQUIRE(p.has_value() == truth);
        if (p) {
            REQUIRE(oracle::verify_path(g, *p, 6));
            ++found;
        }
    }
    CHECK(found > 0);
}

TEST_CASE("held_karp_path") {
    const auto p = held_karp_path(path_graph(4), 4);
    REQUIRE(p.has_value());
    const bool forward = *p == Path{1, 2, 3, 4};
    const bool backward = *p == Path{4, 3, 2, 1};
    CHECK((forward || backward));

    CHECK(!held_karp_path(star4(), 4).has_value());
    CHECK(held_karp_path(star4(), 3).has_value());
    CHECK_THROWS_AS(held_karp_path(Graph(26), 3), unsupported_error);
    CHECK_THROWS_AS(held_karp_path(path_graph(3), 0), param_error);
}

TEST_CASE("held_karp agrees with brute force on all graphs with n <= 5") {
    // 2^10 labeled graphs on 5 vertices, every k.
    for (std::uint32_t mask = 0; mask < 1024; ++mask) {
        Graph g(5);
        int bit = 0;
        for (int u = 1; u <= 5; ++u)
            for (int v = u + 1; v <= 5; ++v, ++bit)
                if (mask >> bit & 1) g.add_edge(u, v);
        for (int k = 1; k <= 5; ++k) {
            const auto hk = held_karp_path(g, k);
            REQUIRE(hk.has_value() == oracle::brute_force_kpath(g, k).has_value());
            if (hk) REQUIRE(oracle::verify_path(g, *hk, k));
        }
    }
}

TEST_CASE("held_karp agrees with brute force on sampled 6-vertex graphs") {
    RngStream rng(606);
    for (int rep = 0; rep < 300; ++rep) {
        const Graph g = generate_instance("random", 6, 0.15 + 0.1 * double(rng.next_below(7)),
                                          rng.next_u64());
        for (int k = 1; k <= 6; ++k) {
            const auto hk = held_karp_path(g, k);
            REQUIRE(hk.has_value() == oracle::brute_force_kpath(g, k).has_value());
            if (hk) REQUIRE(oracle::verify_path(g, *hk, k));
        }
    }
}

TEST_CASE("layered walk count equals the matrix-power oracle") {
    CHECK(walk_count_layered(triangle(), 3) == 12);
    RngStream rng(808);
    for (int rep = 0; rep < 30; ++rep) {
        const Graph g = generate_instance("random", 9, 0.35, rng.next_u64());
        for (int k = 1; k <= 6; ++k)
            REQUIRE(walk_count_layered(g, k) == oracle::count_k_walks(g, k));
    }
    // Directed case.
    Graph d(4, true);
    d.add_edge(1, 2);
    d.add_edge(2, 3);
    d.add_edge(3, 4);
    d.add_edge(4, 1);
    for (int k = 1; k <= 6; ++k)
        REQUIRE(walk_count_layered(d, k) == oracle::count_k_walks(d, k));
}

TEST_CASE("walk circuit matches the layered evaluation in structure") {
    const Graph p4 = path_graph(4);
    const auto c = build_walk_circuit(p4, 4);
    REQUIRE(c.has_value());
    CHECK(degree(*c) == 4);

    CHECK(!build_walk_circuit(Graph(3), 2).has_value());  // no edges, no walks

    // The generic circuit detector and the specialized detector agree here.
    CHECK(detect_multilinear(*c, 4, kDefaultTrials, RngStream(6)));
    const auto c5 = build_walk_circuit(star4(), 4);
    REQUIRE(c5.has_value());
    CHECK(!detect_multilinear(*c5, 4, 16, RngStream(6)));
}

TEST_CASE("find refuses k beyond the exact-endgame bound") {
    CHECK_THROWS_AS(find_path(Graph(30), 26, 1), unsupported_error);
}

TEST_CASE("find inner trial budget tracks log n") {
    CHECK(find_inner_trials(4) == 32);
    CHECK(find_inner_trials(12) >= 32);
    CHECK(find_inner_trials(1 << 10) == 80);
}
