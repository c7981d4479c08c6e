#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "factorcrit/graph.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace factorcrit;

TEST_CASE("construction primitives") {
    CHECK(complete(5).edge_count() == 10);
    CHECK(complete(1).edge_count() == 0);
    CHECK(cycle(5).edge_count() == 5);
    CHECK(path(5).edge_count() == 4);
    CHECK(path(1).edge_count() == 0);
    for (int v = 0; v < 5; ++v) CHECK(cycle(5).degree(v) == 2);

    const Graph du = disjoint_union(complete(3), cycle(4));
    CHECK(du.order() == 7);
    CHECK(du.edge_count() == 7);
    CHECK_FALSE(du.has_edge(0, 3));

    const Graph j = join(complete(2), disjoint_union(complete(3), complete(1)));
    CHECK(j.order() == 6);
    CHECK(j.edge_count() == 1 + 3 + 2 * 4);
    CHECK(j.has_edge(0, 5));
    CHECK_FALSE(j.has_edge(2, 5));

    Graph w = with_edge(path(3), 0, 2);
    CHECK(w == cycle(3));
    w.remove_edge(0, 2);
    CHECK(w == path(3));
    w.check_invariants();
}

TEST_CASE("vertex sets format ascending") {
    CHECK(format_vertex_set(make_vertex_set(6, {4, 0, 2})) == "{0,2,4}");
    CHECK(format_vertex_set(make_vertex_set(3, {})) == "{}");
}

TEST_CASE("components sort by least vertex and report parity") {
    Graph g(7);  // {0,3}, {1}, {2,4,5}, {6}
    g.add_edge(0, 3);
    g.add_edge(2, 4);
    g.add_edge(4, 5);
    const auto comps = components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0].find_first() == 0);
    CHECK(comps[1].find_first() == 1);
    CHECK(comps[2].find_first() == 2);
    CHECK(comps[3].find_first() == 6);
    CHECK(comps[2].count() == 3);
    CHECK(component_count(g) == 4);
    CHECK(odd_component_count(g) == 3);
    CHECK(isolated_count(g) == 2);
}

TEST_CASE("vertex deletion keeps adjacency through the relabeling") {
    const Graph g = cycle(6);
    const VertexSet s = make_vertex_set(6, {0, 3});
    const InducedSubgraph ind = delete_vertices_mapped(g, s);
    CHECK(ind.graph.order() == 4);
    CHECK(ind.graph.edge_count() == 2);  // 1-2 and 4-5 survive
    for (int nv = 0; nv < 4; ++nv) CHECK(ind.new_of_old[ind.old_of_new[nv]] == nv);
    CHECK(ind.new_of_old[0] == -1);
    CHECK(ind.new_of_old[3] == -1);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            if (u != v)
                CHECK(ind.graph.has_edge(u, v) ==
                      g.has_edge(ind.old_of_new[u], ind.old_of_new[v]));
    CHECK(delete_vertices(g, s) == ind.graph);
}

TEST_CASE("deleting in two steps equals deleting at once") {
    std::mt19937 rng(11);
    for (int round = 0; round < 50; ++round) {
        const int n = 5 + static_cast<int>(rng() % 6);
        const Graph g = testoracle::random_graph(rng, n, 0.5);
        VertexSet a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            const unsigned pick = rng() % 4;
            if (pick == 0) a.set(static_cast<std::size_t>(v));
            if (pick == 1) b.set(static_cast<std::size_t>(v));
        }
        const InducedSubgraph first = delete_vertices_mapped(g, a);
        VertexSet b_new(first.graph.order());
        for (auto v = b.find_first(); v != VertexSet::npos; v = b.find_next(v))
            b_new.set(static_cast<std::size_t>(first.new_of_old[v]));
        CHECK(delete_vertices(first.graph, b_new) == delete_vertices(g, a | b));
    }
}

TEST_CASE("connectivity matches the exhaustive cut scan") {
    CHECK(vertex_connectivity(complete(6)) == 5);
    CHECK(vertex_connectivity(complete(1)) == 0);
    CHECK(vertex_connectivity(cycle(8)) == 2);
    CHECK(vertex_connectivity(path(5)) == 1);
    CHECK(vertex_connectivity(disjoint_union(complete(3), complete(2))) == 0);

    std::mt19937 rng(23);
    for (int round = 0; round < 120; ++round) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const double p = 0.25 + 0.15 * static_cast<double>(rng() % 5);
        const Graph g = testoracle::random_graph(rng, n, p);
        const int kappa = testoracle::connectivity(g);
        CAPTURE(graph6_encode(g));
        CHECK(vertex_connectivity(g) == kappa);
        CHECK(is_k_connected(g, kappa));
        if (kappa < n - 1) CHECK_FALSE(is_k_connected(g, kappa + 1));
    }
}

TEST_CASE("connectivity never exceeds minimum degree") {
    std::mt19937 rng(31);
    for (int round = 0; round < 60; ++round) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = testoracle::random_graph(rng, n, 0.4);
        if (!is_connected(g)) continue;
        CHECK(vertex_connectivity(g) <= min_degree(g));
    }
}

TEST_CASE("graph6 fixed codes") {
    CHECK(graph6_encode(complete(1)) == "@");
    CHECK(graph6_encode(complete(3)) == "Bw");
    CHECK(graph6_encode(complete(4)) == "C~");
    CHECK(graph6_decode("@") == complete(1));
    CHECK(graph6_decode("Bw") == complete(3));
    CHECK(graph6_decode("C~") == complete(4));
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(47);
    for (int round = 0; round < 1000; ++round) {
        const int n = 1 + static_cast<int>(rng() % 32);
        const double p = 0.1 + 0.2 * static_cast<double>(rng() % 5);
        const Graph g = testoracle::random_graph(rng, n, p);
        const std::string code = graph6_encode(g);
        const Graph back = graph6_decode(code);
        CAPTURE(code);
        CHECK(back == g);
        CHECK(graph6_encode(back) == code);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS(graph6_decode(""));
    CHECK_THROWS(graph6_decode("B"));       // truncated edge bits
    CHECK_THROWS(graph6_decode("Bw "));     // trailing garbage
    CHECK_THROWS(graph6_decode("\x01yz"));  // bytes outside the printable range
}

TEST_CASE("edge lists parse with comments and n hints") {
    const Graph g = parse_edge_list("# triangle plus isolated vertex\n0 1\n1 2\n\n2 0\n", 4);
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(isolated_count(g) == 1);
    CHECK(parse_edge_list("0 1\n1 2\n").order() == 3);
    CHECK_THROWS(parse_edge_list("0 0\n"));
    CHECK_THROWS(parse_edge_list("0\n"));
}

TEST_CASE("isomorphism testing") {
    CHECK(is_isomorphic(cycle(5), cycle(5)));
    CHECK_FALSE(is_isomorphic(cycle(5), path(5)));
    CHECK_FALSE(is_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));

    // random graph against a random relabeling of itself
    std::mt19937 rng(59);
    for (int round = 0; round < 40; ++round) {
        const int n = 4 + static_cast<int>(rng() % 7);
        const Graph g = testoracle::random_graph(rng, n, 0.5);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
        CHECK(is_isomorphic(g, h));
        // flipping one edge changes the size, which is enough to break it
        Graph damaged = h;
        if (damaged.has_edge(0, 1))
            damaged.remove_edge(0, 1);
        else
            damaged.add_edge(0, 1);
        CHECK_FALSE(is_isomorphic(g, damaged));
    }
}

TEST_CASE("invariant checks catch asymmetric rows") {
    Graph g = path(3);
    g.check_invariants();
    CHECK_THROWS(g.add_edge(1, 1));
}
