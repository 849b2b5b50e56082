#include "fixtures.hpp"
#include "kempe/covering.hpp"
#include "kempe/error.hpp"
#include "kempe/graph.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace kempe;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& err) {
        return err.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

std::size_t degree_sum(const Multigraph& g) {
    std::size_t sum = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    return sum;
}

} // namespace

TEST_CASE("add_edge rejects loops and unknown vertices") {
    Multigraph g;
    CHECK(kind_of([&] { g.add_edge(0, 1); }) == ErrorKind::UnknownVertex);
    VertexId a = g.add_vertex();
    VertexId b = g.add_vertex();
    CHECK(kind_of([&] { g.add_edge(a, a); }) == ErrorKind::Loop);
    CHECK(kind_of([&] { g.add_edge(a, 7); }) == ErrorKind::UnknownVertex);
    EdgeId e1 = g.add_edge(a, b);
    EdgeId e2 = g.add_edge(a, b);
    CHECK(e1 != e2);
    CHECK(g.degree(a) == 2);
    CHECK(g.darts(a)[0] == Dart{e1, 0});
    CHECK(g.darts(b)[1] == Dart{e2, 1});
    CHECK(g.tail(Dart{e1, 0}) == b);
}

TEST_CASE("is_regular") {
    CHECK(is_regular(fixtures::k33()) == 3u);
    CHECK(is_regular(fixtures::theta(3)) == 3u);
    CHECK_FALSE(is_regular(fixtures::path(3)).has_value());
    CHECK_FALSE(is_regular(Multigraph{}).has_value());
    CHECK(is_regular(Multigraph(4)) == 0u);
}

TEST_CASE("connected_components") {
    CHECK(connected_components(fixtures::k33()).size() == 1);
    Copies two = disjoint_copies(fixtures::cycle(4), 2);
    auto comps = connected_components(two.graph);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(comps[1] == std::vector<VertexId>{4, 5, 6, 7});
    CHECK(connected_components(Multigraph(5)).size() == 5);
}

TEST_CASE("spanning_subgraph") {
    Multigraph g = fixtures::k33();
    std::vector<EdgeId> all(g.edge_count());
    std::iota(all.begin(), all.end(), EdgeId{0});
    Subgraph full = spanning_subgraph(g, all);
    CHECK(full.graph == g);
    CHECK(full.parent_edge == all);

    Subgraph none = spanning_subgraph(g, {});
    CHECK(none.graph.vertex_count() == 6);
    CHECK(none.graph.edge_count() == 0);

    std::vector<EdgeId> picked{7, 2};
    Subgraph sub = spanning_subgraph(g, picked);
    CHECK(sub.parent_edge == std::vector<EdgeId>{2, 7});
    CHECK(sub.graph.endpoints(1) == g.endpoints(7));
    CHECK(degree_sum(sub.graph) == 4);

    std::vector<EdgeId> bad{9};
    CHECK(kind_of([&] { spanning_subgraph(g, bad); }) == ErrorKind::UnknownEdge);
}

TEST_CASE("disjoint_copies") {
    Multigraph k33 = fixtures::k33();
    Copies one = disjoint_copies(k33, 1);
    CHECK(one.graph == k33);

    Copies two = disjoint_copies(k33, 2);
    CHECK(two.graph.vertex_count() == 12);
    CHECK(two.graph.edge_count() == 18);
    CHECK(connected_components(two.graph).size() == 2);
    CHECK(two.original_vertex(7) == 1);
    CHECK(two.vertex_copy(7) == 1);
    CHECK(two.original_edge(10) == 1);

    Copies three = disjoint_copies(fixtures::cycle(4), 3);
    CHECK(three.graph.vertex_count() == 12);
    CHECK(three.graph.edge_count() == 12);

    CHECK(kind_of([&] { disjoint_copies(k33, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("copy projection is a covering; degree sums match edge counts") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        std::size_t n = 2 + rng() % 6;
        Multigraph g(n);
        std::size_t edges = rng() % 10;
        for (std::size_t k = 0; k < edges; ++k) {
            VertexId u = rng() % n, v = rng() % n;
            if (u != v) g.add_edge(u, v);
        }
        CHECK(degree_sum(g) == 2 * g.edge_count());
        std::size_t m = 1 + rng() % 3;
        Copies copies = disjoint_copies(g, m);
        CHECK(degree_sum(copies.graph) == 2 * copies.graph.edge_count());
        std::vector<VertexId> vmap(copies.graph.vertex_count());
        std::vector<EdgeId> emap(copies.graph.edge_count());
        for (VertexId v = 0; v < vmap.size(); ++v) vmap[v] = copies.original_vertex(v);
        for (EdgeId e = 0; e < emap.size(); ++e) emap[e] = copies.original_edge(e);
        CoveringMap p(share(copies.graph), share(g), vmap, emap);
        CHECK(verify_covering(p).ok);
        CHECK(covering_degree(p) == m);
    }
}
