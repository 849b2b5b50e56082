#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace kempe {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Half-edge: the occurrence of `edge` at its endpoint number `end` (0 or 1).
struct Dart {
    EdgeId edge = 0;
    std::uint8_t end = 0;

    friend bool operator==(const Dart&, const Dart&) = default;
    friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Undirected loop-free multigraph with dense ids assigned in creation order.
///
/// Each edge keeps its endpoints in insertion order, so `endpoint(e, 0)` is
/// the first argument given to `add_edge`. Every vertex holds the darts
/// incident to it, in edge-id order.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(std::size_t vertex_count);

    VertexId add_vertex();
    EdgeId add_edge(VertexId u, VertexId v);

    std::size_t vertex_count() const noexcept { return incidence_.size(); }
    std::size_t edge_count() const noexcept { return ends_.size(); }

    VertexId endpoint(EdgeId e, std::uint8_t end) const { return ends_.at(e)[end]; }
    const std::array<VertexId, 2>& endpoints(EdgeId e) const { return ends_.at(e); }
    VertexId head(const Dart& d) const { return ends_.at(d.edge)[d.end]; }
    /// The vertex reached by leaving through dart `d`.
    VertexId tail(const Dart& d) const { return ends_.at(d.edge)[1 - d.end]; }
    /// Which end of `e` sits at `v`; `v` must be an endpoint of `e`.
    std::uint8_t end_at(EdgeId e, VertexId v) const;

    std::span<const Dart> darts(VertexId v) const { return incidence_.at(v); }
    std::size_t degree(VertexId v) const { return incidence_.at(v).size(); }

    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.ends_ == b.ends_ && a.incidence_.size() == b.incidence_.size();
    }

private:
    std::vector<std::array<VertexId, 2>> ends_;
    std::vector<std::vector<Dart>> incidence_;
};

using GraphPtr = std::shared_ptr<const Multigraph>;

inline GraphPtr share(Multigraph g) {
    return std::make_shared<const Multigraph>(std::move(g));
}

/// Returns d when every vertex has degree d. The empty graph has no degree.
std::optional<std::size_t> is_regular(const Multigraph& g);

/// Vertex sets of the connected components, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);

/// Spanning subgraph on an edge subset. Edge k of `graph` is `parent_edge[k]`
/// of the parent; parent edges keep their relative order.
struct Subgraph {
    Multigraph graph;
    std::vector<EdgeId> parent_edge;
};

Subgraph spanning_subgraph(const Multigraph& g, std::span<const EdgeId> edges);

/// m disjoint copies. Copy k holds vertex v as k*|V|+v and edge e as k*|E|+e.
struct Copies {
    Multigraph graph;
    std::size_t copies = 0;
    std::size_t base_vertices = 0;
    std::size_t base_edges = 0;

    VertexId original_vertex(VertexId v) const { return v % base_vertices; }
    EdgeId original_edge(EdgeId e) const { return e % base_edges; }
    std::size_t vertex_copy(VertexId v) const { return v / base_vertices; }
    std::size_t edge_copy(EdgeId e) const { return e / base_edges; }
};

Copies disjoint_copies(const Multigraph& g, std::size_t m);

} // namespace kempe
