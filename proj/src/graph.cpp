#include "kempe/graph.hpp"

#include "kempe/error.hpp"

#include <algorithm>
#include <string>

namespace kempe {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Loop: return "loop";
    case ErrorKind::UnknownVertex: return "unknown vertex";
    case ErrorKind::UnknownEdge: return "unknown edge";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::PartialColoring: return "partial coloring";
    case ErrorKind::ColorOutOfRange: return "color out of range";
    case ErrorKind::IllegalColoring: return "illegal coloring";
    case ErrorKind::NotRegular: return "not regular";
    case ErrorKind::DegreeMismatch: return "degree mismatch";
    case ErrorKind::StaleSwitch: return "stale switch";
    case ErrorKind::NotCovering: return "not a covering";
    case ErrorKind::NonConstantFiber: return "non-constant fiber";
    case ErrorKind::GraphMismatch: return "graph mismatch";
    case ErrorKind::TooLarge: return "too large";
    }
    return "unknown";
}

Multigraph::Multigraph(std::size_t vertex_count) : incidence_(vertex_count) {}

VertexId Multigraph::add_vertex() {
    incidence_.emplace_back();
    return incidence_.size() - 1;
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
    if (u >= vertex_count() || v >= vertex_count())
        throw Error(ErrorKind::UnknownVertex,
                    "add_edge: unknown vertex " + std::to_string(u >= vertex_count() ? u : v));
    if (u == v)
        throw Error(ErrorKind::Loop, "add_edge: loop at vertex " + std::to_string(u));
    EdgeId e = ends_.size();
    ends_.push_back({u, v});
    incidence_[u].push_back({e, 0});
    incidence_[v].push_back({e, 1});
    return e;
}

std::uint8_t Multigraph::end_at(EdgeId e, VertexId v) const {
    const auto& ends = ends_.at(e);
    if (ends[0] == v) return 0;
    if (ends[1] == v) return 1;
    throw Error(ErrorKind::InvalidArgument,
                "vertex " + std::to_string(v) + " is not an endpoint of edge " + std::to_string(e));
}

std::optional<std::size_t> is_regular(const Multigraph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    std::size_t d = g.degree(0);
    for (VertexId v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
    std::vector<std::vector<VertexId>> components;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> stack;
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (seen[root]) continue;
        auto& component = components.emplace_back();
        seen[root] = true;
        stack.push_back(root);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (const Dart& d : g.darts(v)) {
                VertexId w = g.tail(d);
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(component.begin(), component.end());
    }
    return components;
}

Subgraph spanning_subgraph(const Multigraph& g, std::span<const EdgeId> edges) {
    std::vector<bool> keep(g.edge_count(), false);
    for (EdgeId e : edges) {
        if (e >= g.edge_count())
            throw Error(ErrorKind::UnknownEdge, "spanning_subgraph: unknown edge " + std::to_string(e));
        keep[e] = true;
    }
    Subgraph sub{Multigraph(g.vertex_count()), {}};
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!keep[e]) continue;
        sub.graph.add_edge(g.endpoint(e, 0), g.endpoint(e, 1));
        sub.parent_edge.push_back(e);
    }
    return sub;
}

Copies disjoint_copies(const Multigraph& g, std::size_t m) {
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "disjoint_copies: m must be positive");
    Copies out{Multigraph(m * g.vertex_count()), m, g.vertex_count(), g.edge_count()};
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t offset = k * g.vertex_count();
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            out.graph.add_edge(offset + g.endpoint(e, 0), offset + g.endpoint(e, 1));
    }
    return out;
}

} // namespace kempe
