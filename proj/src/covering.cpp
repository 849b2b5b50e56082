#include "kempe/covering.hpp"

#include "kempe/error.hpp"

#include <algorithm>
#include <numeric>

namespace kempe {

CoveringMap::CoveringMap(GraphPtr source, GraphPtr target, std::vector<VertexId> vertex_map,
                         std::vector<EdgeId> edge_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
    if (!source_ || !target_) throw Error(ErrorKind::InvalidArgument, "covering map needs both graphs");
    if (vertex_map_.size() != source_->vertex_count() || edge_map_.size() != source_->edge_count())
        throw Error(ErrorKind::InvalidArgument, "covering map is not total on the source graph");
}

CoveringMap CoveringMap::identity(GraphPtr g) {
    std::vector<VertexId> vmap(g->vertex_count());
    std::vector<EdgeId> emap(g->edge_count());
    std::iota(vmap.begin(), vmap.end(), VertexId{0});
    std::iota(emap.begin(), emap.end(), EdgeId{0});
    return CoveringMap(g, g, std::move(vmap), std::move(emap));
}

std::vector<std::vector<VertexId>> CoveringMap::fibers() const {
    std::vector<std::vector<VertexId>> out(target_->vertex_count());
    for (VertexId v = 0; v < vertex_map_.size(); ++v) out.at(vertex_map_[v]).push_back(v);
    return out;
}

CoverCheck verify_covering(const CoveringMap& p) {
    const Multigraph& src = p.source();
    const Multigraph& dst = p.target();
    auto fail = [](std::string msg) { return CoverCheck{false, std::move(msg)}; };

    for (VertexId v = 0; v < src.vertex_count(); ++v)
        if (p.vertex(v) >= dst.vertex_count())
            return fail("vertex " + std::to_string(v) + " maps outside the target");
    for (EdgeId e = 0; e < src.edge_count(); ++e)
        if (p.edge(e) >= dst.edge_count()) return fail("edge " + std::to_string(e) + " maps outside the target");

    for (EdgeId e = 0; e < src.edge_count(); ++e) {
        auto [a, b] = src.endpoints(e);
        auto [x, y] = dst.endpoints(p.edge(e));
        VertexId pa = p.vertex(a), pb = p.vertex(b);
        if (!((pa == x && pb == y) || (pa == y && pb == x)))
            return fail("edge " + std::to_string(e) + " does not map onto the edge between its endpoint images");
    }

    std::vector<std::size_t> vertex_hits(dst.vertex_count(), 0);
    std::vector<bool> edge_hit(dst.edge_count(), false);
    for (VertexId v = 0; v < src.vertex_count(); ++v) ++vertex_hits[p.vertex(v)];
    for (EdgeId e = 0; e < src.edge_count(); ++e) edge_hit[p.edge(e)] = true;
    for (VertexId v = 0; v < dst.vertex_count(); ++v)
        if (vertex_hits[v] == 0) return fail("target vertex " + std::to_string(v) + " is not covered");
    for (EdgeId e = 0; e < dst.edge_count(); ++e)
        if (!edge_hit[e]) return fail("target edge " + std::to_string(e) + " is not covered");

    std::vector<Dart> image;
    for (VertexId v = 0; v < src.vertex_count(); ++v) {
        VertexId pv = p.vertex(v);
        if (src.degree(v) != dst.degree(pv))
            return fail("vertex " + std::to_string(v) + " has degree " + std::to_string(src.degree(v)) +
                        " but its image has degree " + std::to_string(dst.degree(pv)));
        image.clear();
        for (const Dart& d : src.darts(v)) image.push_back({p.edge(d.edge), dst.end_at(p.edge(d.edge), pv)});
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end())
            return fail("edges at vertex " + std::to_string(v) + " are not mapped bijectively");
    }

    for (VertexId v = 1; v < dst.vertex_count(); ++v)
        if (vertex_hits[v] != vertex_hits[0])
            return fail("fiber over vertex " + std::to_string(v) + " has size " + std::to_string(vertex_hits[v]) +
                        ", fiber over vertex 0 has size " + std::to_string(vertex_hits[0]));
    return {};
}

std::size_t covering_degree(const CoveringMap& p) {
    if (p.target().vertex_count() == 0) return 0;
    auto fibers = p.fibers();
    for (const auto& f : fibers)
        if (f.size() != fibers.front().size())
            throw Error(ErrorKind::NonConstantFiber, "covering has fibers of different sizes");
    return fibers.front().size();
}

EdgeColoring pullback_coloring(const CoveringMap& p, const EdgeColoring& c) {
    check_total(p.target(), c);
    EdgeColoring out{c.degree, std::vector<Color>(p.source().edge_count())};
    for (EdgeId e = 0; e < out.size(); ++e) out[e] = c[p.edge(e)];
    return out;
}

std::vector<BichromaticCycle> lift_switch(const CoveringMap& p, const EdgeColoring& c,
                                          const BichromaticCycle& gamma) {
    if (!is_bichromatic(p.target(), c, gamma))
        throw Error(ErrorKind::StaleSwitch, "lift_switch: cycle is not bi-chromatic for the base coloring");
    std::vector<bool> in_gamma(p.target().edge_count(), false);
    for (const Dart& d : gamma.walk) in_gamma[d.edge] = true;

    const Multigraph& src = p.source();
    const EdgeColoring pulled = pullback_coloring(p, c);
    std::vector<bool> seen(src.edge_count(), false);
    std::vector<BichromaticCycle> out;
    std::vector<EdgeId> component;
    std::vector<VertexId> stack;
    for (EdgeId e = 0; e < src.edge_count(); ++e) {
        if (seen[e] || !in_gamma[p.edge(e)]) continue;
        component.clear();
        seen[e] = true;
        component.push_back(e);
        stack.assign({src.endpoint(e, 0), src.endpoint(e, 1)});
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (const Dart& d : src.darts(v)) {
                if (seen[d.edge] || !in_gamma[p.edge(d.edge)]) continue;
                seen[d.edge] = true;
                component.push_back(d.edge);
                stack.push_back(src.tail(d));
            }
        }
        out.push_back(make_cycle(src, pulled, component));
    }
    return out;
}

SwitchSequence lift_sequence(const CoveringMap& p, const EdgeColoring& c, const SwitchSequence& seq) {
    SwitchSequence out;
    EdgeColoring base = c;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (!is_bichromatic(p.target(), base, seq[k]))
            throw StaleSwitchError(k, "lift_sequence: switch " + std::to_string(k) + " is stale");
        for (auto& lifted : lift_switch(p, base, seq[k])) out.push_back(std::move(lifted));
        base = kempe_switch(p.target(), base, seq[k]);
    }
    return out;
}

CoveringMap compose(const CoveringMap& outer, const CoveringMap& inner) {
    if (inner.target_ptr() != outer.source_ptr() && !(inner.target() == outer.source()))
        throw Error(ErrorKind::GraphMismatch, "compose: inner target is not the outer source");
    std::vector<VertexId> vmap(inner.source().vertex_count());
    std::vector<EdgeId> emap(inner.source().edge_count());
    for (VertexId v = 0; v < vmap.size(); ++v) vmap[v] = outer.vertex(inner.vertex(v));
    for (EdgeId e = 0; e < emap.size(); ++e) emap[e] = outer.edge(inner.edge(e));
    return CoveringMap(inner.source_ptr(), outer.target_ptr(), std::move(vmap), std::move(emap));
}

CoveringMap extend_subgraph_cover(const GraphPtr& g, const Subgraph& h, const CoveringMap& p) {
    if (h.graph.vertex_count() != g->vertex_count())
        throw Error(ErrorKind::InvalidArgument, "extend_subgraph_cover: subgraph is not spanning");
    if (!(p.target() == h.graph))
        throw Error(ErrorKind::GraphMismatch, "extend_subgraph_cover: cover does not target the subgraph");
    for (EdgeId e = 0; e < h.parent_edge.size(); ++e) {
        EdgeId parent = h.parent_edge[e];
        if (parent >= g->edge_count() || g->endpoints(parent) != h.graph.endpoints(e))
            throw Error(ErrorKind::GraphMismatch, "extend_subgraph_cover: subgraph edge " + std::to_string(e) +
                                                      " does not match its parent edge");
    }
    auto fibers = p.fibers();
    const std::size_t m = fibers.empty() ? 0 : fibers.front().size();
    for (const auto& f : fibers)
        if (f.size() != m)
            throw Error(ErrorKind::NonConstantFiber, "extend_subgraph_cover: fibers of the subgraph cover differ");

    Multigraph ext = p.source();
    std::vector<VertexId> vmap = p.vertex_map();
    std::vector<EdgeId> emap;
    emap.reserve(ext.edge_count());
    for (EdgeId e = 0; e < ext.edge_count(); ++e) emap.push_back(h.parent_edge[p.edge(e)]);

    std::vector<bool> in_h(g->edge_count(), false);
    for (EdgeId e : h.parent_edge) in_h[e] = true;
    for (EdgeId e = 0; e < g->edge_count(); ++e) {
        if (in_h[e]) continue;
        auto [u, v] = g->endpoints(e);
        for (std::size_t k = 0; k < m; ++k) {
            ext.add_edge(fibers[u][k], fibers[v][k]);
            emap.push_back(e);
        }
    }
    return CoveringMap(share(std::move(ext)), g, std::move(vmap), std::move(emap));
}

CoveringMap pad_with_copies(const CoveringMap& p, std::size_t m) {
    if (m == 1) return p;
    Copies copies = disjoint_copies(p.source(), m);
    std::vector<VertexId> vmap(copies.graph.vertex_count());
    std::vector<EdgeId> emap(copies.graph.edge_count());
    for (VertexId v = 0; v < vmap.size(); ++v) vmap[v] = p.vertex(copies.original_vertex(v));
    for (EdgeId e = 0; e < emap.size(); ++e) emap[e] = p.edge(copies.original_edge(e));
    return CoveringMap(share(std::move(copies.graph)), p.target_ptr(), std::move(vmap), std::move(emap));
}

} // namespace kempe
