#include "kempe/alignment.hpp"

#include "kempe/error.hpp"

#include <algorithm>
#include <string>

namespace kempe {

namespace {

void require_same_degree(const Multigraph& g, const EdgeColoring& c1, const EdgeColoring& c2) {
    require_legal(g, c1, "first coloring");
    require_legal(g, c2, "second coloring");
    if (c1.degree != c2.degree)
        throw Error(ErrorKind::DegreeMismatch, "colorings have degrees " + std::to_string(c1.degree) + " and " +
                                                   std::to_string(c2.degree));
    auto d = is_regular(g);
    if (!d || *d != static_cast<std::size_t>(c1.degree))
        throw Error(ErrorKind::NotRegular, "graph is not " + std::to_string(c1.degree) + "-regular");
}

} // namespace

Orientation Orientation::by_vertex_id(const Multigraph& g) {
    Orientation o;
    o.origin_end.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) o.origin_end[e] = g.endpoint(e, 0) < g.endpoint(e, 1) ? 0 : 1;
    return o;
}

ColorDSplit split_color_d(const Multigraph& g, const EdgeColoring& c1, const EdgeColoring& c2) {
    require_same_degree(g, c1, c2);
    const Color d = c1.degree;
    ColorDSplit split;
    std::vector<int> shared_at(g.vertex_count(), 0), rotating_at(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        bool in1 = c1[e] == d, in2 = c2[e] == d;
        if (!in1 && !in2) continue;
        auto& bucket = in1 && in2 ? split.shared : split.rotating;
        auto& count = in1 && in2 ? shared_at : rotating_at;
        bucket.push_back(e);
        ++count[g.endpoint(e, 0)];
        ++count[g.endpoint(e, 1)];
    }
    split.tag.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (shared_at[v] == 1 && rotating_at[v] == 0)
            split.tag[v] = VertexTag::Shared;
        else if (shared_at[v] == 0 && rotating_at[v] == 2)
            split.tag[v] = VertexTag::Rotating;
        else
            throw Error(ErrorKind::IllegalColoring,
                        "vertex " + std::to_string(v) + " meets the color-d classes inconsistently");
    }
    return split;
}

AlignmentCover build_alignment_cover(const GraphPtr& g, const EdgeColoring& c1, const EdgeColoring& c2) {
    return build_alignment_cover(g, c1, c2, Orientation::by_vertex_id(*g));
}

AlignmentCover build_alignment_cover(const GraphPtr& g, const EdgeColoring& c1, const EdgeColoring& c2,
                                     const Orientation& orientation) {
    if (c1.degree < 2 || c2.degree < 2)
        throw Error(ErrorKind::InvalidArgument, "alignment cover needs degree at least 2");
    ColorDSplit split = split_color_d(*g, c1, c2);
    if (orientation.origin_end.size() != g->edge_count())
        throw Error(ErrorKind::InvalidArgument, "orientation does not cover every edge");

    const Color d = c1.degree;
    AlignmentData data;
    data.modulus = d - 1;
    data.orientation = orientation;
    const int m = data.modulus;

    data.rho.assign(g->vertex_count(), 0);
    for (VertexId v = 0; v < g->vertex_count(); ++v)
        for (const Dart& dart : g->darts(v))
            if (c2[dart.edge] == d) data.rho[v] = dart.edge;

    data.kappa.assign(g->vertex_count(), 0);
    for (VertexId v = 0; v < g->vertex_count(); ++v)
        if (split.tag[v] == VertexTag::Rotating) data.kappa[v] = data.to_residue(c1[data.rho[v]]);

    data.delta.assign(g->edge_count(), 0);
    for (EdgeId e = 0; e < g->edge_count(); ++e) {
        if (c1[e] == d) continue;
        VertexId origin = g->endpoint(e, orientation.origin_end[e]);
        VertexId terminus = g->endpoint(e, 1 - orientation.origin_end[e]);
        data.delta[e] = data.add(data.kappa[origin], -data.kappa[terminus]);
    }

    const std::size_t n = g->vertex_count();
    Multigraph cover(n * m);
    std::vector<VertexId> vmap(n * m);
    for (VertexId v = 0; v < n * m; ++v) vmap[v] = v / m;
    std::vector<EdgeId> emap;
    emap.reserve(g->edge_count() * m);
    EdgeColoring shifted{d, {}};
    shifted.colors.reserve(g->edge_count() * m);

    for (EdgeId e = 0; e < g->edge_count(); ++e) {
        const std::uint8_t origin_end = orientation.origin_end[e];
        const VertexId origin = g->endpoint(e, origin_end);
        const VertexId terminus = g->endpoint(e, 1 - origin_end);
        for (int k = 0; k < m; ++k) {
            // k labels the fiber at end 0; i labels the fiber at the terminus.
            const int i = origin_end == 1 ? k : data.add(k, -data.delta[e]);
            const int at_origin = data.add(i, data.delta[e]);
            const VertexId lifted_terminus = terminus * m + i;
            const VertexId lifted_origin = origin * m + at_origin;
            if (origin_end == 1)
                cover.add_edge(lifted_terminus, lifted_origin);
            else
                cover.add_edge(lifted_origin, lifted_terminus);
            emap.push_back(e);
            if (c1[e] == d)
                shifted.colors.push_back(d);
            else
                shifted.colors.push_back(data.to_color(data.add(i - data.kappa[terminus], data.to_residue(c1[e]))));
        }
    }

    CoveringMap p(share(std::move(cover)), g, std::move(vmap), std::move(emap));
    require_legal(p.source(), shifted, "shifted coloring");
    return {std::move(p), std::move(shifted), std::move(split), std::move(data)};
}

Alignment align_color(const GraphPtr& g, const EdgeColoring& c1, const EdgeColoring& c2) {
    AlignmentCover built = build_alignment_cover(g, c1, c2);
    const Multigraph& cover = built.cover.source();
    const int m = built.data.modulus;

    std::vector<bool> rotating(g->edge_count(), false);
    for (EdgeId e : built.split.rotating) rotating[e] = true;

    // The preimage of each rotating cycle splits into one (i, d) cycle per label i.
    SwitchSequence switches;
    std::vector<bool> seen(cover.edge_count(), false);
    for (EdgeId e : built.split.rotating) {
        for (int k = 0; k < m; ++k) {
            EdgeId lifted = e * m + k;
            if (seen[lifted]) continue;
            std::vector<EdgeId> component{lifted};
            seen[lifted] = true;
            for (std::size_t at = 0; at < component.size(); ++at) {
                for (std::uint8_t end : {0, 1}) {
                    for (const Dart& dart : cover.darts(cover.endpoint(component[at], end))) {
                        if (seen[dart.edge] || !rotating[built.cover.edge(dart.edge)]) continue;
                        seen[dart.edge] = true;
                        component.push_back(dart.edge);
                    }
                }
            }
            switches.push_back(make_cycle(cover, built.shifted, component));
        }
    }
    std::sort(switches.begin(), switches.end(),
              [](const BichromaticCycle& a, const BichromaticCycle& b) { return a.min_edge() < b.min_edge(); });

    EdgeColoring aligned = apply_sequence(cover, built.shifted, switches);
    return {std::move(built.cover), std::move(built.shifted), std::move(aligned), std::move(switches)};
}

} // namespace kempe
