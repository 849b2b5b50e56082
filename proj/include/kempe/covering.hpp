#pragma once

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

#include <string>
#include <vector>

namespace kempe {

/// Graph map from `source` onto `target` given by explicit vertex and edge maps.
///
/// Construction does not check anything beyond map sizes; use verify_covering.
class CoveringMap {
public:
    CoveringMap(GraphPtr source, GraphPtr target, std::vector<VertexId> vertex_map,
                std::vector<EdgeId> edge_map);

    static CoveringMap identity(GraphPtr g);

    const Multigraph& source() const { return *source_; }
    const Multigraph& target() const { return *target_; }
    const GraphPtr& source_ptr() const { return source_; }
    const GraphPtr& target_ptr() const { return target_; }

    VertexId vertex(VertexId v) const { return vertex_map_[v]; }
    EdgeId edge(EdgeId e) const { return edge_map_[e]; }
    const std::vector<VertexId>& vertex_map() const { return vertex_map_; }
    const std::vector<EdgeId>& edge_map() const { return edge_map_; }

    /// Source vertices over each target vertex, sorted; the position within a
    /// fiber is that vertex's fiber label.
    std::vector<std::vector<VertexId>> fibers() const;

private:
    GraphPtr source_;
    GraphPtr target_;
    std::vector<VertexId> vertex_map_;
    std::vector<EdgeId> edge_map_;
};

struct CoverCheck {
    bool ok = true;
    std::string message;

    explicit operator bool() const { return ok; }
};

/// Incidence, surjectivity, dart-level local bijection and constant fiber size.
CoverCheck verify_covering(const CoveringMap& p);

/// Common fiber size. Throws NonConstantFiber if fibers differ.
std::size_t covering_degree(const CoveringMap& p);

EdgeColoring pullback_coloring(const CoveringMap& p, const EdgeColoring& c);

/// Components of the preimage of `gamma`, canonical and ordered by smallest edge.
std::vector<BichromaticCycle> lift_switch(const CoveringMap& p, const EdgeColoring& c,
                                          const BichromaticCycle& gamma);

/// Lifts every switch against the evolving target coloring and concatenates.
SwitchSequence lift_sequence(const CoveringMap& p, const EdgeColoring& c, const SwitchSequence& seq);

/// outer: B -> A, inner: C -> B; returns C -> A.
CoveringMap compose(const CoveringMap& outer, const CoveringMap& inner);

/// Extends `p` : H' -> H, H a spanning subgraph of `g`, to a covering of `g`.
///
/// H' keeps its vertex and edge ids in the result. Each edge of g outside H is
/// added once per fiber label in edge-id order, joining the label-k vertices
/// over its two endpoints.
CoveringMap extend_subgraph_cover(const GraphPtr& g, const Subgraph& h, const CoveringMap& p);

/// `p` composed with the projection from m disjoint copies of its source.
CoveringMap pad_with_copies(const CoveringMap& p, std::size_t m);

} // namespace kempe
