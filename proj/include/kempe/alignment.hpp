#pragma once

#include "kempe/coloring.hpp"
#include "kempe/covering.hpp"

#include <cstdint>
#include <vector>

namespace kempe {

enum class VertexTag : std::uint8_t {
    Shared,   // meets one edge colored d by both colorings
    Rotating, // meets two edges whose color-d status differs between the colorings
};

/// Split of the two color-d matchings into their common edges and the rest.
struct ColorDSplit {
    std::vector<EdgeId> shared;   // colored d by both colorings
    std::vector<EdgeId> rotating; // colored d by exactly one; a disjoint union of cycles
    std::vector<VertexTag> tag;
};

ColorDSplit split_color_d(const Multigraph& g, const EdgeColoring& c1, const EdgeColoring& c2);

/// Per-edge choice of origin: `origin_end[e]` is the end of e the edge leaves from.
struct Orientation {
    std::vector<std::uint8_t> origin_end;

    /// Every edge leaves its smaller endpoint.
    static Orientation by_vertex_id(const Multigraph& g);
};

/// Residues live in 0..modulus-1. Color k < d maps to k mod (d-1), so color
/// d-1 is residue 0, and residue 0 maps back to color d-1.
struct AlignmentData {
    int modulus = 0;             // d - 1
    std::vector<EdgeId> rho;     // the c2 color-d edge at each vertex
    std::vector<int> kappa;      // per vertex
    std::vector<int> delta;      // per edge, with respect to `orientation`
    Orientation orientation;

    int to_residue(Color k) const { return k % modulus; }
    Color to_color(int r) const { return r == 0 ? modulus : r; }
    int add(int a, int b) const { return ((a + b) % modulus + modulus) % modulus; }
};

/// The (d-1)-fold cover V x C, E x C with shifted coloring.
///
/// Cover vertex (v, i) has id v*(d-1)+i and projects to v. Cover edge
/// (e, k) has id e*(d-1)+k, where k is the fiber label at end 0 of e; its
/// ends are stored in the same order as the ends of e. Ids and colors do not
/// depend on the orientation used to build them.
struct AlignmentCover {
    CoveringMap cover;
    EdgeColoring shifted;
    ColorDSplit split;
    AlignmentData data;
};

AlignmentCover build_alignment_cover(const GraphPtr& g, const EdgeColoring& c1, const EdgeColoring& c2);
AlignmentCover build_alignment_cover(const GraphPtr& g, const EdgeColoring& c1, const EdgeColoring& c2,
                                     const Orientation& orientation);

/// Alignment cover plus the switches along the preimage of the rotating cycles.
/// Afterwards `aligned` has the same color-d class as c2 pulled back.
struct Alignment {
    CoveringMap cover;
    EdgeColoring shifted;
    EdgeColoring aligned;
    SwitchSequence switches;
};

Alignment align_color(const GraphPtr& g, const EdgeColoring& c1, const EdgeColoring& c2);

} // namespace kempe
