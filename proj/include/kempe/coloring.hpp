#pragma once

#include "kempe/graph.hpp"

#include <functional>
#include <set>
#include <vector>

namespace kempe {

/// Colors are 1-based: a coloring of degree d uses {1, ..., d}.
using Color = int;

/// Total map from edge ids to colors, tagged with the ambient degree.
struct EdgeColoring {
    int degree = 0;
    std::vector<Color> colors;

    Color operator[](EdgeId e) const { return colors[e]; }
    Color& operator[](EdgeId e) { return colors[e]; }
    std::size_t size() const noexcept { return colors.size(); }

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// One connected component of the two-color subgraph, stored as a closed walk.
///
/// `walk[k]` is the dart the walk leaves through at step k; the walk enters
/// the tail vertex of `walk[k]` and continues through `walk[k+1]`. Colors
/// along the walk alternate between `first` and `second`; first < second.
struct BichromaticCycle {
    Color first = 0;
    Color second = 0;
    std::vector<Dart> walk;

    std::size_t length() const noexcept { return walk.size(); }
    std::vector<EdgeId> edges() const;
    EdgeId min_edge() const;

    friend bool operator==(const BichromaticCycle&, const BichromaticCycle&) = default;
};

using KempeSwitch = BichromaticCycle;
using SwitchSequence = std::vector<KempeSwitch>;

/// Throws PartialColoring when `c` does not cover every edge of `g` and
/// ColorOutOfRange when a color is outside {1..degree}.
void check_total(const Multigraph& g, const EdgeColoring& c);

bool is_legal(const Multigraph& g, const EdgeColoring& c);

/// Throws IllegalColoring unless `c` is total and legal on `g`.
void require_legal(const Multigraph& g, const EdgeColoring& c, const char* what = "coloring");

std::vector<EdgeId> color_class_edges(const Multigraph& g, const EdgeColoring& c,
                                      const std::set<Color>& chi);

Subgraph color_class_subgraph(const Multigraph& g, const EdgeColoring& c, const std::set<Color>& chi);

/// Restriction of `c` to a spanning subgraph, as a coloring of `sub.graph`.
EdgeColoring restrict_coloring(const EdgeColoring& c, const Subgraph& sub, int degree);

/// Canonical bi-chromatic cycles of type {i, j}, ordered by their smallest edge.
///
/// Each walk starts with its smallest edge, leaving through end 0 of that edge.
std::vector<BichromaticCycle> bichromatic_cycles(const Multigraph& g, const EdgeColoring& c,
                                                 Color i, Color j);

/// Canonical walk through a set of edges that forms one cycle of the
/// two-color subgraph. Throws InvalidArgument if it does not.
BichromaticCycle make_cycle(const Multigraph& g, const EdgeColoring& c, std::span<const EdgeId> edges);

/// True when `gamma` is a closed alternating walk over distinct edges colored
/// by its pair under `c`.
bool is_bichromatic(const Multigraph& g, const EdgeColoring& c, const BichromaticCycle& gamma);

EdgeColoring kempe_switch(const Multigraph& g, const EdgeColoring& c, const BichromaticCycle& gamma);

/// Called after each switch with its index and the coloring it produced.
using ReplayObserver = std::function<void(std::size_t, const EdgeColoring&)>;

/// Left fold of kempe_switch. Throws StaleSwitchError naming the first bad index.
EdgeColoring apply_sequence(const Multigraph& g, EdgeColoring c, const SwitchSequence& seq,
                            const ReplayObserver& observer = {});

} // namespace kempe
