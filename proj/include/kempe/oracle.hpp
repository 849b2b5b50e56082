#pragma once

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kempe {

struct OracleLimits {
    std::size_t max_edges = 30;
};

/// All legal colorings with `degree` colors (default: the maximum vertex
/// degree), in lexicographic order of their color vectors. Refuses with
/// TooLarge above the edge limit.
std::vector<EdgeColoring> enumerate_legal_colorings(const Multigraph& g, std::optional<int> degree = {},
                                                    const OracleLimits& limits = {});

/// Every coloring reachable from `c` by one switch, one per bi-chromatic cycle.
std::vector<std::pair<KempeSwitch, EdgeColoring>> single_switch_neighbours(const Multigraph& g,
                                                                           const EdgeColoring& c);

struct ColoringCensus {
    std::vector<EdgeColoring> colorings;
    std::vector<std::size_t> class_of;              // per coloring
    std::vector<std::vector<std::size_t>> classes;  // sorted indices, ordered by smallest member
};

ColoringCensus kempe_class_partition(const Multigraph& g, std::optional<int> degree = {},
                                     const OracleLimits& limits = {});

/// Shortest switch path from c1 to c2 on g itself, if one exists.
std::optional<SwitchSequence> equivalent_without_cover(const Multigraph& g, const EdgeColoring& c1,
                                                       const EdgeColoring& c2, const OracleLimits& limits = {});

struct ColoredInstance {
    GraphPtr graph;
    EdgeColoring first;
    EdgeColoring second;
};

/// Union of d random perfect matchings on n vertices, colored by matching
/// index, plus a second coloring drawn uniformly from all legal colorings
/// when the graph is small enough and from a random recoloring walk
/// otherwise. Deterministic in the seed.
ColoredInstance random_colored_instance(std::uint64_t seed, int d, std::size_t n, const OracleLimits& limits = {});

} // namespace kempe
