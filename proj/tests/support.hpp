#pragma once

// Test-only helpers: independent brute-force routes and random generators.

#include "kempe/coloring.hpp"
#include "kempe/covering.hpp"
#include "kempe/graph.hpp"

#include <random>
#include <vector>

namespace kempe::support {

/// All d^|E| assignments filtered by a direct adjacency check.
std::vector<std::vector<Color>> brute_force_colorings(const Multigraph& g, int d);

/// Number of Kempe classes via union-find, with two-color components found by
/// edge-set flooding rather than walk tracing.
std::size_t brute_force_class_count(const Multigraph& g, int d);

/// Random m-fold cover: edge (e, k) joins (u, k) to (v, sigma_e(k)) for a random permutation sigma_e.
CoveringMap random_cover(const GraphPtr& g, std::size_t m, std::mt19937_64& rng);

/// Color-for-color equality of the color-k classes.
std::vector<EdgeId> color_class(const EdgeColoring& c, Color k);

} // namespace kempe::support
