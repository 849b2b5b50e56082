#pragma once

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe::fixtures {

// K3,3 with parts {0,1,2} and {3,4,5}; edge 3i+j joins i and 3+j.
Multigraph k33();
// Color (i+j mod 3)+1 and (i-j mod 3)+1 on edge 3i+j: two colorings in different Kempe classes.
EdgeColoring k33_first();
EdgeColoring k33_second();

// Two vertices joined by `d` parallel edges.
Multigraph theta(std::size_t d = 3);
Multigraph cycle(std::size_t n);
Multigraph path(std::size_t n);
Multigraph complete(std::size_t n);
Multigraph petersen();
// 3-cube; edge colors below are the flipped coordinate + 1.
Multigraph cube();
EdgeColoring cube_coloring();

// Alternating 1,2 around an even cycle, starting with `start` on edge 0.
EdgeColoring alternating(std::size_t n, Color start = 1);
EdgeColoring coloring(int degree, std::vector<Color> colors);

} // namespace kempe::fixtures
