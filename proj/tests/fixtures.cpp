#include "fixtures.hpp"

namespace kempe::fixtures {

Multigraph k33() {
    Multigraph g(6);
    for (VertexId i = 0; i < 3; ++i)
        for (VertexId j = 0; j < 3; ++j) g.add_edge(i, 3 + j);
    return g;
}

EdgeColoring k33_first() {
    EdgeColoring c{3, {}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c.colors.push_back((i + j) % 3 + 1);
    return c;
}

EdgeColoring k33_second() {
    EdgeColoring c{3, {}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c.colors.push_back(((i - j) % 3 + 3) % 3 + 1);
    return c;
}

Multigraph theta(std::size_t d) {
    Multigraph g(2);
    for (std::size_t k = 0; k < d; ++k) g.add_edge(0, 1);
    return g;
}

Multigraph cycle(std::size_t n) {
    Multigraph g(n);
    for (VertexId v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Multigraph path(std::size_t n) {
    Multigraph g(n);
    for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Multigraph complete(std::size_t n) {
    Multigraph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Multigraph petersen() {
    Multigraph g(10);
    for (VertexId v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);
        g.add_edge(v, v + 5);
        g.add_edge(5 + v, 5 + (v + 2) % 5);
    }
    return g;
}

Multigraph cube() {
    Multigraph g(8);
    for (VertexId v = 0; v < 8; ++v)
        for (VertexId bit = 1; bit < 8; bit <<= 1)
            if (v < (v ^ bit)) g.add_edge(v, v ^ bit);
    return g;
}

EdgeColoring cube_coloring() {
    Multigraph g = cube();
    EdgeColoring c{3, {}};
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        VertexId diff = g.endpoint(e, 0) ^ g.endpoint(e, 1);
        c.colors.push_back(diff == 1 ? 1 : diff == 2 ? 2 : 3);
    }
    return c;
}

EdgeColoring alternating(std::size_t n, Color start) {
    EdgeColoring c{2, {}};
    for (std::size_t k = 0; k < n; ++k) c.colors.push_back(k % 2 == 0 ? start : 3 - start);
    return c;
}

EdgeColoring coloring(int degree, std::vector<Color> colors) { return EdgeColoring{degree, std::move(colors)}; }

} // namespace kempe::fixtures
