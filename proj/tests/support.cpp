#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace kempe::support {

namespace {

bool adjacent_distinct(const Multigraph& g, const std::vector<Color>& c) {
    for (EdgeId a = 0; a < g.edge_count(); ++a)
        for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
            auto [a0, a1] = g.endpoints(a);
            auto [b0, b1] = g.endpoints(b);
            bool touch = a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1;
            if (touch && c[a] == c[b]) return false;
        }
    return true;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<std::vector<Color>> brute_force_colorings(const Multigraph& g, int d) {
    std::vector<std::vector<Color>> out;
    std::vector<Color> c(g.edge_count(), 1);
    while (true) {
        if (adjacent_distinct(g, c)) out.push_back(c);
        std::size_t k = 0;
        while (k < c.size() && c[k] == d) c[k++] = 1;
        if (k == c.size()) break;
        ++c[k];
    }
    return out;
}

std::size_t brute_force_class_count(const Multigraph& g, int d) {
    auto all = brute_force_colorings(g, d);
    std::map<std::vector<Color>, std::size_t> index;
    for (std::size_t k = 0; k < all.size(); ++k) index[all[k]] = k;
    UnionFind classes(all.size());
    for (std::size_t k = 0; k < all.size(); ++k) {
        const auto& c = all[k];
        for (Color i = 1; i <= d; ++i)
            for (Color j = i + 1; j <= d; ++j) {
                // Flood the {i, j} edges into components via shared endpoints.
                UnionFind comp(g.edge_count());
                for (EdgeId a = 0; a < g.edge_count(); ++a)
                    for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
                        if ((c[a] != i && c[a] != j) || (c[b] != i && c[b] != j)) continue;
                        auto [a0, a1] = g.endpoints(a);
                        auto [b0, b1] = g.endpoints(b);
                        if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) comp.unite(a, b);
                    }
                std::map<std::size_t, std::vector<EdgeId>> parts;
                for (EdgeId e = 0; e < g.edge_count(); ++e)
                    if (c[e] == i || c[e] == j) parts[comp.find(e)].push_back(e);
                for (const auto& [root, edges] : parts) {
                    auto next = c;
                    for (EdgeId e : edges) next[e] = c[e] == i ? j : i;
                    classes.unite(k, index.at(next));
                }
            }
    }
    std::size_t count = 0;
    for (std::size_t k = 0; k < all.size(); ++k) count += classes.find(k) == k;
    return count;
}

CoveringMap random_cover(const GraphPtr& g, std::size_t m, std::mt19937_64& rng) {
    Multigraph cover(g->vertex_count() * m);
    std::vector<VertexId> vmap(cover.vertex_count());
    std::vector<EdgeId> emap;
    for (VertexId v = 0; v < g->vertex_count(); ++v)
        for (std::size_t k = 0; k < m; ++k) vmap[v * m + k] = v;
    std::vector<std::size_t> sigma(m);
    for (EdgeId e = 0; e < g->edge_count(); ++e) {
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        auto [u, v] = g->endpoints(e);
        for (std::size_t k = 0; k < m; ++k) {
            cover.add_edge(u * m + k, v * m + sigma[k]);
            emap.push_back(e);
        }
    }
    return CoveringMap(share(std::move(cover)), g, std::move(vmap), std::move(emap));
}

std::vector<EdgeId> color_class(const EdgeColoring& c, Color k) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < c.size(); ++e)
        if (c[e] == k) out.push_back(e);
    return out;
}

} // namespace kempe::support
