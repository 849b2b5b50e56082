#include "kempe/coloring.hpp"

#include "kempe/error.hpp"

#include <algorithm>
#include <string>

namespace kempe {

namespace {

// Follows the alternating walk that leaves through `start`. Returns nullopt
// if the walk gets stuck or revisits an edge before closing.
std::optional<std::vector<Dart>> trace_walk(const Multigraph& g, const EdgeColoring& c, Dart start,
                                            Color i, Color j) {
    std::vector<Dart> walk{start};
    const VertexId origin = g.head(start);
    std::vector<EdgeId> used{start.edge};
    Dart current = start;
    while (true) {
        VertexId at = g.tail(current);
        Color want = c[current.edge] == i ? j : i;
        if (at == origin && c[start.edge] == want) return walk;
        std::optional<Dart> next;
        for (const Dart& d : g.darts(at)) {
            if (d.edge != current.edge && c[d.edge] == want) {
                if (next) return std::nullopt;
                next = d;
            }
        }
        if (!next || std::find(used.begin(), used.end(), next->edge) != used.end()) return std::nullopt;
        used.push_back(next->edge);
        walk.push_back(*next);
        current = *next;
    }
}

} // namespace

std::vector<EdgeId> BichromaticCycle::edges() const {
    std::vector<EdgeId> out;
    out.reserve(walk.size());
    for (const Dart& d : walk) out.push_back(d.edge);
    return out;
}

EdgeId BichromaticCycle::min_edge() const {
    EdgeId best = walk.front().edge;
    for (const Dart& d : walk) best = std::min(best, d.edge);
    return best;
}

void check_total(const Multigraph& g, const EdgeColoring& c) {
    if (c.size() != g.edge_count())
        throw Error(ErrorKind::PartialColoring, "coloring has " + std::to_string(c.size()) +
                                                    " entries for " + std::to_string(g.edge_count()) + " edges");
    for (EdgeId e = 0; e < c.size(); ++e)
        if (c[e] < 1 || c[e] > c.degree)
            throw Error(ErrorKind::ColorOutOfRange, "edge " + std::to_string(e) + " has color " +
                                                        std::to_string(c[e]) + " outside 1.." +
                                                        std::to_string(c.degree));
}

bool is_legal(const Multigraph& g, const EdgeColoring& c) {
    check_total(g, c);
    std::vector<bool> present(static_cast<std::size_t>(c.degree) + 1);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::fill(present.begin(), present.end(), false);
        for (const Dart& d : g.darts(v)) {
            Color k = c[d.edge];
            if (present[k]) return false;
            present[k] = true;
        }
    }
    return true;
}

void require_legal(const Multigraph& g, const EdgeColoring& c, const char* what) {
    try {
        if (is_legal(g, c)) return;
    } catch (const Error& err) {
        throw Error(ErrorKind::IllegalColoring, std::string(what) + ": " + err.what());
    }
    throw Error(ErrorKind::IllegalColoring, std::string(what) + " is not a legal edge coloring");
}

std::vector<EdgeId> color_class_edges(const Multigraph& g, const EdgeColoring& c,
                                      const std::set<Color>& chi) {
    check_total(g, c);
    for (Color k : chi)
        if (k < 1 || k > c.degree)
            throw Error(ErrorKind::ColorOutOfRange, "color " + std::to_string(k) + " out of range");
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (chi.contains(c[e])) out.push_back(e);
    return out;
}

Subgraph color_class_subgraph(const Multigraph& g, const EdgeColoring& c, const std::set<Color>& chi) {
    return spanning_subgraph(g, color_class_edges(g, c, chi));
}

EdgeColoring restrict_coloring(const EdgeColoring& c, const Subgraph& sub, int degree) {
    EdgeColoring out{degree, {}};
    out.colors.reserve(sub.parent_edge.size());
    for (EdgeId e : sub.parent_edge) out.colors.push_back(c[e]);
    return out;
}

std::vector<BichromaticCycle> bichromatic_cycles(const Multigraph& g, const EdgeColoring& c,
                                                 Color i, Color j) {
    if (i == j) throw Error(ErrorKind::InvalidArgument, "bichromatic_cycles: colors must differ");
    check_total(g, c);
    if (i > j) std::swap(i, j);
    std::vector<BichromaticCycle> cycles;
    std::vector<bool> seen(g.edge_count(), false);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (seen[e] || (c[e] != i && c[e] != j)) continue;
        auto walk = trace_walk(g, c, Dart{e, 0}, i, j);
        if (!walk)
            throw Error(ErrorKind::IllegalColoring,
                        "bichromatic_cycles: no closed alternating walk through edge " + std::to_string(e));
        for (const Dart& d : *walk) seen[d.edge] = true;
        cycles.push_back({i, j, std::move(*walk)});
    }
    return cycles;
}

BichromaticCycle make_cycle(const Multigraph& g, const EdgeColoring& c, std::span<const EdgeId> edges) {
    if (edges.empty()) throw Error(ErrorKind::InvalidArgument, "make_cycle: empty edge set");
    for (EdgeId e : edges)
        if (e >= g.edge_count()) throw Error(ErrorKind::UnknownEdge, "make_cycle: unknown edge " + std::to_string(e));
    EdgeId first = *std::min_element(edges.begin(), edges.end());
    Color i = c[first];
    Color j = i;
    for (EdgeId e : edges)
        if (c[e] != i) j = c[e];
    if (i == j) throw Error(ErrorKind::InvalidArgument, "make_cycle: edge set is not bi-chromatic");
    if (i > j) std::swap(i, j);
    auto walk = trace_walk(g, c, Dart{first, 0}, i, j);
    if (!walk) throw Error(ErrorKind::InvalidArgument, "make_cycle: edges do not close into an alternating cycle");
    std::vector<EdgeId> got;
    for (const Dart& d : *walk) got.push_back(d.edge);
    std::vector<EdgeId> want(edges.begin(), edges.end());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) throw Error(ErrorKind::InvalidArgument, "make_cycle: edges are not exactly one bi-chromatic cycle");
    return {i, j, std::move(*walk)};
}

bool is_bichromatic(const Multigraph& g, const EdgeColoring& c, const BichromaticCycle& gamma) {
    const std::size_t n = gamma.walk.size();
    if (n < 2 || n % 2 != 0 || gamma.first == gamma.second) return false;
    if (c.size() != g.edge_count()) return false;
    std::vector<EdgeId> edges;
    for (std::size_t k = 0; k < n; ++k) {
        const Dart& d = gamma.walk[k];
        const Dart& next = gamma.walk[(k + 1) % n];
        if (d.edge >= g.edge_count() || d.end > 1 || next.edge >= g.edge_count() || next.end > 1) return false;
        Color here = c[d.edge];
        if (here != gamma.first && here != gamma.second) return false;
        if (c[next.edge] == here) return false;
        if (g.tail(d) != g.head(next)) return false;
        edges.push_back(d.edge);
    }
    std::sort(edges.begin(), edges.end());
    return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

EdgeColoring kempe_switch(const Multigraph& g, const EdgeColoring& c, const BichromaticCycle& gamma) {
    if (!is_bichromatic(g, c, gamma))
        throw Error(ErrorKind::StaleSwitch, "switch is not a bi-chromatic cycle of type (" +
                                                std::to_string(gamma.first) + "," +
                                                std::to_string(gamma.second) + ") for this coloring");
    EdgeColoring out = c;
    for (const Dart& d : gamma.walk) out[d.edge] = c[d.edge] == gamma.first ? gamma.second : gamma.first;
    return out;
}

EdgeColoring apply_sequence(const Multigraph& g, EdgeColoring c, const SwitchSequence& seq,
                            const ReplayObserver& observer) {
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (!is_bichromatic(g, c, seq[k]))
            throw StaleSwitchError(k, "switch " + std::to_string(k) + " of type (" +
                                          std::to_string(seq[k].first) + "," + std::to_string(seq[k].second) +
                                          ") is not bi-chromatic for the current coloring");
        for (const Dart& d : seq[k].walk) c[d.edge] = c[d.edge] == seq[k].first ? seq[k].second : seq[k].first;
        if (observer) observer(k, c);
    }
    return c;
}

} // namespace kempe
