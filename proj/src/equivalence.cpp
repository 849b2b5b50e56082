#include "kempe/equivalence.hpp"

#include "kempe/alignment.hpp"
#include "kempe/error.hpp"

#include <string>

namespace kempe {

namespace {

// A cover together with switches from c1 pulled back to c2 pulled back.
struct Lift {
    CoveringMap cover;
    SwitchSequence switches;
};

std::set<Color> colors_below(int d) {
    std::set<Color> out;
    for (Color k = 1; k < d; ++k) out.insert(k);
    return out;
}

// Replays the same switches in every copy of the cover's source.
Lift pad(const Lift& lift, std::size_t m) {
    if (m == 1) return lift;
    const std::size_t edges = lift.cover.source().edge_count();
    Lift out{pad_with_copies(lift.cover, m), {}};
    out.switches.reserve(lift.switches.size() * m);
    for (std::size_t k = 0; k < m; ++k) {
        for (const auto& sw : lift.switches) {
            BichromaticCycle moved = sw;
            for (Dart& d : moved.walk) d.edge += k * edges;
            out.switches.push_back(std::move(moved));
        }
    }
    return out;
}

Lift build(const GraphPtr& g, const EdgeColoring& c1, const EdgeColoring& c2);

// Both colorings share their color-d class: solve the problem on the
// (d-1)-regular rest and extend that cover over the color-d edges.
// The result has degree beta(d-1).
Lift build_with_color_d_aligned(const GraphPtr& g, const EdgeColoring& c1, const EdgeColoring& c2) {
    const int d = c1.degree;
    const auto below = colors_below(d);
    Subgraph h = color_class_subgraph(*g, c1, below);
    if (color_class_edges(*g, c2, below) != h.parent_edge)
        throw Error(ErrorKind::InvalidArgument, "colorings disagree on the color-d class");
    GraphPtr h_graph = share(h.graph);
    Lift sub = build(h_graph, restrict_coloring(c1, h, d - 1), restrict_coloring(c2, h, d - 1));
    // Switches on the cover of H keep their ids inside the extended cover.
    return {extend_subgraph_cover(g, h, sub.cover), std::move(sub.switches)};
}

Lift build_two_colors(const GraphPtr& g, const EdgeColoring& c1, const EdgeColoring& c2) {
    Lift out{CoveringMap::identity(g), {}};
    for (auto& cycle : bichromatic_cycles(*g, c1, 1, 2)) {
        if (c1[cycle.walk.front().edge] != c2[cycle.walk.front().edge]) out.switches.push_back(std::move(cycle));
    }
    return out;
}

// Degree is always exactly beta(d) so that covers of disconnected graphs
// have constant fibers.
Lift build(const GraphPtr& g, const EdgeColoring& c1, const EdgeColoring& c2) {
    const int d = c1.degree;
    if (c1 == c2) return pad({CoveringMap::identity(g), {}}, beta(d));
    if (d == 2) return build_two_colors(g, c1, c2);

    bool color_d_agrees = true;
    for (EdgeId e = 0; e < g->edge_count() && color_d_agrees; ++e)
        color_d_agrees = (c1[e] == d) == (c2[e] == d);
    if (color_d_agrees) return pad(build_with_color_d_aligned(g, c1, c2), beta(d) / beta(d - 1));

    Alignment aligned = align_color(g, c1, c2);
    const CoveringMap& p = aligned.cover;
    const EdgeColoring c1_p = pullback_coloring(p, c1);
    const EdgeColoring c2_p = pullback_coloring(p, c2);

    // c1.p ~ shifted on a further cover r1.
    Lift first = build_with_color_d_aligned(p.source_ptr(), c1_p, aligned.shifted);
    const CoveringMap& r1 = first.cover;
    // shifted ~ aligned through the switches along the rotating cycles.
    SwitchSequence middle = lift_sequence(r1, aligned.shifted, aligned.switches);
    // aligned ~ c2.p on a further cover r2.
    Lift last = build_with_color_d_aligned(r1.source_ptr(), pullback_coloring(r1, aligned.aligned),
                                           pullback_coloring(r1, c2_p));
    const CoveringMap& r2 = last.cover;

    Lift out{compose(p, compose(r1, r2)), lift_sequence(r2, pullback_coloring(r1, c1_p), first.switches)};
    for (auto& sw : lift_sequence(r2, pullback_coloring(r1, aligned.shifted), middle))
        out.switches.push_back(std::move(sw));
    for (auto& sw : last.switches) out.switches.push_back(std::move(sw));
    return out;
}

} // namespace

std::uint64_t beta(int d) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "beta is defined for d >= 1");
    std::uint64_t b = 1;
    for (int k = 3; k <= d; ++k) b = static_cast<std::uint64_t>(k - 1) * b * b;
    return b;
}

EquivalenceWitness kempe_cover_witness(const GraphPtr& g, const EdgeColoring& c1, const EdgeColoring& c2) {
    if (!g) throw Error(ErrorKind::InvalidArgument, "kempe_cover_witness: no graph");
    require_legal(*g, c1, "first coloring");
    require_legal(*g, c2, "second coloring");
    if (c1.degree != c2.degree)
        throw Error(ErrorKind::DegreeMismatch, "colorings have degrees " + std::to_string(c1.degree) + " and " +
                                                   std::to_string(c2.degree));
    if (c1.degree < 1) throw Error(ErrorKind::InvalidArgument, "colorings must have degree at least 1");
    auto d = is_regular(*g);
    if (!d || *d != static_cast<std::size_t>(c1.degree))
        throw Error(ErrorKind::NotRegular, "graph is not " + std::to_string(c1.degree) + "-regular");

    if (c1 == c2) return {g, c1, c2, CoveringMap::identity(g), {}};
    Lift lift = build(g, c1, c2);
    return {g, c1, c2, std::move(lift.cover), std::move(lift.switches)};
}

WitnessCheck verify_witness(const EquivalenceWitness& w) {
    auto fail = [](std::string msg) { return WitnessCheck{false, std::move(msg), {}, {}}; };
    if (!w.base) return fail("witness has no base graph");
    if (!(w.cover.target() == *w.base)) return fail("cover does not target the base graph");
    if (!is_legal(*w.base, w.from) || !is_legal(*w.base, w.to)) return fail("base colorings are not legal");
    if (w.from.degree != w.to.degree) return fail("base colorings have different degrees");
    if (auto check = verify_covering(w.cover); !check) return fail("not a covering: " + check.message);
    const std::size_t degree = covering_degree(w.cover);
    if (degree > beta(w.from.degree))
        return fail("covering degree " + std::to_string(degree) + " exceeds the bound " +
                    std::to_string(beta(w.from.degree)));

    const Multigraph& cover = w.cover.source();
    WitnessCheck result;
    EdgeColoring reached;
    try {
        reached = apply_sequence(cover, pullback_coloring(w.cover, w.from), w.switches,
                                 [&](std::size_t k, const EdgeColoring& c) {
                                     if (result.ok && !is_legal(cover, c)) {
                                         result = fail("coloring after switch " + std::to_string(k) + " is illegal");
                                     }
                                 });
    } catch (const StaleSwitchError& err) {
        WitnessCheck stale = fail(err.what());
        stale.stale_switch = err.index();
        return stale;
    }
    if (!result) return result;

    const EdgeColoring target = pullback_coloring(w.cover, w.to);
    for (EdgeId e = 0; e < cover.edge_count(); ++e) {
        if (reached[e] != target[e]) {
            WitnessCheck mismatch = fail("replay ends with color " + std::to_string(reached[e]) + " on cover edge " +
                                         std::to_string(e) + ", expected " + std::to_string(target[e]));
            mismatch.mismatch_edge = e;
            return mismatch;
        }
    }
    return result;
}

} // namespace kempe
