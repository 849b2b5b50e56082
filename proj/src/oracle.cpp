#include "kempe/oracle.hpp"

#include "kempe/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <string>

namespace kempe {

std::vector<EdgeColoring> enumerate_legal_colorings(const Multigraph& g, std::optional<int> degree,
                                                    const OracleLimits& limits) {
    if (g.edge_count() > limits.max_edges)
        throw Error(ErrorKind::TooLarge, "enumeration refused: " + std::to_string(g.edge_count()) +
                                             " edges exceeds the limit of " + std::to_string(limits.max_edges));
    int d = 0;
    if (degree) {
        d = *degree;
    } else {
        for (VertexId v = 0; v < g.vertex_count(); ++v) d = std::max(d, static_cast<int>(g.degree(v)));
    }
    std::vector<EdgeColoring> out;
    if (d < 1) {
        if (g.edge_count() == 0) out.push_back({d, {}});
        return out;
    }

    // used[v] is a bitmask of the colors already on edges at v.
    std::vector<std::uint64_t> used(g.vertex_count(), 0);
    EdgeColoring current{d, std::vector<Color>(g.edge_count(), 0)};
    const std::size_t m = g.edge_count();

    auto recurse = [&](auto&& self, EdgeId e) -> void {
        if (e == m) {
            out.push_back(current);
            return;
        }
        auto [u, v] = g.endpoints(e);
        for (Color k = 1; k <= d; ++k) {
            const std::uint64_t bit = std::uint64_t{1} << k;
            if ((used[u] | used[v]) & bit) continue;
            used[u] |= bit;
            used[v] |= bit;
            current[e] = k;
            self(self, e + 1);
            used[u] &= ~bit;
            used[v] &= ~bit;
        }
    };
    if (d > 62) throw Error(ErrorKind::TooLarge, "enumeration supports at most 62 colors");
    recurse(recurse, 0);
    return out;
}

std::vector<std::pair<KempeSwitch, EdgeColoring>> single_switch_neighbours(const Multigraph& g,
                                                                           const EdgeColoring& c) {
    std::vector<std::pair<KempeSwitch, EdgeColoring>> out;
    for (Color i = 1; i <= c.degree; ++i)
        for (Color j = i + 1; j <= c.degree; ++j)
            for (auto& cycle : bichromatic_cycles(g, c, i, j)) {
                EdgeColoring next = kempe_switch(g, c, cycle);
                out.emplace_back(std::move(cycle), std::move(next));
            }
    return out;
}

ColoringCensus kempe_class_partition(const Multigraph& g, std::optional<int> degree, const OracleLimits& limits) {
    ColoringCensus census;
    census.colorings = enumerate_legal_colorings(g, degree, limits);
    std::map<std::vector<Color>, std::size_t> index;
    for (std::size_t k = 0; k < census.colorings.size(); ++k) index.emplace(census.colorings[k].colors, k);

    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    census.class_of.assign(census.colorings.size(), unassigned);
    for (std::size_t root = 0; root < census.colorings.size(); ++root) {
        if (census.class_of[root] != unassigned) continue;
        const std::size_t id = census.classes.size();
        auto& members = census.classes.emplace_back();
        std::deque<std::size_t> queue{root};
        census.class_of[root] = id;
        while (!queue.empty()) {
            std::size_t at = queue.front();
            queue.pop_front();
            members.push_back(at);
            for (auto& [sw, next] : single_switch_neighbours(g, census.colorings[at])) {
                std::size_t k = index.at(next.colors);
                if (census.class_of[k] == unassigned) {
                    census.class_of[k] = id;
                    queue.push_back(k);
                }
            }
        }
        std::sort(members.begin(), members.end());
    }
    return census;
}

std::optional<SwitchSequence> equivalent_without_cover(const Multigraph& g, const EdgeColoring& c1,
                                                       const EdgeColoring& c2, const OracleLimits& limits) {
    if (g.edge_count() > limits.max_edges)
        throw Error(ErrorKind::TooLarge, "search refused: " + std::to_string(g.edge_count()) +
                                             " edges exceeds the limit of " + std::to_string(limits.max_edges));
    require_legal(g, c1, "first coloring");
    require_legal(g, c2, "second coloring");
    if (c1.degree != c2.degree) throw Error(ErrorKind::DegreeMismatch, "colorings have different degrees");
    if (c1 == c2) return SwitchSequence{};

    struct Visit {
        std::size_t parent;
        KempeSwitch via;
    };
    std::vector<EdgeColoring> states{c1};
    std::vector<Visit> visits{{0, {}}};
    std::map<std::vector<Color>, std::size_t> index{{c1.colors, 0}};
    for (std::size_t at = 0; at < states.size(); ++at) {
        for (auto& [sw, next] : single_switch_neighbours(g, states[at])) {
            if (index.contains(next.colors)) continue;
            const std::size_t id = states.size();
            index.emplace(next.colors, id);
            const bool found = next == c2;
            states.push_back(std::move(next));
            visits.push_back({at, std::move(sw)});
            if (found) {
                SwitchSequence path;
                for (std::size_t k = id; k != 0; k = visits[k].parent) path.push_back(visits[k].via);
                std::reverse(path.begin(), path.end());
                return path;
            }
        }
    }
    return std::nullopt;
}

ColoredInstance random_colored_instance(std::uint64_t seed, int d, std::size_t n, const OracleLimits& limits) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "random_colored_instance: d must be at least 1");
    if (n < 2 || n % 2 != 0)
        throw Error(ErrorKind::InvalidArgument, "random_colored_instance: n must be even and at least 2");
    std::mt19937_64 rng(seed);

    Multigraph g(n);
    EdgeColoring first{d, {}};
    std::vector<VertexId> order(n);
    for (Color k = 1; k <= d; ++k) {
        std::iota(order.begin(), order.end(), VertexId{0});
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t a = 0; a < n; a += 2) {
            g.add_edge(std::min(order[a], order[a + 1]), std::max(order[a], order[a + 1]));
            first.colors.push_back(k);
        }
    }

    EdgeColoring second;
    if (g.edge_count() <= limits.max_edges) {
        auto all = enumerate_legal_colorings(g, d, limits);
        second = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    } else {
        std::vector<Color> perm(static_cast<std::size_t>(d));
        std::iota(perm.begin(), perm.end(), Color{1});
        std::shuffle(perm.begin(), perm.end(), rng);
        second = first;
        for (auto& k : second.colors) k = perm[static_cast<std::size_t>(k - 1)];
        const std::size_t steps = g.edge_count();
        for (std::size_t s = 0; s < steps && d >= 2; ++s) {
            Color i = std::uniform_int_distribution<Color>(1, d)(rng);
            Color j = std::uniform_int_distribution<Color>(1, d - 1)(rng);
            if (j >= i) ++j;
            auto cycles = bichromatic_cycles(g, second, i, j);
            auto pick = std::uniform_int_distribution<std::size_t>(0, cycles.size() - 1)(rng);
            second = kempe_switch(g, second, cycles[pick]);
        }
    }
    return {share(std::move(g)), std::move(first), std::move(second)};
}

} // namespace kempe
