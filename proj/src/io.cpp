#include "kempe/io.hpp"

#include "kempe/error.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace kempe::io {

using nlohmann::json;

namespace {

template <typename T>
T get_field(const json& doc, const char* key, const char* where) {
    if (!doc.is_object() || !doc.contains(key))
        throw ParseError(std::string(where) + ": missing field '" + key + "'");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& err) {
        throw ParseError(std::string(where) + ": field '" + key + "' has the wrong type: " + err.what());
    }
}

void expect_format(const json& doc, const char* format, int version) {
    if (get_field<std::string>(doc, "format", "document") != format)
        throw ParseError(std::string("document: expected format '") + format + "'");
    if (get_field<int>(doc, "version", "document") != version)
        throw ParseError("document: unsupported version " + doc.at("version").dump());
}

Multigraph parse_graph(const json& doc, const char* where) {
    auto vertices = get_field<std::size_t>(doc, "vertices", where);
    auto edges = get_field<std::vector<std::array<std::size_t, 2>>>(doc, "edges", where);
    Multigraph g(vertices);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        try {
            g.add_edge(edges[e][0], edges[e][1]);
        } catch (const Error& err) {
            throw ParseError(std::string(where) + ": edge " + std::to_string(e) + ": " + err.what());
        }
    }
    return g;
}

json graph_json(const Multigraph& g) {
    json edges = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) edges.push_back({g.endpoint(e, 0), g.endpoint(e, 1)});
    return {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

EdgeColoring parse_coloring(const json& doc, const Multigraph& g, const std::string& where) {
    EdgeColoring c{get_field<int>(doc, "degree", where.c_str()), get_field<std::vector<Color>>(doc, "colors", where.c_str())};
    if (c.degree < 0) throw ParseError(where + ": negative degree");
    try {
        check_total(g, c);
    } catch (const Error& err) {
        throw ParseError(where + ": " + err.what());
    }
    return c;
}

json coloring_json(const EdgeColoring& c) { return {{"degree", c.degree}, {"colors", c.colors}}; }

// Rebuilds the dart walk from an edge list given in walk order.
BichromaticCycle parse_switch(const json& doc, const Multigraph& g, std::size_t index) {
    const std::string where = "switch " + std::to_string(index);
    auto colors = get_field<std::array<Color, 2>>(doc, "colors", where.c_str());
    auto edges = get_field<std::vector<EdgeId>>(doc, "edges", where.c_str());
    if (edges.size() < 2) throw ParseError(where + ": a cycle needs at least two edges");
    for (EdgeId e : edges)
        if (e >= g.edge_count()) throw ParseError(where + ": unknown edge " + std::to_string(e));
    BichromaticCycle cycle{std::min(colors[0], colors[1]), std::max(colors[0], colors[1]), {}};
    auto [a, b] = g.endpoints(edges[0]);
    auto touches = [&](VertexId v, EdgeId e) { return g.endpoint(e, 0) == v || g.endpoint(e, 1) == v; };
    // Leave edge 0 from the end the next edge does not touch; end 0 when both ends are shared.
    VertexId at = touches(a, edges[1]) && !touches(b, edges[1]) ? b : a;
    for (EdgeId e : edges) {
        if (!touches(at, e)) throw ParseError(where + ": edges do not form a walk");
        Dart d{e, g.end_at(e, at)};
        cycle.walk.push_back(d);
        at = g.tail(d);
    }
    return cycle;
}

} // namespace

const EdgeColoring& InstanceDocument::coloring(const std::string& name) const {
    auto it = colorings.find(name);
    if (it == colorings.end()) throw ParseError("instance has no coloring named '" + name + "'");
    return it->second;
}

InstanceDocument parse_instance(const json& doc) {
    expect_format(doc, "kempe-instance", kInstanceVersion);
    InstanceDocument out;
    Multigraph g = parse_graph(doc, "instance");
    if (doc.contains("colorings")) {
        const json& named = doc.at("colorings");
        if (!named.is_object()) throw ParseError("instance: 'colorings' must be an object");
        for (const auto& [name, value] : named.items())
            out.colorings.emplace(name, parse_coloring(value, g, "coloring '" + name + "'"));
    }
    if (doc.contains("metadata")) out.metadata = doc.at("metadata");
    out.graph = share(std::move(g));
    return out;
}

json to_json(const InstanceDocument& instance) {
    json doc = {{"format", "kempe-instance"}, {"version", kInstanceVersion}};
    doc.update(graph_json(*instance.graph));
    json named = json::object();
    for (const auto& [name, c] : instance.colorings) named[name] = coloring_json(c);
    doc["colorings"] = std::move(named);
    if (!instance.metadata.empty()) doc["metadata"] = instance.metadata;
    return doc;
}

WitnessDocument parse_witness(const json& doc) {
    expect_format(doc, "kempe-witness", kWitnessVersion);
    const json& base = doc.contains("base") ? doc.at("base") : throw ParseError("witness: missing 'base'");
    const json& cover = doc.contains("cover") ? doc.at("cover") : throw ParseError("witness: missing 'cover'");
    GraphPtr base_graph = share(parse_graph(base, "witness base"));
    GraphPtr cover_graph = share(parse_graph(cover, "witness cover"));
    auto vmap = get_field<std::vector<VertexId>>(cover, "vertex_map", "witness cover");
    auto emap = get_field<std::vector<EdgeId>>(cover, "edge_map", "witness cover");
    if (vmap.size() != cover_graph->vertex_count() || emap.size() != cover_graph->edge_count())
        throw ParseError("witness cover: maps do not match the cover graph size");
    for (VertexId v : vmap)
        if (v >= base_graph->vertex_count()) throw ParseError("witness cover: vertex map leaves the base graph");
    for (EdgeId e : emap)
        if (e >= base_graph->edge_count()) throw ParseError("witness cover: edge map leaves the base graph");

    const json colorings = get_field<json>(doc, "colorings", "witness");
    EdgeColoring from = parse_coloring(get_field<json>(colorings, "from", "witness colorings"), *base_graph,
                                       "witness 'from' coloring");
    EdgeColoring to = parse_coloring(get_field<json>(colorings, "to", "witness colorings"), *base_graph,
                                     "witness 'to' coloring");
    WitnessDocument out{get_field<std::string>(doc, "from", "witness"), get_field<std::string>(doc, "to", "witness"),
                        EquivalenceWitness{base_graph, std::move(from), std::move(to),
                                           CoveringMap(cover_graph, base_graph, std::move(vmap), std::move(emap)),
                                           {}}};
    auto switches = get_field<json>(doc, "switches", "witness");
    if (!switches.is_array()) throw ParseError("witness: 'switches' must be an array");
    for (std::size_t k = 0; k < switches.size(); ++k)
        out.witness.switches.push_back(parse_switch(switches[k], *cover_graph, k));
    return out;
}

json to_json(const WitnessDocument& witness) {
    const EquivalenceWitness& w = witness.witness;
    json cover = graph_json(w.cover.source());
    cover["vertex_map"] = w.cover.vertex_map();
    cover["edge_map"] = w.cover.edge_map();
    cover["degree"] = covering_degree(w.cover);
    json switches = json::array();
    for (const auto& sw : w.switches) switches.push_back({{"colors", {sw.first, sw.second}}, {"edges", sw.edges()}});
    return {{"format", "kempe-witness"},
            {"version", kWitnessVersion},
            {"from", witness.from_name},
            {"to", witness.to_name},
            {"base", graph_json(*w.base)},
            {"colorings", {{"from", coloring_json(w.from)}, {"to", coloring_json(w.to)}}},
            {"cover", std::move(cover)},
            {"switches", std::move(switches)}};
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& err) {
        throw ParseError(path.string() + ": " + err.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

const char* palette_color(Color k) {
    static constexpr std::array<const char*, 8> palette{"blue",   "red",    "black", "darkgreen",
                                                        "orange", "purple", "brown", "cyan"};
    if (k < 1) return "gray";
    return palette[static_cast<std::size_t>(k - 1) % palette.size()];
}

std::string dot_export(const Multigraph& g, const EdgeColoring& c, const std::optional<BichromaticCycle>& highlight) {
    check_total(g, c);
    std::vector<bool> bold(g.edge_count(), false);
    if (highlight)
        for (const Dart& d : highlight->walk)
            if (d.edge < bold.size()) bold[d.edge] = true;

    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out << "  " << g.endpoint(e, 0) << " -- " << g.endpoint(e, 1) << " [id=\"e" << e << "\", color="
            << palette_color(c[e]) << ", label=\"" << c[e] << "\"";
        if (bold[e]) out << ", style=bold, penwidth=3";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace kempe::io
