#include "fixtures.hpp"
#include "kempe/io.hpp"
#include "kempe/oracle.hpp"

#include <doctest.h>


using namespace kempe;
namespace fx = kempe::fixtures;
using nlohmann::json;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("instance and witness documents survive a round trip") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto inst = random_colored_instance(seed, 2 + seed % 3, 6);
        io::InstanceDocument doc{inst.graph, {{"c1", inst.first}, {"c2", inst.second}}, {{"seed", seed}}};
        auto text = io::to_json(doc).dump();
        auto back = io::parse_instance(json::parse(text));
        CHECK(*back.graph == *doc.graph);
        CHECK(back.colorings == doc.colorings);
        CHECK(back.metadata == doc.metadata);
        CHECK(io::to_json(back).dump() == text);

        io::WitnessDocument wdoc{"c1", "c2", kempe_cover_witness(inst.graph, inst.first, inst.second)};
        auto wtext = io::to_json(wdoc).dump();
        auto wback = io::parse_witness(json::parse(wtext));
        CHECK(wback.from_name == "c1");
        CHECK(wback.to_name == "c2");
        CHECK(wback.witness.cover.source() == wdoc.witness.cover.source());
        CHECK(wback.witness.cover.vertex_map() == wdoc.witness.cover.vertex_map());
        CHECK(wback.witness.cover.edge_map() == wdoc.witness.cover.edge_map());
        CHECK(wback.witness.switches == wdoc.witness.switches);
        CHECK(verify_witness(wback.witness).ok);
    }
}

TEST_CASE("switch walks with parallel edges parse back to the same darts") {
    auto theta = share(fx::theta(3));
    auto w = kempe_cover_witness(theta, fx::coloring(3, {1, 2, 3}), fx::coloring(3, {3, 1, 2}));
    REQUIRE_FALSE(w.switches.empty());
    auto back = io::parse_witness(io::to_json(io::WitnessDocument{"a", "b", w}));
    CHECK(back.witness.switches == w.switches);
}

TEST_CASE("malformed instances are rejected") {
    json good = {{"format", "kempe-instance"},
                 {"version", 1},
                 {"vertices", 2},
                 {"edges", {{0, 1}, {0, 1}}},
                 {"colorings", {{"c", {{"degree", 2}, {"colors", {1, 2}}}}}}};
    CHECK_NOTHROW(io::parse_instance(good));

    auto loop = good;
    loop["edges"][1] = {1, 1};
    CHECK_THROWS_AS(io::parse_instance(loop), io::ParseError);

    auto range = good;
    range["colorings"]["c"]["colors"] = {1, 3};
    CHECK_THROWS_AS(io::parse_instance(range), io::ParseError);

    auto partial = good;
    partial["colorings"]["c"]["colors"] = {1};
    CHECK_THROWS_AS(io::parse_instance(partial), io::ParseError);

    auto version = good;
    version["version"] = 2;
    CHECK_THROWS_AS(io::parse_instance(version), io::ParseError);

    auto missing = good;
    missing.erase("edges");
    CHECK_THROWS_AS(io::parse_instance(missing), io::ParseError);

    CHECK_THROWS_AS(io::parse_instance(good).coloring("nope"), io::ParseError);
}

TEST_CASE("dot_export") {
    Multigraph k33 = fx::k33();
    EdgeColoring c = fx::k33_first();
    std::string dot = io::dot_export(k33, c);
    CHECK(dot == io::dot_export(k33, c));
    CHECK(count(dot, "color=blue") == 3);
    CHECK(count(dot, "color=red") == 3);
    CHECK(count(dot, "color=black") == 3);
    CHECK(count(dot, "bold") == 0);
    // Edge 0 joins vertices 0 and 3 and has color 1.
    CHECK(dot.find("  0 -- 3 [id=\"e0\", color=blue, label=\"1\"];") != std::string::npos);

    auto gamma = bichromatic_cycles(k33, c, 1, 2).front();
    std::string bold = io::dot_export(k33, c, gamma);
    CHECK(count(bold, "style=bold") == 6);

    CHECK(std::string(io::palette_color(4)) == "darkgreen");
    CHECK(std::string(io::palette_color(9)) == "blue");
}
