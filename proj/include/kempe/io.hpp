#pragma once

#include "kempe/coloring.hpp"
#include "kempe/equivalence.hpp"
#include "kempe/graph.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace kempe::io {

inline constexpr int kInstanceVersion = 1;
inline constexpr int kWitnessVersion = 1;

/// Malformed document: bad JSON, wrong schema, or values that cannot describe a graph.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InstanceDocument {
    GraphPtr graph;
    std::map<std::string, EdgeColoring> colorings;
    nlohmann::json metadata = nlohmann::json::object();

    const EdgeColoring& coloring(const std::string& name) const;
};

InstanceDocument parse_instance(const nlohmann::json& doc);
nlohmann::json to_json(const InstanceDocument& instance);

struct WitnessDocument {
    std::string from_name;
    std::string to_name;
    EquivalenceWitness witness;
};

WitnessDocument parse_witness(const nlohmann::json& doc);
nlohmann::json to_json(const WitnessDocument& witness);

nlohmann::json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// Graphviz rendering. Colors 1, 2, 3 are blue, red, black; 4..8 are
/// darkgreen, orange, purple, brown, cyan; higher colors reuse that list
/// from the start. Edges of `highlight` are drawn bold.
std::string dot_export(const Multigraph& g, const EdgeColoring& c,
                       const std::optional<BichromaticCycle>& highlight = std::nullopt);

const char* palette_color(Color k);

} // namespace kempe::io
