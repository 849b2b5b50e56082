#include "kempe/alignment.hpp"
#include "kempe/equivalence.hpp"
#include "kempe/error.hpp"
#include "kempe/io.hpp"
#include "kempe/oracle.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

namespace {

using namespace kempe;

constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kViolation = 2;

// Violations found in otherwise well-formed input.
struct Violation {
    std::string message;
};

int cmd_check(const std::string& input, const std::string& name) {
    auto instance = io::parse_instance(io::read_json(input));
    const EdgeColoring& c = instance.coloring(name);
    const Multigraph& g = *instance.graph;
    auto d = is_regular(g);
    if (!d) throw Violation{"graph is not regular"};
    if (*d != static_cast<std::size_t>(c.degree))
        throw Violation{"graph is " + std::to_string(*d) + "-regular but coloring '" + name + "' has degree " +
                        std::to_string(c.degree)};
    if (!is_legal(g, c)) throw Violation{"coloring '" + name + "' gives two adjacent edges the same color"};
    std::cout << "coloring '" << name << "' is a legal " << c.degree << "-edge-coloring of a " << *d
              << "-regular graph\n";
    return kOk;
}

void emit_dot(const std::filesystem::path& dir, const EquivalenceWitness& w) {
    std::filesystem::create_directories(dir);
    io::write_text(dir / "base_from.dot", io::dot_export(*w.base, w.from));
    io::write_text(dir / "base_to.dot", io::dot_export(*w.base, w.to));
    const Multigraph& cover = w.cover.source();
    EdgeColoring current = pullback_coloring(w.cover, w.from);
    io::write_text(dir / "cover_from.dot", io::dot_export(cover, current));
    io::write_text(dir / "cover_to.dot", io::dot_export(cover, pullback_coloring(w.cover, w.to)));
    constexpr std::size_t kMaxSteps = 64;
    for (std::size_t k = 0; k < w.switches.size() && k < kMaxSteps; ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "step_%03zu.dot", k);
        io::write_text(dir / name, io::dot_export(cover, current, w.switches[k]));
        current = kempe_switch(cover, current, w.switches[k]);
    }
}

int cmd_witness(const std::string& input, const std::string& from, const std::string& to, const std::string& out,
                const std::string& dot_dir) {
    auto instance = io::parse_instance(io::read_json(input));
    const EdgeColoring& c1 = instance.coloring(from);
    const EdgeColoring& c2 = instance.coloring(to);
    io::WitnessDocument doc{from, to, kempe_cover_witness(instance.graph, c1, c2)};
    if (auto check = verify_witness(doc.witness); !check) throw Violation{"self-check failed: " + check.message};
    if (!out.empty()) io::write_text(out, io::to_json(doc).dump() + "\n");
    if (!dot_dir.empty()) emit_dot(dot_dir, doc.witness);
    std::cout << "degree " << covering_degree(doc.witness.cover) << " (bound " << beta(c1.degree) << "), "
              << doc.witness.switches.size() << " switches, cover has " << doc.witness.cover.source().vertex_count()
              << " vertices and " << doc.witness.cover.source().edge_count() << " edges\n";
    return kOk;
}

int cmd_verify(const std::string& input, const std::string& witness_path) {
    auto instance = io::parse_instance(io::read_json(input));
    auto doc = io::parse_witness(io::read_json(witness_path));
    const EquivalenceWitness& w = doc.witness;
    if (!(*w.base == *instance.graph)) throw Violation{"witness base graph differs from the instance graph"};
    auto from = instance.colorings.find(doc.from_name);
    auto to = instance.colorings.find(doc.to_name);
    if (from == instance.colorings.end() || to == instance.colorings.end())
        throw Violation{"instance lacks coloring '" + doc.from_name + "' or '" + doc.to_name + "'"};
    if (!(from->second == w.from) || !(to->second == w.to))
        throw Violation{"witness colorings differ from the instance colorings of the same name"};
    auto check = verify_witness(w);
    if (!check) throw Violation{check.message};
    std::cout << "witness verified: degree " << covering_degree(w.cover) << ", " << w.switches.size()
              << " switches\n";
    return kOk;
}

int cmd_classes(const std::string& input, std::size_t max_edges) {
    auto instance = io::parse_instance(io::read_json(input));
    auto census = kempe_class_partition(*instance.graph, std::nullopt, OracleLimits{max_edges});
    if (census.colorings.empty()) {
        std::cout << "0 colorings\n";
        return kOk;
    }
    std::cout << census.colorings.size() << " colorings, " << census.classes.size()
              << (census.classes.size() == 1 ? " class" : " classes") << "\n";
    for (std::size_t k = 0; k < census.classes.size(); ++k)
        std::cout << "  class " << k << ": " << census.classes[k].size() << " colorings\n";
    return kOk;
}

int cmd_generate(std::uint64_t seed, int degree, std::size_t vertices, const std::string& out) {
    auto inst = random_colored_instance(seed, degree, vertices);
    io::InstanceDocument doc{inst.graph, {{"c1", inst.first}, {"c2", inst.second}}, {{"seed", seed}}};
    std::string text = io::to_json(doc).dump(2) + "\n";
    if (out.empty())
        std::cout << text;
    else
        io::write_text(out, text);
    return kOk;
}

int cmd_dot(const std::string& input, const std::string& name, const std::string& out) {
    auto instance = io::parse_instance(io::read_json(input));
    std::string text = io::dot_export(*instance.graph, instance.coloring(name));
    if (out.empty())
        std::cout << text;
    else
        io::write_text(out, text);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge Kempe switches on covers of regular graphs"};
    app.require_subcommand(1);

    std::string input, coloring, from, to, out, witness, dot_dir;
    std::size_t max_edges = 30, vertices = 6;
    std::uint64_t seed = 0;
    int degree = 3;

    auto* check = app.add_subcommand("check", "Check that a coloring is legal on a regular graph");
    check->add_option("--input", input, "Instance file")->required();
    check->add_option("--coloring", coloring, "Coloring name")->required();

    auto* wit = app.add_subcommand("witness", "Build a cover and switch sequence between two colorings");
    wit->add_option("--input", input, "Instance file")->required();
    wit->add_option("--from", from, "Source coloring name")->required();
    wit->add_option("--to", to, "Target coloring name")->required();
    wit->add_option("--out", out, "Witness output file");
    wit->add_option("--emit-dot", dot_dir, "Directory for DOT renderings");

    auto* ver = app.add_subcommand("verify", "Replay a witness against an instance");
    ver->add_option("--input", input, "Instance file")->required();
    ver->add_option("--witness", witness, "Witness file")->required();

    auto* cls = app.add_subcommand("classes", "Enumerate colorings and their Kempe classes");
    cls->add_option("--input", input, "Instance file")->required();
    cls->add_option("--max-edges", max_edges, "Refuse graphs with more edges");

    auto* gen = app.add_subcommand("generate", "Write a random instance with colorings c1 and c2");
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--degree", degree, "Regular degree");
    gen->add_option("--vertices", vertices, "Vertex count (even)");
    gen->add_option("--out", out, "Output file (default: stdout)");

    auto* dot = app.add_subcommand("dot", "Render a colored instance as Graphviz DOT");
    dot->add_option("--input", input, "Instance file")->required();
    dot->add_option("--coloring", coloring, "Coloring name")->required();
    dot->add_option("--out", out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? kOk : kIoError;
    }

    try {
        if (*check) return cmd_check(input, coloring);
        if (*wit) return cmd_witness(input, from, to, out, dot_dir);
        if (*ver) return cmd_verify(input, witness);
        if (*cls) return cmd_classes(input, max_edges);
        if (*gen) return cmd_generate(seed, degree, vertices, out);
        if (*dot) return cmd_dot(input, coloring, out);
    } catch (const Violation& v) {
        std::cerr << "violation: " << v.message << "\n";
        return kViolation;
    } catch (const kempe::Error& err) {
        std::cerr << "violation (" << to_string(err.kind()) << "): " << err.what() << "\n";
        return kViolation;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kIoError;
    }
    return kIoError;
}
