#pragma once

#include "kempe/coloring.hpp"
#include "kempe/covering.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace kempe {

/// Covering degree bound: 1 for d <= 2, otherwise (d-1) * beta(d-1)^2.
std::uint64_t beta(int d);

/// A cover of `base` and switches taking `from` pulled back to `to` pulled back.
struct EquivalenceWitness {
    GraphPtr base;
    EdgeColoring from;
    EdgeColoring to;
    CoveringMap cover;
    SwitchSequence switches;
};

/// Builds a witness for two legal colorings of a d-regular graph.
///
/// Equal colorings give the identity cover. Otherwise the cover has degree
/// exactly beta(d).
EquivalenceWitness kempe_cover_witness(const GraphPtr& g, const EdgeColoring& c1, const EdgeColoring& c2);

struct WitnessCheck {
    bool ok = true;
    std::string message;
    std::optional<std::size_t> stale_switch;
    std::optional<EdgeId> mismatch_edge;

    explicit operator bool() const { return ok; }
};

WitnessCheck verify_witness(const EquivalenceWitness& w);

} // namespace kempe
