#pragma once

// Plane-curve embedded resolutions as dual graphs, their translation
// into configurations, and the Milnor-fiber invariants computed from
// them: the full motive when representable, and the monodromy zeta
// function / Euler characteristic in all cases.

#include "micc/realization.hpp"

namespace micc {

struct GraphVertex {
    std::string id;
    long long multiplicity = 1;  // multiplicity of E_i in the pulled-back divisor
    int genus = 0;
    bool exceptional = false;

    bool operator==(const GraphVertex&) const = default;
};

struct ResolutionGraph {
    std::vector<GraphVertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges;   // normal crossings
    std::vector<std::pair<std::string, long long>> arrows;    // strict-transform branches

    const GraphVertex* find_vertex(const std::string& id) const;

    bool operator==(const ResolutionGraph&) const = default;
};

// Connectivity, positive multiplicities, no self-loops, known ids.
std::vector<Diagnostic> validate_graph(const ResolutionGraph& g);

// Vertex ids selected as A; for a germ these are the exceptional
// components over the point.
struct MilnorSelection {
    ComponentSet ids;
};

MilnorSelection select_exceptional(const ResolutionGraph& g);
MilnorSelection select_ids(const ResolutionGraph& g, const ComponentSet& ids);

// Surface configuration of the resolution: singleton strata per vertex
// (class [P^1] - valence for genus 0), singleton strata per branch,
// point strata per edge and per arrow incidence.  Branch components are
// named after the arrows ("br1", "br2", ...).
Configuration graph_to_config(const ResolutionGraph& g);

// motive(graph_to_config(g), sel); equals the Denef-Loeser motivic
// Milnor fiber for germ selections.  Throws Unrepresentable when a
// needed cover has no class in R (e.g. positive-genus cyclic covers).
RingElement motivic_milnor_fiber(const ResolutionGraph& g, const MilnorSelection& sel);

// A'Campo: product over i in A of (1 - t^{m_i})^{-chi(E_i^o)}.
CyclotomicRational acampo_zeta(const ResolutionGraph& g, const MilnorSelection& sel);

// Euler characteristic of the Milnor fiber: sum over i in A of
// m_i * chi(E_i^o).  Available even when the full motive is not.
BigInt milnor_euler(const ResolutionGraph& g, const MilnorSelection& sel);

} // namespace micc
