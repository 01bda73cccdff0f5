#pragma once

// Blow-up of a configuration along a smooth center Z in normal
// crossings with the divisor, and the machine check that the motivic
// infinite cyclic cover is unchanged by it.

#include <optional>

#include "micc/motive.hpp"

namespace micc {

// Data of a center stratum Z_K^o = Z intersected with E_{I u K}^o, for
// K a subset of the transversal components.  Omitted for full
// intersections, where Z_K^o = E_{I u K}^o is read off the configuration.
struct CenterStratum {
    ComponentSet transversal_subset;  // K
    std::optional<LPoly> cls;
    BigInt euler = 0;
    ComponentSet adjacency;           // must contain I u K
    bool torus_cell = false;
    std::optional<RingElement> cover_class;

    bool operator==(const CenterStratum&) const = default;
};

struct BlowupCenter {
    ComponentSet containing;   // I: components containing Z, k = |I| >= 1
    ComponentSet transversal;  // components meeting Z transversally
    int codim = 0;             // r + 1 = codim_X Z, >= 2
    bool is_full_intersection = false;  // Z = E_I (then codim == |I|)
    std::optional<std::string> exceptional_id;  // name for the new component
    std::map<ComponentSet, CenterStratum> center_strata;  // keyed by K; strict case only

    bool operator==(const BlowupCenter&) const = default;
};

std::vector<Diagnostic> validate_center(const Configuration& config, const BlowupCenter& center);

struct BlowupResult {
    Configuration config;
    std::string exceptional_id;  // the id of the new component *
};

// Transform the configuration:
//   1. add * with m_* = sum of m_i over the containing set;
//   2. add exceptional strata L_{G u K u {*}} with cover
//      [Z~_K^o] L^{r-k+1} (L-1)^{k-|G|-1} for G proper in I, and
//      [Z~_K^o] [P^{r-k}] for G = I (absent for full intersections);
//   3. copy strata not containing I unchanged;
//   4. remove (full) or decrement by the center data (strict) the
//      strata containing I.
BlowupResult blowup(const Configuration& config, const BlowupCenter& center);

struct InvarianceReport {
    bool pass = false;
    std::string exceptional_id;
    RingElement before;  // motive of the input, selection A
    RingElement after;   // motive of the blow-up, selection A u {*}
    RingElement diff;    // before - after; zero iff pass
    std::vector<StratumTerm> before_terms;
    std::vector<StratumTerm> after_terms;
};

InvarianceReport check_invariance(const Configuration& config, const BlowupCenter& center,
                                  const ComponentSet& A);

} // namespace micc
