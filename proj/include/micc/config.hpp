#pragma once

// Combinatorial model of a simple normal crossing divisor E = sum_i E_i
// inside a quasi-projective manifold, together with the holonomy values
// m_i on the meridians of its components.  Strata are the sets
// E_I^o = E_I \ union of deeper components; each carries its class in
// K_0(Var), Euler characteristic, and the adjacency data from which the
// holonomy image of its punctured neighborhood is computed.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "micc/ring.hpp"

namespace micc {

using ComponentSet = std::set<std::string>;

struct Component {
    std::string id;
    long long multiplicity = 0;  // m_i = Delta(delta_i), nonzero for finite type
};

struct Stratum {
    ComponentSet components;                 // the index set I, nonempty
    std::optional<LPoly> cls;                // class of E_I^o, trivial action
    BigInt euler = 0;                        // chi(E_I^o)
    ComponentSet adjacency;                  // components meeting the closure; contains I
    bool torus_cell = false;                 // E_I^o isomorphic to C^a x (C*)^b
    std::optional<RingElement> cover_class;  // explicit override for the cover

    bool operator==(const Stratum&) const = default;
};

struct Configuration {
    int ambient_dim = 0;
    std::vector<Component> components;
    std::map<ComponentSet, Stratum> strata;

    const Component* find_component(const std::string& id) const;
    bool has_component(const std::string& id) const { return find_component(id) != nullptr; }
    long long multiplicity(const std::string& id) const;  // throws on unknown id
    ComponentSet all_ids() const;

    bool operator==(const Configuration&) const = default;
};

struct Diagnostic {
    std::string code;     // e.g. "finite-type violation"
    std::string subject;  // offending component or stratum
    std::string message;

    std::string to_string() const;
};

// Empty result iff all type invariants hold.  `strict_finite_type` is
// dropped on the motive path, where a zero-multiplicity component (a
// blown-up exceptional with m_* = 0) is tolerated as long as every
// needed holonomy image stays nonzero.
std::vector<Diagnostic> validate(const Configuration& config, bool strict_finite_type = true);

// gcd of |m_i| over i in I  (the order of the covering group of E_I^o)
long long gcd_multiplicity(const Configuration& config, const ComponentSet& I);

// N_I: number of connected components of the cover of E_I^o, computed as
// the gcd of |m_j| over the stratum's adjacency set.
long long cover_component_count(const Configuration& config, const ComponentSet& I);

// [E~_I^o, sigma_I]: the explicit override when present, otherwise
// [mu_{N_I}] * class for torus-cell strata.  Throws Unrepresentable
// when neither applies.
RingElement cover_class(const Configuration& config, const ComponentSet& I);

std::string format_component_set(const ComponentSet& ids);

} // namespace micc
