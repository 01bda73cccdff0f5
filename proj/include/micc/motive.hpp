#pragma once

// The motivic infinite cyclic cover of a configuration: the alternating
// sum over strata meeting the selection A of
//     (-1)^{|I|-1} [E~_I^o] (L-1)^{|I|-1}.

#include <functional>
#include <vector>

#include "micc/config.hpp"

namespace micc {

struct StratumTerm {
    ComponentSet stratum;
    int sign = 1;          // (-1)^{|I|-1}
    RingElement cover;     // [E~_I^o]
    RingElement term;      // sign * cover * (L-1)^{|I|-1}
};

using StratumFilter = std::function<bool(const ComponentSet&)>;

// Signed contributions of the strata passing the filter, in stratum
// order.  Zero-class strata are skipped.  Throws on invalid
// configurations and unrepresentable covers.
std::vector<StratumTerm> motive_terms(const Configuration& config, const StratumFilter& filter);

RingElement motive_restricted(const Configuration& config, const StratumFilter& filter);

// S^A: restriction to the filter "I meets A".  A must be a nonempty set
// of known component ids.
RingElement motive(const Configuration& config, const ComponentSet& A);

std::vector<StratumTerm> motive_breakdown(const Configuration& config, const ComponentSet& A);

// Filter "I meets A" used by the operations above.
StratumFilter meets(const ComponentSet& A);

} // namespace micc
