#include "micc/motive.hpp"

#include <algorithm>

namespace micc {

namespace {

void require_valid_for_motive(const Configuration& config) {
    // finite type is relaxed here: a zero-multiplicity exceptional
    // component is fine as long as no holonomy image collapses to zero,
    // which surfaces per-stratum in cover_component_count.
    auto diags = validate(config, /*strict_finite_type=*/false);
    if (!diags.empty())
        throw Error::validation("invalid configuration: " + diags.front().to_string());
}

} // namespace

StratumFilter meets(const ComponentSet& A) {
    return [A](const ComponentSet& I) {
        return std::any_of(I.begin(), I.end(), [&](const std::string& id) { return A.count(id) > 0; });
    };
}

std::vector<StratumTerm> motive_terms(const Configuration& config, const StratumFilter& filter) {
    require_valid_for_motive(config);
    std::vector<StratumTerm> out;
    for (const auto& [key, st] : config.strata) {
        if (!filter(key)) continue;
        if (!st.cover_class && st.cls && st.cls->is_zero()) continue;  // closure bookkeeping
        if (st.cover_class && st.cover_class->is_zero()) continue;
        StratumTerm t;
        t.stratum = key;
        t.sign = (key.size() % 2 == 1) ? 1 : -1;
        t.cover = cover_class(config, key);
        RingElement weight =
            RingElement::from_class(1, LPoly::binomial_L_minus_1_pow(static_cast<unsigned>(key.size() - 1)));
        t.term = t.cover * weight;
        if (t.sign < 0) t.term = -t.term;
        out.push_back(std::move(t));
    }
    return out;
}

RingElement motive_restricted(const Configuration& config, const StratumFilter& filter) {
    RingElement sum;
    for (auto& t : motive_terms(config, filter)) sum += t.term;
    return sum;
}

static void require_selection(const Configuration& config, const ComponentSet& A) {
    if (A.empty()) throw Error::argument("selection A must be nonempty");
    for (const auto& id : A)
        if (!config.has_component(id))
            throw Error::argument("selection references unknown component '" + id + "'");
}

RingElement motive(const Configuration& config, const ComponentSet& A) {
    require_selection(config, A);
    return motive_restricted(config, meets(A));
}

std::vector<StratumTerm> motive_breakdown(const Configuration& config, const ComponentSet& A) {
    require_selection(config, A);
    return motive_terms(config, meets(A));
}

} // namespace micc
