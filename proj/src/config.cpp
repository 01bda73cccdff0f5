#include "micc/config.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace micc {

std::string format_component_set(const ComponentSet& ids) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& id : ids) {
        if (!first) out << ",";
        out << id;
        first = false;
    }
    out << "}";
    return out.str();
}

const Component* Configuration::find_component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

long long Configuration::multiplicity(const std::string& id) const {
    const Component* c = find_component(id);
    if (!c) throw Error::argument("unknown component id '" + id + "'");
    return c->multiplicity;
}

ComponentSet Configuration::all_ids() const {
    ComponentSet ids;
    for (const auto& c : components) ids.insert(c.id);
    return ids;
}

std::string Diagnostic::to_string() const {
    return code + " [" + subject + "]: " + message;
}

std::vector<Diagnostic> validate(const Configuration& config, bool strict_finite_type) {
    std::vector<Diagnostic> out;
    auto report = [&](std::string code, std::string subject, std::string message) {
        out.push_back({std::move(code), std::move(subject), std::move(message)});
    };

    if (config.ambient_dim < 1)
        report("invalid ambient dimension", std::to_string(config.ambient_dim),
               "ambient_dim must be positive");

    std::set<std::string> seen;
    for (const auto& c : config.components) {
        if (!seen.insert(c.id).second)
            report("duplicate component", c.id, "component id appears twice");
        if (strict_finite_type && c.multiplicity == 0)
            report("finite-type violation", c.id, "component has multiplicity 0");
    }

    for (const auto& [key, st] : config.strata) {
        const std::string where = format_component_set(key);
        if (key.empty()) {
            report("empty stratum", where, "stratum index set must be nonempty");
            continue;
        }
        if (key != st.components)
            report("inconsistent stratum key", where, "stratum components differ from its key");
        if (static_cast<int>(key.size()) > config.ambient_dim)
            report("stratum too deep", where,
                   "|I| exceeds ambient_dim " + std::to_string(config.ambient_dim));
        for (const auto& id : key)
            if (!config.has_component(id))
                report("unknown component", where, "stratum references missing id '" + id + "'");
        for (const auto& id : st.adjacency)
            if (!config.has_component(id))
                report("unknown component", where, "adjacency references missing id '" + id + "'");
        if (!std::includes(st.adjacency.begin(), st.adjacency.end(), key.begin(), key.end()))
            report("adjacency violation", where, "adjacency does not contain the stratum's own components");
        if (st.cls && st.cls->eval_one() != st.euler)
            report("Euler/class mismatch", where,
                   "euler " + st.euler.str() + " != class at L=1 (" + st.cls->eval_one().str() + ")");

        // downward closure: every nonempty subset of I must be a stratum
        if (key.size() > 1 && key.size() <= 16) {
            std::vector<std::string> ids(key.begin(), key.end());
            const size_t n = ids.size();
            for (size_t mask = 1; mask + 1 < (size_t{1} << n); ++mask) {
                ComponentSet sub;
                for (size_t i = 0; i < n; ++i)
                    if (mask & (size_t{1} << i)) sub.insert(ids[i]);
                if (!config.strata.count(sub)) {
                    report("downward closure violation", where,
                           "missing stratum for subset " + format_component_set(sub));
                    break;
                }
            }
        }
    }
    return out;
}

namespace {

long long gcd_over(const Configuration& config, const ComponentSet& ids) {
    long long g = 0;
    for (const auto& id : ids) {
        long long m = config.multiplicity(id);
        g = std::gcd(g, m < 0 ? -m : m);
    }
    return g;
}

} // namespace

long long gcd_multiplicity(const Configuration& config, const ComponentSet& I) {
    if (I.empty()) throw Error::argument("gcd_multiplicity: empty index set");
    return gcd_over(config, I);
}

long long cover_component_count(const Configuration& config, const ComponentSet& I) {
    auto it = config.strata.find(I);
    if (it == config.strata.end())
        throw Error::argument("no stratum for " + format_component_set(I));
    long long n = gcd_over(config, it->second.adjacency);
    if (n == 0)
        throw Error::validation("zero holonomy image on stratum " + format_component_set(I));
    return n;
}

RingElement cover_class(const Configuration& config, const ComponentSet& I) {
    auto it = config.strata.find(I);
    if (it == config.strata.end())
        throw Error::argument("no stratum for " + format_component_set(I));
    const Stratum& st = it->second;
    if (st.cover_class) return *st.cover_class;
    if (st.torus_cell && st.cls) {
        long long n = cover_component_count(config, I);
        return RingElement::from_class(static_cast<unsigned>(n), *st.cls);
    }
    throw Error::unrepresentable("unrepresentable cover on stratum " + format_component_set(I) +
                                 " (not a torus cell and no explicit cover class)");
}

} // namespace micc
