#include "micc/blowup.hpp"

#include <algorithm>
#include <numeric>

namespace micc {

namespace {

bool subset_of(const ComponentSet& a, const ComponentSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ComponentSet set_union(const ComponentSet& a, const ComponentSet& b) {
    ComponentSet r = a;
    r.insert(b.begin(), b.end());
    return r;
}

ComponentSet set_diff(const ComponentSet& a, const ComponentSet& b) {
    ComponentSet r;
    for (const auto& x : a)
        if (!b.count(x)) r.insert(x);
    return r;
}

long long adjacency_gcd(const Configuration& config, const ComponentSet& adjacency) {
    long long g = 0;
    for (const auto& id : adjacency) {
        long long m = config.multiplicity(id);
        g = std::gcd(g, m < 0 ? -m : m);
    }
    return g;
}

// Normalized view of the center stratum data for a subset K, whether it
// comes from the center (strict containment) or from the configuration
// itself (full intersection).
struct CenterData {
    std::optional<LPoly> cls;
    BigInt euler;
    ComponentSet adjacency;
    bool torus_cell = false;
    std::optional<RingElement> explicit_cover;
};

std::map<ComponentSet, CenterData> collect_center_data(const Configuration& config,
                                                       const BlowupCenter& center) {
    std::map<ComponentSet, CenterData> out;
    if (center.is_full_intersection) {
        for (const auto& [key, st] : config.strata) {
            if (!subset_of(center.containing, key)) continue;
            ComponentSet K = set_diff(key, center.containing);
            out[K] = CenterData{st.cls, st.euler, st.adjacency, st.torus_cell, st.cover_class};
        }
    } else {
        for (const auto& [K, cs] : center.center_strata)
            out[K] = CenterData{cs.cls, cs.euler, cs.adjacency, cs.torus_cell, cs.cover_class};
    }
    return out;
}

// [Z~_K^o]: explicit override, or [mu_N] * class with N the gcd over the
// stratum's adjacency extended by * (the extension never changes the
// gcd, since the containing set lies in the adjacency and m_* is the sum
// of its multiplicities).
RingElement center_cover(const Configuration& config, const ComponentSet& K, const CenterData& cd,
                         long long m_star) {
    if (cd.explicit_cover) return *cd.explicit_cover;
    if (cd.torus_cell && cd.cls) {
        long long g = adjacency_gcd(config, cd.adjacency);
        g = std::gcd(g, m_star < 0 ? -m_star : m_star);
        if (g == 0)
            throw Error::validation("zero holonomy image on center stratum " + format_component_set(K));
        return RingElement::from_class(static_cast<unsigned>(g), *cd.cls);
    }
    throw Error::unrepresentable("unrepresentable center-stratum cover for K = " +
                                 format_component_set(K));
}

} // namespace

std::vector<Diagnostic> validate_center(const Configuration& config, const BlowupCenter& center) {
    std::vector<Diagnostic> out;
    auto report = [&](std::string code, std::string subject, std::string message) {
        out.push_back({std::move(code), std::move(subject), std::move(message)});
    };
    const ComponentSet& I = center.containing;
    const int k = static_cast<int>(I.size());

    if (I.empty()) report("invalid center", "containing", "containing set must be nonempty");
    for (const auto& id : I)
        if (!config.has_component(id)) report("unknown component", id, "containing references missing id");
    for (const auto& id : center.transversal) {
        if (!config.has_component(id)) report("unknown component", id, "transversal references missing id");
        if (I.count(id))
            report("invalid center", id, "component is listed both as containing and transversal");
    }
    if (!out.empty()) return out;

    if (center.codim < 2)
        report("invalid center", "codim", "blow-up centers must have codimension >= 2");
    if (center.codim > config.ambient_dim)
        report("invalid center", "codim", "codimension exceeds ambient_dim");
    if (center.is_full_intersection) {
        if (center.codim != k)
            report("invalid center", "codim", "Z = E_I has codimension |I| in X");
        if (!center.center_strata.empty())
            report("invalid center", "center_strata",
                   "full-intersection centers read their strata from the configuration");
    } else if (center.codim <= k) {
        report("invalid center", "codim", "strict containment requires codim > |I|");
    }
    if (!config.strata.count(I))
        report("invalid center", format_component_set(I), "no stratum for the containing set");
    if (center.exceptional_id && config.has_component(*center.exceptional_id))
        report("invalid center", *center.exceptional_id, "exceptional id collides with a component");

    if (center.is_full_intersection) {
        // every component whose divisor meets Z = E_I must be declared transversal
        for (const auto& [key, st] : config.strata) {
            if (!subset_of(I, key) || key == I) continue;
            ComponentSet extra = set_diff(key, I);
            if (!subset_of(extra, center.transversal))
                report("invalid center", format_component_set(key),
                       "stratum meets Z but its components are not declared transversal");
        }
        for (const auto& j : center.transversal)
            if (!config.strata.count(set_union(I, {j})))
                report("invalid center", j, "transversal component does not meet Z (no stratum E_{I u j})");
    } else {
        if (!center.center_strata.count(ComponentSet{}))
            report("invalid center", "center_strata", "missing data for the dense center stratum (K = {})");
        for (const auto& j : center.transversal)
            if (!center.center_strata.count(ComponentSet{j}))
                report("invalid center", j, "transversal component has no center-stratum data for K = {" + j + "}");
        for (const auto& [K, cs] : center.center_strata) {
            const std::string where = format_component_set(K);
            if (!subset_of(K, center.transversal))
                report("invalid center", where, "center-stratum key is not a subset of the transversal set");
            if (K != cs.transversal_subset)
                report("invalid center", where, "center-stratum key differs from its own subset field");
            if (!config.strata.count(set_union(I, K)))
                report("invalid center", where, "no configuration stratum E_{I u K} to carve the center from");
            if (!subset_of(set_union(I, K), cs.adjacency))
                report("invalid center", where, "center-stratum adjacency must contain I u K");
            for (const auto& id : cs.adjacency)
                if (!config.has_component(id))
                    report("unknown component", where, "center-stratum adjacency references missing id '" + id + "'");
            if (cs.cls && cs.cls->eval_one() != cs.euler)
                report("Euler/class mismatch", where,
                       "center-stratum euler != class at L=1");
            if (center.codim + static_cast<int>(K.size()) > config.ambient_dim)
                report("invalid center", where, "center stratum would have negative dimension");
            // downward closure of the provided K family
            for (const auto& j : K) {
                ComponentSet sub = K;
                sub.erase(j);
                if (!center.center_strata.count(sub))
                    report("invalid center", where,
                           "center strata must be downward closed (missing K = " + format_component_set(sub) + ")");
            }
        }
    }
    return out;
}

BlowupResult blowup(const Configuration& config, const BlowupCenter& center) {
    {
        auto diags = validate(config, /*strict_finite_type=*/false);
        if (!diags.empty())
            throw Error::validation("invalid configuration: " + diags.front().to_string());
        auto cdiags = validate_center(config, center);
        if (!cdiags.empty())
            throw Error::validation("invalid center: " + cdiags.front().to_string());
    }

    const ComponentSet& I = center.containing;
    const unsigned k = static_cast<unsigned>(I.size());
    const unsigned r = static_cast<unsigned>(center.codim) - 1;  // E_* has P^r fibers

    std::string star = center.exceptional_id.value_or("");
    if (star.empty()) {
        star = "*";
        for (int suffix = 2; config.has_component(star); ++suffix)
            star = "*" + std::to_string(suffix);
    }

    long long m_star = 0;
    for (const auto& id : I) m_star += config.multiplicity(id);

    auto center_data = collect_center_data(config, center);

    Configuration out;
    out.ambient_dim = config.ambient_dim;
    out.components = config.components;
    out.components.push_back({star, m_star});

    // steps 3 and 4: transported strata
    for (const auto& [H, st] : config.strata) {
        if (!subset_of(I, H)) {
            out.strata[H] = st;  // blow-down is an isomorphism off Z
            continue;
        }
        if (center.is_full_intersection) continue;  // proper transforms of E_I vanish
        ComponentSet K = set_diff(H, I);
        auto cd = center_data.find(K);
        if (!subset_of(K, center.transversal) || cd == center_data.end()) {
            out.strata[H] = st;  // Z misses this stratum
            continue;
        }
        Stratum ns = st;
        ns.euler = st.euler - cd->second.euler;
        if (st.cls && cd->second.cls)
            ns.cls = *st.cls - *cd->second.cls;
        else
            ns.cls.reset();
        bool plain = !st.cover_class && !cd->second.explicit_cover && st.torus_cell &&
                     cd->second.torus_cell && st.cls && cd->second.cls &&
                     adjacency_gcd(config, st.adjacency) == adjacency_gcd(config, cd->second.adjacency);
        if (!plain) {
            // scissor relation on the covers themselves
            RingElement old_cover;
            bool old_ok = true;
            try {
                old_cover = cover_class(config, H);
            } catch (const Error&) {
                old_ok = false;
            }
            if (old_ok) {
                ns.cover_class = old_cover - center_cover(config, K, cd->second, m_star);
                ns.torus_cell = false;
            } else {
                ns.torus_cell = false;  // cover stays uncomputable, as before the blow-up
                ns.cover_class.reset();
            }
        }
        out.strata[H] = std::move(ns);
    }

    // step 2: exceptional strata
    for (const auto& [K, cd] : center_data) {
        RingElement zcov = center_cover(config, K, cd, m_star);
        ComponentSet base_adj = set_union(cd.adjacency, {star});
        std::vector<std::string> ivec(I.begin(), I.end());
        const size_t nsubsets = size_t{1} << ivec.size();
        for (size_t mask = 0; mask < nsubsets; ++mask) {
            ComponentSet G;
            for (size_t i = 0; i < ivec.size(); ++i)
                if (mask & (size_t{1} << i)) G.insert(ivec[i]);
            const bool g_full = G.size() == k;
            if (g_full && center.is_full_intersection) continue;  // cap E'_i over I is empty

            LPoly factor = g_full
                               ? LPoly::projective(r - k)
                               : LPoly::monomial(r - k + 1, 1) *
                                     LPoly::binomial_L_minus_1_pow(k - static_cast<unsigned>(G.size()) - 1);

            Stratum ns;
            ns.components = set_union(set_union(G, K), {star});
            if (cd.cls) ns.cls = *cd.cls * factor;
            ns.euler = cd.euler * factor.eval_one();
            ns.adjacency = set_union(base_adj, set_diff(I, G));

            bool recipe_ok = !cd.explicit_cover && cd.torus_cell && cd.cls && (!g_full || r == k);
            if (recipe_ok) {
                ns.torus_cell = true;  // torus-cell fiber over a torus-cell base
            } else {
                ns.torus_cell = false;
                ns.cover_class = zcov * RingElement::from_class(1, factor);
            }
            out.strata[ns.components] = std::move(ns);
        }
    }

    return {std::move(out), star};
}

InvarianceReport check_invariance(const Configuration& config, const BlowupCenter& center,
                                  const ComponentSet& A) {
    if (A.empty()) throw Error::argument("selection A must be nonempty");
    bool meets_center = std::any_of(center.containing.begin(), center.containing.end(),
                                    [&](const std::string& id) { return A.count(id) > 0; });
    if (!meets_center)
        throw Error::argument("selection A must meet the containing set of the center");

    InvarianceReport rep;
    rep.before_terms = motive_breakdown(config, A);
    for (const auto& t : rep.before_terms) rep.before += t.term;

    BlowupResult blown = blowup(config, center);
    rep.exceptional_id = blown.exceptional_id;
    ComponentSet Aprime = A;
    Aprime.insert(blown.exceptional_id);
    rep.after_terms = motive_breakdown(blown.config, Aprime);
    for (const auto& t : rep.after_terms) rep.after += t.term;

    rep.diff = rep.before - rep.after;
    rep.pass = rep.diff.is_zero();
    return rep;
}

} // namespace micc
