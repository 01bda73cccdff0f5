#include "micc/sweep.hpp"

#include <algorithm>
#include <sstream>

#include "micc/io.hpp"

namespace micc {

std::uint64_t SweepRng::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long long SweepRng::range(long long lo, long long hi) {
    if (lo > hi) throw Error::argument("empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return lo + static_cast<long long>(v % span);
}

bool SweepRng::chance(unsigned percent) { return range(1, 100) <= static_cast<long long>(percent); }

namespace {

ComponentSet pick_subset(SweepRng& rng, const std::vector<std::string>& pool, size_t size) {
    std::vector<std::string> bag = pool;
    ComponentSet out;
    for (size_t i = 0; i < size && !bag.empty(); ++i) {
        size_t at = static_cast<size_t>(rng.range(0, static_cast<long long>(bag.size()) - 1));
        out.insert(bag[at]);
        bag.erase(bag.begin() + static_cast<long long>(at));
    }
    return out;
}

LPoly random_class(SweepRng& rng, int max_degree) {
    LPoly p;
    int terms = static_cast<int>(rng.range(1, 3));
    for (int i = 0; i < terms; ++i) {
        unsigned k = static_cast<unsigned>(rng.range(0, std::max(0, max_degree)));
        long long c = rng.range(-3, 3);
        if (c == 0) c = 1;
        p = p + LPoly::monomial(k, BigInt(c));
    }
    return p;
}

RingElement random_ring_elem(SweepRng& rng, int max_degree) {
    RingElement e;
    int terms = static_cast<int>(rng.range(1, 3));
    for (int i = 0; i < terms; ++i) {
        unsigned n = static_cast<unsigned>(rng.range(1, 6));
        unsigned k = static_cast<unsigned>(rng.range(0, std::max(0, max_degree)));
        long long c = rng.range(-3, 3);
        if (c == 0) c = 2;
        e += RingElement::term(n, k, BigInt(c));
    }
    return e;
}

long long nonzero_mult(SweepRng& rng, int bound) {
    long long m = rng.range(1, bound);
    return rng.chance(50) ? m : -m;
}

// Downward-closed random stratum family over the component pool.
std::set<ComponentSet> random_stratum_keys(SweepRng& rng, const std::vector<std::string>& ids,
                                           int ambient_dim) {
    std::set<ComponentSet> keys;
    int seeds = static_cast<int>(rng.range(1, 3));
    for (int i = 0; i < seeds; ++i) {
        size_t size = static_cast<size_t>(
            rng.range(1, std::min<long long>(ambient_dim, static_cast<long long>(ids.size()))));
        ComponentSet top = pick_subset(rng, ids, size);
        std::vector<std::string> tv(top.begin(), top.end());
        for (size_t mask = 1; mask < (size_t{1} << tv.size()); ++mask) {
            ComponentSet sub;
            for (size_t b = 0; b < tv.size(); ++b)
                if (mask & (size_t{1} << b)) sub.insert(tv[b]);
            keys.insert(std::move(sub));
        }
    }
    // make sure every component carries its singleton stratum so that any
    // selection A has something to meet
    for (const auto& id : ids) keys.insert(ComponentSet{id});
    return keys;
}

ComponentSet neighbors(const Configuration& config, const ComponentSet& I) {
    ComponentSet out;
    for (const auto& c : config.components) {
        if (I.count(c.id)) continue;
        ComponentSet probe = I;
        probe.insert(c.id);
        if (config.strata.count(probe)) out.insert(c.id);
    }
    return out;
}

} // namespace

SweepCase generate_case(SweepRng& rng, const SweepOptions& opts) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        SweepCase sc;
        int d = static_cast<int>(rng.range(2, opts.max_ambient_dim));
        int ncomp = static_cast<int>(rng.range(2, opts.max_components));
        sc.config.ambient_dim = d;
        std::vector<std::string> ids;
        for (int i = 0; i < ncomp; ++i) {
            std::string id = "E" + std::to_string(i + 1);
            ids.push_back(id);
            sc.config.components.push_back({id, nonzero_mult(rng, opts.max_multiplicity)});
        }

        for (const auto& key : random_stratum_keys(rng, ids, d)) {
            Stratum st;
            st.components = key;
            st.cls = random_class(rng, d - static_cast<int>(key.size()));
            st.euler = st.cls->eval_one();
            st.adjacency = key;
            st.adjacency.merge(neighbors(sc.config, key));  // placeholder, fixed below
            st.torus_cell = true;
            sc.config.strata[key] = std::move(st);
        }
        // adjacency after the full family is known: I plus every component
        // that forms a deeper stratum with I, occasionally plus noise
        for (auto& [key, st] : sc.config.strata) {
            st.adjacency = key;
            for (const auto& j : neighbors(sc.config, key)) st.adjacency.insert(j);
            if (rng.chance(25)) {
                ComponentSet extra = pick_subset(rng, ids, 1);
                st.adjacency.insert(extra.begin(), extra.end());
            }
            if (rng.chance(10)) {
                st.cover_class = random_ring_elem(rng, d);
                st.torus_cell = rng.chance(50);
            }
        }

        // candidate containing sets
        std::vector<ComponentSet> candidates;
        for (const auto& [key, st] : sc.config.strata)
            if (key.size() <= 3) candidates.push_back(key);
        if (candidates.empty()) continue;
        ComponentSet I = candidates[static_cast<size_t>(
            rng.range(0, static_cast<long long>(candidates.size()) - 1))];
        const int k = static_cast<int>(I.size());
        ComponentSet nbrs = neighbors(sc.config, I);

        BlowupCenter center;
        center.containing = I;
        bool full_ok = k >= 2 && k <= d;
        // full intersections must declare every neighbour transversal, and
        // every deeper stratum over I must stay inside those neighbours
        if (full_ok) {
            for (const auto& [key, st] : sc.config.strata) {
                if (key.size() <= I.size() || !std::includes(key.begin(), key.end(), I.begin(), I.end()))
                    continue;
                for (const auto& x : key)
                    if (!I.count(x) && !nbrs.count(x)) full_ok = false;
            }
        }
        bool full = full_ok && rng.chance(50);
        if (full) {
            center.is_full_intersection = true;
            center.codim = k;
            center.transversal = nbrs;
        } else {
            if (k + 1 > d) continue;
            center.is_full_intersection = false;
            center.codim = static_cast<int>(rng.range(std::max(2, k + 1), d));
            long long room = d - center.codim;
            std::vector<std::string> nv(nbrs.begin(), nbrs.end());
            ComponentSet T = pick_subset(rng, nv, static_cast<size_t>(rng.range(0, std::min<long long>(2, room) < 0 ? 0 : std::min<long long>({2, room, static_cast<long long>(nv.size())}))));
            // keep only downward-closed K families that exist in the strata
            center.transversal = T;
            std::vector<std::string> tv(T.begin(), T.end());
            for (size_t mask = 0; mask < (size_t{1} << tv.size()); ++mask) {
                ComponentSet K;
                for (size_t b = 0; b < tv.size(); ++b)
                    if (mask & (size_t{1} << b)) K.insert(tv[b]);
                ComponentSet full_key = I;
                full_key.insert(K.begin(), K.end());
                if (!sc.config.strata.count(full_key)) {
                    if (K.size() == 1) {  // transversal components must meet Z
                        center.transversal.erase(*K.begin());
                    }
                    continue;
                }
                CenterStratum cs;
                cs.transversal_subset = K;
                cs.cls = random_class(rng, d - center.codim - static_cast<int>(K.size()));
                cs.euler = cs.cls->eval_one();
                cs.adjacency = full_key;
                if (rng.chance(25)) {
                    ComponentSet extra = pick_subset(rng, ids, 1);
                    cs.adjacency.insert(extra.begin(), extra.end());
                }
                cs.torus_cell = true;
                if (rng.chance(10)) cs.cover_class = random_ring_elem(rng, d);
                center.center_strata[K] = std::move(cs);
            }
            // prune K entries with transversal components that were dropped
            for (auto it = center.center_strata.begin(); it != center.center_strata.end();) {
                bool keep = std::includes(center.transversal.begin(), center.transversal.end(),
                                          it->first.begin(), it->first.end());
                it = keep ? std::next(it) : center.center_strata.erase(it);
            }
        }

        // exercise the m_* = 0 path: multiplicities over I summing to zero
        if (k >= 2 && rng.chance(15)) {
            std::vector<std::string> iv(I.begin(), I.end());
            long long sum = 0;
            for (size_t i = 0; i + 1 < iv.size(); ++i) {
                long long m = nonzero_mult(rng, opts.max_multiplicity / 2 ? opts.max_multiplicity / 2 : 1);
                for (auto& c : sc.config.components)
                    if (c.id == iv[i]) c.multiplicity = m;
                sum += m;
            }
            if (sum != 0) {
                for (auto& c : sc.config.components)
                    if (c.id == iv.back()) c.multiplicity = -sum;
            }
        }

        center.exceptional_id = "*";

        // selection: everything, or a random subset that meets I
        if (rng.chance(70)) {
            sc.selection = sc.config.all_ids();
        } else {
            sc.selection = pick_subset(rng, ids, static_cast<size_t>(rng.range(1, ncomp)));
            sc.selection.insert(*I.begin());
        }

        if (!validate(sc.config, /*strict_finite_type=*/false).empty()) continue;
        if (!validate_center(sc.config, center).empty()) continue;
        sc.center = std::move(center);
        return sc;
    }
    throw Error::argument("sweep generator failed to produce an admissible case");
}

std::string SweepSummary::render() const {
    std::ostringstream out;
    out << "sweep: " << passed << " passed, " << failed << " failed";
    if (first_failure_index)
        out << "\nfirst failure at case " << *first_failure_index << ":\n" << first_failure;
    out << "\n";
    return out.str();
}

SweepSummary run_sweep(const SweepOptions& opts) {
    SweepRng rng(opts.seed);
    SweepSummary summary;
    for (unsigned i = 0; i < opts.count; ++i) {
        SweepCase sc = generate_case(rng, opts);
        InvarianceReport rep = check_invariance(sc.config, sc.center, sc.selection);
        if (rep.pass) {
            ++summary.passed;
        } else {
            ++summary.failed;
            if (!summary.first_failure_index) {
                summary.first_failure_index = i;
                std::ostringstream detail;
                detail << "diff = " << rep.diff.render() << "\nconfiguration:\n"
                       << config_to_json(sc.config) << "center:\n"
                       << center_to_json(sc.center);
                summary.first_failure = detail.str();
            }
        }
    }
    return summary;
}

} // namespace micc
