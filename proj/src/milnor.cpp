#include "micc/milnor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "micc/motive.hpp"

namespace micc {

const GraphVertex* ResolutionGraph::find_vertex(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

std::vector<Diagnostic> validate_graph(const ResolutionGraph& g) {
    std::vector<Diagnostic> out;
    auto report = [&](std::string code, std::string subject, std::string message) {
        out.push_back({std::move(code), std::move(subject), std::move(message)});
    };

    std::set<std::string> ids;
    for (const auto& v : g.vertices) {
        if (!ids.insert(v.id).second) report("duplicate vertex", v.id, "vertex id appears twice");
        if (v.multiplicity < 1) report("invalid multiplicity", v.id, "vertex multiplicity must be positive");
        if (v.genus < 0) report("invalid genus", v.id, "genus must be nonnegative");
    }
    for (const auto& [a, b] : g.edges) {
        if (!ids.count(a)) report("unknown vertex", a, "edge endpoint missing");
        if (!ids.count(b)) report("unknown vertex", b, "edge endpoint missing");
        if (a == b) report("self-loop", a, "normal crossing graphs have no self-loops");
    }
    for (const auto& [v, m] : g.arrows) {
        if (!ids.count(v)) report("unknown vertex", v, "arrow attached to missing vertex");
        if (m < 1) report("invalid multiplicity", v, "arrow multiplicity must be positive");
    }
    if (g.vertices.empty()) {
        report("empty graph", "-", "resolution graph needs at least one vertex");
        return out;
    }

    // connectivity over vertices
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [a, b] : g.edges)
        if (ids.count(a) && ids.count(b) && a != b) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    std::set<std::string> seen{g.vertices.front().id};
    std::vector<std::string> queue{g.vertices.front().id};
    while (!queue.empty()) {
        std::string v = queue.back();
        queue.pop_back();
        for (const auto& w : adj[v])
            if (seen.insert(w).second) queue.push_back(w);
    }
    if (seen.size() != ids.size()) report("disconnected graph", "-", "all vertices must be connected by edges");
    return out;
}

MilnorSelection select_exceptional(const ResolutionGraph& g) {
    MilnorSelection sel;
    for (const auto& v : g.vertices)
        if (v.exceptional) sel.ids.insert(v.id);
    if (sel.ids.empty()) throw Error::argument("graph has no exceptional vertices");
    return sel;
}

MilnorSelection select_ids(const ResolutionGraph& g, const ComponentSet& ids) {
    if (ids.empty()) throw Error::argument("selection must be nonempty");
    for (const auto& id : ids)
        if (!g.find_vertex(id)) throw Error::argument("selection references unknown vertex '" + id + "'");
    return {ids};
}

namespace {

void require_valid(const ResolutionGraph& g) {
    auto diags = validate_graph(g);
    if (!diags.empty()) throw Error::validation("invalid resolution graph: " + diags.front().to_string());
}

std::map<std::string, int> valences(const ResolutionGraph& g) {
    std::map<std::string, int> val;
    for (const auto& v : g.vertices) val[v.id] = 0;
    for (const auto& [a, b] : g.edges) {
        ++val[a];
        ++val[b];
    }
    for (const auto& [v, m] : g.arrows) ++val[v];
    return val;
}

} // namespace

Configuration graph_to_config(const ResolutionGraph& g) {
    require_valid(g);
    auto val = valences(g);

    Configuration config;
    config.ambient_dim = 2;
    for (const auto& v : g.vertices) config.components.push_back({v.id, v.multiplicity});

    // incidence -> adjacency of the singleton strata
    std::map<std::string, ComponentSet> touch;
    for (const auto& v : g.vertices) touch[v.id].insert(v.id);
    for (const auto& [a, b] : g.edges) {
        touch[a].insert(b);
        touch[b].insert(a);
    }

    // strict-transform branches become components of their own
    int arrow_no = 0;
    for (const auto& [vid, m] : g.arrows) {
        std::string bid = "br" + std::to_string(++arrow_no);
        config.components.push_back({bid, m});
        touch[vid].insert(bid);

        Stratum bs;  // punctured branch curve
        bs.components = {bid};
        bs.cls = LPoly::var() - LPoly::constant(1);
        bs.euler = 0;
        bs.adjacency = {bid, vid};
        bs.torus_cell = true;
        config.strata[bs.components] = bs;

        Stratum pt;  // crossing of the branch with its vertex curve
        pt.components = {bid, vid};
        pt.cls = LPoly::constant(1);
        pt.euler = 1;
        pt.adjacency = {bid, vid};
        pt.torus_cell = true;
        config.strata[pt.components] = pt;
    }

    for (const auto& v : g.vertices) {
        Stratum st;
        st.components = {v.id};
        st.euler = BigInt(2 - 2 * v.genus - val[v.id]);
        if (v.genus == 0)
            st.cls = LPoly::projective(1) - LPoly::constant(val[v.id]);
        st.adjacency = touch[v.id];
        st.torus_cell = v.genus == 0 && val[v.id] <= 2;
        if (!st.torus_cell && st.cls) {
            long long n = 0;
            for (const auto& id : st.adjacency) {
                long long m = 0;
                for (const auto& c : config.components)
                    if (c.id == id) m = c.multiplicity;
                n = std::gcd(n, m);
            }
            // The cover splits into n pieces; only when n = m_i is every
            // piece a 1-fold (hence genus-0) cover.  Anything else can
            // have positive genus, which R cannot express.
            if (n == v.multiplicity)
                st.cover_class = RingElement::from_class(static_cast<unsigned>(n), *st.cls);
        }
        config.strata[st.components] = st;
    }

    for (const auto& [a, b] : g.edges) {
        Stratum pt;
        pt.components = {a, b};
        pt.cls = LPoly::constant(1);
        pt.euler = 1;
        pt.adjacency = {a, b};
        pt.torus_cell = true;
        config.strata[pt.components] = pt;
    }

    return config;
}

RingElement motivic_milnor_fiber(const ResolutionGraph& g, const MilnorSelection& sel) {
    Configuration config = graph_to_config(g);
    return motive(config, sel.ids);
}

CyclotomicRational acampo_zeta(const ResolutionGraph& g, const MilnorSelection& sel) {
    require_valid(g);
    auto val = valences(g);
    CyclotomicRational z;
    for (const auto& v : g.vertices) {
        if (!sel.ids.count(v.id)) continue;
        BigInt chi = 2 - 2 * v.genus - val[v.id];
        z = z * CyclotomicRational::factor(static_cast<unsigned>(v.multiplicity), -chi);
    }
    return z;
}

BigInt milnor_euler(const ResolutionGraph& g, const MilnorSelection& sel) {
    require_valid(g);
    auto val = valences(g);
    BigInt sum = 0;
    for (const auto& v : g.vertices) {
        if (!sel.ids.count(v.id)) continue;
        sum += BigInt(v.multiplicity) * BigInt(2 - 2 * v.genus - val[v.id]);
    }
    return sum;
}

} // namespace micc
