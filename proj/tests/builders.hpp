#pragma once

// Configuration/center builders shared by the unit and acceptance
// suites.  The shipped fixture files mirror these for fixed
// multiplicities; test_io checks that they stay in sync.

#include "micc/blowup.hpp"
#include "micc/milnor.hpp"

namespace builders {

using micc::BlowupCenter;
using micc::CenterStratum;
using micc::ComponentSet;
using micc::Configuration;
using micc::LPoly;
using micc::ResolutionGraph;
using micc::Stratum;

inline LPoly lpow(unsigned a, unsigned b) {  // L^a (L-1)^b
    return LPoly::monomial(a, 1) * LPoly::binomial_L_minus_1_pow(b);
}

inline Stratum stratum(ComponentSet I, LPoly cls, ComponentSet adjacency) {
    Stratum st;
    st.components = std::move(I);
    st.euler = cls.eval_one();
    st.cls = std::move(cls);
    st.adjacency = std::move(adjacency);
    st.torus_cell = true;
    return st;
}

// Two curve germs through a point in a surface; the punctured branches
// are tori, the crossing is the interesting stratum.  This is also the
// configuration of the germ x^{m1} y^{m2}.
inline Configuration example_a(long long m1, long long m2, std::string id1 = "E1",
                               std::string id2 = "E2") {
    Configuration c;
    c.ambient_dim = 2;
    c.components = {{id1, m1}, {id2, m2}};
    ComponentSet both{id1, id2};
    c.strata[{id1}] = stratum({id1}, lpow(0, 1), both);
    c.strata[{id2}] = stratum({id2}, lpow(0, 1), both);
    c.strata[both] = stratum(both, LPoly::constant(1), both);
    return c;
}

inline BlowupCenter center_a(std::string id1 = "E1", std::string id2 = "E2") {
    BlowupCenter z;
    z.containing = {std::move(id1), std::move(id2)};
    z.codim = 2;
    z.is_full_intersection = true;
    z.exceptional_id = "E*";
    return z;
}

// One smooth curve, blow up a point on it (strict containment).
inline Configuration example_a_one_component(long long m1) {
    Configuration c;
    c.ambient_dim = 2;
    c.components = {{"E1", m1}};
    c.strata[{"E1"}] = stratum({"E1"}, LPoly::var(), {"E1"});
    return c;
}

inline BlowupCenter center_a_one_component() {
    BlowupCenter z;
    z.containing = {"E1"};
    z.codim = 2;
    z.is_full_intersection = false;
    z.exceptional_id = "E*";
    CenterStratum cs;
    cs.transversal_subset = {};
    cs.cls = LPoly::constant(1);
    cs.euler = 1;
    cs.adjacency = {"E1"};
    cs.torus_cell = true;
    z.center_strata[{}] = cs;
    return z;
}

// Three divisor germs through a point in a threefold.
inline Configuration example_b(long long m1, long long m2, long long m3) {
    Configuration c;
    c.ambient_dim = 3;
    c.components = {{"E1", m1}, {"E2", m2}, {"E3", m3}};
    ComponentSet all{"E1", "E2", "E3"};
    for (const auto& id : all) c.strata[{id}] = stratum({id}, lpow(0, 2), all);
    const char* pairs[3][2] = {{"E1", "E2"}, {"E1", "E3"}, {"E2", "E3"}};
    for (auto& p : pairs)
        c.strata[{p[0], p[1]}] = stratum({p[0], p[1]}, lpow(0, 1), all);
    c.strata[all] = stratum(all, LPoly::constant(1), all);
    return c;
}

inline BlowupCenter center_b() {
    BlowupCenter z;
    z.containing = {"E1", "E2", "E3"};
    z.codim = 3;
    z.is_full_intersection = true;
    z.exceptional_id = "E*";
    return z;
}

// Two divisors through a curve in a threefold; blow up a point of the curve.
inline Configuration example_c(long long m1, long long m2) {
    Configuration c;
    c.ambient_dim = 3;
    c.components = {{"E1", m1}, {"E2", m2}};
    ComponentSet both{"E1", "E2"};
    c.strata[{"E1"}] = stratum({"E1"}, lpow(1, 1), both);
    c.strata[{"E2"}] = stratum({"E2"}, lpow(1, 1), both);
    c.strata[both] = stratum(both, LPoly::var(), both);
    return c;
}

inline BlowupCenter center_c() {
    BlowupCenter z;
    z.containing = {"E1", "E2"};
    z.codim = 3;
    z.is_full_intersection = false;
    z.exceptional_id = "E*";
    CenterStratum cs;
    cs.transversal_subset = {};
    cs.cls = LPoly::constant(1);
    cs.euler = 1;
    cs.adjacency = {"E1", "E2"};
    cs.torus_cell = true;
    z.center_strata[{}] = cs;
    return z;
}

// Three divisor germs through a point; blow up the curve E1 n E2, which
// meets E3 transversally.
inline Configuration example_d(long long m1, long long m2, long long m3) {
    return example_b(m1, m2, m3);
}

inline BlowupCenter center_d() {
    BlowupCenter z;
    z.containing = {"E1", "E2"};
    z.transversal = {"E3"};
    z.codim = 2;
    z.is_full_intersection = true;
    z.exceptional_id = "E*";
    return z;
}

// Four divisor germs through a point in a fourfold; blow up the surface
// E1 n E2, transversal to E3 and E4.
inline Configuration example_e(long long m1, long long m2, long long m3, long long m4) {
    Configuration c;
    c.ambient_dim = 4;
    c.components = {{"E1", m1}, {"E2", m2}, {"E3", m3}, {"E4", m4}};
    std::vector<std::string> ids{"E1", "E2", "E3", "E4"};
    ComponentSet all(ids.begin(), ids.end());
    for (size_t mask = 1; mask < 16; ++mask) {
        ComponentSet key;
        for (size_t b = 0; b < 4; ++b)
            if (mask & (size_t{1} << b)) key.insert(ids[b]);
        c.strata[key] = stratum(key, lpow(0, static_cast<unsigned>(4 - key.size())), all);
    }
    return c;
}

inline BlowupCenter center_e() {
    BlowupCenter z;
    z.containing = {"E1", "E2"};
    z.transversal = {"E3", "E4"};
    z.codim = 2;
    z.is_full_intersection = true;
    z.exceptional_id = "E*";
    return z;
}

// Minimal embedded resolution of the cusp x^2 + y^3: three exceptional
// curves with multiplicities 2, 3, 6 and the strict transform at the
// multiplicity-6 curve.
inline ResolutionGraph cusp_graph() {
    ResolutionGraph g;
    g.vertices = {{"v2", 2, 0, true}, {"v3", 3, 0, true}, {"v6", 6, 0, true}};
    g.edges = {{"v2", "v6"}, {"v3", "v6"}};
    g.arrows = {{"v6", 1}};
    return g;
}

inline ResolutionGraph smooth_graph() {
    ResolutionGraph g;
    g.vertices = {{"v", 1, 0, true}};
    g.arrows = {{"v", 1}};
    return g;
}

} // namespace builders
