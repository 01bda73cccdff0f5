#include <doctest.h>

#include "builders.hpp"
#include "micc/motive.hpp"
#include "micc/realization.hpp"
#include "micc/sweep.hpp"

using namespace micc;

namespace {

RingElement L() { return RingElement::L(); }
RingElement mu(unsigned n) { return RingElement::mu(n); }
RingElement num(long long c) { return RingElement::term(1, 0, c); }

RingElement random_element(SweepRng& rng) {
    RingElement e;
    long long terms = rng.range(0, 5);
    for (long long i = 0; i < terms; ++i)
        e += RingElement::term(static_cast<unsigned>(rng.range(1, 10)),
                               static_cast<unsigned>(rng.range(0, 5)), rng.range(-9, 9));
    return e;
}

// det(Id - t P) for the cyclic permutation matrix on n points, computed
// by Leibniz expansion over all permutations; the H^0_c oracle behind
// the basis value of zeta.
std::vector<long long> char_det_cycle(unsigned n) {
    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = (i + 1) % n;
    std::vector<unsigned> idx(n);
    for (unsigned i = 0; i < n; ++i) idx[i] = i;
    std::vector<long long> det(n + 1, 0);
    int sign;
    auto parity = [](std::vector<unsigned> p) {
        int s = 1;
        for (unsigned i = 0; i < p.size(); ++i)
            while (p[i] != i) {
                std::swap(p[i], p[p[i]]);
                s = -s;
            }
        return s;
    };
    std::sort(idx.begin(), idx.end());
    do {
        // entry (i, idx[i]) of Id - tP: 1 at the diagonal, -t where the
        // permutation moves i, zero elsewhere
        unsigned tpow = 0;
        bool zero = false;
        for (unsigned i = 0; i < n && !zero; ++i) {
            if (idx[i] == i && perm[i] != i) continue;      // diagonal 1 (plus -t if fixed)
            if (idx[i] == i && perm[i] == i) continue;      // 1 - t handled below; n=1 only
            if (idx[i] == perm[i]) { ++tpow; continue; }    // -t entry
            zero = true;
        }
        if (n == 1) break;  // handled after the loop
        if (zero) continue;
        sign = parity(idx);
        det[tpow] += sign * ((tpow % 2) ? -1 : 1);
    } while (std::next_permutation(idx.begin(), idx.end()));
    if (n == 1) {
        det.assign(2, 0);
        det[0] = 1;
        det[1] = -1;  // 1 - t
    }
    return det;
}

} // namespace

TEST_CASE("the permutation-determinant oracle freezes the basis zeta value") {
    for (unsigned n = 1; n <= 6; ++n) {
        auto det = char_det_cycle(n);
        std::vector<long long> expected(n + 1, 0);  // 1 - t^n
        expected[0] = 1;
        expected[n] = -1;
        CHECK(det == expected);
        CHECK(zeta(mu(n)) == CyclotomicRational::factor(n, -1));
        CHECK(zeta(mu(n) * L().pow(2)) == CyclotomicRational::factor(n, -1));
    }
}

TEST_CASE("euler on the examples") {
    CHECK(euler(mu(6)) == 6);
    SweepRng rng(12);
    for (int i = 0; i < 30; ++i) {
        RingElement x = random_element(rng);
        CHECK(euler((L() - num(1)) * x) == 0);
    }
    unsigned g = 3;
    CHECK(euler(mu(g) * (L() - num(1)).pow(2)) == 0);
}

TEST_CASE("euler is a ring homomorphism") {
    SweepRng rng(77);
    for (int i = 0; i < 60; ++i) {
        RingElement x = random_element(rng);
        RingElement y = random_element(rng);
        CHECK(euler(x + y) == euler(x) + euler(y));
        CHECK(euler(x * y) == euler(x) * euler(y));
    }
    CHECK(euler(num(1)) == 1);
}

TEST_CASE("zeta sends sums to products, and kills (L-1) multiples") {
    SweepRng rng(78);
    for (int i = 0; i < 60; ++i) {
        RingElement x = random_element(rng);
        RingElement y = random_element(rng);
        CHECK(zeta(x + y) == zeta(x) * zeta(y));
        CHECK(zeta((L() - num(1)) * x).is_one());
    }
}

TEST_CASE("exponent accounting ties zeta to euler") {
    SweepRng rng(79);
    for (int i = 0; i < 60; ++i) {
        RingElement x = random_element(rng);
        BigInt acc = 0;
        for (const auto& [n, e] : zeta(x).exponents()) acc += BigInt(n) * e;
        CHECK(acc == -euler(x));
    }
}

TEST_CASE("closed-form zeta over singleton strata") {
    // single component, m = 3, chi = 2
    Configuration c;
    c.ambient_dim = 2;
    c.components = {{"E1", 3}};
    Stratum st;
    st.components = {"E1"};
    st.cls = LPoly::projective(1);  // P^1, chi = 2
    st.euler = 2;
    st.adjacency = {"E1"};
    st.torus_cell = false;
    c.strata[{"E1"}] = st;
    CHECK(zeta_closed_form(c, {"E1"}) == CyclotomicRational::factor(3, -2));

    // all chi = 0: empty product
    auto a = builders::example_a(4, 6);
    CHECK(zeta_closed_form(a, a.all_ids()).is_one());

    // negative multiplicities use |m|
    auto an = builders::example_a(-3, 3);
    an.strata[{"E1"}].cls = LPoly::var();
    an.strata[{"E1"}].euler = 1;
    an.strata[{"E1"}].adjacency = {"E1"};
    CHECK(zeta_closed_form(an, {"E1"}) == CyclotomicRational::factor(3, -1));
}

TEST_CASE("cusp multiplicities give the A'Campo factors") {
    // multiplicities 2, 3, 6 with chi = 1, 1, -1
    Configuration c;
    c.ambient_dim = 2;
    c.components = {{"v2", 2}, {"v3", 3}, {"v6", 6}};
    auto add = [&](const std::string& id, LPoly cls, BigInt chi) {
        Stratum st;
        st.components = {id};
        st.cls = std::move(cls);
        st.euler = std::move(chi);
        st.adjacency = {id};
        st.torus_cell = false;
        c.strata[{id}] = st;
    };
    add("v2", LPoly::var(), 1);
    add("v3", LPoly::var(), 1);
    add("v6", LPoly::var() - LPoly::constant(2), -1);
    auto z = zeta_closed_form(c, c.all_ids());
    CHECK(z == CyclotomicRational::factor(2, -1) * CyclotomicRational::factor(3, -1) *
                   CyclotomicRational::factor(6, 1));
    CHECK(z.render() == "(1-t^2)^-1 (1-t^3)^-1 (1-t^6)^1");
}

TEST_CASE("realization consistency on torus-cell fixtures") {
    auto check_fixture = [](const Configuration& c) {
        ComponentSet A = c.all_ids();
        RingElement m = motive(c, A);
        CHECK(zeta(m) == zeta_closed_form(c, A));
        BigInt expected = 0;
        for (const auto& comp : c.components) {
            auto it = c.strata.find(ComponentSet{comp.id});
            if (it == c.strata.end()) continue;
            long long mm = comp.multiplicity < 0 ? -comp.multiplicity : comp.multiplicity;
            expected += BigInt(mm) * it->second.euler;
        }
        CHECK(euler(m) == expected);
    };
    check_fixture(builders::example_a(4, 6));
    check_fixture(builders::example_a(2, 3));
    check_fixture(builders::example_b(2, 4, 6));
    check_fixture(builders::example_c(4, 6));
    check_fixture(builders::example_e(2, 4, 6, 8));
    check_fixture(builders::example_a_one_component(5));
}

TEST_CASE("cyclotomic rendering and parsing round trip") {
    auto z = CyclotomicRational::factor(2, -1) * CyclotomicRational::factor(6, 3);
    CHECK(CyclotomicRational::parse(z.render()) == z);
    CHECK(CyclotomicRational::parse("1").is_one());
    CHECK(CyclotomicRational::parse("(1-t^1)^-1") == CyclotomicRational::factor(1, -1));
    CHECK(CyclotomicRational::parse("(1-t^2)^-1 (1-t^2)^1").is_one());
    CHECK_THROWS_AS(CyclotomicRational::parse("(1-t^0)^1"), Error);
    CHECK_THROWS_AS(CyclotomicRational::parse("(1+t^2)^1"), Error);
    CHECK((z * z.inverse()).is_one());
}

TEST_CASE("expansion into an integer fraction") {
    // (1-t^6) / ((1-t^2)(1-t^3)) is the monodromy zeta of the cusp;
    // cross-multiplied against (1-t+t^2)/(1-t) they must agree
    auto z = CyclotomicRational::factor(2, -1) * CyclotomicRational::factor(3, -1) *
             CyclotomicRational::factor(6, 1);
    auto [num_, den_] = z.expand(16);
    std::vector<BigInt> reduced_num{1, -1, 1};  // 1 - t + t^2
    std::vector<BigInt> reduced_den{1, -1};     // 1 - t
    auto mul = [](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
        std::vector<BigInt> r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        while (r.size() > 1 && r.back() == 0) r.pop_back();
        return r;
    };
    CHECK(mul(num_, reduced_den) == mul(den_, reduced_num));
    CHECK_THROWS_AS(z.expand(3), Error);
}
