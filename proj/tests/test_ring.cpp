#include <doctest.h>

#include <numeric>
#include <vector>

#include "micc/ring.hpp"
#include "micc/sweep.hpp"

using micc::BigInt;
using micc::LPoly;
using micc::RingElement;

namespace {

RingElement L() { return RingElement::L(); }
RingElement mu(unsigned n) { return RingElement::mu(n); }
RingElement num(long long c) { return RingElement::term(1, 0, c); }

// Brute-force oracle for the basis product: orbits of the diagonal shift
// (x,y) -> (x+1, y+1) on Z/a x Z/b.  Returns {orbit count, orbit size}
// and checks that all orbits share one size.
std::pair<long long, long long> orbit_oracle(long long a, long long b) {
    std::vector<char> seen(static_cast<size_t>(a * b), 0);
    long long orbits = 0, size = 0;
    for (long long x = 0; x < a; ++x)
        for (long long y = 0; y < b; ++y) {
            if (seen[static_cast<size_t>(x * b + y)]) continue;
            ++orbits;
            long long len = 0, cx = x, cy = y;
            do {
                seen[static_cast<size_t>(cx * b + cy)] = 1;
                cx = (cx + 1) % a;
                cy = (cy + 1) % b;
                ++len;
            } while (cx != x || cy != y);
            if (size == 0) size = len;
            REQUIRE(size == len);
        }
    return {orbits, size};
}

RingElement random_element(micc::SweepRng& rng) {
    RingElement e;
    long long terms = rng.range(0, 5);
    for (long long i = 0; i < terms; ++i) {
        unsigned n = static_cast<unsigned>(rng.range(1, 12));
        unsigned k = static_cast<unsigned>(rng.range(0, 6));
        long long c = rng.range(-9, 9);
        e += RingElement::term(n, k, c);
    }
    return e;
}

} // namespace

TEST_CASE("addition matches the stated identities") {
    CHECK((L() - num(1)) + num(1) == L());
    CHECK(mu(2) * (L() - num(1)) + mu(2) == mu(2) * L());
    RingElement x = mu(3) * L() - num(7);
    CHECK((x + (-x)).is_zero());
}

TEST_CASE("basis product rule on frozen oracle values") {
    // values computed by orbit_oracle and frozen:
    //   (2,3) -> 1 orbit of size 6;  (4,6) -> 2 orbits of size 12;
    //   (2,2) -> 2 orbits of size 2
    CHECK(orbit_oracle(2, 3) == std::pair<long long, long long>{1, 6});
    CHECK(mu(2) * mu(3) == mu(6));
    CHECK(orbit_oracle(4, 6) == std::pair<long long, long long>{2, 12});
    CHECK(mu(4) * mu(6) == num(2) * mu(12));
    CHECK(orbit_oracle(2, 2) == std::pair<long long, long long>{2, 2});
    CHECK(mu(2).pow(2) == num(2) * mu(2));
}

TEST_CASE("basis product rule against the orbit oracle, all orders <= 24") {
    for (long long a = 1; a <= 24; ++a)
        for (long long b = 1; b <= 24; ++b) {
            auto [orbits, size] = orbit_oracle(a, b);
            RingElement expected =
                RingElement::term(static_cast<unsigned>(size), 0, orbits);
            CHECK(mu(static_cast<unsigned>(a)) * mu(static_cast<unsigned>(b)) == expected);
            CHECK(orbits == std::gcd(a, b));
            CHECK(size == std::lcm(a, b));
        }
}

TEST_CASE("pow") {
    CHECK((L() - num(1)).pow(2) == L() * L() - num(2) * L() + num(1));
    RingElement x = mu(5) * L() + num(3);
    CHECK(x.pow(1) == x);
    CHECK(x.pow(0) == num(1));
}

TEST_CASE("projective classes") {
    CHECK(RingElement::projective_class(0) == num(1));
    CHECK(RingElement::projective_class(1) == L() + num(1));
    CHECK(RingElement::projective_class(2) == L().pow(2) + L() + num(1));
}

TEST_CASE("unit and zero behave") {
    micc::SweepRng rng(7);
    for (int i = 0; i < 50; ++i) {
        RingElement x = random_element(rng);
        CHECK(x * mu(1) == x);
        CHECK(x * num(1) == x);
        CHECK((x * RingElement::zero()).is_zero());
        CHECK(x + RingElement::zero() == x);
    }
}

TEST_CASE("ring axioms on random elements") {
    micc::SweepRng rng(20260810);
    for (int i = 0; i < 120; ++i) {
        RingElement a = random_element(rng);
        RingElement b = random_element(rng);
        RingElement c = random_element(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("stratification identity for projective space") {
    auto binom = [](unsigned n, unsigned k) {
        BigInt r = 1;
        for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    for (unsigned r = 0; r <= 7; ++r)
        for (unsigned k = 1; k <= r + 1; ++k) {
            RingElement rhs = k <= r ? RingElement::projective_class(r - k) : RingElement::zero();
            for (unsigned l = 0; l < k; ++l) {
                RingElement piece = RingElement::term(1, r - k + 1, binom(k, l)) *
                                    (L() - num(1)).pow(k - l - 1);
                rhs += piece;
            }
            CHECK(RingElement::projective_class(r) == rhs);
        }
}

TEST_CASE("LPoly arithmetic and evaluation") {
    LPoly p = LPoly::projective(2);
    CHECK(p.eval_one() == 3);
    CHECK((p - p).is_zero());
    LPoly lm1 = LPoly::binomial_L_minus_1_pow(3);
    CHECK(lm1.eval_one() == 0);
    CHECK(RingElement::from_class(1, LPoly::projective(2)) == RingElement::projective_class(2));
}

TEST_CASE("rendering") {
    CHECK(RingElement::zero().render() == "0");
    CHECK(num(1).render() == "1");
    CHECK(num(-1).render() == "-1");
    CHECK(mu(2).render() == "[mu_2]");
    CHECK((num(3) * L().pow(2) - mu(2) * L()).render() == "3*L^2 - [mu_2]*L");
    CHECK((-(mu(2) * (L() - num(1)))).render() == "-[mu_2]*L + [mu_2]");
    CHECK((L() - num(1)).pow(2).render() == "L^2 - 2*L + 1");
}

TEST_CASE("parsing the documented grammar") {
    CHECK(RingElement::parse("-[mu_2]*(L-1) + 3*L^2") == num(3) * L().pow(2) - mu(2) * (L() - num(1)));
    CHECK(RingElement::parse("(L-1)^2") == (L() - num(1)).pow(2));
    CHECK(RingElement::parse("0").is_zero());
    CHECK(RingElement::parse(" [mu_12] * L ^ 3 ") == mu(12) * L().pow(3));
    CHECK(RingElement::parse("--L") == L());
    CHECK(RingElement::parse("2*3") == num(6));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(RingElement::parse(""), micc::Error);
    CHECK_THROWS_AS(RingElement::parse("[mu_0]"), micc::Error);
    CHECK_THROWS_AS(RingElement::parse("L^"), micc::Error);
    CHECK_THROWS_AS(RingElement::parse("(L-1"), micc::Error);
    CHECK_THROWS_AS(RingElement::parse("L + + "), micc::Error);
    CHECK_THROWS_AS(RingElement::parse("1x"), micc::Error);
}

TEST_CASE("round trip: parse after render is the identity") {
    micc::SweepRng rng(99);
    for (int i = 0; i < 200; ++i) {
        RingElement x = random_element(rng);
        CHECK(RingElement::parse(x.render()) == x);
    }
}
