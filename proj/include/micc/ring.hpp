#pragma once

// Exact arithmetic in the ring R: the free Z[L]-module spanned by the
// symbols [mu_n] (n >= 1, [mu_1] = 1), with the product
//     [mu_a] * [mu_b] = gcd(a,b) * [mu_lcm(a,b)]
// extended bilinearly.  L is the class of the affine line.

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>
#include <string_view>

#include "micc/error.hpp"

namespace micc {

using BigInt = boost::multiprecision::cpp_int;

// Integer polynomial in L, used for classes of strata with trivial
// mu-action.  Canonical: no zero coefficients stored.
class LPoly {
public:
    LPoly() = default;

    static LPoly constant(BigInt c);
    static LPoly monomial(unsigned k, BigInt c);
    static LPoly var();                      // L
    static LPoly binomial_L_minus_1_pow(unsigned e);   // (L-1)^e
    static LPoly projective(unsigned r);     // L^r + ... + L + 1

    bool is_zero() const { return coeff_.empty(); }
    const std::map<unsigned, BigInt>& coefficients() const { return coeff_; }

    LPoly operator+(const LPoly& o) const;
    LPoly operator-(const LPoly& o) const;
    LPoly operator*(const LPoly& o) const;
    LPoly operator-() const;
    bool operator==(const LPoly& o) const = default;

    BigInt eval_one() const;                 // value at L = 1

private:
    void set(unsigned k, BigInt c);
    std::map<unsigned, BigInt> coeff_;
};

struct TermKey {
    unsigned n;  // root-of-unity order, n >= 1
    unsigned k;  // L-exponent
    auto operator<=>(const TermKey&) const = default;
};

class RingElement {
public:
    RingElement() = default;

    static RingElement zero() { return {}; }
    static RingElement one() { return term(1, 0, 1); }
    static RingElement L() { return term(1, 1, 1); }
    static RingElement mu(unsigned n) { return term(n, 0, 1); }
    static RingElement term(unsigned n, unsigned k, BigInt coeff);
    static RingElement projective_class(unsigned r);
    // [mu_n] * p(L)
    static RingElement from_class(unsigned n, const LPoly& p);

    bool is_zero() const { return terms_.empty(); }
    const std::map<TermKey, BigInt>& terms() const { return terms_; }

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    RingElement& operator+=(const RingElement& o);
    RingElement pow(unsigned e) const;
    bool operator==(const RingElement& o) const = default;

    // Grammar: signed integer coefficients, L^k, [mu_n], products and
    // sums, e.g.  -[mu_2]*(L-1) + 3*L^2.  render() emits the expanded
    // canonical form; parse(render(x)) == x.
    std::string render() const;
    static RingElement parse(std::string_view text);

private:
    void add_term(unsigned n, unsigned k, const BigInt& c);
    std::map<TermKey, BigInt> terms_;
};

} // namespace micc
