#pragma once

// Betti realizations: the Euler-characteristic ring homomorphism on R
// and the zeta-function homomorphism from (R,+) into the multiplicative
// group generated by the factors (1 - t^n).

#include "micc/config.hpp"

namespace micc {

// Product of factors (1 - t^n)^{e_n}.  The factors are multiplicatively
// independent in Q(t), so the exponent map is a canonical form.
class CyclotomicRational {
public:
    CyclotomicRational() = default;

    static CyclotomicRational one() { return {}; }
    static CyclotomicRational factor(unsigned n, BigInt exponent);

    bool is_one() const { return exponents_.empty(); }
    const std::map<unsigned, BigInt>& exponents() const { return exponents_; }

    CyclotomicRational operator*(const CyclotomicRational& o) const;
    CyclotomicRational inverse() const;
    bool operator==(const CyclotomicRational&) const = default;

    // `(1-t^2)^-1 (1-t^6)^1`; factors sorted by n; `1` for the empty product.
    std::string render() const;
    static CyclotomicRational parse(std::string_view text);

    // Expand into numerator/denominator coefficient vectors (index =
    // t-power).  Throws Overflow when either degree would exceed
    // max_degree.
    std::pair<std::vector<BigInt>, std::vector<BigInt>> expand(unsigned max_degree) const;

private:
    std::map<unsigned, BigInt> exponents_;
};

// [mu_n] L^k  ->  n  (additive and multiplicative)
BigInt euler(const RingElement& x);

// [mu_n] L^k  ->  (1 - t^n)^{-1}  (additive-to-multiplicative only)
CyclotomicRational zeta(const RingElement& x);

// Per-stratum closed form: product over the singleton strata {i}, i in A,
// of (1 - t^{|m_i|})^{-chi(E_i^o)}.
CyclotomicRational zeta_closed_form(const Configuration& config, const ComponentSet& A);

} // namespace micc
