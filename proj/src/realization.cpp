#include "micc/realization.hpp"

#include <cctype>
#include <sstream>

namespace micc {

CyclotomicRational CyclotomicRational::factor(unsigned n, BigInt exponent) {
    if (n == 0) throw Error::argument("factor order must be >= 1");
    CyclotomicRational z;
    if (exponent != 0) z.exponents_[n] = std::move(exponent);
    return z;
}

CyclotomicRational CyclotomicRational::operator*(const CyclotomicRational& o) const {
    CyclotomicRational r = *this;
    for (const auto& [n, e] : o.exponents_) {
        auto it = r.exponents_.find(n);
        if (it == r.exponents_.end()) {
            r.exponents_[n] = e;
        } else {
            it->second += e;
            if (it->second == 0) r.exponents_.erase(it);
        }
    }
    return r;
}

CyclotomicRational CyclotomicRational::inverse() const {
    CyclotomicRational r = *this;
    for (auto& [n, e] : r.exponents_) e = -e;
    return r;
}

std::string CyclotomicRational::render() const {
    if (exponents_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [n, e] : exponents_) {
        if (!first) out << " ";
        out << "(1-t^" << n << ")^" << e.str();
        first = false;
    }
    return out.str();
}

CyclotomicRational CyclotomicRational::parse(std::string_view s) {
    size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw Error::parse("zeta factors: " + what + " at offset " + std::to_string(pos));
    };
    auto skip = [&] {
        while (pos < s.size() &&
               (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == '*'))
            ++pos;
    };
    auto parse_int = [&](bool allow_sign) -> BigInt {
        skip();
        std::string digits;
        if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) digits += s[pos++];
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
        return BigInt(digits);
    };

    skip();
    CyclotomicRational z;
    if (pos < s.size() && s[pos] == '1' &&
        (pos + 1 == s.size() || s.find_first_not_of(" \t", pos + 1) == std::string_view::npos)) {
        return z;
    }
    while (true) {
        skip();
        if (pos >= s.size()) break;
        static constexpr std::string_view head = "(1-t^";
        if (s.substr(pos, head.size()) != head) fail("expected factor (1-t^n)");
        pos += head.size();
        BigInt n = parse_int(false);
        if (n < 1 || n > 0x7fffffff) fail("factor order out of range");
        skip();
        if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
        ++pos;
        BigInt e = 1;
        skip();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            e = parse_int(true);
        }
        z = z * factor(static_cast<unsigned>(n), e);
    }
    return z;
}

std::pair<std::vector<BigInt>, std::vector<BigInt>> CyclotomicRational::expand(
    unsigned max_degree) const {
    auto mul_factor = [&](std::vector<BigInt>& poly, unsigned n) {
        if (poly.size() - 1 + n > max_degree)
            throw Error::overflow("expansion exceeds requested degree bound");
        std::vector<BigInt> r(poly.size() + n, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            r[i] += poly[i];
            r[i + n] -= poly[i];
        }
        poly = std::move(r);
    };
    std::vector<BigInt> num{1}, den{1};
    for (const auto& [n, e] : exponents_) {
        BigInt count = e < 0 ? BigInt(-e) : e;
        for (BigInt i = 0; i < count; ++i) mul_factor(e > 0 ? num : den, n);
    }
    return {num, den};
}

BigInt euler(const RingElement& x) {
    BigInt s = 0;
    for (const auto& [key, c] : x.terms()) s += c * key.n;
    return s;
}

CyclotomicRational zeta(const RingElement& x) {
    std::map<unsigned, BigInt> sums;  // n -> sum of coefficients over k
    for (const auto& [key, c] : x.terms()) sums[key.n] += c;
    CyclotomicRational z;
    for (const auto& [n, s] : sums) z = z * CyclotomicRational::factor(n, -s);
    return z;
}

CyclotomicRational zeta_closed_form(const Configuration& config, const ComponentSet& A) {
    auto diags = validate(config, /*strict_finite_type=*/false);
    if (!diags.empty())
        throw Error::validation("invalid configuration: " + diags.front().to_string());
    CyclotomicRational z;
    for (const auto& [key, st] : config.strata) {
        if (key.size() != 1 || !A.count(*key.begin())) continue;
        long long m = config.multiplicity(*key.begin());
        if (m < 0) m = -m;  // the covers for Delta and -Delta agree
        if (m == 0)
            throw Error::validation("zero multiplicity on selected component '" + *key.begin() + "'");
        z = z * CyclotomicRational::factor(static_cast<unsigned>(m), -st.euler);
    }
    return z;
}

} // namespace micc
