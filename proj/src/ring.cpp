#include "micc/ring.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <vector>

namespace micc {

// ---------------------------------------------------------------- LPoly

void LPoly::set(unsigned k, BigInt c) {
    if (c == 0)
        coeff_.erase(k);
    else
        coeff_[k] = std::move(c);
}

LPoly LPoly::constant(BigInt c) { return monomial(0, std::move(c)); }

LPoly LPoly::monomial(unsigned k, BigInt c) {
    LPoly p;
    p.set(k, std::move(c));
    return p;
}

LPoly LPoly::var() { return monomial(1, 1); }

LPoly LPoly::binomial_L_minus_1_pow(unsigned e) {
    LPoly r = constant(1);
    LPoly base = var() - constant(1);
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
}

LPoly LPoly::projective(unsigned r) {
    LPoly p;
    for (unsigned k = 0; k <= r; ++k) p.set(k, 1);
    return p;
}

LPoly LPoly::operator+(const LPoly& o) const {
    LPoly r = *this;
    for (const auto& [k, c] : o.coeff_) {
        auto it = r.coeff_.find(k);
        if (it == r.coeff_.end()) {
            r.coeff_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.coeff_.erase(it);
        }
    }
    return r;
}

LPoly LPoly::operator-() const {
    LPoly r = *this;
    for (auto& [k, c] : r.coeff_) c = -c;
    return r;
}

LPoly LPoly::operator-(const LPoly& o) const { return *this + (-o); }

LPoly LPoly::operator*(const LPoly& o) const {
    LPoly r;
    for (const auto& [k1, c1] : coeff_)
        for (const auto& [k2, c2] : o.coeff_) {
            auto it = r.coeff_.find(k1 + k2);
            if (it == r.coeff_.end()) {
                r.coeff_[k1 + k2] = c1 * c2;
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.coeff_.erase(it);
            }
        }
    return r;
}

BigInt LPoly::eval_one() const {
    BigInt s = 0;
    for (const auto& [k, c] : coeff_) s += c;
    return s;
}

// ---------------------------------------------------------- RingElement

void RingElement::add_term(unsigned n, unsigned k, const BigInt& c) {
    if (c == 0) return;
    if (n == 0) throw Error::argument("root-of-unity order must be >= 1");
    TermKey key{n, k};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RingElement RingElement::term(unsigned n, unsigned k, BigInt coeff) {
    RingElement e;
    e.add_term(n, k, coeff);
    return e;
}

RingElement RingElement::projective_class(unsigned r) {
    RingElement e;
    for (unsigned k = 0; k <= r; ++k) e.add_term(1, k, 1);
    return e;
}

RingElement RingElement::from_class(unsigned n, const LPoly& p) {
    RingElement e;
    for (const auto& [k, c] : p.coefficients()) e.add_term(n, k, c);
    return e;
}

RingElement RingElement::operator+(const RingElement& o) const {
    RingElement r = *this;
    r += o;
    return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.n, key.k, c);
    return *this;
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    for (auto& [key, c] : r.terms_) c = -c;
    return r;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator*(const RingElement& o) const {
    RingElement r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            unsigned long long g = std::gcd<unsigned long long>(k1.n, k2.n);
            unsigned long long l = (k1.n / g) * static_cast<unsigned long long>(k2.n);
            if (l > 0x7fffffffULL)
                throw Error::overflow("lcm of root-of-unity orders exceeds representable range");
            r.add_term(static_cast<unsigned>(l), k1.k + k2.k, c1 * c2 * BigInt(g));
        }
    return r;
}

RingElement RingElement::pow(unsigned e) const {
    RingElement r = one();
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

// ------------------------------------------------------------- render

std::string RingElement::render() const {
    if (terms_.empty()) return "0";
    // L-degree descending, then mu-order ascending
    std::vector<std::pair<TermKey, BigInt>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first.k != b.first.k) return a.first.k > b.first.k;
        return a.first.n < b.first.n;
    });

    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : ts) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> parts;
        if (key.n > 1) parts.push_back("[mu_" + std::to_string(key.n) + "]");
        if (key.k == 1) parts.push_back("L");
        if (key.k >= 2) parts.push_back("L^" + std::to_string(key.k));
        if (parts.empty() || a != 1) parts.insert(parts.begin(), a.str());
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) out << "*";
            out << parts[i];
        }
    }
    return out.str();
}

// -------------------------------------------------------------- parse

namespace {

struct Parser {
    std::string_view s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw Error::parse("ring element: " + what + " at offset " + std::to_string(pos));
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    unsigned parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        unsigned long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned long long>(s[pos] - '0');
            if (v > 0x7fffffffULL) fail("integer literal too large");
            ++pos;
        }
        return static_cast<unsigned>(v);
    }

    RingElement parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RingElement e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 'L') {
            ++pos;
            return RingElement::L();
        }
        if (c == '[') {
            static constexpr std::string_view tag = "[mu_";
            if (s.substr(pos, tag.size()) != tag) fail("expected [mu_n]");
            pos += tag.size();
            unsigned n = parse_uint();
            if (n == 0) fail("[mu_0] is not a ring symbol");
            if (!eat(']')) fail("expected ']'");
            return RingElement::mu(n);
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RingElement::term(1, 0, BigInt(parse_uint()));
        fail("unexpected character");
    }

    RingElement parse_factor() {
        RingElement base = parse_atom();
        if (eat('^')) {
            unsigned e = parse_uint();
            return base.pow(e);
        }
        return base;
    }

    RingElement parse_term() {
        bool neg = false;
        for (;;) {
            if (eat('-'))
                neg = !neg;
            else if (eat('+'))
                ;
            else
                break;
        }
        RingElement e = parse_factor();
        while (eat('*')) e = e * parse_factor();
        return neg ? -e : e;
    }

    RingElement parse_expr() {
        RingElement e = parse_term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                e = e + parse_term();
            } else if (c == '-') {
                ++pos;
                e = e - parse_term();
            } else {
                break;
            }
        }
        return e;
    }
};

} // namespace

RingElement RingElement::parse(std::string_view text) {
    Parser p{text};
    RingElement e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

} // namespace micc
