#pragma once

// The quantized enveloping algebra U_q(sl2) as sparse linear combinations of
// PBW monomials F^a K^b E^c (a, c >= 0, b any integer), where K = q^{H/2}.
//
// Generator relations:
//   K K^-1 = 1,
//   K E = q E K,
//   K F = q^-1 F K,
//   E F - F E = (K^2 - K^-2) / (q - q^-1).
//
// Products are normalized by structural recursion on single-step rewrites of
// out-of-order adjacent pairs; each step strictly reduces the inversion count,
// so normalization terminates.

#include <compare>
#include <map>
#include <utility>

#include "qlie/ext_scalar.hpp"

namespace qlie {

struct PBWMonomial {
    int a = 0; // power of F
    int b = 0; // power of K (may be negative)
    int c = 0; // power of E

    // weight of the monomial under ad_H
    int weight() const { return 2 * (c - a); }

    auto operator<=>(const PBWMonomial&) const = default; // lex (a, b, c)
};

class AlgElement {
public:
    using TermMap = std::map<PBWMonomial, ExtScalar>;

    AlgElement() = default;

    static AlgElement zero() { return {}; }
    static AlgElement one() { return monomial({0, 0, 0}); }
    static AlgElement E() { return monomial({0, 0, 1}); }
    static AlgElement F() { return monomial({1, 0, 0}); }
    static AlgElement K() { return monomial({0, 1, 0}); }
    static AlgElement Kinv() { return monomial({0, -1, 0}); }
    static AlgElement monomial(PBWMonomial m, const ExtScalar& coeff = ExtScalar(1)) {
        AlgElement e;
        if (!coeff.is_zero()) e.terms_.emplace(m, coeff);
        return e;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // coefficient of a monomial (zero if absent)
    ExtScalar coeff(const PBWMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ExtScalar() : it->second;
    }

    void add_term(const PBWMonomial& m, const ExtScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend AlgElement operator+(const AlgElement& x, const AlgElement& y) {
        AlgElement r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, c);
        return r;
    }
    friend AlgElement operator-(const AlgElement& x) {
        AlgElement r = x;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend AlgElement operator-(const AlgElement& x, const AlgElement& y) { return x + (-y); }
    friend AlgElement operator*(const ExtScalar& c, const AlgElement& x) {
        if (c.is_zero()) return {};
        AlgElement r = x;
        for (auto& [m, v] : r.terms_) v *= c;
        return r;
    }
    friend AlgElement operator*(const AlgElement& x, const ExtScalar& c) { return c * x; }
    friend AlgElement operator*(const AlgElement& x, const AlgElement& y);

    AlgElement& operator+=(const AlgElement& y) {
        for (const auto& [m, c] : y.terms_) add_term(m, c);
        return *this;
    }
    AlgElement& operator-=(const AlgElement& y) { return *this += -y; }
    AlgElement& operator*=(const AlgElement& y) { return *this = *this * y; }

    bool operator==(const AlgElement& other) const = default;

private:
    TermMap terms_; // no stored coefficient is zero
};

namespace detail {

// x * E for normal-ordered x: plain exponent shift.
inline AlgElement rmul_E(const AlgElement& x) {
    AlgElement r;
    for (const auto& [m, c] : x.terms()) r.add_term({m.a, m.b, m.c + 1}, c);
    return r;
}

// x * K^sign (sign = +1/-1): E^c K = q^{-c} K E^c.
inline AlgElement rmul_K(const AlgElement& x, int sign) {
    AlgElement r;
    for (const auto& [m, c] : x.terms())
        r.add_term({m.a, m.b + sign, m.c}, c * ExtScalar::q_power(-sign * m.c));
    return r;
}

// Single normal monomial times F, by recursion on the single-step rewrite
//   E^c F = (E^{c-1} F) E + (q^{-2(c-1)} K^2 - q^{2(c-1)} K^-2)/(q - q^-1) E^{c-1}.
inline AlgElement rmul_F_mono(const PBWMonomial& m) {
    if (m.c == 0) {
        // F^a K^b F = q^{-b} F^{a+1} K^b
        return AlgElement::monomial({m.a + 1, m.b, 0}, ExtScalar::q_power(-m.b));
    }
    static const ExtScalar inv_qdiff =
        (ExtScalar::q_power(1) - ExtScalar::q_power(-1)).inverse();
    AlgElement r = rmul_E(rmul_F_mono({m.a, m.b, m.c - 1}));
    r.add_term({m.a, m.b + 2, m.c - 1}, ExtScalar::q_power(-2 * (m.c - 1)) * inv_qdiff);
    r.add_term({m.a, m.b - 2, m.c - 1}, -(ExtScalar::q_power(2 * (m.c - 1)) * inv_qdiff));
    return r;
}

inline AlgElement rmul_F(const AlgElement& x) {
    AlgElement r;
    for (const auto& [m, c] : x.terms()) r += c * rmul_F_mono(m);
    return r;
}

inline AlgElement mono_mul(const PBWMonomial& lhs, const PBWMonomial& rhs) {
    AlgElement acc = AlgElement::monomial(lhs);
    for (int i = 0; i < rhs.a; ++i) acc = rmul_F(acc);
    int sign = rhs.b >= 0 ? 1 : -1;
    for (int i = 0; i < (rhs.b >= 0 ? rhs.b : -rhs.b); ++i) acc = rmul_K(acc, sign);
    for (int i = 0; i < rhs.c; ++i) acc = rmul_E(acc);
    return acc;
}

} // namespace detail

inline AlgElement operator*(const AlgElement& x, const AlgElement& y) {
    AlgElement r;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) r += (cx * cy) * detail::mono_mul(mx, my);
    return r;
}

inline AlgElement commutator(const AlgElement& x, const AlgElement& y) {
    return x * y - y * x;
}

// The Casimir element
//   C = ((q - q^-1)^2 E F + q^{H-1} + q^{-H+1}) / (q^3 + q^-3)
// with q^{H-1} = q^-1 K^2 and q^{-H+1} = q K^-2, returned in normal order.
inline AlgElement casimir() {
    ExtScalar qdiff = ExtScalar::q_power(1) - ExtScalar::q_power(-1);
    ExtScalar pref = (ExtScalar::q_power(3) + ExtScalar::q_power(-3)).inverse();
    AlgElement body = (qdiff * qdiff) * (AlgElement::E() * AlgElement::F()) +
                      AlgElement::monomial({0, 2, 0}, ExtScalar::q_power(-1)) +
                      AlgElement::monomial({0, -2, 0}, ExtScalar::q_power(1));
    return pref * body;
}

} // namespace qlie
