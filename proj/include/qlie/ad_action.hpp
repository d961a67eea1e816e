#pragma once

// The deformed adjoint action of U_q(sl2) on itself:
//   ad_E x = E x K - q^-1 K x E,
//   ad_F x = F x K - q   K x F,
//   ad_H x = H x - x H            (2(c-a) per monomial via the weight grading),
//   ad_K x = K x K^-1,  ad_{K^-1} x = K^-1 x K   (q^{+-(c-a)} per monomial).
//
// ad is an algebra homomorphism into operators (ad_{xy} = ad_x ad_y), so the
// ad operator of a composite element is a formal linear combination of letter
// sequences: an AdWord. In a sequence the leftmost letter acts last.

#include <utility>
#include <vector>

#include "qlie/pbw.hpp"

namespace qlie {

enum class AdLetter { E, F, K, Kinv, H };

inline AlgElement ad_letter(AdLetter g, const AlgElement& x) {
    switch (g) {
    case AdLetter::E:
        return AlgElement::E() * x * AlgElement::K() -
               ExtScalar::q_power(-1) * (AlgElement::K() * x * AlgElement::E());
    case AdLetter::F:
        return AlgElement::F() * x * AlgElement::K() -
               ExtScalar::q_power(1) * (AlgElement::K() * x * AlgElement::F());
    case AdLetter::H: {
        AlgElement r;
        for (const auto& [m, c] : x.terms())
            r.add_term(m, c * ExtScalar(Rational(m.weight())));
        return r;
    }
    case AdLetter::K: {
        AlgElement r;
        for (const auto& [m, c] : x.terms())
            r.add_term(m, c * ExtScalar::q_power(m.weight() / 2));
        return r;
    }
    case AdLetter::Kinv: {
        AlgElement r;
        for (const auto& [m, c] : x.terms())
            r.add_term(m, c * ExtScalar::q_power(-m.weight() / 2));
        return r;
    }
    }
    return {};
}

class AdWord {
public:
    using Term = std::pair<ExtScalar, std::vector<AdLetter>>;

    AdWord() = default;

    static AdWord identity() { return word({}); }
    static AdWord letter(AdLetter g) { return word({g}); }
    static AdWord word(std::vector<AdLetter> letters, const ExtScalar& coeff = ExtScalar(1)) {
        AdWord w;
        if (!coeff.is_zero()) w.terms_.emplace_back(coeff, std::move(letters));
        return w;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend AdWord operator+(const AdWord& x, const AdWord& y) {
        AdWord r = x;
        for (const auto& t : y.terms_) r.terms_.push_back(t);
        return r;
    }
    friend AdWord operator*(const ExtScalar& c, const AdWord& x) {
        if (c.is_zero()) return {};
        AdWord r = x;
        for (auto& [coeff, letters] : r.terms_) coeff *= c;
        return r;
    }
    // Operator composition: concatenation of letter sequences.
    friend AdWord operator*(const AdWord& x, const AdWord& y) {
        AdWord r;
        for (const auto& [cx, lx] : x.terms_)
            for (const auto& [cy, ly] : y.terms_) {
                std::vector<AdLetter> seq = lx;
                seq.insert(seq.end(), ly.begin(), ly.end());
                r.terms_.emplace_back(cx * cy, std::move(seq));
            }
        return r;
    }

    AdWord& operator+=(const AdWord& y) { return *this = *this + y; }

    AdWord pow(int n) const {
        AdWord r = identity();
        for (int i = 0; i < n; ++i) r = r * (*this);
        return r;
    }

private:
    std::vector<Term> terms_;
};

inline AlgElement ad_apply(const AdWord& w, const AlgElement& x) {
    AlgElement acc;
    for (const auto& [coeff, letters] : w.terms()) {
        AlgElement y = x;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) y = ad_letter(*it, y);
        acc += coeff * y;
    }
    return acc;
}

// AdWord of an algebra element: ad_{F^a K^b E^c} = ad_F^a ad_K^b ad_E^c,
// extended linearly over the terms.
inline AdWord ad_word_of(const AlgElement& x) {
    AdWord acc;
    for (const auto& [m, c] : x.terms()) {
        std::vector<AdLetter> seq;
        for (int i = 0; i < m.a; ++i) seq.push_back(AdLetter::F);
        for (int i = 0; i < (m.b >= 0 ? m.b : -m.b); ++i)
            seq.push_back(m.b >= 0 ? AdLetter::K : AdLetter::Kinv);
        for (int i = 0; i < m.c; ++i) seq.push_back(AdLetter::E);
        acc += AdWord::word(std::move(seq), c);
    }
    return acc;
}

// ad operator of the Casimir element, assembled letter-wise:
//   ad_C = ((q-q^-1)^2 ad_E ad_F + q^-1 ad_K ad_K + q ad_K^-1 ad_K^-1) / (q^3 + q^-3).
inline AdWord casimir_ad_word() {
    ExtScalar qdiff = ExtScalar::q_power(1) - ExtScalar::q_power(-1);
    ExtScalar pref = (ExtScalar::q_power(3) + ExtScalar::q_power(-3)).inverse();
    AdWord w = AdWord::word({AdLetter::E, AdLetter::F}, qdiff * qdiff) +
               AdWord::word({AdLetter::K, AdLetter::K}, ExtScalar::q_power(-1)) +
               AdWord::word({AdLetter::Kinv, AdLetter::Kinv}, ExtScalar::q_power(1));
    return pref * w;
}

} // namespace qlie
