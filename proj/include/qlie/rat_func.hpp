#pragma once

// Rational functions in q over the exact rationals.
//
// A value is a reduced fraction num/den where
//   * num is a Laurent polynomial in q (map from integer exponent to a
//     nonzero rational coefficient),
//   * den is a plain polynomial with nonzero constant term (powers of q are
//     shifted into the numerator's exponents), integer coefficients with
//     content 1 and positive leading coefficient,
//   * num and den share no polynomial factor.
// The representation is unique, so equality of values is equality of the
// stored data.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qlie/errors.hpp"
#include "qlie/rational.hpp"

namespace qlie {

using LaurentPoly = std::map<int, Rational>; // exponent -> nonzero coefficient

namespace polyq {

// Dense univariate polynomials over Rational, coefficients ascending,
// no trailing zeros (empty vector = zero polynomial).
using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool is_zero(const Poly& p) { return p.empty(); }

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly constant(const Rational& c) {
    Poly p;
    if (c != 0) p.push_back(c);
    return p;
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline Poly neg(Poly a) {
    for (auto& c : a) c = -c;
    return a;
}

inline Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

inline Poly mul(const Poly& a, const Poly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline Poly scale(Poly a, const Rational& c) {
    if (c == 0) return {};
    for (auto& x : a) x *= c;
    return a;
}

// a = quot*b + rem with deg rem < deg b; requires b != 0.
inline std::pair<Poly, Poly> divrem(Poly a, const Poly& b) {
    Poly quot;
    if (b.empty()) throw division_by_zero("polynomial division by zero");
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a); // the leading term cancels exactly, so each round strictly shrinks a
    }
    trim(quot);
    return {quot, a};
}

inline Poly divexact(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!is_zero(r)) throw std::logic_error("polyq::divexact: nonzero remainder");
    return q;
}

inline Poly make_monic(Poly p) {
    if (p.empty()) return p;
    Rational lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

// Monic gcd over Q[q]; gcd(0, p) = monic p, gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
    while (!is_zero(b)) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = make_monic(std::move(r));
    }
    return make_monic(std::move(a));
}

inline Rational eval1(const Poly& p) {
    Rational acc(0);
    for (const auto& c : p) acc += c;
    return acc;
}

// Positive rational c such that p/c has coprime integer coefficients;
// carries the sign of the leading coefficient so p/c has positive lead.
inline Rational signed_content(const Poly& p) {
    if (p.empty()) return Rational(1);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& c : p) {
        if (c == 0) continue;
        Integer n = c.get_num();
        mpz_abs(n.get_mpz_t(), n.get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (p.back() < 0) content = -content;
    return content;
}

} // namespace polyq

namespace laurent {

inline bool is_zero(const LaurentPoly& p) { return p.empty(); }

inline void set_coeff(LaurentPoly& p, int exp, const Rational& c) {
    if (c == 0)
        p.erase(exp);
    else
        p[exp] = c;
}

inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b) {
        auto it = r.find(e);
        if (it == r.end()) {
            r.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) r.erase(it);
        }
    }
    return r;
}

inline LaurentPoly neg(LaurentPoly a) {
    for (auto& [e, c] : a) c = -c;
    return a;
}

inline LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            auto it = r.find(ea + eb);
            if (it == r.end()) {
                r.emplace(ea + eb, ca * cb);
            } else {
                it->second += ca * cb;
            }
        }
    for (auto it = r.begin(); it != r.end();)
        it = (it->second == 0) ? r.erase(it) : std::next(it);
    return r;
}

inline LaurentPoly scale(LaurentPoly a, const Rational& c) {
    if (c == 0) return {};
    for (auto& [e, x] : a) x *= c;
    return a;
}

inline LaurentPoly shift(LaurentPoly a, int k) {
    if (k == 0) return a;
    LaurentPoly r;
    for (auto& [e, c] : a) r.emplace(e + k, std::move(c));
    return r;
}

// q -> 1/q: negate every exponent.
inline LaurentPoly conj_exponents(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a) r.emplace(-e, c);
    return r;
}

inline Rational eval1(const LaurentPoly& a) {
    Rational acc(0);
    for (const auto& [e, c] : a) acc += c;
    return acc;
}

inline LaurentPoly from_poly(const polyq::Poly& p) {
    LaurentPoly r;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) r.emplace(static_cast<int>(i), p[i]);
    return r;
}

// Splits a Laurent polynomial as q^shift * plain polynomial with nonzero
// constant term. Requires a nonzero argument.
inline std::pair<int, polyq::Poly> split(const LaurentPoly& a) {
    int lo = a.begin()->first;
    int hi = a.rbegin()->first;
    polyq::Poly p(static_cast<std::size_t>(hi - lo) + 1, Rational(0));
    for (const auto& [e, c] : a) p[static_cast<std::size_t>(e - lo)] = c;
    return {lo, p};
}

} // namespace laurent

class RatFuncQ {
public:
    RatFuncQ() : den_{Rational(1)} {}
    RatFuncQ(const Rational& r) : den_{Rational(1)} { // NOLINT(google-explicit-constructor)
        laurent::set_coeff(num_, 0, r);
    }
    RatFuncQ(long n) : RatFuncQ(Rational(n)) {} // NOLINT(google-explicit-constructor)

    static RatFuncQ q_power(int k, const Rational& coeff = Rational(1)) {
        RatFuncQ r;
        laurent::set_coeff(r.num_, k, coeff);
        return r;
    }

    static RatFuncQ from_laurent(LaurentPoly n) {
        RatFuncQ r;
        r.num_ = std::move(n);
        r.canonicalize();
        return r;
    }

    static RatFuncQ fraction(LaurentPoly n, polyq::Poly d) {
        if (polyq::is_zero(d)) throw division_by_zero("rational function with zero denominator");
        RatFuncQ r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        r.canonicalize();
        return r;
    }

    const LaurentPoly& numerator() const { return num_; }
    const polyq::Poly& denominator() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const {
        return num_.size() == 1 && num_.begin()->first == 0 && num_.begin()->second == 1 &&
               den_.size() == 1;
    }
    // True for values that are plain rationals; stores the value if asked.
    bool is_rational(Rational* out = nullptr) const {
        if (den_.size() != 1) return false;
        if (num_.size() > 1) return false;
        if (num_.size() == 1 && num_.begin()->first != 0) return false;
        if (out) *out = num_.empty() ? Rational(0) : num_.begin()->second;
        return true;
    }

    friend RatFuncQ operator+(const RatFuncQ& x, const RatFuncQ& y) {
        RatFuncQ r;
        r.num_ = laurent::add(laurent::mul(x.num_, laurent::from_poly(y.den_)),
                              laurent::mul(y.num_, laurent::from_poly(x.den_)));
        r.den_ = polyq::mul(x.den_, y.den_);
        r.canonicalize();
        return r;
    }
    friend RatFuncQ operator-(const RatFuncQ& x) {
        RatFuncQ r = x;
        r.num_ = laurent::neg(std::move(r.num_));
        return r;
    }
    friend RatFuncQ operator-(const RatFuncQ& x, const RatFuncQ& y) { return x + (-y); }
    friend RatFuncQ operator*(const RatFuncQ& x, const RatFuncQ& y) {
        RatFuncQ r;
        r.num_ = laurent::mul(x.num_, y.num_);
        r.den_ = polyq::mul(x.den_, y.den_);
        r.canonicalize();
        return r;
    }
    friend RatFuncQ operator/(const RatFuncQ& x, const RatFuncQ& y) {
        if (y.is_zero()) throw division_by_zero();
        auto [shift, yden] = laurent::split(y.num_);
        RatFuncQ r;
        r.num_ = laurent::shift(laurent::mul(x.num_, laurent::from_poly(y.den_)), -shift);
        r.den_ = polyq::mul(x.den_, yden);
        r.canonicalize();
        return r;
    }

    RatFuncQ& operator+=(const RatFuncQ& y) { return *this = *this + y; }
    RatFuncQ& operator-=(const RatFuncQ& y) { return *this = *this - y; }
    RatFuncQ& operator*=(const RatFuncQ& y) { return *this = *this * y; }
    RatFuncQ& operator/=(const RatFuncQ& y) { return *this = *this / y; }

    bool operator==(const RatFuncQ& other) const = default;

    // The involutive automorphism q -> 1/q.
    RatFuncQ qconj() const {
        RatFuncQ r;
        int m = polyq::degree(den_);
        polyq::Poly rev(den_.rbegin(), den_.rend());
        polyq::trim(rev);
        r.num_ = laurent::shift(laurent::conj_exponents(num_), m);
        r.den_ = std::move(rev);
        r.canonicalize();
        return r;
    }

    bool has_pole_at_q1() const { return polyq::eval1(den_) == 0; }

    // Substitutes q = 1. The reduced form guarantees a vanishing denominator
    // is a genuine pole.
    Rational eval_q1() const {
        Rational d = polyq::eval1(den_);
        if (d == 0) throw pole_error("classical limit undefined for this scalar (pole at q=1)");
        return laurent::eval1(num_) / d;
    }

private:
    LaurentPoly num_;
    polyq::Poly den_; // invariant: den(0) != 0, integer, content 1, positive lead

    void canonicalize() {
        if (polyq::is_zero(den_)) throw division_by_zero("rational function with zero denominator");
        if (num_.empty()) {
            den_ = {Rational(1)};
            return;
        }
        // Shift any power of q out of the denominator.
        std::size_t low = 0;
        while (low < den_.size() && den_[low] == 0) ++low;
        if (low > 0) {
            den_.erase(den_.begin(), den_.begin() + static_cast<long>(low));
            num_ = laurent::shift(std::move(num_), -static_cast<int>(low));
        }
        auto [vnum, npoly] = laurent::split(num_);
        polyq::Poly g = polyq::gcd(npoly, den_);
        if (polyq::degree(g) > 0) {
            npoly = polyq::divexact(npoly, g);
            den_  = polyq::divexact(den_, g);
        }
        Rational content = polyq::signed_content(den_);
        if (content != 1) {
            den_  = polyq::scale(std::move(den_), Rational(1) / content);
            npoly = polyq::scale(std::move(npoly), Rational(1) / content);
        }
        num_ = laurent::shift(laurent::from_poly(npoly), vnum);
    }
};

} // namespace qlie
