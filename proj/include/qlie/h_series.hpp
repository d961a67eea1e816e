#pragma once

// Truncated power series in h with exact rational coefficients. These are a
// derived view of the scalars under the substitution q = e^h, not the working
// representation; structure constants expand to such series.

#include <string>
#include <vector>

#include "qlie/errors.hpp"
#include "qlie/ext_scalar.hpp"
#include "qlie/rational.hpp"

namespace qlie {

class HSeries {
public:
    // Zero series truncated after h^order; order must be >= 1.
    explicit HSeries(int order) : coeffs_(check_order(order) + 1, Rational(0)) {}
    HSeries(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs)) {
        check_order(order);
        coeffs_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& coefficient(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    HSeries truncated(int m) const {
        if (m < 1 || m > order()) throw std::invalid_argument("HSeries::truncated: bad order");
        return HSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + m + 1), m);
    }

    friend HSeries operator+(const HSeries& x, const HSeries& y) {
        x.require_same_order(y);
        HSeries r(x.order());
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = x.coeffs_[i] + y.coeffs_[i];
        return r;
    }
    friend HSeries operator-(const HSeries& x, const HSeries& y) {
        x.require_same_order(y);
        HSeries r(x.order());
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = x.coeffs_[i] - y.coeffs_[i];
        return r;
    }
    friend HSeries operator*(const HSeries& x, const HSeries& y) {
        x.require_same_order(y);
        HSeries r(x.order());
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j < y.coeffs_.size(); ++j)
                r.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
        return r;
    }
    friend HSeries operator*(const Rational& c, const HSeries& x) {
        HSeries r = x;
        for (auto& v : r.coeffs_) v *= c;
        return r;
    }
    // Division of truncated series; the divisor needs a nonzero constant term.
    friend HSeries operator/(const HSeries& x, const HSeries& y) {
        x.require_same_order(y);
        if (y.coeffs_[0] == 0) throw pole_error("series division by a series vanishing at h=0");
        HSeries r(x.order());
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
            Rational acc = x.coeffs_[k];
            for (std::size_t i = 0; i < k; ++i) acc -= r.coeffs_[i] * y.coeffs_[k - i];
            r.coeffs_[k] = acc / y.coeffs_[0];
        }
        return r;
    }

    HSeries& operator+=(const HSeries& y) { return *this = *this + y; }

    bool operator==(const HSeries& other) const = default;

    // Series of e^{k h}.
    static HSeries exp_kh(int k, int order) {
        HSeries r(order);
        Rational term(1);
        Rational kk(k);
        r.coeffs_[0] = term;
        for (int n = 1; n <= order; ++n) {
            term = term * kk / Rational(n);
            r.coeffs_[static_cast<std::size_t>(n)] = term;
        }
        return r;
    }

    // Square root of a series with constant term 1 (binomial expansion).
    static HSeries sqrt_one(const HSeries& x) {
        if (x.coeffs_[0] != 1)
            throw std::invalid_argument("HSeries::sqrt_one: constant term must be 1");
        HSeries u = x;
        u.coeffs_[0] = Rational(0);
        HSeries acc(x.order());
        HSeries upow(x.order());
        upow.coeffs_[0] = Rational(1);
        for (int k = 0; k <= x.order(); ++k) {
            acc += binom_half(static_cast<unsigned>(k)) * upow;
            upow = upow * u;
            if (upow.is_zero()) break;
        }
        return acc;
    }

private:
    std::vector<Rational> coeffs_; // length order+1

    static int check_order(int order) {
        if (order < 1) throw std::invalid_argument("HSeries: order must be positive");
        return order;
    }
    void require_same_order(const HSeries& other) const {
        if (coeffs_.size() != other.coeffs_.size())
            throw std::invalid_argument("HSeries: mixed truncation orders");
    }
};

// q = e^h substituted into a rational function, as a truncated series.
// Throws pole_error when the (reduced) denominator vanishes at q = 1.
inline HSeries h_series(const RatFuncQ& x, int order) {
    HSeries num(order);
    for (const auto& [e, c] : x.numerator()) num += c * HSeries::exp_kh(e, order);
    HSeries den(order);
    const auto& d = x.denominator();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        den += d[i] * HSeries::exp_kh(static_cast<int>(i), order);
    }
    if (den.coefficient(0) == 0)
        throw pole_error("h-series undefined for this scalar (pole at h=0)");
    return num / den;
}

// Series of s = sqrt(2/(e^h + e^-h)); the positive branch, value 1 at h = 0.
inline HSeries s_series(int order) {
    HSeries two(order);
    two += Rational(2) * HSeries::exp_kh(0, order);
    HSeries cosh2 = HSeries::exp_kh(1, order) + HSeries::exp_kh(-1, order);
    return HSeries::sqrt_one(two / cosh2);
}

inline HSeries h_series(const ExtScalar& x, int order) {
    HSeries r = h_series(x.a(), order);
    if (!x.b().is_zero()) r += h_series(x.b(), order) * s_series(order);
    return r;
}

} // namespace qlie
