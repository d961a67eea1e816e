#pragma once

// The coefficient field Q(q)(s): rational functions in q adjoined the
// formal positive root s with s^2 = 2/(q + q^-1). Every element is stored
// as a + b*s with a, b rational functions; the reduction s^2 -> 2/(q+q^-1)
// is applied eagerly, so no higher power of s ever appears.
//
// 2/(q+q^-1) is not a square in Q(q), so a + b*s = 0 only when a = b = 0
// and every nonzero element is invertible.

#include <string>
#include <utility>

#include "qlie/errors.hpp"
#include "qlie/rat_func.hpp"

namespace qlie {

class ExtScalar {
public:
    ExtScalar() = default;
    ExtScalar(const Rational& r) : a_(r) {}        // NOLINT(google-explicit-constructor)
    ExtScalar(long n) : a_(Rational(n)) {}         // NOLINT(google-explicit-constructor)
    ExtScalar(const RatFuncQ& a) : a_(a) {}        // NOLINT(google-explicit-constructor)
    ExtScalar(RatFuncQ a, RatFuncQ b) : a_(std::move(a)), b_(std::move(b)) {}

    static ExtScalar q_power(int k) { return ExtScalar(RatFuncQ::q_power(k)); }
    static ExtScalar q() { return q_power(1); }
    static ExtScalar s() { return ExtScalar(RatFuncQ(0), RatFuncQ(1)); }
    // s^2 = 2/(q+q^-1) as an explicit rational function.
    static ExtScalar s_squared() {
        return ExtScalar(RatFuncQ(2) / (RatFuncQ::q_power(1) + RatFuncQ::q_power(-1)));
    }

    const RatFuncQ& a() const { return a_; } // part free of s
    const RatFuncQ& b() const { return b_; } // coefficient of s

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational(Rational* out = nullptr) const {
        return b_.is_zero() && a_.is_rational(out);
    }

    friend ExtScalar operator+(const ExtScalar& x, const ExtScalar& y) {
        return ExtScalar(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend ExtScalar operator-(const ExtScalar& x) { return ExtScalar(-x.a_, -x.b_); }
    friend ExtScalar operator-(const ExtScalar& x, const ExtScalar& y) {
        return ExtScalar(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend ExtScalar operator*(const ExtScalar& x, const ExtScalar& y) {
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 s^2 + (a1 b2 + b1 a2) s
        return ExtScalar(x.a_ * y.a_ + x.b_ * y.b_ * s_squared().a(),
                         x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend ExtScalar operator/(const ExtScalar& x, const ExtScalar& y) { return x * y.inverse(); }

    ExtScalar& operator+=(const ExtScalar& y) { return *this = *this + y; }
    ExtScalar& operator-=(const ExtScalar& y) { return *this = *this - y; }
    ExtScalar& operator*=(const ExtScalar& y) { return *this = *this * y; }
    ExtScalar& operator/=(const ExtScalar& y) { return *this = *this / y; }

    ExtScalar inverse() const {
        if (is_zero()) throw division_by_zero();
        // 1/(a + b s) = (a - b s) / (a^2 - b^2 s^2)
        RatFuncQ norm = a_ * a_ - b_ * b_ * s_squared().a();
        if (norm.is_zero()) throw division_by_zero("norm vanishes"); // unreachable for nonzero input
        return ExtScalar(a_ / norm, -(b_ / norm));
    }

    bool operator==(const ExtScalar& other) const = default;

    // q -> 1/q; s is fixed (its square is invariant and s is the positive root).
    ExtScalar qconj() const { return ExtScalar(a_.qconj(), b_.qconj()); }

    bool has_pole_at_q1() const { return a_.has_pole_at_q1() || b_.has_pole_at_q1(); }

    // Substitutes q = 1 and s = 1 (the positive-root convention).
    Rational eval_q1() const { return a_.eval_q1() + b_.eval_q1(); }

private:
    RatFuncQ a_;
    RatFuncQ b_;
};

} // namespace qlie
