#pragma once

// Exact rational scalars, backed by GMP. mpq_class keeps values in canonical
// form (reduced, positive denominator), which is exactly the invariant the
// rest of the kernel relies on for syntactic equality.

#include <gmpxx.h>

#include <string>

#include "qlie/errors.hpp"

namespace qlie {

using Rational = mpq_class;
using Integer  = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with optional sign; throws parse_error otherwise.
inline Rational rational_from_string(const std::string& text, std::size_t offset = 0) {
    if (text.empty()) throw parse_error("empty rational literal", offset);
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        bool ok = (ch >= '0' && ch <= '9') || ch == '/' || (i == 0 && ch == '-');
        if (!ok) throw parse_error("malformed rational literal '" + text + "'", offset);
    }
    mpq_class r;
    if (r.set_str(text, 10) != 0) throw parse_error("malformed rational literal '" + text + "'", offset);
    if (r.get_den() == 0) throw division_by_zero("rational literal with zero denominator");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw division_by_zero("0 raised to a negative power");
        return Rational(0);
    }
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline Rational factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

// Generalized binomial coefficient C(1/2, k), the coefficient of u^k in the
// series of sqrt(1 + u).
inline Rational binom_half(unsigned k) {
    Rational acc(1);
    Rational half(1, 2);
    for (unsigned i = 0; i < k; ++i) acc *= (half - Rational(static_cast<long>(i)));
    return acc / factorial(k);
}

} // namespace qlie
