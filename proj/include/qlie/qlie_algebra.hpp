#pragma once

// The quantum Lie algebra (sl2)_h: a 3-dimensional subspace of U_q(sl2),
// spanned by
//   X+_h = s K^-1 E,   X-_h = s K^-1 F,
//   H_h  = 2/(q+q^-1) (q E F - q^-1 F E),
// closed under the adjoint action, with quantum Lie bracket [x, y]_h = ad_x y.
// Right-multiplying the generators by a polynomial p(C) in the Casimir with
// coefficient sum 1 gives further embeddings with the same bracket table.

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qlie/ad_action.hpp"
#include "qlie/errors.hpp"
#include "qlie/pbw.hpp"

namespace qlie {

inline const char* basis_name(int i) {
    static const char* names[3] = {"Xp_h", "Xm_h", "H_h"};
    return names[i];
}

// Coordinate triple over the ordered basis (X+_h, X-_h, H_h).
class QLieVector {
public:
    QLieVector() = default;
    QLieVector(ExtScalar xp, ExtScalar xm, ExtScalar h)
        : coords_{std::move(xp), std::move(xm), std::move(h)} {}

    static QLieVector zero() { return {}; }
    static QLieVector basis(int i) {
        QLieVector v;
        v.coords_.at(static_cast<std::size_t>(i)) = ExtScalar(1);
        return v;
    }

    const std::array<ExtScalar, 3>& coords() const { return coords_; }
    const ExtScalar& operator[](int i) const { return coords_.at(static_cast<std::size_t>(i)); }

    bool is_zero() const {
        return coords_[0].is_zero() && coords_[1].is_zero() && coords_[2].is_zero();
    }

    friend QLieVector operator+(const QLieVector& x, const QLieVector& y) {
        return {x.coords_[0] + y.coords_[0], x.coords_[1] + y.coords_[1],
                x.coords_[2] + y.coords_[2]};
    }
    friend QLieVector operator-(const QLieVector& x) {
        return {-x.coords_[0], -x.coords_[1], -x.coords_[2]};
    }
    friend QLieVector operator-(const QLieVector& x, const QLieVector& y) { return x + (-y); }
    friend QLieVector operator*(const ExtScalar& c, const QLieVector& x) {
        return {c * x.coords_[0], c * x.coords_[1], c * x.coords_[2]};
    }

    bool operator==(const QLieVector& other) const = default;

    // Coordinate-wise q-conjugation in the distinguished basis (an involution).
    QLieVector qconj() const {
        return {coords_[0].qconj(), coords_[1].qconj(), coords_[2].qconj()};
    }

private:
    std::array<ExtScalar, 3> coords_;
};

inline QLieVector qconj_L(const QLieVector& v) { return v.qconj(); }

struct Embedding {
    std::array<AlgElement, 3> images; // images of X+_h, X-_h, H_h in U_q(sl2)
    std::array<AdWord, 3> ad_words;   // ad operators of the images
    std::vector<ExtScalar> twist;     // coefficients of p(C), constant term first; sum is 1

    AlgElement embed(const QLieVector& v) const {
        AlgElement acc;
        for (int i = 0; i < 3; ++i) acc += v[i] * images[static_cast<std::size_t>(i)];
        return acc;
    }
    AdWord ad_word(const QLieVector& v) const {
        AdWord acc;
        for (int i = 0; i < 3; ++i) acc += v[i] * ad_words[static_cast<std::size_t>(i)];
        return acc;
    }
};

// Failure certificate for a vector outside the span of the embedding images.
class closure_error : public std::runtime_error {
public:
    closure_error(std::string what, AlgElement residual)
        : std::runtime_error(std::move(what)), residual_(std::move(residual)) {}
    const AlgElement& residual() const { return residual_; }

private:
    AlgElement residual_;
};

namespace detail {

// Exact 3-unknown linear solve over the coefficient field: coordinates of u
// in the span of the images, or the nonzero residual. Rows are indexed by PBW
// monomials; pivots take the lowest monomial in lex (a, b, c) order.
inline std::pair<QLieVector, AlgElement> solve_span(const AlgElement& u, const Embedding& e) {
    std::set<PBWMonomial> monos;
    for (const auto& img : e.images)
        for (const auto& [m, c] : img.terms()) monos.insert(m);
    for (const auto& [m, c] : u.terms()) monos.insert(m);

    struct Row {
        std::array<ExtScalar, 3> lhs;
        ExtScalar rhs;
    };
    std::vector<Row> rows;
    rows.reserve(monos.size());
    for (const auto& m : monos) {
        Row row;
        for (int i = 0; i < 3; ++i) row.lhs[static_cast<std::size_t>(i)] = e.images[static_cast<std::size_t>(i)].coeff(m);
        row.rhs = u.coeff(m);
        rows.push_back(std::move(row));
    }

    std::array<std::optional<std::size_t>, 3> pivot_of_col;
    std::vector<bool> used(rows.size(), false);
    for (int col = 0; col < 3; ++col) {
        std::optional<std::size_t> pivot;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!used[r] && !rows[r].lhs[static_cast<std::size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (!pivot) continue; // column identically zero among unused rows
        used[*pivot] = true;
        pivot_of_col[static_cast<std::size_t>(col)] = pivot;
        const ExtScalar inv = rows[*pivot].lhs[static_cast<std::size_t>(col)].inverse();
        for (auto& v : rows[*pivot].lhs) v *= inv;
        rows[*pivot].rhs *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == *pivot) continue;
            ExtScalar factor = rows[r].lhs[static_cast<std::size_t>(col)];
            if (factor.is_zero()) continue;
            for (int j = 0; j < 3; ++j)
                rows[r].lhs[static_cast<std::size_t>(j)] -=
                    factor * rows[*pivot].lhs[static_cast<std::size_t>(j)];
            rows[r].rhs -= factor * rows[*pivot].rhs;
        }
    }

    std::array<ExtScalar, 3> coords;
    for (int col = 0; col < 3; ++col)
        if (pivot_of_col[static_cast<std::size_t>(col)])
            coords[static_cast<std::size_t>(col)] =
                rows[*pivot_of_col[static_cast<std::size_t>(col)]].rhs;

    QLieVector v{coords[0], coords[1], coords[2]};
    AlgElement residual = u - e.embed(v);
    return {std::move(v), std::move(residual)};
}

} // namespace detail

// Exact decomposition of u over the embedding images; throws closure_error
// (carrying the residual) when u is not in their span.
inline QLieVector decompose(const AlgElement& u, const Embedding& e) {
    auto [v, residual] = detail::solve_span(u, e);
    if (!residual.is_zero())
        throw closure_error("element is not in the span of the embedding images", residual);
    return v;
}

inline Embedding standard_embedding() {
    Embedding e;
    const ExtScalar s = ExtScalar::s();
    const ExtScalar two_over = ExtScalar::s_squared(); // 2/(q+q^-1)
    const ExtScalar q = ExtScalar::q_power(1);
    const ExtScalar qinv = ExtScalar::q_power(-1);

    e.images[0] = s * (AlgElement::Kinv() * AlgElement::E());
    e.images[1] = s * (AlgElement::Kinv() * AlgElement::F());
    e.images[2] = two_over * (q * (AlgElement::E() * AlgElement::F()) -
                              qinv * (AlgElement::F() * AlgElement::E()));

    e.ad_words[0] = s * AdWord::word({AdLetter::Kinv, AdLetter::E});
    e.ad_words[1] = s * AdWord::word({AdLetter::Kinv, AdLetter::F});
    e.ad_words[2] = two_over * (q * AdWord::word({AdLetter::E, AdLetter::F}) +
                                (-qinv) * AdWord::word({AdLetter::F, AdLetter::E}));

    e.twist = {ExtScalar(1)};
    return e;
}

// Embedding twisted by p(C): images right-multiplied by the polynomial in the
// Casimir element, ad words extended by the matching Casimir letters.
// Requires the coefficients of p to sum to exactly 1.
inline Embedding twisted_embedding(const std::vector<ExtScalar>& p) {
    ExtScalar sum;
    for (const auto& c : p) sum += c;
    if (!sum.is_one())
        throw invalid_embedding("twist coefficients must sum to 1");

    const Embedding base = standard_embedding();
    const AlgElement c_elem = casimir();
    const AdWord c_word = casimir_ad_word();

    AlgElement p_of_c;     // p(C) as an algebra element
    AdWord p_word;         // ad operator of p(C)
    AlgElement c_pow = AlgElement::one();
    AdWord w_pow = AdWord::identity();
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k > 0) {
            c_pow = c_pow * c_elem;
            w_pow = w_pow * c_word;
        }
        p_of_c += p[k] * c_pow;
        p_word += p[k] * w_pow;
    }

    Embedding e;
    e.twist = p;
    for (std::size_t i = 0; i < 3; ++i) {
        e.images[i] = base.images[i] * p_of_c;
        e.ad_words[i] = base.ad_words[i] * p_word;
    }

    // The images must stay linearly independent (they do for any nonzero
    // p(C) since U_q(sl2) is a domain; checked here to certify the contract).
    for (int i = 0; i < 3; ++i) {
        Embedding others;
        others.twist = e.twist;
        int k = 0;
        for (int j = 0; j < 3; ++j)
            if (j != i) others.images[static_cast<std::size_t>(k++)] = e.images[static_cast<std::size_t>(j)];
        auto [v, residual] = detail::solve_span(e.images[static_cast<std::size_t>(i)], others);
        (void)v;
        if (residual.is_zero())
            throw invalid_embedding("embedding images are linearly dependent");
    }
    return e;
}

// Quantum Lie bracket [x, y]_h = ad_x y, decomposed back over the basis.
inline QLieVector bracket(const QLieVector& x, const QLieVector& y, const Embedding& e) {
    AlgElement image = ad_apply(e.ad_word(x), e.embed(y));
    return decompose(image, e);
}

struct StructureTable {
    // entries[i][j] = [basis_i, basis_j]_h
    std::array<std::array<QLieVector, 3>, 3> entries;

    bool operator==(const StructureTable& other) const = default;
};

inline StructureTable structure_table(const Embedding& e) {
    StructureTable t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            t.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                bracket(QLieVector::basis(i), QLieVector::basis(j), e);
    return t;
}

// q-antisymmetry: [x, y]_h~ = -[y~, x~]_h. Both sides are computed exactly.
struct AntisymmetryReport {
    bool pass = false;
    QLieVector lhs; // [x, y]_h~
    QLieVector rhs; // -[y~, x~]_h
};

inline AntisymmetryReport check_qantisymmetry(const QLieVector& x, const QLieVector& y,
                                              const Embedding& e) {
    AntisymmetryReport r;
    r.lhs = bracket(x, y, e).qconj();
    r.rhs = -bracket(y.qconj(), x.qconj(), e);
    r.pass = (r.lhs == r.rhs);
    return r;
}

// q = 1 limit of a structure table, with the classical laws checked on the
// resulting constants.
struct ClassicalLimitReport {
    // constants[i][j][k]: coefficient of basis_k in the limit of [basis_i, basis_j]
    std::array<std::array<std::array<Rational, 3>, 3>, 3> constants{};
    bool antisymmetry_ok = false;
    bool jacobi_ok = false;
    bool matches_sl2 = false;
    std::vector<std::string> failures;

    bool pass() const { return antisymmetry_ok && jacobi_ok && matches_sl2; }
};

inline ClassicalLimitReport classical_limit(const StructureTable& t) {
    ClassicalLimitReport rep;
    auto& c = rep.constants;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const ExtScalar& entry =
                    t.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][k];
                try {
                    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                     [static_cast<std::size_t>(k)] = entry.eval_q1();
                } catch (const pole_error&) {
                    throw pole_error(std::string("classical limit undefined for entry (") +
                                     basis_name(i) + ", " + basis_name(j) + ") coordinate " +
                                     basis_name(k));
                }
            }

    rep.antisymmetry_ok = true;
    for (int i = 0; i < 3 && rep.antisymmetry_ok; ++i)
        for (int j = 0; j < 3 && rep.antisymmetry_ok; ++j)
            for (int k = 0; k < 3; ++k)
                if (c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] !=
                    -c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) {
                    rep.antisymmetry_ok = false;
                    rep.failures.push_back(std::string("antisymmetry fails at (") + basis_name(i) +
                                           ", " + basis_name(j) + ")");
                    break;
                }

    // [e_i, [e_j, e_k]] = [[e_i, e_j], e_k] + [e_j, [e_i, e_k]]
    auto at = [&c](int i, int j, int k) -> const Rational& {
        return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    };
    rep.jacobi_ok = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    Rational lhs(0), rhs(0);
                    for (int m = 0; m < 3; ++m) {
                        lhs += at(j, k, m) * at(i, m, l);
                        rhs += at(i, j, m) * at(m, k, l) + at(i, k, m) * at(j, m, l);
                    }
                    if (lhs != rhs) {
                        rep.jacobi_ok = false;
                        rep.failures.push_back("Jacobi fails at (" + std::string(basis_name(i)) +
                                               ", " + basis_name(j) + ", " + basis_name(k) + ")");
                    }
                }

    // Classical sl2 table: [X+, X-] = H, [H, X+-] = +-2 X+-, antisymmetric, else 0.
    std::array<std::array<std::array<Rational, 3>, 3>, 3> expected{};
    expected[0][1][2] = Rational(1);
    expected[1][0][2] = Rational(-1);
    expected[2][0][0] = Rational(2);
    expected[0][2][0] = Rational(-2);
    expected[2][1][1] = Rational(-2);
    expected[1][2][1] = Rational(2);
    rep.matches_sl2 = (c == expected);
    if (!rep.matches_sl2) rep.failures.push_back("limit table differs from the classical sl2 table");
    return rep;
}

} // namespace qlie
