#pragma once

// Matrix representations of (sl2)_h. A representation is a linear map pi
// into n x n matrices together with a matrix q-conjugation, defined on the
// matrix-unit basis and extended q-linearly. The bracket is realized by the
// q-commutator
//   pi(a) pi(b) - (pi~(b) pi~(a))~.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qlie/errors.hpp"
#include "qlie/qlie_algebra.hpp"

namespace qlie {

class RepMatrix {
public:
    RepMatrix() : n_(0) {}
    explicit RepMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}

    static RepMatrix identity(int n) {
        RepMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = ExtScalar(1);
        return m;
    }
    // Matrix unit E_{ij} (0-based indices).
    static RepMatrix unit(int n, int i, int j) {
        RepMatrix m(n);
        m.at(i, j) = ExtScalar(1);
        return m;
    }

    int dim() const { return n_; }
    ExtScalar& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const ExtScalar& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    RepMatrix transposed() const {
        RepMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    friend RepMatrix operator+(const RepMatrix& x, const RepMatrix& y) {
        x.require_same_dim(y);
        RepMatrix r(x.n_);
        for (std::size_t i = 0; i < r.entries_.size(); ++i)
            r.entries_[i] = x.entries_[i] + y.entries_[i];
        return r;
    }
    friend RepMatrix operator-(const RepMatrix& x) {
        RepMatrix r(x.n_);
        for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = -x.entries_[i];
        return r;
    }
    friend RepMatrix operator-(const RepMatrix& x, const RepMatrix& y) { return x + (-y); }
    friend RepMatrix operator*(const ExtScalar& c, const RepMatrix& x) {
        RepMatrix r(x.n_);
        for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = c * x.entries_[i];
        return r;
    }
    friend RepMatrix operator*(const RepMatrix& x, const RepMatrix& y) {
        x.require_same_dim(y);
        RepMatrix r(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (int j = 0; j < x.n_; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }

    RepMatrix& operator+=(const RepMatrix& y) { return *this = *this + y; }

    bool operator==(const RepMatrix& other) const = default;

    // Entry-wise evaluation at q = 1 (kept as exact rationals inside ExtScalar).
    RepMatrix evaluated_at_q1() const {
        RepMatrix r(n_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            r.entries_[i] = ExtScalar(entries_[i].eval_q1());
        return r;
    }

private:
    int n_;
    std::vector<ExtScalar> entries_; // row-major

    void require_same_dim(const RepMatrix& other) const {
        if (n_ != other.n_) throw dimension_mismatch("matrix dimensions differ");
    }
};

// Matrix q-conjugation, given by its images on the matrix-unit basis and
// extended q-linearly: (lambda M)~ = lambda~ M~.
class MatConjugation {
public:
    MatConjugation() : n_(0) {}
    explicit MatConjugation(int n) : n_(n), images_(static_cast<std::size_t>(n) * n, RepMatrix(n)) {}

    static MatConjugation identity(int n) {
        MatConjugation c(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c.set_unit_image(i, j, RepMatrix::unit(n, i, j));
        return c;
    }

    int dim() const { return n_; }
    const RepMatrix& unit_image(int i, int j) const {
        return images_[static_cast<std::size_t>(i) * n_ + j];
    }
    void set_unit_image(int i, int j, RepMatrix m) {
        if (m.dim() != n_) throw dimension_mismatch("conjugation image has wrong dimension");
        images_[static_cast<std::size_t>(i) * n_ + j] = std::move(m);
    }

private:
    int n_;
    std::vector<RepMatrix> images_;
};

// M expanded over matrix units, each coefficient q-conjugated and multiplied
// into the unit's image.
inline RepMatrix mat_qconj(const RepMatrix& m, const MatConjugation& c) {
    if (m.dim() != c.dim()) throw dimension_mismatch("matrix/conjugation dimensions differ");
    RepMatrix acc(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            const ExtScalar& coeff = m.at(i, j);
            if (coeff.is_zero()) continue;
            acc += coeff.qconj() * c.unit_image(i, j);
        }
    return acc;
}

// The q-commutator A B - (B~ A~)~.
inline RepMatrix qcommutator(const RepMatrix& a, const RepMatrix& b, const MatConjugation& c) {
    return a * b - mat_qconj(mat_qconj(b, c) * mat_qconj(a, c), c);
}

struct Representation {
    int dimension = 0;
    std::array<RepMatrix, 3> pi; // images of X+_h, X-_h, H_h
    MatConjugation conj;

    RepMatrix apply(const QLieVector& v) const {
        RepMatrix acc(dimension);
        for (int i = 0; i < 3; ++i) acc += v[i] * pi[static_cast<std::size_t>(i)];
        return acc;
    }
    // pi~(v) = pi(v~): the conjugate map evaluated via the basis-wise
    // conjugation of coordinates.
    RepMatrix apply_conj(const QLieVector& v) const { return apply(v.qconj()); }
};

// The 2-dimensional representation:
//   pi(X+_h) = sqrt((q+q^-1)/2) E_12,  pi(H_h) = diag(q, -q^-1),
//   pi(X-_h) = pi(X+_h)^t,
// with the matrix-unit conjugation
//   E_11~ = diag(2q, q-q^-1)/(q+q^-1),  E_22~ = diag(q^-1-q, 2q^-1)/(q+q^-1),
//   E_12~ = E_12,  E_21~ = E_21.
// The prefactor sqrt((q+q^-1)/2) is stored as s (q+q^-1)/2, which squares to
// (q+q^-1)/2.
inline Representation builtin_rep2() {
    Representation r;
    r.dimension = 2;

    const ExtScalar q = ExtScalar::q_power(1);
    const ExtScalar qinv = ExtScalar::q_power(-1);
    const ExtScalar half(Rational(1, 2));
    const ExtScalar prefactor = ExtScalar::s() * half * (q + qinv);

    r.pi[0] = prefactor * RepMatrix::unit(2, 0, 1);
    r.pi[1] = r.pi[0].transposed();
    r.pi[2] = RepMatrix(2);
    r.pi[2].at(0, 0) = q;
    r.pi[2].at(1, 1) = -qinv;

    const ExtScalar inv_sum = (q + qinv).inverse();
    MatConjugation c(2);
    RepMatrix e11(2);
    e11.at(0, 0) = inv_sum * ExtScalar(2) * q;
    e11.at(1, 1) = inv_sum * (q - qinv);
    RepMatrix e22(2);
    e22.at(0, 0) = inv_sum * (qinv - q);
    e22.at(1, 1) = inv_sum * ExtScalar(2) * qinv;
    c.set_unit_image(0, 0, std::move(e11));
    c.set_unit_image(1, 1, std::move(e22));
    c.set_unit_image(0, 1, RepMatrix::unit(2, 0, 1));
    c.set_unit_image(1, 0, RepMatrix::unit(2, 1, 0));
    r.conj = std::move(c);
    return r;
}

struct RepCheckItem {
    std::string name;
    bool pass = false;
    std::string detail; // both sides on failure, empty on pass
};

struct RepCheckReport {
    std::vector<RepCheckItem> items;
    bool pass() const {
        for (const auto& item : items)
            if (!item.pass) return false;
        return true;
    }
};

namespace detail {
std::string render_matrix_text(const RepMatrix& m); // provided by render.hpp
} // namespace detail

// Checks that the q-commutators of the representation matrices reproduce a
// bracket table, and that the conjugation is an involution and q-linear on
// all matrix units.
inline RepCheckReport verify_representation(const Representation& r, const StructureTable& t) {
    RepCheckReport rep;

    for (int i = 0; i < r.dimension; ++i)
        for (int j = 0; j < r.dimension; ++j) {
            const RepMatrix u = RepMatrix::unit(r.dimension, i, j);
            RepCheckItem item;
            item.name = "conjugation involution on unit (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ")";
            item.pass = (mat_qconj(mat_qconj(u, r.conj), r.conj) == u);
            rep.items.push_back(std::move(item));

            RepCheckItem lin;
            lin.name = "conjugation q-linearity on unit (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ")";
            const ExtScalar lambda = ExtScalar::q_power(1) + ExtScalar(Rational(3));
            lin.pass = (mat_qconj(lambda * u, r.conj) ==
                        lambda.qconj() * mat_qconj(u, r.conj));
            rep.items.push_back(std::move(lin));
        }

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            RepCheckItem item;
            item.name = std::string("pair (") + basis_name(i) + ", " + basis_name(j) + ")";
            const RepMatrix lhs = qcommutator(r.pi[static_cast<std::size_t>(i)],
                                              r.pi[static_cast<std::size_t>(j)], r.conj);
            const RepMatrix rhs =
                r.apply(t.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            item.pass = (lhs == rhs);
            if (!item.pass)
                item.detail = "q-commutator = " + detail::render_matrix_text(lhs) +
                              ", pi(bracket) = " + detail::render_matrix_text(rhs);
            rep.items.push_back(std::move(item));
        }
    return rep;
}

} // namespace qlie
