// Dense exact linear algebra over an arbitrary field type K.
//
// K must provide +, -, *, is_zero(); division through inv(); and a notion of
// being a *unit* (invertible for all admissible parameter values).  For true
// fields (Q(i), F_p) every nonzero element is a unit; for symbolic rational
// functions only constants and declared-nonzero factors are, and pivoting on
// anything else raises ParameterRankAmbiguity.
#pragma once

#include <functional>
#include <vector>

#include "scalar.hpp"

namespace nilalg {

inline bool field_is_zero(const GQ& x) { return x.is_zero(); }
inline bool field_is_unit(const GQ& x) { return !x.is_zero(); }
inline GQ field_inv(const GQ& x) { return x.inv(); }

inline bool field_is_zero(const Scalar& x) { return x.is_zero(); }
inline bool field_is_unit(const Scalar& x) { return x.is_unit(); }
inline Scalar field_inv(const Scalar& x) { return x.inv(); }

// Unit-factor removal before pair combination in echelon reduction: scales
// the row so that entry c loses its unit factors (declared-nonzero atoms,
// constants, unit denominators).  No-op over a true field.
inline void field_normalize_row(std::vector<GQ>&, size_t) {}
inline void field_normalize_row(std::vector<Scalar>& row, size_t c) {
    if (auto g = row[c].core_scaling())
        for (auto& x : row) x = x * *g;
}

template <typename K>
using Vec = std::vector<K>;

template <typename K>
struct Mat {
    std::vector<Vec<K>> rows;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r, Vec<K>(c, K(0))) {}

    size_t nrows() const { return rows.size(); }
    size_t ncols() const { return rows.empty() ? 0 : rows[0].size(); }
    Vec<K>& operator[](size_t i) { return rows[i]; }
    const Vec<K>& operator[](size_t i) const { return rows[i]; }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m[i][i] = K(1);
        return m;
    }

    Mat transpose() const {
        Mat t(ncols(), nrows());
        for (size_t i = 0; i < nrows(); ++i)
            for (size_t j = 0; j < ncols(); ++j) t[j][i] = rows[i][j];
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat out(a.nrows(), b.ncols());
        for (size_t i = 0; i < a.nrows(); ++i)
            for (size_t k = 0; k < a.ncols(); ++k) {
                if (field_is_zero(a[i][k])) continue;
                for (size_t j = 0; j < b.ncols(); ++j)
                    out[i][j] = out[i][j] + a[i][k] * b[k][j];
            }
        return out;
    }

    friend Vec<K> operator*(const Mat& a, const Vec<K>& v) {
        Vec<K> out(a.nrows(), K(0));
        for (size_t i = 0; i < a.nrows(); ++i)
            for (size_t k = 0; k < a.ncols(); ++k)
                if (!field_is_zero(a[i][k])) out[i] = out[i] + a[i][k] * v[k];
        return out;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) return false;
        for (size_t i = 0; i < a.nrows(); ++i)
            for (size_t j = 0; j < a.ncols(); ++j)
                if (!field_is_zero(a[i][j] - b[i][j])) return false;
        return true;
    }
};

// Deterministic row echelon reduction, in place.  For each column (processed
// left to right), the first remaining row whose entry is a unit becomes the
// pivot, is scaled to 1, and the column is cleared.  Columns whose candidate
// pivots all have parameter-dependent invertibility are deferred: later
// eliminations often clear them, and a sum/difference of two rows can expose
// a unit (e.g. (a+1) - a = 1).  Only if a deferred column keeps nonzero
// non-unit entries after all other work does the rank genuinely depend on
// the parameters, and then we refuse to guess.  Returns the pivot column of
// each pivot row, in row order.
// Columns at index >= pivot_limit (e.g. an augmented right-hand side) are
// never chosen as pivots.
template <typename K>
std::vector<size_t> rref(Mat<K>& m, size_t pivot_limit = SIZE_MAX) {
    std::vector<size_t> pivots;
    size_t r = 0;

    auto try_column = [&](size_t c) -> bool {  // true if resolved (pivot or all-zero)
        size_t sel = m.nrows();
        std::vector<size_t> nonzero;
        for (size_t i = r; i < m.nrows(); ++i) {
            if (field_is_zero(m[i][c])) continue;
            nonzero.push_back(i);
            if (sel == m.nrows() && field_is_unit(m[i][c])) sel = i;
        }
        if (sel == m.nrows() && nonzero.size() > 1) {
            // Strip unit factors from the candidate entries so that
            // combinations like (b+1) - (a+1) = b - a become visible.
            for (size_t i : nonzero) field_normalize_row(m.rows[i], c);
            for (size_t a = 0; a < nonzero.size() && sel == m.nrows(); ++a)
                for (size_t b = a + 1; b < nonzero.size() && sel == m.nrows(); ++b) {
                    size_t i = nonzero[a], j = nonzero[b];
                    if (field_is_unit(m[i][c] - m[j][c])) {
                        for (size_t k = 0; k < m.ncols(); ++k) m[i][k] = m[i][k] - m[j][k];
                        sel = i;
                    } else if (field_is_unit(m[i][c] + m[j][c])) {
                        for (size_t k = 0; k < m.ncols(); ++k) m[i][k] = m[i][k] + m[j][k];
                        sel = i;
                    }
                }
        }
        if (sel == m.nrows()) return nonzero.empty();
        std::swap(m.rows[r], m.rows[sel]);
        K piv_inv = field_inv(m[r][c]);
        for (auto& x : m[r])
            if (!field_is_zero(x)) x = x * piv_inv;
        for (size_t i = 0; i < m.nrows(); ++i) {
            if (i == r || field_is_zero(m[i][c])) continue;
            K f = m[i][c];
            for (size_t j = 0; j < m.ncols(); ++j)
                if (!field_is_zero(m[r][j])) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
        return true;
    };

    std::vector<size_t> deferred;
    size_t limit = std::min(pivot_limit, m.ncols());
    for (size_t c = 0; c < limit && r < m.nrows(); ++c)
        if (!try_column(c)) deferred.push_back(c);
    // Revisit deferred columns until nothing changes.
    bool progress = true;
    while (progress && !deferred.empty() && r < m.nrows()) {
        progress = false;
        std::vector<size_t> still;
        for (size_t c : deferred) {
            if (r < m.nrows() && try_column(c)) progress = true;
            else still.push_back(c);
        }
        deferred = std::move(still);
    }
    for (size_t c : deferred) {
        for (size_t i = r; i < m.nrows(); ++i)
            if (!field_is_zero(m[i][c]))
                throw ParameterRankAmbiguity(
                    "pivot choice depends on unresolved parameters (column " +
                    std::to_string(c) + ")");
    }
    return pivots;
}

template <typename K>
size_t rank(Mat<K> m) {
    return rref(m).size();
}

// Basis of the right kernel {x : m x = 0}, one solution per row.
template <typename K>
Mat<K> kernel(Mat<K> m) {
    size_t n = m.ncols();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    Mat<K> out;
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec<K> v(n, K(0));
        v[c] = K(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = K(0) - m[r][c];
        out.rows.push_back(std::move(v));
    }
    return out;
}

// Solves m x = b; returns false if inconsistent.
template <typename K>
bool solve(Mat<K> m, Vec<K> b, Vec<K>& x) {
    size_t n = m.ncols();
    for (size_t i = 0; i < m.nrows(); ++i) m[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(m, n);
    for (size_t i = pivots.size(); i < m.nrows(); ++i) {
        if (field_is_zero(m[i][n])) continue;
        if (field_is_unit(m[i][n])) return false;
        throw ParameterRankAmbiguity("solvability depends on unresolved parameters");
    }
    x.assign(n, K(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][n];
    return true;
}

template <typename K>
Mat<K> inverse(const Mat<K>& a) {
    size_t n = a.nrows();
    Mat<K> m(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = K(1);
    }
    auto pivots = rref(m, n);
    if (pivots.size() != n)
        throw std::domain_error("matrix is not invertible");
    Mat<K> out(n, n);
    // Pivot order may be permuted by deferral; row r solves for x_{pivots[r]}.
    for (size_t r = 0; r < n; ++r)
        for (size_t j = 0; j < n; ++j) out[pivots[r]][j] = m[r][n + j];
    return out;
}

// A linear subspace of K^n represented by its canonical (rref) row basis.
template <typename K>
struct Subspace {
    Mat<K> basis;  // rref, no zero rows
    size_t ambient = 0;

    Subspace() = default;
    explicit Subspace(Mat<K> spanning) : ambient(spanning.ncols()) {
        rref(spanning);
        for (auto& row : spanning.rows) {
            bool zero = true;
            for (auto& x : row)
                if (!field_is_zero(x)) { zero = false; break; }
            if (!zero) basis.rows.push_back(row);
        }
    }

    size_t dim() const { return basis.nrows(); }

    bool contains(const Vec<K>& v) const {
        Mat<K> m = basis;
        m.rows.push_back(v);
        return rank(std::move(m)) == dim();
    }

    bool contains(const Subspace& other) const {
        for (auto& row : other.basis.rows)
            if (!contains(row)) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient == b.ambient && a.basis == b.basis;
    }

    static Subspace sum(const Subspace& a, const Subspace& b) {
        Mat<K> m = a.basis;
        for (auto& row : b.basis.rows) m.rows.push_back(row);
        if (m.rows.empty()) m = Mat<K>(0, a.ambient);
        Subspace s(m);
        s.ambient = a.ambient;
        return s;
    }

    // Intersection of row spaces via the left kernel of [A; -B].
    static Subspace intersect(const Subspace& a, const Subspace& b) {
        size_t p = a.dim(), q = b.dim(), n = a.ambient;
        Mat<K> stacked(p + q, n);
        for (size_t i = 0; i < p; ++i) stacked[i] = a.basis[i];
        for (size_t i = 0; i < q; ++i)
            for (size_t j = 0; j < n; ++j) stacked[p + i][j] = K(0) - b.basis[i][j];
        Mat<K> lk = kernel(stacked.transpose());  // rows (x|y): xA = yB
        Mat<K> gens(lk.nrows(), n);
        for (size_t r = 0; r < lk.nrows(); ++r)
            for (size_t i = 0; i < p; ++i)
                for (size_t j = 0; j < n; ++j)
                    gens[r][j] = gens[r][j] + lk[r][i] * a.basis[i][j];
        Subspace s(gens.nrows() ? gens : Mat<K>(0, n));
        s.ambient = n;
        return s;
    }
};

}  // namespace nilalg
