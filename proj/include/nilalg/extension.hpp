// Central extensions of Leibniz algebras and the inverse construction.
//
// Given an n-dimensional algebra A and cocycles theta_1..theta_s, the central
// extension lives on A + C^s with product
//   (x + v)(y + w) = xy + sum_r theta_r(x, y) f_r,
// so the new basis vectors f_r annihilate everything.  Conversely, quotienting
// by a central subspace V recovers a smaller algebra together with the induced
// vector-valued cocycle; extending again returns the original tensor in the
// adapted basis.
#pragma once

#include "cohomology.hpp"

namespace nilalg {

struct NotACocycle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename K>
bool is_cocycle(const Algebra<K>& a, const Mat<K>& theta) {
    Vec<K> image = cocycle_conditions(a) * flatten(theta);
    for (auto& x : image)
        if (!field_is_zero(x)) return false;
    return true;
}

template <typename K>
Algebra<K> central_extension(const Algebra<K>& a,
                             const std::vector<Mat<K>>& thetas) {
    for (auto& t : thetas)
        if (!is_cocycle(a, t)) throw NotACocycle("form violates the cocycle condition");
    size_t n = a.n, s = thetas.size();
    Algebra<K> out(n + s);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < n; ++k) out.c[i][j][k] = a.c[i][j][k];
            for (size_t r = 0; r < s; ++r) out.c[i][j][n + r] = thetas[r][i][j];
        }
    return out;
}

// A quotient of A by a central subspace V, in the adapted basis that lists a
// coordinate complement of V first and the V basis last.
template <typename K>
struct CentralQuotient {
    Algebra<K> quotient;
    std::vector<Mat<K>> thetas;  // induced vector-valued cocycle
    Mat<K> adapted;              // rows = adapted basis in the original coordinates
};

template <typename K>
CentralQuotient<K> quotient_by_central(const Algebra<K>& a, const Subspace<K>& v) {
    size_t n = a.n, s = v.dim();
    if (s == 0) throw std::domain_error("quotient by the zero subspace is trivial");
    // Each V basis vector must annihilate A on both sides.
    for (auto& row : v.basis.rows)
        for (size_t j = 0; j < n; ++j) {
            Vec<K> ej = a.unit(j);
            for (auto& x : a.product(row, ej))
                if (!field_is_zero(x)) throw std::domain_error("subspace is not central");
            for (auto& x : a.product(ej, row))
                if (!field_is_zero(x)) throw std::domain_error("subspace is not central");
        }
    // Adapted basis: standard vectors at the non-pivot coordinates, then V.
    std::vector<bool> is_pivot(n, false);
    {
        Mat<K> m = v.basis;
        for (size_t c : rref(m)) is_pivot[c] = true;
    }
    Mat<K> p;
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec<K> row(n, K(0));
        row[c] = K(1);
        p.rows.push_back(std::move(row));
    }
    size_t m = p.nrows();
    for (auto& row : v.basis.rows) p.rows.push_back(row);
    Algebra<K> moved = a.change_basis(p);
    // Products of complement vectors may not leak V-components into the
    // complement block in a way that breaks the quotient: the first m
    // coordinates of the product define the quotient, the last s the cocycle.
    CentralQuotient<K> out;
    out.adapted = p;
    out.quotient = Algebra<K>(m);
    out.thetas.assign(s, Mat<K>(m, m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            for (size_t k = 0; k < m; ++k) out.quotient.c[i][j][k] = moved.c[i][j][k];
            for (size_t r = 0; r < s; ++r) out.thetas[r][i][j] = moved.c[i][j][m + r];
        }
    return out;
}

// Lemma-1 round trip: quotient by a central subspace, re-extend by the
// induced cocycle, and compare with the original tensor in the adapted basis.
template <typename K>
bool central_roundtrip(const Algebra<K>& a, const Subspace<K>& v) {
    CentralQuotient<K> q = quotient_by_central(a, v);
    Algebra<K> rebuilt = central_extension(q.quotient, q.thetas);
    return rebuilt == a.change_basis(q.adapted);
}

}  // namespace nilalg
