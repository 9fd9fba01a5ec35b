// Second cohomology of a Leibniz algebra with trivial coefficients.
//
// A C-valued 2-cochain is an n x n matrix M with theta(e_i, e_j) = M[i][j].
// Cocycles satisfy theta(xy,z) = theta(xz,y) + theta(x,yz); coboundaries are
// delta f (x,y) = f(xy).  Everything here is exact linear algebra on the
// flattened n^2 coordinate space.
#pragma once

#include "algebra.hpp"

namespace nilalg {

template <typename K>
Vec<K> flatten(const Mat<K>& m) {
    Vec<K> v;
    v.reserve(m.nrows() * m.ncols());
    for (auto& row : m.rows)
        for (auto& x : row) v.push_back(x);
    return v;
}

template <typename K>
Mat<K> unflatten(const Vec<K>& v, size_t n) {
    Mat<K> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = v[i * n + j];
    return m;
}

// theta evaluated on arbitrary vectors.
template <typename K>
K cocycle_apply(const Mat<K>& theta, const Vec<K>& x, const Vec<K>& y) {
    K out(0);
    size_t n = theta.nrows();
    for (size_t i = 0; i < n; ++i) {
        if (field_is_zero(x[i])) continue;
        for (size_t j = 0; j < n; ++j)
            if (!field_is_zero(y[j])) out = out + x[i] * y[j] * theta[i][j];
    }
    return out;
}

// The linear conditions cutting out Z^2(A, C) inside all bilinear forms:
// for all basis triples, theta(e_i e_j, e_k) - theta(e_i e_k, e_j)
//                        - theta(e_i, e_j e_k) = 0.
template <typename K>
Mat<K> cocycle_conditions(const Algebra<K>& a) {
    size_t n = a.n;
    Mat<K> sys(n * n * n, n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                auto& row = sys[(i * n + j) * n + k];
                for (size_t b = 0; b < n; ++b) {
                    row[b * n + k] = row[b * n + k] + a.c[i][j][b];
                    row[b * n + j] = row[b * n + j] - a.c[i][k][b];
                    row[i * n + b] = row[i * n + b] - a.c[j][k][b];
                }
            }
    return sys;
}

// Extra conditions for the symmetric-Leibniz cocycle subspace Z^2_S:
// theta(e_i, e_j e_k) - theta(e_i e_j, e_k) - theta(e_j, e_i e_k) = 0.
template <typename K>
Mat<K> symmetric_cocycle_conditions(const Algebra<K>& a) {
    size_t n = a.n;
    Mat<K> sys(n * n * n, n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                auto& row = sys[(i * n + j) * n + k];
                for (size_t b = 0; b < n; ++b) {
                    row[i * n + b] = row[i * n + b] + a.c[j][k][b];
                    row[b * n + k] = row[b * n + k] - a.c[i][j][b];
                    row[j * n + b] = row[j * n + b] - a.c[i][k][b];
                }
            }
    return sys;
}

template <typename K>
Subspace<K> cocycle_space(const Algebra<K>& a) {
    Mat<K> ker = kernel(cocycle_conditions(a));
    Subspace<K> s(ker.nrows() ? ker : Mat<K>(0, a.n * a.n));
    s.ambient = a.n * a.n;
    return s;
}

template <typename K>
Subspace<K> symmetric_cocycle_space(const Algebra<K>& a) {
    Mat<K> both = cocycle_conditions(a);
    for (auto& row : symmetric_cocycle_conditions(a).rows) both.rows.push_back(row);
    Mat<K> ker = kernel(both);
    Subspace<K> s(ker.nrows() ? ker : Mat<K>(0, a.n * a.n));
    s.ambient = a.n * a.n;
    return s;
}

// B^2(A, C), spanned by the coordinate functionals of the product.
template <typename K>
Subspace<K> coboundary_space(const Algebra<K>& a) {
    size_t n = a.n;
    Mat<K> gens(n, n * n);
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) gens[k][i * n + j] = a.c[i][j][k];
    Subspace<K> s(gens);
    s.ambient = n * n;
    return s;
}

template <typename K>
size_t h2_dim(const Algebra<K>& a) {
    return cocycle_space(a).dim() - coboundary_space(a).dim();
}

// Checks that the given cocycle matrices represent a basis of H^2: each is a
// cocycle, the classes are independent modulo B^2, and they span the whole
// quotient.
template <typename K>
bool verify_h2_basis(const Algebra<K>& a, const std::vector<Mat<K>>& classes) {
    Subspace<K> z2 = cocycle_space(a);
    Subspace<K> b2 = coboundary_space(a);
    for (auto& m : classes)
        if (!z2.contains(flatten(m))) return false;
    Mat<K> span = b2.basis;
    for (auto& m : classes) span.rows.push_back(flatten(m));
    if (rank(span) != b2.dim() + classes.size()) return false;  // dependent mod B^2
    return b2.dim() + classes.size() == z2.dim();               // spans H^2
}

// Ann(theta) = {x : theta(x, A) = theta(A, x) = 0}, intersected over the
// components of a vector-valued cocycle.
template <typename K>
Subspace<K> cocycle_annihilator(const std::vector<Mat<K>>& thetas, size_t n) {
    Mat<K> sys(2 * n * thetas.size(), n);
    size_t r = 0;
    for (auto& m : thetas) {
        for (size_t j = 0; j < n; ++j, ++r)
            for (size_t i = 0; i < n; ++i) sys[r][i] = m[i][j];
        for (size_t j = 0; j < n; ++j, ++r)
            for (size_t i = 0; i < n; ++i) sys[r][i] = m[j][i];
    }
    Mat<K> ker = kernel(sys);
    Subspace<K> s(ker.nrows() ? ker : Mat<K>(0, n));
    s.ambient = n;
    return s;
}

// Membership of <[theta_1],...,[theta_s]> in T_s(A): the joint annihilator of
// the cocycles meets Ann(A) trivially.
template <typename K>
bool in_grassmannian_t(const Algebra<K>& a, const std::vector<Mat<K>>& thetas) {
    Subspace<K> joint = cocycle_annihilator(thetas, a.n);
    return Subspace<K>::intersect(joint, a.annihilator()).dim() == 0;
}

// The extension splits off an annihilator component iff the classes are
// linearly dependent in H^2.
template <typename K>
bool classes_independent_mod_b2(const Algebra<K>& a, const std::vector<Mat<K>>& thetas) {
    Subspace<K> b2 = coboundary_space(a);
    Mat<K> span = b2.basis;
    for (auto& m : thetas) span.rows.push_back(flatten(m));
    return rank(span) == b2.dim() + thetas.size();
}

// Decides whether the span of the classes lies inside the symmetric part
// H^2_S (i.e. the subspace W belongs to R_s rather than U_s).
template <typename K>
bool classes_in_symmetric_part(const Algebra<K>& a, const std::vector<Mat<K>>& thetas) {
    Subspace<K> z2s = symmetric_cocycle_space(a);
    Subspace<K> b2 = coboundary_space(a);
    Subspace<K> sym = Subspace<K>::sum(z2s, b2);
    for (auto& m : thetas)
        if (!sym.contains(flatten(m))) return false;
    return true;
}

// Expresses [theta] in the given H^2 basis: solves
//   theta = sum_r x_r * nabla_r + (coboundary)
// and returns the coordinates x.  Throws if theta is not a cocycle of A.
template <typename K>
Vec<K> class_coordinates(const Algebra<K>& a, const std::vector<Mat<K>>& h2_basis,
                         const Mat<K>& theta) {
    Subspace<K> b2 = coboundary_space(a);
    size_t nn = a.n * a.n, s = h2_basis.size(), nb = b2.dim();
    Mat<K> cols(nn, s + nb);
    for (size_t r = 0; r < s; ++r) {
        Vec<K> f = flatten(h2_basis[r]);
        for (size_t i = 0; i < nn; ++i) cols[i][r] = f[i];
    }
    for (size_t k = 0; k < nb; ++k)
        for (size_t i = 0; i < nn; ++i) cols[i][s + k] = b2.basis[k][i];
    Vec<K> rhs = flatten(theta), x;
    if (!solve(cols, rhs, x))
        throw std::runtime_error("cocycle is not in the span of H^2 basis + B^2");
    return Vec<K>(x.begin(), x.begin() + s);
}

}  // namespace nilalg
