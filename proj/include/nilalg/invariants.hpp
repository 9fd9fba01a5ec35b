// Isomorphism invariants: derivation algebras, orbit dimensions, and the
// fingerprint record used to distinguish catalog entries and as a necessary
// condition for degenerations (a proper degeneration strictly increases the
// derivation dimension).
#pragma once

#include "catalog.hpp"

namespace nilalg {

// Derivations d(e_i e_j) = d(e_i) e_j + e_i d(e_j), as a subspace of the
// n^2-dimensional matrix space.  A derivation D has its basis images in its
// columns (d(e_l) = sum_k D[k][l] e_k, matching the automorphism convention)
// and is flattened row-major.
template <typename K>
Subspace<K> derivation_algebra(const Algebra<K>& a) {
    size_t n = a.n;
    Mat<K> sys(n * n * n, n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Vec<K>& row = sys[(i * n + j) * n + k];
                // coefficient of e_k in d(e_i e_j) ...
                for (size_t l = 0; l < n; ++l)
                    row[k * n + l] = row[k * n + l] + a.c[i][j][l];
                // ... minus d(e_i) e_j and e_i d(e_j)
                for (size_t p = 0; p < n; ++p) {
                    row[p * n + i] = row[p * n + i] - a.c[p][j][k];
                    row[p * n + j] = row[p * n + j] - a.c[i][p][k];
                }
            }
    Mat<K> ker = kernel(std::move(sys));
    Subspace<K> s(ker.nrows() ? ker : Mat<K>(0, n * n));
    s.ambient = n * n;
    return s;
}

// dim O(A) = n^2 - dim Der(A) (orbit of the structure tensor under GL_n).
template <typename K>
size_t orbit_dimension(const Algebra<K>& a) {
    return a.n * a.n - derivation_algebra(a).dim();
}

// A nilpotent algebra is generated by any complement of A^2, so it is
// one-generated exactly when A^2 has codimension one.
template <typename K>
bool one_generated(const Algebra<K>& a) {
    return a.n - a.square().dim() == 1;
}

// Basis-independent summary of an algebra.
struct Fingerprint {
    size_t dim = 0;
    size_t ann_dim = 0;
    std::vector<size_t> series_dims;  // lower central series A >= A^2 >= ...
    size_t square_dim = 0;
    size_t der_dim = 0;
    size_t z2_dim = 0;
    size_t h2_dim = 0;
    bool symmetric = false;
    bool one_generated = false;

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.dim == b.dim && a.ann_dim == b.ann_dim &&
               a.series_dims == b.series_dims && a.square_dim == b.square_dim &&
               a.der_dim == b.der_dim && a.z2_dim == b.z2_dim &&
               a.h2_dim == b.h2_dim && a.symmetric == b.symmetric &&
               a.one_generated == b.one_generated;
    }
    friend bool operator!=(const Fingerprint& a, const Fingerprint& b) {
        return !(a == b);
    }
};

template <typename K>
Fingerprint fingerprint(const Algebra<K>& a) {
    Fingerprint f;
    f.dim = a.n;
    f.ann_dim = a.annihilator().dim();
    for (const auto& s : a.lower_central_series()) f.series_dims.push_back(s.dim());
    f.square_dim = a.square().dim();
    f.der_dim = derivation_algebra(a).dim();
    f.z2_dim = cocycle_space(a).dim();
    f.h2_dim = f.z2_dim - coboundary_space(a).dim();
    f.symmetric = a.is_symmetric_leibniz();
    f.one_generated = one_generated(a);
    return f;
}

// Reproducible parameter samples: each parameter takes a small prime from
// {2, 3, 5, 7, 11, ...}, shifted per parameter and skipping values that hit a
// declared exclusion.  `offset` selects one of the default sample triples.
inline std::map<int, GQ> default_sample(const std::vector<std::string>& params,
                                        const std::vector<Poly>& exclusions,
                                        size_t offset = 0) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::map<int, GQ> vals;
    size_t next = offset;
    for (size_t p = 0; p < params.size(); ++p) {
        int id = var_id(params[p]);
        for (;;) {
            GQ candidate(primes[next % 12]);
            ++next;
            std::map<int, GQ> trial = vals;
            trial[id] = candidate;
            bool excluded = false;
            for (const auto& e : exclusions) {
                // Only test exclusions whose variables are all assigned.
                bool ready = true;
                for (int v : e.variables())
                    if (!trial.count(v)) { ready = false; break; }
                if (ready && e.eval(trial).is_zero()) { excluded = true; break; }
            }
            if (!excluded) { vals[id] = candidate; break; }
        }
    }
    return vals;
}

// Dimension of the closure of the union of orbits over a parametric family,
// computed at a generic sample: the rank of the tangent space spanned by the
// gl_n action directions X.c = X c(.,.) - c(X., .) - c(., X.) together with
// the parameter-derivative directions of the structure tensor.  For an entry
// without parameters this equals the orbit dimension n^2 - dim Der.
inline size_t family_closure_dimension(const CatalogEntry& e, size_t k = 0) {
    size_t n = e.alg.n;
    std::map<int, GQ> vals = default_sample(e.data.params, e.exclusion_polys, k);
    Algebra<GQ> a = eval_algebra(e.alg, vals);
    Mat<GQ> tangent(n * n + e.data.params.size(), n * n * n);
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) {
            Vec<GQ>& row = tangent[p * n + q];
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    row[(i * n + j) * n + p] = row[(i * n + j) * n + p] + a.c[i][j][q];
            for (size_t j = 0; j < n; ++j)
                for (size_t l = 0; l < n; ++l) {
                    row[(q * n + j) * n + l] = row[(q * n + j) * n + l] - a.c[p][j][l];
                    row[(j * n + q) * n + l] = row[(j * n + q) * n + l] - a.c[j][p][l];
                }
        }
    for (size_t r = 0; r < e.data.params.size(); ++r) {
        int id = var_id(e.data.params[r]);
        Vec<GQ>& row = tangent[n * n + r];
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t l = 0; l < n; ++l)
                    row[(i * n + j) * n + l] = e.alg.c[i][j][l].derivative(id).eval(vals);
    }
    return rank(std::move(tangent));
}

// A catalog entry's algebra over Q(i) at the k-th default parameter sample.
inline Algebra<GQ> entry_at_sample(const CatalogEntry& e, size_t k = 0) {
    std::map<int, GQ> vals =
        default_sample(e.data.params, e.exclusion_polys, k);
    return eval_algebra(e.alg, vals);
}

}  // namespace nilalg
