// Finite-dimensional (Leibniz) algebras given by exact structure constants.
//
// Products are stored as a full tensor: c[i][j] is the coordinate vector of
// e_i * e_j.  The scalar type K is any exact field from this tower, so the
// same code handles concrete algebras over Q(i) and parametric families over
// rational functions.
#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include "matrix.hpp"
#include "parse.hpp"

namespace nilalg {

template <typename K>
struct Algebra {
    size_t n = 0;
    std::vector<std::vector<Vec<K>>> c;  // c[i][j][k]: coefficient of e_k in e_i e_j

    Algebra() = default;
    explicit Algebra(size_t dim)
        : n(dim), c(dim, std::vector<Vec<K>>(dim, Vec<K>(dim, K(0)))) {}

    Vec<K> basis_product(size_t i, size_t j) const { return c[i][j]; }

    Vec<K> product(const Vec<K>& x, const Vec<K>& y) const {
        Vec<K> out(n, K(0));
        for (size_t i = 0; i < n; ++i) {
            if (field_is_zero(x[i])) continue;
            for (size_t j = 0; j < n; ++j) {
                if (field_is_zero(y[j])) continue;
                K f = x[i] * y[j];
                for (size_t k = 0; k < n; ++k)
                    if (!field_is_zero(c[i][j][k])) out[k] = out[k] + f * c[i][j][k];
            }
        }
        return out;
    }

    // Left and right multiplication operators as matrices acting on row
    // vectors (v -> v * L means left multiplication by e_i, etc.).
    Mat<K> left_mult(size_t i) const {
        Mat<K> m(n, n);
        for (size_t j = 0; j < n; ++j) m[j] = c[i][j];
        return m;
    }
    Mat<K> right_mult(size_t j) const {
        Mat<K> m(n, n);
        for (size_t i = 0; i < n; ++i) m[i] = c[i][j];
        return m;
    }

    // Right Leibniz identity (x y) z = (x z) y + x (y z) on all basis triples.
    // Returns a description of the first violation, if any.
    std::optional<std::string> right_leibniz_violation() const {
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y)
                for (size_t z = 0; z < n; ++z) {
                    Vec<K> lhs = product(c[x][y], unit(z));
                    Vec<K> rhs = product(c[x][z], unit(y));
                    Vec<K> xyz = product(unit(x), c[y][z]);
                    for (size_t k = 0; k < n; ++k) {
                        K d = lhs[k] - rhs[k] - xyz[k];
                        if (!field_is_zero(d)) {
                            std::ostringstream os;
                            os << "right Leibniz fails at (e" << x + 1 << ",e" << y + 1
                               << ",e" << z + 1 << ") coordinate e" << k + 1;
                            return os.str();
                        }
                    }
                }
        return std::nullopt;
    }

    // Left Leibniz identity x (y z) = (x y) z + y (x z).
    std::optional<std::string> left_leibniz_violation() const {
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y)
                for (size_t z = 0; z < n; ++z) {
                    Vec<K> lhs = product(unit(x), c[y][z]);
                    Vec<K> r1 = product(c[x][y], unit(z));
                    Vec<K> r2 = product(unit(y), c[x][z]);
                    for (size_t k = 0; k < n; ++k)
                        if (!field_is_zero(lhs[k] - r1[k] - r2[k])) {
                            std::ostringstream os;
                            os << "left Leibniz fails at (e" << x + 1 << ",e" << y + 1
                               << ",e" << z + 1 << ")";
                            return os.str();
                        }
                }
        return std::nullopt;
    }

    bool is_right_leibniz() const { return !right_leibniz_violation().has_value(); }
    bool is_symmetric_leibniz() const {
        return is_right_leibniz() && !left_leibniz_violation().has_value();
    }

    // Span of all products (the derived subspace A^2).
    Subspace<K> square() const {
        Mat<K> gens(n * n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) gens[i * n + j] = c[i][j];
        Subspace<K> s(gens);
        s.ambient = n;
        return s;
    }

    // Two-sided annihilator {x : x A = A x = 0}.
    Subspace<K> annihilator() const {
        // x in Ann iff for all j: sum_i x_i c[i][j][*] = 0 and sum_i x_i c[j][i][*] = 0.
        Mat<K> sys(2 * n * n, n);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                for (size_t i = 0; i < n; ++i) {
                    sys[(j * n + k)][i] = c[i][j][k];
                    sys[n * n + (j * n + k)][i] = c[j][i][k];
                }
        Mat<K> ker = kernel(sys);
        Subspace<K> s(ker.nrows() ? ker : Mat<K>(0, n));
        s.ambient = n;
        return s;
    }

    // Product of subspaces: span { u v : u in U, v in V }.
    Subspace<K> subspace_product(const Subspace<K>& u, const Subspace<K>& v) const {
        Mat<K> gens(u.dim() * v.dim(), n);
        for (size_t a = 0; a < u.dim(); ++a)
            for (size_t b = 0; b < v.dim(); ++b)
                gens[a * v.dim() + b] = product(u.basis[a], v.basis[b]);
        Subspace<K> s(gens.nrows() ? gens : Mat<K>(0, n));
        s.ambient = n;
        return s;
    }

    // Lower central series A^1 = A, A^{k+1} = A^k A + A A^k; stops when stable.
    std::vector<Subspace<K>> lower_central_series() const {
        std::vector<Subspace<K>> series;
        Subspace<K> whole(Mat<K>::identity(n));
        whole.ambient = n;
        series.push_back(whole);
        for (;;) {
            const Subspace<K>& prev = series.back();
            Subspace<K> next =
                Subspace<K>::sum(subspace_product(prev, whole), subspace_product(whole, prev));
            if (next.dim() == prev.dim()) break;
            series.push_back(next);
            if (next.dim() == 0) break;
        }
        return series;
    }

    bool is_nilpotent() const { return lower_central_series().back().dim() == 0; }

    // New structure constants after the basis change f_i = sum_j P[i][j] e_j.
    Algebra change_basis(const Mat<K>& p) const {
        Mat<K> pinv = inverse(p);
        Algebra out(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Vec<K> prod_old = product(p[i], p[j]);
                for (size_t k = 0; k < n; ++k) {
                    K acc(0);
                    for (size_t l = 0; l < n; ++l) acc = acc + prod_old[l] * pinv[l][k];
                    out.c[i][j][k] = acc;
                }
            }
        return out;
    }

    static Algebra direct_sum(const Algebra& a, const Algebra& b) {
        Algebra out(a.n + b.n);
        for (size_t i = 0; i < a.n; ++i)
            for (size_t j = 0; j < a.n; ++j)
                for (size_t k = 0; k < a.n; ++k) out.c[i][j][k] = a.c[i][j][k];
        for (size_t i = 0; i < b.n; ++i)
            for (size_t j = 0; j < b.n; ++j)
                for (size_t k = 0; k < b.n; ++k) out.c[a.n + i][a.n + j][a.n + k] = b.c[i][j][k];
        return out;
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        if (a.n != b.n) return false;
        for (size_t i = 0; i < a.n; ++i)
            for (size_t j = 0; j < a.n; ++j)
                for (size_t k = 0; k < a.n; ++k)
                    if (!field_is_zero(a.c[i][j][k] - b.c[i][j][k])) return false;
        return true;
    }

    Vec<K> unit(size_t i) const {
        Vec<K> v(n, K(0));
        v[i] = K(1);
        return v;
    }
};

// Evaluates a parametric algebra at concrete parameter values.
inline Algebra<GQ> eval_algebra(const Algebra<Scalar>& a, const std::map<int, GQ>& vals) {
    Algebra<GQ> out(a.n);
    for (size_t i = 0; i < a.n; ++i)
        for (size_t j = 0; j < a.n; ++j)
            for (size_t k = 0; k < a.n; ++k) out.c[i][j][k] = a.c[i][j][k].eval(vals);
    return out;
}

// Substitutes scalars (e.g. Laurent expressions in s) for named parameters.
inline Algebra<Scalar> subst_algebra(const Algebra<Scalar>& a,
                                     const std::map<int, Scalar>& vals) {
    Algebra<Scalar> out(a.n);
    for (size_t i = 0; i < a.n; ++i)
        for (size_t j = 0; j < a.n; ++j)
            for (size_t k = 0; k < a.n; ++k) out.c[i][j][k] = a.c[i][j][k].subst(vals);
    return out;
}

// Extracts the coefficients of a linear combination of e1..en from a parsed
// scalar expression (the e_i are ordinary parser identifiers).
inline Vec<Scalar> linear_combination(const Scalar& expr, size_t n) {
    for (size_t k = 0; k < n; ++k)
        if (expr.den.depends_on(var_id("e" + std::to_string(k + 1))))
            throw std::runtime_error("basis combination must be polynomial in e1..en");
    Vec<Scalar> out(n, Scalar(0));
    Poly rest = expr.num;
    for (size_t k = 0; k < n; ++k) {
        int v = var_id("e" + std::to_string(k + 1));
        auto parts = rest.collect(v);
        Poly coeff;
        Poly remaining;
        for (auto& [e, p] : parts) {
            if (e == 0) remaining += p;
            else if (e == 1) coeff = p;
            else throw std::runtime_error("nonlinear basis element in combination");
        }
        out[k] = Scalar(coeff, expr.den);
        rest = remaining;
    }
    if (!rest.is_zero())
        throw std::runtime_error("combination contains terms outside the basis: " + rest.str());
    for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l)
            if (out[k].num.depends_on(var_id("e" + std::to_string(l + 1))))
                throw std::runtime_error("nonlinear cross term between basis elements");
    return out;
}

// Builds an algebra from a readable product table, e.g.
//   "e1 e1 = e2; e2 e1 = e3"  or  "e1 e2 = a*e3 + e4".
// Unlisted basis products are zero.
inline Algebra<Scalar> parse_algebra(size_t n, const std::string& table) {
    Algebra<Scalar> alg(n);
    std::string rule;
    std::istringstream lines(table);
    auto flush = [&](const std::string& r) {
        std::string s = r;
        // Trim whitespace.
        size_t a = s.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) return;
        size_t b = s.find_last_not_of(" \t\r\n");
        s = s.substr(a, b - a + 1);
        auto eq = s.find('=');
        if (eq == std::string::npos) throw std::runtime_error("product rule without '=': " + s);
        std::string lhs = s.substr(0, eq), rhs = s.substr(eq + 1);
        size_t i = 0, j = 0;
        if (std::sscanf(lhs.c_str(), " e%zu * e%zu", &i, &j) != 2 &&
            std::sscanf(lhs.c_str(), " e%zu e%zu", &i, &j) != 2)
            throw std::runtime_error("bad product lhs: " + lhs);
        if (i < 1 || i > n || j < 1 || j > n) throw std::runtime_error("basis index out of range: " + lhs);
        Vec<Scalar> combo = linear_combination(parse_scalar(rhs), n);
        for (size_t k = 0; k < n; ++k) alg.c[i - 1][j - 1][k] = combo[k];
    };
    std::string chunk;
    while (std::getline(lines, chunk)) {
        std::istringstream parts(chunk);
        std::string piece;
        while (std::getline(parts, piece, ';')) flush(piece);
    }
    return alg;
}

}  // namespace nilalg
