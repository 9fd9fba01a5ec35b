// Catalog of the low-dimensional nilpotent Leibniz algebras that serve as
// extension bases, together with their published second-cohomology bases.
//
// Naming scheme (ASCII):
//   N01..N04   three-dimensional 2-step nilpotent algebras
//   L1         the three-dimensional 3-step nilpotent algebra
//   fN01..fN15 four-dimensional 2-step nilpotent algebras
//   fL1..fL13  four-dimensional 3- and 4-step nilpotent algebras
// A trailing "^v" marks a family member at a special parameter value with a
// larger cohomology space (e.g. "N03^0", "fN08^1", "fN14^-1").
//
// Cohomology classes are written as combinations of the elementary bilinear
// forms d<i><j> (theta(e_i, e_j) = 1, zero elsewhere).
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohomology.hpp"

namespace nilalg {

struct BaseAlgebraData {
    std::string name;
    size_t dim;
    std::string products;
    std::vector<std::string> params;      // declared parameter names
    std::vector<std::string> exclusions;  // polynomials assumed nonzero
    std::vector<std::string> h2;          // H^2 basis as d<i><j> combinations
};

inline const std::vector<BaseAlgebraData>& base_algebras() {
    static const std::vector<BaseAlgebraData> data = {
        // --- three-dimensional, 2-step nilpotent ---
        {"N01", 3, "e1 e1 = e2", {}, {}, {"d13", "d21", "d31", "d33"}},
        {"N02", 3, "e1 e2 = e3; e2 e1 = -e3", {}, {},
         {"d11", "d12", "d13 - d31", "d22", "d23 - d32"}},
        {"N03", 3, "e1 e1 = e3; e1 e2 = e3; e2 e2 = alpha*e3", {"alpha"}, {"alpha"},
         {"d11", "d21", "d22"}},
        {"N03^0", 3, "e1 e1 = e3; e1 e2 = e3", {}, {},
         {"d11", "d21", "d22", "d31 + d32"}},
        {"N04", 3, "e1 e1 = e3; e1 e2 = e3; e2 e1 = e3", {}, {}, {"d11", "d12", "d22"}},
        // --- three-dimensional, 3-step nilpotent ---
        {"L1", 3, "e1 e1 = e2; e2 e1 = e3", {}, {}, {"d31"}},
        // --- four-dimensional, 2-step nilpotent ---
        {"fN01", 4, "e1 e1 = e2", {}, {},
         {"d13", "d14", "d21", "d31", "d33", "d34", "d41", "d43", "d44"}},
        {"fN02", 4, "e1 e1 = e3; e2 e2 = e4", {}, {}, {"d12", "d21", "d31", "d42"}},
        {"fN03", 4, "e1 e2 = e3; e2 e1 = -e3", {}, {},
         {"d11", "d12", "d14", "d22", "d24", "d13 - d31", "d23 - d32", "d41", "d42",
          "d44"}},
        {"fN04", 4, "e1 e1 = e3; e1 e2 = e3; e2 e2 = alpha*e3", {"alpha"}, {"alpha"},
         {"d12", "d14", "d21", "d22", "d24", "d41", "d42", "d44"}},
        {"fN04^0", 4, "e1 e1 = e3; e1 e2 = e3", {}, {},
         {"d12", "d14", "d21", "d22", "d24", "d31 + d32", "d41", "d42", "d44"}},
        {"fN05", 4, "e1 e1 = e3; e1 e2 = e3; e2 e1 = e3", {}, {},
         {"d12", "d14", "d21", "d22", "d24", "d41", "d42", "d44"}},
        {"fN06", 4, "e1 e2 = e4; e3 e1 = e4", {}, {},
         {"d11", "d13", "d21", "d22", "d23", "d31", "d32", "d33"}},
        {"fN07", 4, "e1 e2 = e3; e2 e1 = e4; e2 e2 = -e3", {}, {},
         {"d11", "d22", "d32", "d41"}},
        {"fN08", 4, "e1 e1 = e3; e1 e2 = e4; e2 e1 = -alpha*e3; e2 e2 = -e4",
         {"alpha"}, {"alpha - 1"}, {"d21", "d22", "d31", "d42"}},
        {"fN08^1", 4, "e1 e1 = e3; e1 e2 = e4; e2 e1 = -e3; e2 e2 = -e4", {}, {},
         {"d21", "d22", "d31", "d42", "d32 + d41"}},
        {"fN09", 4,
         "e1 e1 = e4; e1 e2 = alpha*e4; e2 e1 = -alpha*e4; e2 e2 = e4; e3 e3 = e4",
         {"alpha"}, {},
         {"d12", "d13", "d21", "d22", "d23", "d31", "d32", "d33"}},
        {"fN10", 4, "e1 e2 = e4; e1 e3 = e4; e2 e1 = -e4; e2 e2 = e4; e3 e1 = e4", {},
         {}, {"d11", "d13", "d21", "d22", "d23", "d31", "d32", "d33"}},
        {"fN11", 4, "e1 e1 = e4; e1 e2 = e4; e2 e1 = -e4; e3 e3 = e4", {}, {},
         {"d12", "d13", "d21", "d22", "d23", "d31", "d32", "d33"}},
        {"fN12", 4, "e1 e2 = e3; e2 e1 = e4", {}, {},
         {"d11", "d22", "-d13 + d14 + d31", "d32", "d41", "d23 - d24 + d42"}},
        {"fN13", 4, "e1 e1 = e4; e1 e2 = e3; e2 e1 = -e3; e2 e2 = 2*e3 + e4", {}, {},
         {"d21", "d22", "d32 - d41", "d31 - 2*d32 + d42"}},
        {"fN14", 4, "e1 e2 = e4; e2 e1 = alpha*e4; e2 e2 = e3", {"alpha"},
         {"alpha + 1"}, {"d11", "d21", "d32", "alpha*d31 + d42"}},
        {"fN14^-1", 4, "e1 e2 = e4; e2 e1 = -e4; e2 e2 = e3", {}, {},
         {"d11", "d21", "d32", "-d31 + d42", "d14 - d41", "d24 - d42"}},
        {"fN15", 4, "e1 e2 = e4; e2 e1 = -e4; e3 e3 = e4", {}, {},
         {"d12", "d13", "d21", "d22", "d23", "d31", "d32", "d33"}},
        // --- four-dimensional, 3-step nilpotent ---
        {"fL1", 4, "e1 e1 = e2; e2 e1 = e3", {}, {}, {"d14", "d31", "d41", "d44"}},
        {"fL2", 4, "e1 e2 = e3; e1 e3 = e4; e2 e1 = -e3; e3 e1 = -e4", {}, {},
         {"d11", "d21", "d22", "d23 - d32", "d14 - d41"}},
        {"fL3", 4, "e1 e1 = e3; e1 e2 = e4; e2 e1 = e3; e3 e1 = e4", {}, {},
         {"d21", "d22", "d31"}},
        {"fL4", 4, "e1 e1 = e3; e2 e1 = e3; e3 e1 = e4", {}, {},
         {"d12", "d21", "d22", "d41"}},
        {"fL5", 4, "e1 e1 = e3; e2 e1 = e3; e2 e2 = e4; e3 e1 = e4", {}, {},
         {"d12", "d21", "d31"}},
        {"fL6", 4, "e1 e1 = e3; e1 e2 = e4; e2 e1 = e3; e2 e2 = e4; e3 e1 = e4", {}, {},
         {"d21", "d22", "d31", "d32 + d41"}},
        {"fL7", 4, "e1 e1 = e3; e1 e2 = e4; e3 e1 = e4", {}, {},
         {"d21", "d22", "d31", "d32 + d41"}},
        {"fL8", 4, "e1 e1 = e3; e2 e2 = e4; e3 e1 = e4", {}, {}, {"d12", "d21", "d31"}},
        {"fL9", 4, "e1 e2 = -e3 + e4; e1 e3 = -e4; e2 e1 = e3; e3 e1 = e4", {}, {},
         {"d11", "d21", "d22", "d23 - d32"}},
        {"fL10", 4, "e1 e2 = -e3; e1 e3 = -e4; e2 e1 = e3; e2 e2 = e4; e3 e1 = e4", {},
         {}, {"d11", "d21", "d22", "d23 - d32"}},
        {"fL11", 4,
         "e1 e1 = e4; e1 e2 = -e3; e1 e3 = -e4; e2 e1 = e3; e2 e2 = e4; e3 e1 = e4",
         {}, {}, {"d21", "d22", "d13 - d31", "d23 - d32"}},
        {"fL12", 4, "e1 e1 = e4; e1 e2 = -e3; e1 e3 = -e4; e2 e1 = e3; e3 e1 = e4", {},
         {}, {"d21", "d22", "d13 - d31", "d23 - d32"}},
        // --- four-dimensional, 4-step nilpotent ---
        {"fL13", 4, "e1 e1 = e2; e2 e1 = e3; e3 e1 = e4", {}, {}, {"d41"}},
    };
    return data;
}

inline const BaseAlgebraData& base_algebra(const std::string& name) {
    for (auto& b : base_algebras())
        if (b.name == name) return b;
    throw std::runtime_error("unknown base algebra: " + name);
}

// Parses a combination of d<i><j> forms into a cocycle matrix.
inline Mat<Scalar> parse_cocycle(size_t n, const std::string& text) {
    Scalar expr = parse_scalar(text);
    if (!expr.den.is_constant())
        throw std::runtime_error("cocycle combination must be polynomial: " + text);
    Mat<Scalar> m(n, n);
    Poly rest = expr.num;
    GQ dc = expr.den.constant_value();
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = 1; j <= n; ++j) {
            int v = var_id("d" + std::to_string(i) + std::to_string(j));
            auto parts = rest.collect(v);
            Poly coeff, remaining;
            for (auto& [e, p] : parts) {
                if (e == 0) remaining += p;
                else if (e == 1) coeff = p;
                else throw std::runtime_error("nonlinear cocycle combination: " + text);
            }
            m[i - 1][j - 1] = Scalar(coeff, Poly(dc));
            rest = remaining;
        }
    if (!rest.is_zero())
        throw std::runtime_error("unrecognized terms in cocycle combination: " + text);
    return m;
}

struct BaseAlgebra {
    BaseAlgebraData data;
    Algebra<Scalar> alg;
    std::vector<Poly> exclusion_polys;
    std::vector<Mat<Scalar>> h2_basis;
};

inline BaseAlgebra load_base_algebra(const std::string& name) {
    const BaseAlgebraData& d = base_algebra(name);
    BaseAlgebra out;
    out.data = d;
    out.alg = parse_algebra(d.dim, d.products);
    for (auto& e : d.exclusions) {
        Scalar s = parse_scalar(e);
        if (!s.den.is_constant())
            throw std::runtime_error("exclusion must be polynomial: " + e);
        out.exclusion_polys.push_back(s.num);
    }
    for (auto& h : d.h2) out.h2_basis.push_back(parse_cocycle(d.dim, h));
    return out;
}

}  // namespace nilalg
