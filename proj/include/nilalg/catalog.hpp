// The five-dimensional catalog: every algebra L01..L82 is reconstructed as a
// central extension of a 3- or 4-dimensional base by the span of cohomology
// classes listed for its orbit, written in the per-base class dictionaries
// n1..n9 below.  The six symmetric border families (V4p1, V3p2, V2p3, S21,
// S22, S41) and the split algebra fL13+C are given by explicit product
// tables.
//
// Families carry parameter names and polynomials assumed nonzero; notes
// record known parameter identifications inside a family.
#pragma once

#include "catalog_bases.hpp"
#include "extension.hpp"

namespace nilalg {

// Dictionary of cohomology classes n1..nk used by each base's orbit lists.
// The order follows the class numbering in the corresponding section, which
// can differ from the H^2 table order in catalog_bases.hpp.
inline const std::map<std::string, std::vector<std::string>>& class_dictionaries() {
    static const std::map<std::string, std::vector<std::string>> dicts = {
        {"N01", {"d13", "d21", "d31", "d33"}},
        {"N03^0", {"d11", "d21", "d22", "d31 + d32"}},
        {"fN01",
         {"d13", "d14", "d21", "d31", "d33", "d34", "d41", "d43", "d44"}},
        {"fN02", {"d12", "d21", "d31", "d42"}},
        {"fN04^0",
         {"d12", "d14", "d21", "d22", "d24", "d31 + d32", "d41", "d42", "d44"}},
        {"fN07", {"d11", "d22", "d32", "d41"}},
        {"fN08", {"d21", "d22", "d31", "d42"}},
        {"fN08^1", {"d21", "d22", "d31", "d42", "d32 + d41"}},
        {"fN12", {"d11", "d22", "-d13 + d14 + d31", "d32", "d41",
                  "d23 - d24 + d42"}},
        {"fN13", {"d21", "d22", "d32 - d41", "d31 - 2*d32 + d42"}},
        {"fN14", {"d11", "d21", "d32", "alpha*d31 + d42"}},
        {"fN14^-1", {"d11", "d21", "d32", "d31 - d42", "d14 - d41", "d24 - d42"}},
        {"fL1", {"d14", "d31", "d41", "d44"}},
        {"fL4", {"d12", "d21", "d22", "d41"}},
        {"fL6", {"d21", "d22", "d31", "d32 + d41"}},
        {"fL7", {"d21", "d22", "d31", "d32 + d41"}},
        {"fL13", {"d41"}},
    };
    return dicts;
}

// Parses an expression in the classes n1..nk (coefficients may involve
// declared parameters) into a cocycle matrix over the given base.
inline Mat<Scalar> parse_class_combination(const std::string& base,
                                           const std::string& text) {
    const auto& dict = class_dictionaries().at(base);
    size_t dim = base_algebra(base).dim;
    Scalar expr = parse_scalar(text);
    if (!expr.den.is_constant())
        throw std::runtime_error("class combination must be polynomial: " + text);
    Mat<Scalar> out(dim, dim);
    Poly rest = expr.num;
    GQ dc = expr.den.constant_value();
    for (size_t r = 0; r < dict.size(); ++r) {
        int v = var_id("n" + std::to_string(r + 1));
        auto parts = rest.collect(v);
        Poly coeff, remaining;
        for (auto& [e, p] : parts) {
            if (e == 0) remaining += p;
            else if (e == 1) coeff = p;
            else throw std::runtime_error("nonlinear class combination: " + text);
        }
        if (!coeff.is_zero()) {
            Scalar c(coeff, Poly(dc));
            Mat<Scalar> cls = parse_cocycle(dim, dict[r]);
            for (size_t i = 0; i < dim; ++i)
                for (size_t j = 0; j < dim; ++j)
                    out[i][j] = out[i][j] + c * cls[i][j];
        }
        rest = remaining;
    }
    if (!rest.is_zero())
        throw std::runtime_error("unrecognized terms in class combination: " + text);
    return out;
}

struct CatalogEntryData {
    std::string name;
    std::string base;                    // empty for explicit product tables
    std::string base_subs;               // e.g. "alpha = -1/2"
    std::vector<std::string> reps;       // spanning classes of the orbit
    std::string products;                // explicit table when base is empty
    std::vector<std::string> params;
    std::vector<std::string> exclusions;
    std::string note;
};

inline const std::vector<CatalogEntryData>& catalog_data() {
    static const std::vector<CatalogEntryData> data = {
        // --- extensions of N01 ---
        {"L01", "N01", "", {"n2", "n3"}, "", {}, {}, ""},
        {"L02", "N01", "", {"n1 + n2", "n3"}, "", {}, {}, ""},
        {"L03", "N01", "", {"n2", "n1 + alpha*n3"}, "", {"alpha"}, {}, ""},
        {"L04", "N01", "", {"n2 + n4", "n3"}, "", {}, {}, ""},
        {"L05", "N01", "", {"n2 + n4", "n1 + alpha*n3"}, "", {"alpha"}, {}, ""},
        {"L06", "N01", "", {"n2", "n4"}, "", {}, {}, ""},
        {"L07", "N01", "", {"n1 + n2", "n4"}, "", {}, {}, ""},
        {"L08", "N01", "", {"n1 + n2", "n1 + n4"}, "", {}, {}, ""},
        // --- extensions of N03^0 ---
        {"L09", "N03^0", "", {"n2 + n4", "n1"}, "", {}, {}, ""},
        {"L10", "N03^0", "", {"n4", "n1 + n2"}, "", {}, {}, ""},
        {"L11", "N03^0", "", {"n1 + n4", "n1 + n2"}, "", {}, {}, ""},
        {"L12", "N03^0", "", {"n4", "n2"}, "", {}, {}, ""},
        {"L13", "N03^0", "", {"n1 + n4", "n2"}, "", {}, {}, ""},
        {"L14", "N03^0", "", {"n1 + n4", "alpha*n1 + n3"}, "", {"alpha"}, {}, ""},
        {"L15", "N03^0", "", {"n4", "n3"}, "", {}, {}, ""},
        {"L16", "N03^0", "", {"n4", "n1 + n2 + n3"}, "", {}, {}, ""},
        {"L17", "N03^0", "", {"n2 + n4", "n1 + n2 + n3"}, "", {}, {}, ""},
        {"L18", "N03^0", "", {"n4", "n2 + n3"}, "", {}, {}, ""},
        {"L19", "N03^0", "", {"n1 + n2 + n4", "n2 + n3"}, "", {}, {}, ""},
        {"L20", "N03^0", "", {"n1 + n4", "n2 + n3"}, "", {}, {}, ""},
        {"L21", "N03^0", "", {"n2 + n4", "n2 + n3"}, "", {}, {}, ""},
        // --- extensions of fN01 ---
        {"L22", "fN01", "", {"n2 + n3 + n5"}, "", {}, {}, ""},
        {"L23", "fN01", "", {"n3 + n6 - n8"}, "", {}, {}, ""},
        {"L24", "fN01", "", {"n3 + n5 + n6 + alpha*n9"}, "", {"alpha"}, {}, ""},
        {"L25", "fN01", "", {"n1 + n3 + n5 + n6"}, "", {}, {}, ""},
        {"L26", "fN01", "", {"n3 + n5 + n6 + n8"}, "", {}, {}, ""},
        // --- extension of fN02 ---
        {"L27", "fN02", "", {"n3 + n4"}, "", {}, {}, ""},
        // --- extensions of fN04^0 ---
        {"L28", "fN04^0", "", {"alpha*n2 + n4 + n6 + n9"}, "", {"alpha"}, {}, ""},
        {"L29", "fN04^0", "", {"n1 + n4 + n6 + n9"}, "", {}, {}, ""},
        {"L30", "fN04^0", "", {"n1 + n2 + n4 + n6 + n9"}, "", {}, {}, ""},
        {"L31", "fN04^0", "", {"n6 + n9"}, "", {}, {}, ""},
        {"L32", "fN04^0", "", {"n2 + n6 + n9"}, "", {}, {}, ""},
        {"L33", "fN04^0", "", {"n1 + alpha*n2 + n6 + n9"}, "", {"alpha"}, {}, ""},
        {"L34", "fN04^0", "", {"n6 + n8"}, "", {}, {}, ""},
        {"L35", "fN04^0", "", {"n2 + n5 + n6 + n8"}, "", {}, {}, ""},
        {"L36", "fN04^0", "", {"alpha*n2 + n6 + n8"}, "", {"alpha"},
         {"alpha - 1"}, ""},
        {"L37", "fN04^0", "", {"n1 + n2 + n6 + n8"}, "", {}, {}, ""},
        {"L38", "fN04^0", "", {"alpha*n5 + n6 + n8"}, "", {"alpha"},
         {"alpha + 1"}, ""},
        {"L39", "fN04^0", "", {"n1 - n5 + n6 + n8"}, "", {}, {}, ""},
        {"L40", "fN04^0", "", {"n2 + n5 + n6"}, "", {}, {}, ""},
        {"L41", "fN04^0", "", {"n1 + n2 + n5 + n6"}, "", {}, {}, ""},
        {"L42", "fN04^0", "", {"n5 + n6"}, "", {}, {}, ""},
        {"L43", "fN04^0", "", {"n1 + n5 + n6"}, "", {}, {}, ""},
        {"L44", "fN04^0", "", {"n2 + n6"}, "", {}, {}, ""},
        {"L45", "fN04^0", "", {"n2 + n4 + n6"}, "", {}, {}, ""},
        // --- extension of fN07 ---
        {"L46", "fN07", "", {"n3 + n4"}, "", {}, {}, ""},
        // --- extensions of fN08 (two-parameter family) and fN08^1 ---
        {"L47", "fN08", "", {"n3 + beta*n4"}, "", {"alpha", "beta"}, {"beta"},
         "L47(a,b) ~ L47(a, a^3/b); L47(1,b), b != -1 ~ L47(1,1)"},
        {"L48", "fN08^1", "", {"-n3 - n4 + n5"}, "", {}, {}, ""},
        {"L49", "fN08^1", "", {"n2 - n3 - n4 + n5"}, "", {}, {}, ""},
        // --- extensions of fN12 ---
        {"L50", "fN12", "", {"n4 + n5"}, "", {}, {}, ""},
        {"L51", "fN12", "", {"n1 + n2 + n3 - n5"}, "", {}, {}, ""},
        // alpha = beta gives a joint annihilator meeting Ann(A), leaving T_s.
        {"L52", "fN12", "", {"n3 + n4 + alpha*n5 + beta*n6"}, "",
         {"alpha", "beta"}, {"alpha", "beta", "alpha - beta"},
         "L52(a,b) ~ L52(1/b, 1/a) for a,b != 0"},
        {"L53", "fN12", "", {"n6"}, "", {}, {}, ""},
        {"L54", "fN12", "", {"n3 - n5 + n6"}, "", {}, {}, ""},
        // alpha = 0 splits off a central line; alpha = -1 is symmetric/non-T_s.
        {"L55", "fN12", "", {"n4 + alpha*n6"}, "", {"alpha"},
         {"alpha", "alpha + 1"}, ""},
        {"L56", "fN12", "", {"n1 + alpha*n4 + n6"}, "", {"alpha"},
         {"alpha + 1"}, ""},
        {"L57", "fN12", "", {"n1 + n3 + n4 - n5"}, "", {}, {}, ""},
        {"L58", "fN12", "", {"n1 + n3 + alpha*n4 - n5 + n6"}, "", {"alpha"},
         {"alpha + 1"}, ""},
        {"L59", "fN12", "", {"n2 - n4 + n6"}, "", {}, {}, ""},
        {"L60", "fN12", "", {"n1 + n2 - n4 + n6"}, "", {}, {}, ""},
        {"L61", "fN12", "", {"alpha*n1 + n2 + n3 - n4 - n5 + n6"}, "",
         {"alpha"}, {}, ""},
        // --- extension of fN13 ---
        // At alpha = 1 the class annihilator becomes nonzero (det (a-1)^2).
        {"L62", "fN13", "", {"n3 + alpha*n4"}, "", {"alpha"}, {"alpha - 1"},
         "L62(a) ~ L62((2a-1)/(3a-2)) for a != 2/3"},
        // --- extensions of fN14 (parametric base) and fN14^-1 ---
        {"L63", "fN14", "", {"n4"}, "", {"alpha"}, {"alpha", "alpha + 1"}, ""},
        {"L64", "fN14", "alpha = -1/2", {"n3 + n4"}, "", {}, {}, ""},
        {"L65", "fN14^-1", "", {"n3 + n6"}, "", {}, {}, ""},
        {"L66", "fN14^-1", "", {"n1 + n3 + n6"}, "", {}, {}, ""},
        {"L67", "fN14^-1", "", {"alpha*n4 + n6"}, "", {"alpha"}, {"alpha"},
         "L67(0) is symmetric Leibniz with two-dimensional annihilator"},
        {"L68", "fN14^-1", "", {"n3 + n5"}, "", {}, {}, ""},
        {"L69", "fN14^-1", "", {"n1 + n3 + n5"}, "", {}, {}, ""},
        {"L70", "fN14^-1", "", {"alpha*n3 + n4 + n5"}, "", {"alpha"}, {}, ""},
        // --- extensions of fL1 ---
        {"L71", "fL1", "", {"n1 + n2"}, "", {}, {}, ""},
        {"L72", "fL1", "", {"n2 + n4"}, "", {}, {}, ""},
        // --- extensions of fL4 ---
        {"L73", "fL4", "", {"n4"}, "", {}, {}, ""},
        {"L74", "fL4", "", {"n1 + n4"}, "", {}, {}, ""},
        {"L75", "fL4", "", {"n3 + n4"}, "", {}, {}, ""},
        {"L76", "fL4", "", {"n1 + n3 + n4"}, "", {}, {}, ""},
        // --- extensions of fL6 ---
        {"L77", "fL6", "", {"n4"}, "", {}, {}, ""},
        {"L78", "fL6", "", {"2*n3 + n4"}, "", {}, {}, ""},
        {"L79", "fL6", "", {"n2 + alpha*n3 + n4"}, "", {"alpha"}, {}, ""},
        // --- extensions of fL7 ---
        {"L80", "fL7", "", {"alpha*n2 + n4"}, "", {"alpha"}, {}, ""},
        {"L81", "fL7", "", {"2*n2 + n3 + n4"}, "", {}, {}, ""},
        // --- extension of fL13 ---
        {"L82", "fL13", "", {"n1"}, "", {}, {}, ""},
        // --- symmetric border families (explicit tables) ---
        {"V4p1", "", "", {},
         "e1 e2 = e5; e2 e1 = lambda*e5; e3 e4 = e5; e4 e3 = mu*e5",
         {"lambda", "mu"}, {}, ""},
        {"V3p2", "", "", {},
         "e1 e1 = e4; e1 e2 = mu1*e5; e1 e3 = mu2*e5; e2 e1 = mu3*e5; "
         "e2 e2 = mu4*e5; e2 e3 = mu5*e5; e3 e1 = mu6*e5; "
         "e3 e2 = lambda*e4 + mu7*e5; e3 e3 = e5",
         {"lambda", "mu1", "mu2", "mu3", "mu4", "mu5", "mu6", "mu7"}, {}, ""},
        {"V2p3", "", "", {},
         "e1 e1 = e3 + lambda*e5; e1 e2 = e3; e2 e1 = e4; e2 e2 = e5",
         {"lambda"}, {}, ""},
        {"S21", "", "", {},
         "e1 e1 = alpha*e5; e1 e2 = e3 + e4 + beta*e5; e1 e3 = e5; e2 e1 = -e3; "
         "e2 e2 = e5; e2 e3 = e4; e3 e1 = -e5; e3 e2 = -e4",
         {"alpha", "beta"}, {}, ""},
        {"S22", "", "", {},
         "e1 e1 = e5; e1 e2 = e3; e1 e3 = e5; e2 e1 = -e3; e2 e2 = alpha*e5; "
         "e2 e4 = e5; e3 e1 = -e5; e4 e4 = e5",
         {"alpha"}, {}, ""},
        {"S41", "", "", {},
         "e1 e1 = e5; e1 e2 = e3; e1 e3 = e5; e2 e1 = -e3; e2 e2 = alpha*e5; "
         "e2 e3 = e4; e2 e4 = e5; e3 e1 = -e5; e3 e2 = -e4; e4 e2 = -e5",
         {"alpha"}, {}, ""},
        // --- the split algebra appearing as a degeneration target ---
        {"fL13+C", "", "", {}, "e1 e1 = e2; e2 e1 = e3; e3 e1 = e4", {}, {}, ""},
    };
    return data;
}

struct CatalogEntry {
    CatalogEntryData data;
    Algebra<Scalar> alg;                  // always 5-dimensional
    std::vector<Mat<Scalar>> thetas;      // extension data (empty for tables)
    Algebra<Scalar> base_alg;             // substituted base (n = 0 for tables)
    std::vector<Poly> exclusion_polys;    // entry + inherited base exclusions
};

inline std::map<int, Scalar> parse_substitutions(const std::string& text) {
    std::map<int, Scalar> subs;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eq = text.find('=', pos);
        if (eq == std::string::npos) break;
        size_t end = text.find(';', eq);
        if (end == std::string::npos) end = text.size();
        std::string lhs = text.substr(pos, eq - pos);
        lhs.erase(0, lhs.find_first_not_of(" \t"));
        lhs.erase(lhs.find_last_not_of(" \t") + 1);
        subs[var_id(lhs)] = parse_scalar(text.substr(eq + 1, end - eq - 1));
        pos = end + 1;
    }
    return subs;
}

inline CatalogEntry build_catalog_entry(const CatalogEntryData& d) {
    CatalogEntry out;
    out.data = d;
    for (auto& e : d.exclusions) out.exclusion_polys.push_back(parse_scalar(e).num);
    if (d.base.empty()) {
        out.alg = parse_algebra(5, d.products);
        out.base_alg = Algebra<Scalar>(0);
        return out;
    }
    BaseAlgebra base = load_base_algebra(d.base);
    std::map<int, Scalar> subs = parse_substitutions(d.base_subs);
    out.base_alg = subs.empty() ? base.alg : subst_algebra(base.alg, subs);
    for (auto& r : d.reps) {
        Mat<Scalar> theta = parse_class_combination(d.base, r);
        if (!subs.empty())
            for (auto& row : theta.rows)
                for (auto& x : row) x = x.subst(subs);
        out.thetas.push_back(std::move(theta));
    }
    for (auto& p : base.exclusion_polys) {
        Scalar moved = Scalar(p).subst(subs);
        if (!moved.num.is_constant()) out.exclusion_polys.push_back(moved.num);
    }
    out.alg = central_extension(out.base_alg, out.thetas);
    if (out.alg.n != 5)
        throw std::runtime_error("catalog entry is not five-dimensional: " + d.name);
    return out;
}

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        for (auto& d : catalog_data()) out.push_back(build_catalog_entry(d));
        return out;
    }();
    return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
    for (auto& e : catalog())
        if (e.data.name == name) return e;
    throw std::runtime_error("unknown catalog entry: " + name);
}

}  // namespace nilalg
