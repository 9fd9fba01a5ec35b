// Degeneration certificates and closed-set evidence.
//
// A certificate names a source and target catalog entry, an optional
// parametrized index (source parameters as Laurent expressions in the
// deformation variable s), a reparametrization exponent m (t = s^m, so rows
// quoted with sqrt(t) stay in a Laurent polynomial ring), and a parametrized
// basis E1..E5.  Checking computes the structure constants in that basis,
// demands they are pole-free at s = 0, and compares the limit with the
// target tensor.  An undetermined constant appearing in the basis is solved
// for from the limit equations and reported.
//
// Closed-set specifications encode Borel-stable subsets of the tensor space:
// flag containments A_p A_q in A_r (with A_p spanned by e_p..e_5 and A_6 = 0)
// and polynomial relations among structure constants c<i><j>_<k>, plus an
// optional basis relabeling applied to the source before membership.
#pragma once

#include <fstream>
#include <random>

#include "invariants.hpp"

namespace nilalg {

struct DegenerationCertificate {
    std::string source;
    std::string target;
    std::vector<std::pair<std::string, std::string>> source_params;
    int m = 1;
    std::vector<std::string> basis;  // E1..E5 as expressions in e1..e5 and s
};

inline std::string strip_spaces(std::string s) {
    s.erase(0, s.find_first_not_of(" \t\r"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    return s;
}

inline DegenerationCertificate parse_certificate(std::istream& in) {
    DegenerationCertificate cert;
    cert.basis.resize(5);
    std::string line;
    while (std::getline(in, line)) {
        line = strip_spaces(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        if (line.rfind("source_params", 0) == 0) {
            size_t open = line.find('{'), close = line.find('}');
            std::string body = line.substr(open + 1, close - open - 1);
            size_t pos = 0;
            while (pos < body.size()) {
                size_t eq = body.find('=', pos);
                if (eq == std::string::npos) break;
                size_t end = body.find(';', eq);
                if (end == std::string::npos) end = body.size();
                cert.source_params.emplace_back(
                    strip_spaces(body.substr(pos, eq - pos)),
                    strip_spaces(body.substr(eq + 1, end - eq - 1)));
                pos = end + 1;
            }
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("malformed certificate line: " + line);
        std::string key = strip_spaces(line.substr(0, eq));
        std::string val = strip_spaces(line.substr(eq + 1));
        if (key == "source") cert.source = val;
        else if (key == "target") cert.target = val;
        else if (key == "reparam m") cert.m = std::stoi(val);
        else if (key.size() == 2 && key[0] == 'E' && key[1] >= '1' && key[1] <= '5')
            cert.basis[key[1] - '1'] = val;
        else throw std::runtime_error("unknown certificate key: " + key);
    }
    for (const auto& row : cert.basis)
        if (row.empty()) throw std::runtime_error("certificate is missing a basis row");
    return cert;
}

inline DegenerationCertificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open certificate: " + path);
    return parse_certificate(in);
}

struct CertificateCheck {
    enum class Status { valid, singular_basis, pole, mismatch, unresolved };
    Status status = Status::valid;
    std::string detail;                    // offending tensor entry, if any
    std::map<std::string, Scalar> solved;  // undetermined constants
    Mat<Scalar> basis;                     // parsed deformation basis
    Algebra<Scalar> deformed;              // tensor over the Laurent ring
    bool ok() const { return status == Status::valid; }
};

namespace detail {

// min s-exponent and its coefficient: p = s^d * (coeff + O(s)).
inline std::pair<int, Poly> leading_in_s(const Poly& p) {
    auto parts = p.collect(var_id("s"));
    for (const auto& [e, c] : parts)
        if (!c.is_zero()) return {e, c};
    return {0, Poly()};
}

inline std::string entry_name(size_t i, size_t j, size_t k) {
    return "c" + std::to_string(i + 1) + std::to_string(j + 1) + "^" +
           std::to_string(k + 1);
}

}  // namespace detail

// Core limit check: deform `deforming` by `basis` (entries Laurent in s),
// demand the tensor is pole-free at s = 0 with limit exactly `target`.
// `known` holds the variable ids that are not undetermined constants (the
// deformation variable and target parameters); `atoms` is declared nonzero.
inline CertificateCheck check_deformation(const Algebra<Scalar>& deforming,
                                          const Mat<Scalar>& basis,
                                          const Algebra<Scalar>& target,
                                          std::vector<Poly> atoms,
                                          const std::set<int>& known) {
    CertificateCheck out;
    out.basis = basis;

    // Undetermined constants: variables of the basis that are neither the
    // deformation variable nor a parameter of the target.
    std::set<int> unknowns;
    for (const auto& row : basis.rows)
        for (const auto& x : row) {
            for (int v : x.num.variables())
                if (!known.count(v)) unknowns.insert(v);
            for (int v : x.den.variables())
                if (!known.count(v)) unknowns.insert(v);
        }

    // s is invertible in the Laurent ring; the unknowns (a zero constant
    // would make the basis singular) are declared nonzero as well.
    atoms.push_back(Poly::var("s"));
    for (int v : unknowns) atoms.push_back(Poly::var(var_names()[v]));
    NonzeroScope scope(atoms);

    try {
        out.deformed = deforming.change_basis(basis);
    } catch (const std::domain_error&) {
        out.status = CertificateCheck::Status::singular_basis;
        return out;
    }

    // Limit equations.  Each entry num/den with den = s^d(den_d + O(s)) is
    // pole-free with the right limit iff the s-coefficients of num below s^d
    // vanish and num_d * tgt.den = tgt.num * den_d.
    std::vector<Poly> equations;
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j)
            for (size_t k = 0; k < 5; ++k) {
                const Scalar& entry = out.deformed.c[i][j][k];
                const Scalar& tgt = target.c[i][j][k];
                auto [d, den_d] = detail::leading_in_s(entry.den);
                auto num_parts = entry.num.collect(var_id("s"));
                Poly num_d;
                for (const auto& [e, c] : num_parts) {
                    if (c.is_zero()) continue;
                    if (e < d) {
                        if (unknowns.empty()) {
                            out.status = CertificateCheck::Status::pole;
                            out.detail = detail::entry_name(i, j, k);
                            return out;
                        }
                        equations.push_back(c);
                    } else if (e == d) {
                        num_d = c;
                    }
                }
                Poly limit_eq = num_d * tgt.den - tgt.num * den_d;
                if (!limit_eq.is_zero()) {
                    if (unknowns.empty()) {
                        out.status = CertificateCheck::Status::mismatch;
                        out.detail = detail::entry_name(i, j, k);
                        return out;
                    }
                    equations.push_back(limit_eq);
                }
            }

    if (unknowns.empty()) return out;  // valid, nothing to solve

    if (unknowns.size() > 1) {
        out.status = CertificateCheck::Status::unresolved;
        out.detail = "more than one undetermined constant";
        return out;
    }
    int unknown = *unknowns.begin();

    // One-constant solve: a degree-one equation a*E + b = 0 proposes
    // E = -b/a; the candidate must kill every remaining equation identically.
    for (const Poly& eq : equations) {
        auto parts = eq.collect(unknown);
        Poly a, b;
        bool linear = true;
        for (const auto& [e, c] : parts) {
            if (e == 0) b += c;
            else if (e == 1) a += c;
            else linear = false;
        }
        if (!linear || a.is_zero()) continue;
        Scalar candidate = Scalar(-b, a);
        std::map<int, Scalar> sub = {{unknown, candidate}};
        bool all_zero = true;
        for (const Poly& other : equations)
            if (!Scalar(other).subst(sub).is_zero()) { all_zero = false; break; }
        if (all_zero) {
            out.solved[var_names()[unknown]] = candidate;
            return out;
        }
    }
    out.status = CertificateCheck::Status::unresolved;
    out.detail = "no consistent value for " + var_names()[unknown];
    return out;
}

inline CertificateCheck check_certificate(const DegenerationCertificate& cert) {
    const CatalogEntry& src = catalog_entry(cert.source);
    const CatalogEntry& tgt = catalog_entry(cert.target);

    std::map<int, Scalar> index;
    for (const auto& [name, expr] : cert.source_params)
        index[var_id(name)] = parse_scalar(expr);
    Algebra<Scalar> deforming =
        index.empty() ? src.alg : subst_algebra(src.alg, index);

    Mat<Scalar> basis(5, 5);
    std::set<int> known = {var_id("s")};
    for (const auto& p : tgt.data.params) known.insert(var_id(p));
    for (size_t i = 0; i < 5; ++i)
        basis[i] = linear_combination(parse_scalar(cert.basis[i]), 5);

    // Target parameter exclusions stay nonzero; source exclusions move along
    // the parametrized index (constants drop out).
    std::vector<Poly> atoms = tgt.exclusion_polys;
    for (const auto& p : src.exclusion_polys) {
        Poly moved = Scalar(p).subst(index).num;
        if (!moved.is_constant()) atoms.push_back(moved);
    }
    return check_deformation(deforming, basis, tgt.alg, std::move(atoms), known);
}

// Derivation-dimension necessary condition.  A proper degeneration of a
// fixed algebra strictly increases dim Der.  For a family row (the
// parametrized index depends on the deformation variable, so the limit lies
// in the closure of a union of orbits), only the non-strict comparison is a
// necessary condition: if every member had strictly larger dim Der than the
// target, the degeneration would be impossible, but equality is allowed.
// The comparison is made at each usable assignment drawn from the sample
// values (skipping assignments that violate an exclusion or hit a pole of
// the parametrized index).  An identity certificate (source == target) is
// non-proper and reports true vacuously.
inline bool check_derivation_necessary(const DegenerationCertificate& cert,
                                       const std::vector<GQ>& values = {GQ(2), GQ(3),
                                                                        GQ(5)}) {
    if (cert.source == cert.target) return true;
    const CatalogEntry& src = catalog_entry(cert.source);
    const CatalogEntry& tgt = catalog_entry(cert.target);

    std::map<int, Scalar> index;
    bool family_row = false;
    for (const auto& [name, expr] : cert.source_params) {
        Scalar e = parse_scalar(expr);
        index[var_id(name)] = e;
        if (e.num.depends_on(var_id("s")) || e.den.depends_on(var_id("s")))
            family_row = true;
    }
    Algebra<Scalar> member = index.empty() ? src.alg : subst_algebra(src.alg, index);

    // Free variables of the substituted source: s and the target parameters.
    std::set<int> free_vars = {var_id("s")};
    for (const auto& p : tgt.data.params) free_vars.insert(var_id(p));

    size_t usable = 0;
    for (size_t rot = 0; rot < values.size(); ++rot) {
        std::map<int, GQ> at;
        size_t pos = rot;
        for (int v : free_vars) at[v] = values[pos++ % values.size()];
        try {
            // Constraint filter: skip assignments where an exclusion of the
            // (substituted) source or of the target vanishes.
            bool excluded = false;
            for (const Poly& p : tgt.exclusion_polys)
                if (Scalar(p).eval(at).is_zero()) excluded = true;
            for (const Poly& p : src.exclusion_polys) {
                // A substituted exclusion that is identically constant only
                // says the row starts from a boundary member of the family;
                // it cannot filter sample assignments.
                Scalar moved = Scalar(p).subst(index);
                if (!moved.num.is_constant() && moved.eval(at).is_zero()) excluded = true;
            }
            if (excluded) continue;
            size_t ds = derivation_algebra(eval_algebra(member, at)).dim();
            size_t dt = derivation_algebra(eval_algebra(tgt.alg, at)).dim();
            ++usable;
            if (family_row ? !(ds <= dt) : !(ds < dt)) return false;
        } catch (const std::exception&) {
            continue;  // pole of the index at this assignment
        }
    }
    return usable > 0;
}

// --- closed sets -----------------------------------------------------------

struct ClosedSetSpec {
    struct Containment { int p, q, r; };   // A_p A_q in A_r; r = 6 means zero
    std::vector<Containment> contains;
    std::vector<std::pair<std::string, std::string>> relations;  // lhs = rhs
    std::vector<size_t> relabel;           // f_i = e_{relabel[i]}, 1-based ids
};

inline ClosedSetSpec parse_closed_set(std::istream& in) {
    ClosedSetSpec spec;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_spaces(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "contain") {
            std::string ap, aq, in_word, ar;
            ls >> ap >> aq >> in_word >> ar;
            if (in_word != "in" || ap[0] != 'A' || aq[0] != 'A' || ar[0] != 'A')
                throw std::runtime_error("malformed containment: " + line);
            spec.contains.push_back(
                {std::stoi(ap.substr(1)), std::stoi(aq.substr(1)), std::stoi(ar.substr(1))});
        } else if (word == "relation") {
            std::string rest = strip_spaces(line.substr(word.size()));
            size_t eq = rest.find('=');
            spec.relations.emplace_back(strip_spaces(rest.substr(0, eq)),
                                        strip_spaces(rest.substr(eq + 1)));
        } else if (word == "relabel") {
            std::string rest = strip_spaces(line.substr(word.size()));
            // f<i> = e<j>
            size_t eq = rest.find('=');
            std::string f = strip_spaces(rest.substr(0, eq));
            std::string e = strip_spaces(rest.substr(eq + 1));
            size_t i = std::stoul(f.substr(1)), j = std::stoul(e.substr(1));
            if (spec.relabel.empty()) spec.relabel.resize(5, 0);
            spec.relabel[i - 1] = j;
        } else {
            throw std::runtime_error("unknown closed-set line: " + line);
        }
    }
    return spec;
}

inline ClosedSetSpec load_closed_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open closed-set file: " + path);
    return parse_closed_set(in);
}

// The relabeled algebra f_i = e_{relabel[i]} (identity when no relabeling).
template <typename K>
Algebra<K> apply_relabel(const Algebra<K>& a, const ClosedSetSpec& spec) {
    if (spec.relabel.empty()) return a;
    Mat<K> p(a.n, a.n);
    for (size_t i = 0; i < a.n; ++i) p[i][spec.relabel[i] - 1] = K(1);
    return a.change_basis(p);
}

namespace detail {

template <typename K>
bool containment_holds(const Algebra<K>& a, const ClosedSetSpec::Containment& c) {
    for (size_t i = c.p - 1; i < a.n; ++i)
        for (size_t j = c.q - 1; j < a.n; ++j)
            for (int k = 0; k < c.r - 1 && k < static_cast<int>(a.n); ++k)
                if (!field_is_zero(a.c[i][j][k])) return false;
    return true;
}

inline Scalar entry_value(const Algebra<Scalar>& a, size_t i, size_t j, size_t k) {
    return a.c[i][j][k];
}
inline Scalar entry_value(const Algebra<GQ>& a, size_t i, size_t j, size_t k) {
    return Scalar(Poly(a.c[i][j][k]));
}

}  // namespace detail

// Membership of a structure tensor in the closed set (without relabeling;
// apply_relabel first if the specification carries one).
template <typename K>
bool tensor_in_closed_set(const Algebra<K>& a, const ClosedSetSpec& spec) {
    for (const auto& c : spec.contains)
        if (!detail::containment_holds(a, c)) return false;
    if (spec.relations.empty()) return true;
    std::map<int, Scalar> vals;
    for (size_t i = 0; i < a.n; ++i)
        for (size_t j = 0; j < a.n; ++j)
            for (size_t k = 0; k < a.n; ++k)
                vals[var_id("c" + std::to_string(i + 1) + std::to_string(j + 1) +
                            "_" + std::to_string(k + 1))] =
                    detail::entry_value(a, i, j, k);
    for (const auto& [lhs, rhs] : spec.relations) {
        Scalar diff = parse_scalar(lhs).subst(vals) - parse_scalar(rhs).subst(vals);
        if (!diff.is_zero()) return false;
    }
    return true;
}

// Deterministic random rationals with small numerators/denominators.
inline GQ random_rational(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (;;) {
        int n = num(rng);
        if (nonzero && n == 0) continue;
        return GQ(n) / GQ(den(rng));
    }
}

struct ProbeResult {
    bool triggered = false;  // violation (Borel probe) or entry (target probe)
    Mat<GQ> witness;
};

// Evidence for Borel-stability of the closed set: `trials` random invertible
// matrices preserving the flag <e_i, ..., e_5> (rows in upper-triangular
// position) must keep a member's tensor inside the set.
inline ProbeResult borel_stability_probe(const ClosedSetSpec& spec, const Algebra<GQ>& a,
                                         size_t trials, unsigned seed) {
    std::mt19937 rng(seed);
    for (size_t t = 0; t < trials; ++t) {
        Mat<GQ> p(a.n, a.n);
        for (size_t i = 0; i < a.n; ++i) {
            p[i][i] = random_rational(rng, true);
            for (size_t j = i + 1; j < a.n; ++j) p[i][j] = random_rational(rng);
        }
        if (!tensor_in_closed_set(a.change_basis(p), spec)) return {true, p};
    }
    return {false, {}};
}

// Evidence that no basis of `b` lies in the closed set: `trials` random
// invertible bases, none of which may land inside.
inline ProbeResult target_membership_probe(const Algebra<GQ>& b, const ClosedSetSpec& spec,
                                           size_t trials, unsigned seed) {
    std::mt19937 rng(seed);
    for (size_t t = 0; t < trials; ++t) {
        Mat<GQ> p(b.n, b.n);
        do {
            for (size_t i = 0; i < b.n; ++i)
                for (size_t j = 0; j < b.n; ++j) p[i][j] = random_rational(rng);
        } while (rank(p) != b.n);
        if (tensor_in_closed_set(b.change_basis(p), spec)) return {true, p};
    }
    return {false, {}};
}

}  // namespace nilalg
