// Sparse multivariate polynomials over Q(i) with named parameters and a
// graded-lexicographic term order.  This is the coefficient ring underneath
// the exact rational-function scalars.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "rational.hpp"

namespace nilalg {

// Process-wide interning of parameter names; ids are stable for the lifetime
// of the process so monomials can store small integers instead of strings.
inline std::vector<std::string>& var_names() {
    static std::vector<std::string> names;
    return names;
}

inline int var_id(const std::string& name) {
    static std::unordered_map<std::string, int> ids;
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(var_names().size());
    var_names().push_back(name);
    ids.emplace(name, id);
    return id;
}

// A monomial is a sorted list of (variable id, positive exponent) pairs.
using Mono = std::vector<std::pair<int, int>>;

inline int mono_degree(const Mono& m) {
    int d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

// Graded-lex: higher total degree first, ties broken lexicographically by
// variable id with larger exponents earlier.  Used descending, so that
// map::begin() is the leading term.
struct GrlexDesc {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da > db;
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i].first != b[j].first) return a[i].first < b[j].first;
            if (a[i].second != b[j].second) return a[i].second > b[j].second;
            ++i, ++j;
        }
        return false;  // equal monomials
    }
};

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    return out;
}

// Returns a/b if b divides a, i.e. every exponent of b is covered by a.
inline std::optional<Mono> mono_div(const Mono& a, const Mono& b) {
    Mono out;
    size_t i = 0;
    for (auto& [v, e] : b) {
        while (i < a.size() && a[i].first < v) out.push_back(a[i++]);
        if (i == a.size() || a[i].first != v || a[i].second < e) return std::nullopt;
        if (a[i].second > e) out.emplace_back(v, a[i].second - e);
        ++i;
    }
    while (i < a.size()) out.push_back(a[i++]);
    return out;
}

// Polynomial in the interned parameters with Q(i) coefficients.
class Poly {
  public:
    std::map<Mono, GQ, GrlexDesc> terms;

    Poly() = default;
    Poly(long v) { if (v != 0) terms.emplace(Mono{}, GQ(v)); }
    Poly(const GQ& c) { if (!c.is_zero()) terms.emplace(Mono{}, c); }

    static Poly var(const std::string& name, int exp = 1) {
        Poly p;
        p.terms.emplace(Mono{{var_id(name), exp}}, GQ(1));
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
    }
    GQ constant_value() const { return terms.empty() ? GQ(0) : terms.begin()->second; }

    int total_degree() const {
        return terms.empty() ? -1 : mono_degree(terms.begin()->first);
    }

    // Lowest exponent of `v` across all terms (the order at v=0);
    // returns a large sentinel for the zero polynomial.
    int order_in(int v) const {
        int best = 1 << 30;
        for (auto& [m, c] : terms) {
            int e = 0;
            for (auto& [mv, me] : m)
                if (mv == v) { e = me; break; }
            best = std::min(best, e);
        }
        return best;
    }

    int degree_in(int v) const {
        int best = 0;
        for (auto& [m, c] : terms)
            for (auto& [mv, me] : m)
                if (mv == v) best = std::max(best, me);
        return best;
    }

    bool depends_on(int v) const { return degree_in(v) > 0; }

    void add_term(const Mono& m, const GQ& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly out = a;
        for (auto& [m, c] : b.terms) out.add_term(m, c);
        return out;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly out = a;
        for (auto& [m, c] : b.terms) out.add_term(m, -c);
        return out;
    }
    friend Poly operator-(const Poly& a) {
        Poly out;
        for (auto& [m, c] : a.terms) out.terms.emplace(m, -c);
        return out;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (auto& [ma, ca] : a.terms)
            for (auto& [mb, cb] : b.terms) out.add_term(mono_mul(ma, mb), ca * cb);
        return out;
    }
    friend Poly operator*(const Poly& a, const GQ& c) {
        Poly out;
        if (c.is_zero()) return out;
        for (auto& [m, co] : a.terms) out.terms.emplace(m, co * c);
        return out;
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    // Canonical order for use as a map key.
    friend bool operator<(const Poly& a, const Poly& b) {
        return std::lexicographical_compare(
            a.terms.begin(), a.terms.end(), b.terms.begin(), b.terms.end(),
            [](const auto& x, const auto& y) {
                GrlexDesc cmp;
                if (cmp(x.first, y.first)) return true;
                if (cmp(y.first, x.first)) return false;
                return x.second < y.second;
            });
    }

    Poly pow(int e) const {
        Poly acc(1), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc *= base;
            if (e > 1) base *= base;
        }
        return acc;
    }

    // Exact multivariate division: returns the quotient iff `d` divides
    // this polynomial with zero remainder.
    std::optional<Poly> divide_exact(const Poly& d) const {
        if (d.is_zero()) return std::nullopt;
        Poly rem = *this, quot;
        const auto& [lm, lc] = *d.terms.begin();
        while (!rem.is_zero()) {
            auto& [rm, rc] = *rem.terms.begin();
            auto q = mono_div(rm, lm);
            if (!q) return std::nullopt;
            GQ qc = rc / lc;
            Poly t;
            t.terms.emplace(*q, qc);
            quot += t;
            rem -= t * d;
        }
        return quot;
    }

    // Formal partial derivative with respect to variable v.
    Poly derivative(int v) const {
        Poly out;
        for (auto& [m, c] : terms)
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i].first != v) continue;
                Mono d;
                for (size_t j = 0; j < m.size(); ++j) {
                    if (j == i) {
                        if (m[j].second > 1) d.emplace_back(v, m[j].second - 1);
                    } else {
                        d.push_back(m[j]);
                    }
                }
                Poly t;
                t.terms.emplace(d, c * GQ(m[i].second));
                out += t;
            }
        return out;
    }

    std::set<int> variables() const {
        std::set<int> out;
        for (auto& [m, c] : terms)
            for (auto& [v, e] : m) out.insert(v);
        return out;
    }

    // Full evaluation; every variable appearing in the polynomial must be
    // present in `vals`.
    GQ eval(const std::map<int, GQ>& vals) const {
        GQ out(0);
        for (auto& [m, c] : terms) {
            GQ t = c;
            for (auto& [v, e] : m) {
                auto it = vals.find(v);
                if (it == vals.end())
                    throw std::domain_error("unbound parameter in evaluation: " +
                                            var_names()[v]);
                t *= gq_pow(it->second, e);
            }
            out += t;
        }
        return out;
    }

    // Substitutes polynomials for some variables; untouched variables remain.
    Poly subst(const std::map<int, Poly>& vals) const {
        Poly out;
        for (auto& [m, c] : terms) {
            Poly t(c);
            for (auto& [v, e] : m) {
                auto it = vals.find(v);
                if (it == vals.end())
                    t *= Poly::var(var_names()[v], e);
                else
                    t *= it->second.pow(e);
            }
            out += t;
        }
        return out;
    }

    // Collects this polynomial as a univariate polynomial in `v`:
    // coefficient polynomials indexed by the exponent of `v`.
    std::map<int, Poly> collect(int v) const {
        std::map<int, Poly> out;
        for (auto& [m, c] : terms) {
            int e = 0;
            Mono rest;
            for (auto& [mv, me] : m) {
                if (mv == v) e = me;
                else rest.emplace_back(mv, me);
            }
            out[e].add_term(rest, c);
        }
        return out;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : terms) {
            std::string cs = c.str();
            if (!first) {
                if (!cs.empty() && cs[0] == '-') { os << " - "; cs = cs.substr(1); }
                else os << " + ";
            }
            first = false;
            bool unit_coeff = (cs == "1" || cs == "-1") && !m.empty();
            if (!unit_coeff) os << cs;
            else if (cs == "-1") os << "-";
            bool firstv = true;
            for (auto& [v, e] : m) {
                if (!firstv || !unit_coeff) os << "*";
                firstv = false;
                os << var_names()[v];
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }
};

}  // namespace nilalg
