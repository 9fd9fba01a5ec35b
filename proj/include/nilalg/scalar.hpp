// Exact scalars: quotients of multivariate polynomials over Q(i).
//
// The field operations never need a full multivariate gcd.  Instead a
// quotient is kept tidy by (a) cancelling common monomial factors, (b)
// cancelling declared-nonzero atomic factors (parameter side conditions such
// as "x != 0" or "alpha - 1 != 0"), and (c) making the denominator monic.
// Equality is decided by cross multiplication, which is always exact.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "poly.hpp"

namespace nilalg {

// Thrown when a computation would need to divide by a polynomial that is not
// known to be nonzero, e.g. a symbolic rank that depends on parameters.
struct ParameterRankAmbiguity : std::runtime_error {
    explicit ParameterRankAmbiguity(const std::string& what)
        : std::runtime_error(what) {}
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// Registry of polynomials assumed nonzero in the current context (parameter
// exclusions).  Scoped so nested computations can add temporary assumptions.
inline std::vector<Poly>& nonzero_atoms() {
    static std::vector<Poly> atoms;
    return atoms;
}

struct NonzeroScope {
    size_t base;
    explicit NonzeroScope(const std::vector<Poly>& atoms) : base(nonzero_atoms().size()) {
        for (auto& a : atoms) nonzero_atoms().push_back(a);
    }
    ~NonzeroScope() { nonzero_atoms().resize(base); }
};

class Scalar {
  public:
    Poly num, den;

    Scalar() : num(), den(1) {}
    Scalar(long v) : num(v), den(1) {}
    Scalar(const GQ& c) : num(c), den(1) {}
    Scalar(Poly n) : num(std::move(n)), den(1) {}
    Scalar(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("scalar with zero denominator");
        reduce();
    }

    static Scalar var(const std::string& name, int exp = 1) {
        if (exp >= 0) return Scalar(Poly::var(name, exp));
        return Scalar(Poly(1), Poly::var(name, -exp));
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_constant() const { return num.is_constant() && den.is_constant(); }
    GQ constant_value() const {
        if (!is_constant()) throw std::domain_error("scalar is not constant: " + str());
        return num.constant_value() / den.constant_value();
    }

    // True when this scalar is invertible for every admissible parameter
    // value: a constant times a product of declared-nonzero atoms.
    bool is_unit() const {
        return !num.is_zero() && strip_atoms(num).is_constant();
    }

    // The numerator with every declared-nonzero atomic factor divided out and
    // the leading coefficient normalized to 1.  The original scalar equals a
    // unit (at all admissible parameter values) times core * den^-1.
    Poly nonunit_core() const {
        Poly p = strip_atoms(num);
        if (!p.is_zero()) {
            GQ lc = p.terms.begin()->second;
            if (!lc.is_one()) p = p * lc.inv();
        }
        return p;
    }

    // A factor g such that (*this) * g equals nonunit_core(), provided g is
    // itself a ratio of unit polynomials (so multiplying a linear-system row
    // by it keeps exact representations and preserves the solution set at all
    // admissible parameter values).  Returns nullopt when the denominator is
    // not a unit, or when the scalar is already its own core.
    std::optional<Scalar> core_scaling() const {
        if (num.is_zero()) return std::nullopt;
        Poly core = nonunit_core();
        if (core == num && den.is_constant() && den.constant_value().is_one())
            return std::nullopt;
        if (!strip_atoms(den).is_constant()) return std::nullopt;
        auto u = num.divide_exact(core);
        if (!u) return std::nullopt;  // defensive; the cofactor always exists
        return Scalar(den, *u);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Scalar operator-(const Scalar& a) { Scalar r = a; r.num = -r.num; return r; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.num * b.num, a.den * b.den);
    }
    Scalar inv() const {
        if (num.is_zero()) throw std::domain_error("inverting zero scalar");
        return Scalar(den, num);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(int e) const {
        if (e < 0) return inv().pow(-e);
        return Scalar(num.pow(e), den.pow(e));
    }

    // Formal partial derivative by the quotient rule.
    Scalar derivative(int v) const {
        return Scalar(num.derivative(v) * den - num * den.derivative(v), den * den);
    }

    GQ eval(const std::map<int, GQ>& vals) const {
        GQ d = den.eval(vals);
        if (d.is_zero()) throw std::domain_error("parameter value hits a pole: " + str());
        return num.eval(vals) / d;
    }

    Scalar subst(const std::map<int, Scalar>& vals) const {
        return subst_poly(num, vals) / subst_poly(den, vals);
    }

    // Minimum exponent of `v` (order at v = 0); negative for a pole.
    int order_in(int v) const {
        if (num.is_zero()) return 1 << 30;
        return num.order_in(v) - den.order_in(v);
    }

    // Limit as v -> 0, exact in the remaining parameters.
    Scalar limit_at_zero(int v) const {
        if (num.is_zero()) return Scalar(0);
        int on = num.order_in(v), od = den.order_in(v);
        if (on - od > 0) return Scalar(0);
        if (on - od < 0)
            throw PoleError("no finite limit at " + var_names()[v] + "=0: " + str());
        return Scalar(shift_out(num, v, on), shift_out(den, v, od));
    }

    std::string str() const {
        if (den.is_constant() && den.constant_value().is_one()) return num.str();
        return "(" + num.str() + ") / (" + den.str() + ")";
    }

  private:
    static Poly strip_atoms(const Poly& in) {
        Poly p = in;
        bool progress = true;
        while (!p.is_constant() && progress) {
            progress = false;
            for (auto& a : nonzero_atoms()) {
                if (a.is_constant()) continue;
                if (auto q = p.divide_exact(a)) {
                    p = *q;
                    progress = true;
                    break;
                }
            }
        }
        return p;
    }

    static Scalar subst_poly(const Poly& p, const std::map<int, Scalar>& vals) {
        Scalar out(0);
        for (auto& [m, c] : p.terms) {
            Scalar t{GQ(c)};
            for (auto& [v, e] : m) {
                auto it = vals.find(v);
                if (it == vals.end()) t *= Scalar::var(var_names()[v], e);
                else t *= it->second.pow(e);
            }
            out += t;
        }
        return out;
    }

    // Divides out v^k and then sets v = 0 (keeps only the lowest stratum).
    static Poly shift_out(const Poly& p, int v, int k) {
        Poly out;
        for (auto& [m, c] : p.terms) {
            Mono rest;
            int e = 0;
            for (auto& [mv, me] : m) {
                if (mv == v) e = me;
                else rest.emplace_back(mv, me);
            }
            if (e == k) out.add_term(rest, c);
        }
        return out;
    }

    void reduce() {
        if (num.is_zero()) { den = Poly(1); return; }
        // Cancel the common monomial factor (per-variable minimum order).
        auto min_exps = [](const Poly& p) {
            std::map<int, int> mins;
            bool first = true;
            for (auto& [m, c] : p.terms) {
                std::map<int, int> exps;
                for (auto& [v, e] : m) exps[v] = e;
                if (first) { mins = exps; first = false; continue; }
                for (auto it = mins.begin(); it != mins.end();) {
                    auto f = exps.find(it->first);
                    if (f == exps.end()) it = mins.erase(it);
                    else { it->second = std::min(it->second, f->second); ++it; }
                }
                if (mins.empty()) break;
            }
            return mins;
        };
        std::map<int, int> mins = min_exps(num);
        if (!mins.empty()) {
            std::map<int, int> dmins = min_exps(den);
            for (auto it = mins.begin(); it != mins.end();) {
                auto f = dmins.find(it->first);
                if (f == dmins.end()) it = mins.erase(it);
                else { it->second = std::min(it->second, f->second); ++it; }
            }
        }
        if (!mins.empty()) {
            Mono g;
            for (auto& [v, e] : mins) g.emplace_back(v, e);
            Poly gp;
            gp.terms.emplace(g, GQ(1));
            num = *num.divide_exact(gp);
            den = *den.divide_exact(gp);
        }
        // Cancel declared-nonzero atomic factors common to both sides.
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto& a : nonzero_atoms()) {
                if (a.is_constant()) continue;
                auto qn = num.divide_exact(a);
                if (!qn) continue;
                auto qd = den.divide_exact(a);
                if (!qd) continue;
                num = *qn;
                den = *qd;
                progress = true;
            }
        }
        // Monic denominator.
        GQ lc = den.terms.begin()->second;
        if (!lc.is_one()) {
            GQ ilc = lc.inv();
            num = num * ilc;
            den = den * ilc;
        }
    }
};

}  // namespace nilalg
