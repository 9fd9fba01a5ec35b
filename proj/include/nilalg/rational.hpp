// Exact arithmetic in Q(i): rational numbers with an adjoined square root of -1.
// Every operation is exact; there is no floating point anywhere in this tower.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace nilalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Element of the field Q(i), stored as re + im*i with exact rational parts.
struct GQ {
    BigRat re{0};
    BigRat im{0};

    GQ() = default;
    GQ(long v) : re(v) {}
    GQ(const BigRat& r) : re(r) {}
    GQ(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}

    static GQ i_unit() { return GQ{BigRat(0), BigRat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    friend GQ operator+(const GQ& a, const GQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend GQ operator-(const GQ& a, const GQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend GQ operator-(const GQ& a) { return {-a.re, -a.im}; }
    friend GQ operator*(const GQ& a, const GQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GQ conj() const { return {re, -im}; }
    BigRat norm() const { return re * re + im * im; }

    GQ inv() const {
        BigRat n = norm();
        if (n == 0) throw std::domain_error("division by zero in Q(i)");
        return {re / n, -im / n};
    }
    friend GQ operator/(const GQ& a, const GQ& b) { return a * b.inv(); }

    GQ& operator+=(const GQ& b) { return *this = *this + b; }
    GQ& operator-=(const GQ& b) { return *this = *this - b; }
    GQ& operator*=(const GQ& b) { return *this = *this * b; }
    GQ& operator/=(const GQ& b) { return *this = *this / b; }

    friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }
    // Arbitrary total order, used only for canonical term ordering.
    friend bool operator<(const GQ& a, const GQ& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    std::string str() const {
        std::ostringstream os;
        if (im == 0) {
            os << re;
        } else if (re == 0) {
            if (im == 1) os << "i";
            else if (im == -1) os << "-i";
            else os << im << "*i";
        } else {
            os << "(" << re;
            if (im > 0) os << "+";
            os << im << "*i)";
        }
        return os.str();
    }
};

inline GQ gq_pow(GQ base, long e) {
    if (e < 0) { base = base.inv(); e = -e; }
    GQ acc{1};
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Parses "p" or "p/q" into an exact rational.
inline BigRat parse_bigrat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace nilalg
