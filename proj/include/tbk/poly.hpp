#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tbk/numint.hpp"

namespace tbk {

// Dense univariate polynomial, lowest-degree coefficient first. The zero
// polynomial is the empty sequence; a nonzero polynomial never has a zero
// leading coefficient.
template <class T>
struct Poly {
    std::vector<T> c;

    Poly() = default;
    Poly(std::initializer_list<long> v) {
        for (long x : v) c.emplace_back(x);
        trim();
    }
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(T v) {
        Poly p;
        p.c.push_back(std::move(v));
        p.trim();
        return p;
    }
    static Poly x_power(std::size_t k) {
        Poly p;
        p.c.assign(k + 1, T(0));
        p.c[k] = T(1);
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero

    const T& lc() const {
        if (c.empty()) throw std::logic_error("lc of zero polynomial");
        return c.back();
    }

    T coeff(std::size_t k) const { return k < c.size() ? c[k] : T(0); }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

using PolyZ = Poly<BigInt>;
using PolyQ = Poly<BigRat>;

template <class T>
Poly<T> operator+(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), T(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

template <class T>
Poly<T> operator-(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), T(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

template <class T>
Poly<T> operator-(const Poly<T>& a) {
    Poly<T> r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

template <class T>
Poly<T> operator*(const Poly<T>& a, const Poly<T>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<T>();
    Poly<T> r;
    r.c.assign(a.c.size() + b.c.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

template <class T>
Poly<T> operator*(const T& s, const Poly<T>& a) {
    if (s == 0) return Poly<T>();
    Poly<T> r = a;
    for (auto& x : r.c) x = s * x;
    r.trim();
    return r;
}

template <class T>
Poly<T> shift_up(const Poly<T>& a, std::size_t k) {
    if (a.is_zero()) return a;
    Poly<T> r;
    r.c.assign(a.c.size() + k, T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = a.c[i];
    return r;
}

template <class T>
T eval(const Poly<T>& a, const T& x) {
    T acc(0);
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline BigRat eval_rat(const PolyZ& a, const BigRat& x) {
    BigRat acc(0);
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

template <class T>
Poly<T> derivative(const Poly<T>& a) {
    Poly<T> r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = T(static_cast<long>(i)) * a.c[i];
    r.trim();
    return r;
}

inline PolyQ to_polyq(const PolyZ& a) {
    PolyQ r;
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.emplace_back(x);
    return r;
}

// Clears denominators; result is the primitive integer polynomial with the
// same roots and lc sign.
inline PolyZ to_polyz_primitive(const PolyQ& a);

// Requires every coefficient to be integral.
inline PolyZ to_polyz_exact(const PolyQ& a) {
    PolyZ r;
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) {
        if (!is_integer(x)) throw std::invalid_argument("to_polyz_exact: non-integer coefficient");
        r.c.push_back(num(x));
    }
    return r;
}

// --- division -------------------------------------------------------------

// Euclidean division over a field.
inline std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    PolyQ r = a;
    PolyQ q;
    if (r.degree() >= b.degree()) q.c.assign(r.degree() - b.degree() + 1, BigRat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        BigRat f = r.lc() / b.lc();
        int k = r.degree() - b.degree();
        q.c[k] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

// Division by a polynomial with unit leading coefficient (|lc| = 1); exact
// over the integers.
inline std::pair<PolyZ, PolyZ> divmod_unit(const PolyZ& a, const PolyZ& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (!(b.lc() == 1 || b.lc() == -1))
        throw std::invalid_argument("divmod_unit: divisor leading coefficient must be ±1");
    PolyZ r = a;
    PolyZ q;
    if (r.degree() >= b.degree()) q.c.assign(r.degree() - b.degree() + 1, BigInt(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        BigInt f = r.lc() * b.lc();  // lc(b)^2 = 1
        int k = r.degree() - b.degree();
        q.c[k] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

inline PolyZ poly_mod(const PolyZ& a, const PolyZ& b) { return divmod_unit(a, b).second; }
inline PolyQ poly_mod(const PolyQ& a, const PolyQ& b) { return divmod(a, b).second; }

// Integer-quotient divisibility test: returns the quotient iff b divides a in
// Z[y] (each elimination step must divide exactly).
inline std::optional<PolyZ> try_divide(const PolyZ& a, const PolyZ& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (a.is_zero()) return PolyZ();
    if (a.degree() < b.degree()) return std::nullopt;
    PolyZ r = a;
    PolyZ q;
    q.c.assign(r.degree() - b.degree() + 1, BigInt(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        if (!bi_divisible(r.lc(), b.lc())) return std::nullopt;
        BigInt f = bi_divexact(r.lc(), b.lc());
        int k = r.degree() - b.degree();
        q.c[k] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    if (!r.is_zero()) return std::nullopt;
    q.trim();
    return q;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + prem(a,b).
inline PolyZ prem(const PolyZ& a, const PolyZ& b) {
    if (b.is_zero()) throw std::invalid_argument("prem by zero");
    PolyZ r = a;
    int target = b.degree();
    const BigInt& d = b.lc();
    int steps = r.degree() - target + 1;
    if (steps <= 0) return r;
    while (!r.is_zero() && r.degree() >= target) {
        BigInt f = r.lc();
        int k = r.degree() - target;
        PolyZ t = d * r - f * shift_up(b, static_cast<std::size_t>(k));
        r = t;
        --steps;
    }
    // Keep the classical normalization lc(b)^(dega-degb+1) even if the
    // degree dropped by more than one per step.
    while (steps-- > 0) r = d * r;
    return r;
}

// --- content / primitive part ----------------------------------------------

inline BigInt content(const PolyZ& a) {
    BigInt g = 0;
    for (const auto& x : a.c) g = bi_gcd(g, x);
    return g;  // 0 for the zero polynomial, positive otherwise
}

inline PolyZ primitive_part(const PolyZ& a) {
    if (a.is_zero()) return a;
    BigInt g = content(a);
    if (sign(a.lc()) < 0) g = -g;
    PolyZ r = a;
    for (auto& x : r.c) x = bi_divexact(x, g);
    return r;
}

inline PolyZ to_polyz_primitive(const PolyQ& a) {
    if (a.is_zero()) return PolyZ();
    BigInt l = 1;
    for (const auto& x : a.c) {
        BigInt d = den(x);
        l = bi_divexact(l * d, bi_gcd(l, d));
    }
    PolyZ r;
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.push_back(num(x) * bi_divexact(l, den(x)));
    return primitive_part(r);
}

// gcd via primitive pseudo-remainder sequence; result primitive with
// positive leading coefficient.
inline PolyZ poly_gcd(PolyZ a, PolyZ b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    BigInt cont = bi_gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        PolyZ r = primitive_part(prem(a, b));
        a = b;
        b = r;
    }
    if (a.degree() == 0) return PolyZ::constant(cont);
    return cont * a;
}

inline bool is_squarefree_q(const PolyZ& a) {
    if (a.degree() <= 1) return true;
    return poly_gcd(a, derivative(a)).degree() == 0;
}

// Monic normalization over Q.
inline PolyQ monic(const PolyQ& a) {
    if (a.is_zero()) throw std::invalid_argument("monic of zero polynomial");
    BigRat inv = BigRat(1) / a.lc();
    return inv * a;
}

// --- formatting -------------------------------------------------------------

template <class T>
std::string poly_to_string(const Poly<T>& a, const std::string& var = "y") {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = a.degree(); i >= 0; --i) {
        T x = a.coeff(static_cast<std::size_t>(i));
        if (x == 0) continue;
        std::string xs = to_string(x);
        bool neg = !xs.empty() && xs[0] == '-';
        if (neg) xs = xs.substr(1);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << xs;
        } else {
            if (xs != "1") os << xs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// Total order used for all deterministic factor lists: degree first, then the
// coefficient sequence (constant term up).
inline bool poly_less(const PolyZ& a, const PolyZ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
}

}  // namespace tbk
