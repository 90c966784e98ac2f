#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tbk/poly.hpp"

namespace tbk {

// Univariate polynomial over F2, bit-packed (bit i of word j = coefficient of
// y^(64j+i)). No trailing zero words.
class PolyF2 {
  public:
    PolyF2() = default;

    static PolyF2 zero() { return PolyF2(); }
    static PolyF2 one() { return x_power(0); }
    static PolyF2 x_power(std::size_t k) {
        PolyF2 p;
        p.w_.assign(k / 64 + 1, 0);
        p.w_[k / 64] = (std::uint64_t{1} << (k % 64));
        return p;
    }

    static PolyF2 from_bits(const std::vector<int>& bits) {
        PolyF2 p;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i] & 1) p.set(i);
        return p;
    }

    static PolyF2 reduce_mod2(const PolyZ& a) {
        PolyF2 p;
        for (std::size_t i = 0; i < a.c.size(); ++i)
            if (is_odd(a.c[i])) p.set(i);
        return p;
    }

    bool is_zero() const { return w_.empty(); }
    bool is_one() const { return w_.size() == 1 && w_[0] == 1; }

    int degree() const {
        if (w_.empty()) return -1;
        std::uint64_t top = w_.back();
        int bit = 63;
        while (!(top >> bit & 1)) --bit;
        return static_cast<int>((w_.size() - 1) * 64) + bit;
    }

    bool get(std::size_t i) const {
        std::size_t j = i / 64;
        return j < w_.size() && (w_[j] >> (i % 64) & 1);
    }

    void set(std::size_t i) {
        std::size_t j = i / 64;
        if (j >= w_.size()) w_.resize(j + 1, 0);
        w_[j] |= std::uint64_t{1} << (i % 64);
        // set() only turns bits on, so no trim needed
    }

    bool operator==(const PolyF2& o) const { return w_ == o.w_; }
    bool operator!=(const PolyF2& o) const { return !(*this == o); }

    PolyF2 operator+(const PolyF2& o) const {
        PolyF2 r;
        r.w_.resize(std::max(w_.size(), o.w_.size()), 0);
        for (std::size_t i = 0; i < r.w_.size(); ++i) {
            std::uint64_t a = i < w_.size() ? w_[i] : 0;
            std::uint64_t b = i < o.w_.size() ? o.w_[i] : 0;
            r.w_[i] = a ^ b;
        }
        r.trim();
        return r;
    }

    PolyF2 operator*(const PolyF2& o) const {
        if (is_zero() || o.is_zero()) return PolyF2();
        int da = degree(), db = o.degree();
        PolyF2 r;
        r.w_.assign(static_cast<std::size_t>(da + db) / 64 + 1, 0);
        for (int i = 0; i <= da; ++i) {
            if (!get(static_cast<std::size_t>(i))) continue;
            r.xor_shifted(o, static_cast<std::size_t>(i));
        }
        r.trim();
        return r;
    }

    // Every nonzero F2 polynomial is monic, so division is always defined.
    std::pair<PolyF2, PolyF2> divmod(const PolyF2& b) const {
        if (b.is_zero()) throw std::invalid_argument("PolyF2 division by zero");
        PolyF2 r = *this, q;
        int db = b.degree();
        int dr = r.degree();
        while (dr >= db) {
            std::size_t k = static_cast<std::size_t>(dr - db);
            q.set(k);
            r.xor_shifted(b, k);
            r.trim();
            dr = r.degree();
        }
        return {q, r};
    }

    PolyF2 mod(const PolyF2& b) const { return divmod(b).second; }

    PolyF2 square() const {
        PolyF2 r;
        int d = degree();
        if (d < 0) return r;
        for (int i = 0; i <= d; ++i)
            if (get(static_cast<std::size_t>(i))) r.set(static_cast<std::size_t>(2 * i));
        return r;
    }

    // Formal square root of a perfect square (all exponents even).
    PolyF2 sqrt_of_square() const {
        PolyF2 r;
        int d = degree();
        for (int i = 0; i <= d; i += 2)
            if (get(static_cast<std::size_t>(i))) r.set(static_cast<std::size_t>(i / 2));
        return r;
    }

    PolyF2 derivative() const {
        PolyF2 r;
        int d = degree();
        for (int i = 1; i <= d; i += 2)  // even-exponent terms vanish in char 2
            if (get(static_cast<std::size_t>(i))) r.set(static_cast<std::size_t>(i - 1));
        return r;
    }

    // True iff all exponents with nonzero coefficient are even (f = g^2).
    bool is_perfect_square() const {
        int d = degree();
        for (int i = 1; i <= d; i += 2)
            if (get(static_cast<std::size_t>(i))) return false;
        return true;
    }

    std::string to_string(const std::string& var = "y") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (!get(static_cast<std::size_t>(i))) continue;
            if (!s.empty()) s += " + ";
            if (i == 0)
                s += "1";
            else if (i == 1)
                s += var;
            else
                s += var + "^" + std::to_string(i);
        }
        return s;
    }

    std::vector<int> bits() const {
        std::vector<int> v(static_cast<std::size_t>(degree() + 1), 0);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = get(i) ? 1 : 0;
        return v;
    }

  private:
    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }

    void xor_shifted(const PolyF2& o, std::size_t shift) {
        std::size_t word = shift / 64, bit = shift % 64;
        std::size_t need = o.w_.size() + word + 1;
        if (w_.size() < need) w_.resize(need, 0);
        for (std::size_t i = 0; i < o.w_.size(); ++i) {
            w_[i + word] ^= o.w_[i] << bit;
            if (bit) w_[i + word + 1] ^= o.w_[i] >> (64 - bit);
        }
    }

    std::vector<std::uint64_t> w_;
};

inline PolyF2 gcd(PolyF2 a, PolyF2 b) {
    while (!b.is_zero()) {
        PolyF2 r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline PolyF2 powmod(PolyF2 base, unsigned long e, const PolyF2& m) {
    PolyF2 r = PolyF2::one().mod(m);
    base = base.mod(m);
    while (e) {
        if (e & 1) r = (r * base).mod(m);
        base = (base * base).mod(m);
        e >>= 1;
    }
    return r;
}

// degree first, then coefficient sequence from the constant term up (0 < 1)
inline bool poly_less(const PolyF2& a, const PolyF2& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        bool ai = a.get(static_cast<std::size_t>(i)), bi = b.get(static_cast<std::size_t>(i));
        if (ai != bi) return bi;
    }
    return false;
}

}  // namespace tbk
