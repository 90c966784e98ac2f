#include "tbk/resultant.hpp"

#include <stdexcept>

namespace tbk {

namespace {

// Res(A, const c) with deg A >= 0.
BigRat constant_case(const PolyZ& a, const BigInt& c) {
    if (a.degree() <= 0) return BigRat(1);  // resultant of two constants
    return BigRat(bi_pow(c, static_cast<unsigned long>(a.degree())));
}

}  // namespace

BigInt resultant(const PolyZ& f, const PolyZ& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of zero polynomial");

    PolyZ a = f, b = g;
    // Res is multiplicative in contents: Res(c*A, B) = c^deg(B) * Res(A, B).
    BigRat acc(1);
    {
        BigInt ca = content(a), cb = content(b);
        if (sign(a.lc()) < 0) ca = -ca;
        if (sign(b.lc()) < 0) cb = -cb;
        acc *= rat_pow(BigRat(ca), b.degree());
        acc *= rat_pow(BigRat(cb), a.degree());
        a = primitive_part(a);
        b = primitive_part(b);
    }

    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) acc = -acc;
        std::swap(a, b);
    }

    if (b.degree() == 0) {
        BigRat r = acc * constant_case(a, b.c[0]);
        if (!is_integer(r)) throw std::logic_error("resultant: non-integer result");
        return num(r);
    }

    // Subresultant PRS. Each pseudo-division step
    //   lc(b)^(delta+1) * a = q*b + R,  rbar = R / (g*h^delta)
    // is folded into acc using
    //   Res(a,b) = (-1)^(da*db) * Res(b,a)
    //   Res(b, lc(b)^(delta+1)*a) = lc(b)^((delta+1)*db) * Res(b,a)
    //   Res(b, R) = lc(b)^(da - dR) * Res(b, R_low ...)
    // i.e. Res(b,a) = lc(b)^(da - dR - (delta+1)*db) * (g*h^delta)^db * Res(b, rbar).
    BigInt gc = 1, h = 1;
    while (true) {
        int da = a.degree(), db = b.degree();
        int delta = da - db;
        PolyZ r = prem(a, b);
        if (r.is_zero()) return BigInt(0);  // db >= 1 here, common factor
        if ((da & 1) && (db & 1)) acc = -acc;

        BigInt divisor = gc * bi_pow(h, static_cast<unsigned long>(delta));
        int dr = r.degree();
        long e = static_cast<long>(da - dr) - static_cast<long>(delta + 1) * db;
        acc *= rat_pow(BigRat(b.lc()), e);
        acc *= rat_pow(BigRat(divisor), db);

        PolyZ rbar;
        rbar.c.reserve(r.c.size());
        for (const auto& x : r.c) {
            if (!bi_divisible(x, divisor)) throw std::logic_error("subresultant division not exact");
            rbar.c.push_back(bi_divexact(x, divisor));
        }

        a = b;
        b = rbar;
        if (b.degree() == 0) {
            BigRat res = acc * constant_case(a, b.c[0]);
            if (!is_integer(res)) throw std::logic_error("resultant: non-integer result");
            return num(res);
        }
        gc = a.lc();
        if (delta > 0) {
            // h <- g^delta * h^(1-delta)
            BigInt gn = bi_pow(gc, static_cast<unsigned long>(delta));
            BigInt hd = bi_pow(h, static_cast<unsigned long>(delta - 1));
            if (!bi_divisible(gn, hd)) throw std::logic_error("subresultant h-update not exact");
            h = bi_divexact(gn, hd);
        }
    }
}

BigInt discriminant(const PolyZ& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant requires degree >= 1");
    if (d == 1) return BigInt(1);
    BigInt res = resultant(f, derivative(f));
    BigInt q = bi_divexact(res, f.lc());
    long ex = static_cast<long>(d) * (d - 1) / 2;
    return (ex & 1) ? BigInt(-q) : q;
}

namespace {

int sign_at_plus_infinity(const PolyZ& p) { return sign(p.lc()); }

int sign_at_minus_infinity(const PolyZ& p) {
    return (p.degree() & 1) ? -sign(p.lc()) : sign(p.lc());
}

}  // namespace

int count_real_roots(const PolyZ& f) {
    if (f.degree() <= 0) return 0;
    if (f.degree() == 1) return 1;
    // Sturm chain; rescaling divides by the positive content only, so every
    // sign in the sequence is preserved.
    auto scale_down = [](const PolyZ& a) {
        PolyZ r = a;
        BigInt g = content(a);
        if (g > 1)
            for (auto& x : r.c) x = bi_divexact(x, g);
        return r;
    };
    std::vector<PolyZ> chain;
    chain.push_back(scale_down(f));
    chain.push_back(scale_down(derivative(f)));
    while (chain.back().degree() > 0) {
        const PolyZ& a = chain[chain.size() - 2];
        const PolyZ& b = chain.back();
        PolyZ r = prem(a, b);
        if (r.is_zero()) break;  // f not squarefree; distinct-root count still valid below
        // prem multiplies a by lc(b)^(da-db+1); if that factor is negative the
        // remainder sign flipped, undo it before negating for the chain.
        int da = a.degree(), db = b.degree();
        bool flipped = sign(b.lc()) < 0 && ((da - db + 1) & 1);
        PolyZ next = scale_down(r);
        if (!flipped) next = -next;
        chain.push_back(next);
    }
    auto variations = [&chain](bool at_plus) {
        int v = 0, prev = 0;
        for (const auto& p : chain) {
            int s = at_plus ? sign_at_plus_infinity(p) : sign_at_minus_infinity(p);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    };
    return variations(false) - variations(true);
}

}  // namespace tbk
