#include "tbk/factor_z.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tbk {

namespace {

// --- arithmetic in Fp[x] for word-sized odd primes --------------------------

struct PolyFp {
    std::vector<std::uint64_t> c;  // lowest degree first, coefficients in [0,p)
    std::uint64_t p = 0;

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    std::uint64_t lc() const { return c.back(); }
};

std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
std::uint64_t invm(std::uint64_t a, std::uint64_t p) { return powm(a % p, p - 2, p); }

PolyFp fp_reduce(const PolyZ& a, std::uint64_t p) {
    PolyFp r;
    r.p = p;
    r.c.reserve(a.c.size());
    BigInt m(static_cast<unsigned long>(p));
    for (const auto& x : a.c) r.c.push_back(bi_mod(x, m).get_ui());
    r.trim();
    return r;
}

PolyFp fp_mul(const PolyFp& a, const PolyFp& b) {
    PolyFp r;
    r.p = a.p;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        unsigned __int128 ai = a.c[i];
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            r.c[i + j] = static_cast<std::uint64_t>(
                (ai * b.c[j] + r.c[i + j]) % a.p);
        }
    }
    r.trim();
    return r;
}

std::pair<PolyFp, PolyFp> fp_divmod(const PolyFp& a, const PolyFp& b) {
    PolyFp q, r = a;
    q.p = r.p = a.p;
    if (b.is_zero()) throw std::invalid_argument("fp division by zero");
    std::uint64_t binv = invm(b.lc(), a.p);
    if (r.degree() >= b.degree()) q.c.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1, 0);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::uint64_t f = mulm(r.lc(), binv, a.p);
        int k = r.degree() - b.degree();
        q.c[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= b.degree(); ++i) {
            auto& ri = r.c[static_cast<std::size_t>(i + k)];
            ri = subm(ri, mulm(f, b.c[static_cast<std::size_t>(i)], a.p), a.p);
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

PolyFp fp_mod(const PolyFp& a, const PolyFp& b) { return fp_divmod(a, b).second; }

PolyFp fp_gcd(PolyFp a, PolyFp b) {
    while (!b.is_zero()) {
        PolyFp r = fp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.lc() != 1) {
        std::uint64_t inv = invm(a.lc(), a.p);
        for (auto& x : a.c) x = mulm(x, inv, a.p);
    }
    return a;
}

PolyFp fp_monic(PolyFp a) {
    if (a.is_zero() || a.lc() == 1) return a;
    std::uint64_t inv = invm(a.lc(), a.p);
    for (auto& x : a.c) x = mulm(x, inv, a.p);
    return a;
}

PolyFp fp_derivative(const PolyFp& a) {
    PolyFp r;
    r.p = a.p;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mulm(a.c[i], i % a.p, a.p);
    r.trim();
    return r;
}

PolyFp fp_powmod_big(PolyFp base, const BigInt& e, const PolyFp& m) {
    PolyFp r;
    r.p = m.p;
    r.c = {1};
    base = fp_mod(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = fp_mod(fp_mul(r, r), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mod(fp_mul(r, base), m);
    }
    return r;
}

PolyFp fp_x(std::uint64_t p) {
    PolyFp r;
    r.p = p;
    r.c = {0, 1};
    return r;
}

struct Rng64 {
    std::uint64_t s;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

PolyFp fp_random(int max_deg, std::uint64_t p, Rng64& rng) {
    PolyFp r;
    r.p = p;
    r.c.resize(static_cast<std::size_t>(max_deg) + 1);
    for (auto& x : r.c) x = rng.next() % p;
    r.trim();
    return r;
}

// Cantor-Zassenhaus equal-degree splitting (odd p), deterministic seed.
void fp_equal_degree(const PolyFp& f, int d, Rng64& rng, std::vector<PolyFp>& out) {
    if (f.degree() == d) {
        out.push_back(fp_monic(f));
        return;
    }
    BigInt e = (bi_pow(BigInt(static_cast<unsigned long>(f.p)), static_cast<unsigned long>(d)) - 1) / 2;
    while (true) {
        PolyFp r = fp_random(f.degree() - 1, f.p, rng);
        if (r.degree() < 1) continue;
        PolyFp g = fp_gcd(r, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            fp_equal_degree(g, d, rng, out);
            fp_equal_degree(fp_divmod(f, g).first, d, rng, out);
            return;
        }
        PolyFp s = fp_powmod_big(r, e, f);
        if (s.is_zero()) continue;
        s.c[0] = subm(s.c[0], 1 % f.p, f.p);
        s.trim();
        g = fp_gcd(s, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            fp_equal_degree(g, d, rng, out);
            fp_equal_degree(fp_divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

// Full factorization of a squarefree monic f over Fp.
std::vector<PolyFp> fp_factor_squarefree(PolyFp f) {
    std::vector<PolyFp> out;
    Rng64 rng{0x9e3779b97f4a7c15ULL ^ (f.p * 1000003ULL + static_cast<std::uint64_t>(f.degree()))};
    f = fp_monic(f);
    PolyFp h = fp_mod(fp_x(f.p), f);
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.push_back(fp_monic(f));
            break;
        }
        h = fp_powmod_big(h, BigInt(static_cast<unsigned long>(f.p)), f);
        PolyFp hx = h;
        if (hx.c.empty()) hx.c = {0};
        while (hx.c.size() < 2) hx.c.push_back(0);
        hx.c[1] = subm(hx.c[1], 1, f.p);
        hx.p = f.p;
        hx.trim();
        PolyFp g = fp_gcd(hx, f);
        if (g.degree() > 0) {
            fp_equal_degree(g, d, rng, out);
            f = fp_divmod(f, g).first;
            h = fp_mod(h, f);
        }
    }
    return out;
}

// --- Z/m arithmetic on PolyZ (coefficients normalized into [0, m)) ----------

PolyZ zm_normalize(PolyZ a, const BigInt& m) {
    for (auto& x : a.c) x = bi_mod(x, m);
    a.trim();
    return a;
}

PolyZ zm_mul(const PolyZ& a, const PolyZ& b, const BigInt& m) {
    return zm_normalize(a * b, m);
}

PolyZ zm_add(const PolyZ& a, const PolyZ& b, const BigInt& m) {
    return zm_normalize(a + b, m);
}

PolyZ zm_sub(const PolyZ& a, const PolyZ& b, const BigInt& m) {
    return zm_normalize(a - b, m);
}

// Division by a monic polynomial, coefficients mod m.
std::pair<PolyZ, PolyZ> zm_divmod_monic(const PolyZ& a, const PolyZ& b, const BigInt& m) {
    if (b.is_zero() || b.lc() != 1) throw std::invalid_argument("zm_divmod_monic: divisor not monic");
    PolyZ r = a, q;
    if (r.degree() >= b.degree()) q.c.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1, BigInt(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        BigInt f = r.lc();
        int k = r.degree() - b.degree();
        q.c[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= b.degree(); ++i) {
            auto& ri = r.c[static_cast<std::size_t>(i + k)];
            ri = bi_mod(ri - f * b.c[static_cast<std::size_t>(i)], m);
        }
        r.trim();
    }
    q.trim();
    return {zm_normalize(q, m), r};
}

PolyZ fp_to_polyz(const PolyFp& a) {
    PolyZ r;
    r.c.reserve(a.c.size());
    for (auto x : a.c) r.c.emplace_back(static_cast<unsigned long>(x));
    r.trim();
    return r;
}

// Symmetric representative in (-m/2, m/2].
PolyZ zm_symmetric(PolyZ a, const BigInt& m) {
    for (auto& x : a.c) x = bi_mod_symmetric(x, m);
    a.trim();
    return a;
}

// --- Hensel lifting ----------------------------------------------------------

struct HenselPair {
    PolyZ g, h, s, t;  // f = g*h mod m, s*g + t*h = 1 mod m
};

// One quadratic step m -> m^2 (f, g, h monic).
HenselPair hensel_step(const PolyZ& f, const HenselPair& in, const BigInt& m) {
    BigInt M = m * m;
    PolyZ e = zm_sub(zm_normalize(f, M), zm_mul(in.g, in.h, M), M);
    auto [q, r] = zm_divmod_monic(zm_mul(in.s, e, M), in.h, M);
    PolyZ gstar = zm_add(in.g, zm_add(zm_mul(in.t, e, M), zm_mul(q, in.g, M), M), M);
    PolyZ hstar = zm_add(in.h, r, M);
    if (gstar.degree() != in.g.degree() || hstar.degree() != in.h.degree() ||
        gstar.lc() != 1 || hstar.lc() != 1)
        throw std::logic_error("hensel_step: degree/monicity lost");

    PolyZ one = PolyZ::constant(BigInt(1));
    PolyZ b = zm_sub(zm_add(zm_mul(in.s, gstar, M), zm_mul(in.t, hstar, M), M), one, M);
    auto [c, d2] = zm_divmod_monic(zm_mul(in.s, b, M), hstar, M);
    PolyZ sstar = zm_sub(in.s, d2, M);
    PolyZ tstar = zm_sub(in.t, zm_add(zm_mul(in.t, b, M), zm_mul(c, gstar, M), M), M);
    return {gstar, hstar, sstar, tstar};
}

// Bezout s*g + t*h = 1 over Fp via extended Euclid.
std::pair<PolyFp, PolyFp> fp_bezout(const PolyFp& g, const PolyFp& h) {
    PolyFp r0 = g, r1 = h;
    PolyFp s0, s1, t0, t1;
    s0.p = s1.p = t0.p = t1.p = g.p;
    s0.c = {1};
    t1.c = {1};
    while (!r1.is_zero()) {
        auto [q, r] = fp_divmod(r0, r1);
        // s2 = s0 - q*s1, t2 = t0 - q*t1
        PolyFp qs = fp_mul(q, s1), qt = fp_mul(q, t1);
        PolyFp ns, nt;
        ns.p = nt.p = g.p;
        ns.c.resize(std::max(s0.c.size(), qs.c.size()), 0);
        for (std::size_t i = 0; i < ns.c.size(); ++i)
            ns.c[i] = subm(i < s0.c.size() ? s0.c[i] : 0, i < qs.c.size() ? qs.c[i] : 0, g.p);
        ns.trim();
        nt.c.resize(std::max(t0.c.size(), qt.c.size()), 0);
        for (std::size_t i = 0; i < nt.c.size(); ++i)
            nt.c[i] = subm(i < t0.c.size() ? t0.c[i] : 0, i < qt.c.size() ? qt.c[i] : 0, g.p);
        nt.trim();
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(ns);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (r0.degree() != 0) throw std::logic_error("fp_bezout: inputs not coprime");
    std::uint64_t inv = invm(r0.lc(), g.p);
    for (auto& x : s0.c) x = mulm(x, inv, g.p);
    for (auto& x : t0.c) x = mulm(x, inv, g.p);
    return {s0, t0};
}

// Lifts the factorization f = prod(parts) from mod p to mod target (f monic;
// parts monic and pairwise coprime mod p). Divide-and-conquer tree.
void hensel_tree(const PolyZ& f, const std::vector<PolyFp>& parts, std::uint64_t p,
                 const BigInt& target, std::vector<PolyZ>& out) {
    if (parts.size() == 1) {
        out.push_back(zm_normalize(f, target));
        return;
    }
    std::size_t half = parts.size() / 2;
    PolyFp gp, hp;
    gp.p = hp.p = p;
    gp.c = {1};
    hp.c = {1};
    for (std::size_t i = 0; i < half; ++i) gp = fp_mul(gp, parts[i]);
    for (std::size_t i = half; i < parts.size(); ++i) hp = fp_mul(hp, parts[i]);
    auto [sp, tp] = fp_bezout(gp, hp);

    BigInt m(static_cast<unsigned long>(p));
    HenselPair cur{fp_to_polyz(gp), fp_to_polyz(hp), fp_to_polyz(sp), fp_to_polyz(tp)};
    while (m < target) {
        cur = hensel_step(f, cur, m);
        m = m * m;
    }
    PolyZ g = zm_normalize(cur.g, target);
    PolyZ h = zm_normalize(cur.h, target);
    std::vector<PolyFp> left(parts.begin(), parts.begin() + static_cast<long>(half));
    std::vector<PolyFp> right(parts.begin() + static_cast<long>(half), parts.end());
    hensel_tree(g, left, p, target, out);
    hensel_tree(h, right, p, target, out);
}

// --- Zassenhaus --------------------------------------------------------------

BigInt mignotte_bound(const PolyZ& f) {
    BigInt norm2_sq = 0;
    for (const auto& x : f.c) norm2_sq += x * x;
    BigInt norm2 = bi_isqrt(norm2_sq) + 1;
    return bi_pow2(static_cast<unsigned long>(f.degree() + 1)) * norm2;
}

// Factor a monic squarefree integer polynomial with nonzero constant term.
std::vector<PolyZ> factor_monic(const PolyZ& f, const FactorZOptions& opt) {
    if (f.degree() == 1) return {f};

    // Prime selection: smallest odd primes keeping f squarefree mod p;
    // among the first few usable ones take the fewest modular factors.
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 3; primes.size() < 6 && p < 2000; p += 2) {
        bool isp = true;
        for (std::uint64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) isp = false;
        if (!isp) continue;
        PolyFp fp = fp_reduce(f, p);
        if (fp_gcd(fp, fp_derivative(fp)).degree() != 0) continue;
        primes.push_back(p);
    }
    if (primes.empty()) throw std::logic_error("factor_z: no good prime found");

    std::uint64_t best_p = 0;
    std::vector<PolyFp> best_parts;
    for (auto p : primes) {
        auto parts = fp_factor_squarefree(fp_reduce(f, p));
        if (best_parts.empty() || parts.size() < best_parts.size()) {
            best_parts = std::move(parts);
            best_p = p;
        }
        if (best_parts.size() == 1) break;
    }
    if (best_parts.size() == 1) return {f};

    std::sort(best_parts.begin(), best_parts.end(),
              [](const PolyFp& a, const PolyFp& b) { return a.c < b.c; });

    BigInt bound = 2 * mignotte_bound(f) + 1;
    BigInt target(static_cast<unsigned long>(best_p));
    while (target < bound) target *= static_cast<unsigned long>(best_p);

    std::vector<PolyZ> lifted;
    hensel_tree(zm_normalize(f, target), best_parts, best_p, target, lifted);

    // Subset recombination over the lifted factors.
    std::vector<std::size_t> alive(lifted.size());
    std::iota(alive.begin(), alive.end(), 0);
    std::vector<PolyZ> result;
    PolyZ rem = f;
    std::uint64_t tested = 0;

    auto candidate_of = [&](const std::vector<std::size_t>& subset) {
        PolyZ prod = PolyZ::constant(BigInt(1));
        for (auto i : subset) prod = zm_mul(prod, lifted[i], target);
        return zm_symmetric(prod, target);
    };

    for (std::size_t s = 1; s <= alive.size() / 2;) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            if (++tested > opt.max_candidates)
                throw std::runtime_error("factor_z: recombination bound exceeded");
            std::vector<std::size_t> subset(s);
            for (std::size_t i = 0; i < s; ++i) subset[i] = alive[idx[i]];
            PolyZ cand = candidate_of(subset);
            // quick reject: constant term must divide f(0)
            if (!cand.is_zero() && cand.c[0] != 0 && bi_divisible(rem.c[0], cand.c[0])) {
                if (auto q = try_divide(rem, cand)) {
                    result.push_back(cand);
                    rem = *q;
                    std::vector<std::size_t> next_alive;
                    for (auto a : alive)
                        if (std::find(subset.begin(), subset.end(), a) == subset.end())
                            next_alive.push_back(a);
                    alive = std::move(next_alive);
                    found = true;
                    break;
                }
            }
            // next combination
            long pos = static_cast<long>(s) - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] ==
                                   alive.size() - s + static_cast<std::size_t>(pos))
                --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < s; ++i)
                idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++s;
    }
    if (rem.degree() > 0) result.push_back(rem);
    return result;
}

}  // namespace

std::vector<PolyZ> factor_z(const PolyZ& f, const FactorZOptions& opt) {
    if (f.is_zero()) throw std::invalid_argument("factor_z: zero polynomial");
    PolyZ g = primitive_part(f);
    if (g.degree() <= 0) return {};
    if (!is_squarefree_q(g)) throw std::invalid_argument("factor_z: input not squarefree over Q");

    std::vector<PolyZ> result;
    if (g.c[0] == 0) {  // squarefree => y divides exactly once
        result.push_back(PolyZ::x_power(1));
        g = *try_divide(g, PolyZ::x_power(1));
    }
    if (g.degree() == 0) return result;

    if (g.lc() == 1) {
        auto part = factor_monic(g, opt);
        result.insert(result.end(), part.begin(), part.end());
    } else {
        // Reduce to the monic case: F(x) = lc^(d-1) * g(x/lc) is monic over Z;
        // factors map back via x -> lc*y and content removal.
        const BigInt L = g.lc();
        int d = g.degree();
        PolyZ F;
        F.c.resize(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i)
            F.c[static_cast<std::size_t>(i)] =
                g.c[static_cast<std::size_t>(i)] *
                bi_pow(L, static_cast<unsigned long>(d - 1 - i >= 0 ? d - 1 - i : 0));
        F.c[static_cast<std::size_t>(d)] = 1;
        F.trim();
        for (const auto& G : factor_monic(F, opt)) {
            PolyZ back;
            back.c.resize(G.c.size());
            for (std::size_t i = 0; i < G.c.size(); ++i)
                back.c[i] = G.c[i] * bi_pow(L, static_cast<unsigned long>(i));
            back.trim();
            result.push_back(primitive_part(back));
        }
    }
    std::sort(result.begin(), result.end(), poly_less);
    return result;
}

bool is_irreducible_z(const PolyZ& f) {
    PolyZ g = primitive_part(f);
    if (g.degree() <= 0) return false;
    if (g.degree() == 1) return true;
    if (!is_squarefree_q(g)) return false;
    return factor_z(g).size() == 1;
}

}  // namespace tbk
