#include "tbk/factor_f2.hpp"

#include <algorithm>
#include <stdexcept>

namespace tbk {

namespace {

// x^(2^k) mod f by repeated squaring of the Frobenius image.
PolyF2 frobenius_power(const PolyF2& f, int k, PolyF2 start) {
    PolyF2 r = start.mod(f);
    for (int i = 0; i < k; ++i) r = r.square().mod(f);
    return r;
}

// Distinct-degree splitting of a squarefree f: list of (product, degree).
std::vector<std::pair<PolyF2, int>> distinct_degree(PolyF2 f) {
    std::vector<std::pair<PolyF2, int>> out;
    PolyF2 x = PolyF2::x_power(1);
    PolyF2 h = x.mod(f);
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.emplace_back(f, f.degree());
            break;
        }
        h = h.square().mod(f);  // h = x^(2^d) mod f
        PolyF2 g = gcd(h + x, f);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = f.divmod(g).first;
            h = h.mod(f);
        }
    }
    return out;
}

// Trace-map splitting for a product of distinct irreducibles of equal degree
// d. Deterministic candidate sequence (polynomials enumerated by integer
// code) keeps factor lists reproducible.
void equal_degree(const PolyF2& f, int d, std::vector<PolyF2>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    for (unsigned long code = 2;; ++code) {
        PolyF2 h;
        for (int b = 0; b < 64; ++b)
            if (code >> b & 1) h = h + PolyF2::x_power(static_cast<std::size_t>(b));
        h = h.mod(f);
        // T(h) = h + h^2 + ... + h^(2^(d-1)) maps each residue field onto F2.
        PolyF2 t = h, s = h;
        for (int i = 1; i < d; ++i) {
            s = s.square().mod(f);
            t = t + s;
        }
        for (const PolyF2& cand : {t, t + PolyF2::one()}) {
            PolyF2 g = gcd(cand, f);
            if (!g.is_one() && g.degree() < f.degree()) {
                equal_degree(g, d, out);
                equal_degree(f.divmod(g).first, d, out);
                return;
            }
        }
    }
}

void factor_squarefree(const PolyF2& f, int multiplicity, std::vector<F2Factor>& acc) {
    for (auto& [prod, d] : distinct_degree(f)) {
        std::vector<PolyF2> irr;
        equal_degree(prod, d, irr);
        for (auto& p : irr) acc.push_back({p, multiplicity});
    }
}

}  // namespace

std::vector<F2Factor> factor_f2(const PolyF2& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_f2: zero polynomial");
    std::vector<F2Factor> acc;

    // Squarefree decomposition in characteristic 2: the w-loop peels exact
    // multiplicities not divisible by 2; the leftover is a perfect square
    // whose formal root re-enters the stack with doubled multiplicity.
    struct Item {
        PolyF2 poly;
        int mult;
    };
    std::vector<Item> stack{{f, 1}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        PolyF2 g = it.poly;
        if (g.degree() <= 0) continue;
        if (g.is_perfect_square()) {
            stack.push_back({g.sqrt_of_square(), 2 * it.mult});
            continue;
        }
        PolyF2 c = gcd(g, g.derivative());
        PolyF2 w = g.divmod(c).first;
        int m = it.mult;
        while (w.degree() > 0) {
            PolyF2 y = gcd(w, c);
            PolyF2 exact = w.divmod(y).first;  // multiplicity exactly m here
            if (exact.degree() > 0) factor_squarefree(exact, m, acc);
            if (y.degree() > 0) c = c.divmod(y).first;
            w = y;
            m += it.mult;
        }
        if (c.degree() > 0) stack.push_back({c, it.mult});
    }

    std::sort(acc.begin(), acc.end(),
              [](const F2Factor& a, const F2Factor& b) { return poly_less(a.poly, b.poly); });
    return acc;
}

bool is_irreducible_f2(const PolyF2& f) {
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    // x^(2^n) = x mod f, and x^(2^(n/q)) - x coprime to f for every prime q | n.
    PolyF2 x = PolyF2::x_power(1);
    if (frobenius_power(f, n, x) != x.mod(f)) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q) continue;
        bool isprime = true;
        for (int t = 2; t * t <= q; ++t)
            if (q % t == 0) isprime = false;
        if (!isprime) continue;
        PolyF2 h = frobenius_power(f, n / q, x);
        if (!gcd(h + x.mod(f), f).is_one()) return false;
    }
    return true;
}

}  // namespace tbk
