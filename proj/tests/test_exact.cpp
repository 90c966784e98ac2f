#include <doctest.h>

#include <cstdint>

#include "tbk/factor_f2.hpp"
#include "tbk/factor_z.hpp"
#include "tbk/mat2.hpp"
#include "tbk/quotient.hpp"
#include "tbk/resultant.hpp"

using namespace tbk;

namespace {

struct Rng {
    std::uint64_t s = 0x243f6a8885a308d3ULL;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

PolyZ random_poly(Rng& rng, int max_deg, long coeff_bound) {
    PolyZ p;
    int d = static_cast<int>(rng.range(0, max_deg));
    for (int i = 0; i <= d; ++i) p.c.emplace_back(rng.range(-coeff_bound, coeff_bound));
    p.trim();
    return p;
}

// Independent resultant oracle: determinant of the Sylvester matrix by exact
// fraction-free Gaussian elimination over Q.
BigRat sylvester_det(const PolyZ& f, const PolyZ& g) {
    int m = f.degree(), n = g.degree();
    int size = m + n;
    if (size == 0) return BigRat(1);
    std::vector<std::vector<BigRat>> a(static_cast<std::size_t>(size),
                                       std::vector<BigRat>(static_cast<std::size_t>(size), BigRat(0)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + (m - k))] = BigRat(f.c[static_cast<std::size_t>(k)]);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            a[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + (n - k))] = BigRat(g.c[static_cast<std::size_t>(k)]);
    BigRat det(1);
    for (int col = 0; col < size; ++col) {
        int piv = -1;
        for (int r = col; r < size; ++r) {
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return BigRat(0);
        if (piv != col) {
            std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(col)]);
            det = -det;
        }
        BigRat pv = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det *= pv;
        for (int r = col + 1; r < size; ++r) {
            BigRat factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / pv;
            if (factor == 0) continue;
            for (int c2 = col; c2 < size; ++c2)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -=
                    factor * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c2)];
        }
    }
    return det;
}

PolyF2 f2(std::initializer_list<int> bits) { return PolyF2::from_bits(std::vector<int>(bits)); }

}  // namespace

TEST_CASE("rationals stay canonical") {
    BigRat r = make_rat(BigInt(2), BigInt(-4));
    CHECK(num(r) == -1);
    CHECK(den(r) == 2);
    CHECK(to_string(r) == "-1/2");
    CHECK(to_string(make_rat(BigInt(6), BigInt(3))) == "2");
}

TEST_CASE("polynomial product and reduction examples") {
    PolyZ a({1, 1});   // y+1
    PolyZ b({-1, 1});  // y-1
    CHECK(a * b == PolyZ({-1, 0, 1}));

    PolyZ m({1, -1, 1});  // y^2-y+1
    CHECK(poly_mod(m, m).is_zero());
    CHECK(poly_mod(PolyZ::x_power(3), m) == PolyZ({-1}));  // y^3 = -1 mod m
}

TEST_CASE("ring axioms on random polynomials") {
    Rng rng;
    for (int i = 0; i < 300; ++i) {
        PolyZ a = random_poly(rng, 5, 9), b = random_poly(rng, 5, 9), c = random_poly(rng, 5, 9);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + (b - b) == a);
    }
}

TEST_CASE("resultant examples fix the convention") {
    CHECK(resultant(PolyZ({1, 1}), PolyZ({-1, 1})) == -2);
    CHECK(resultant(PolyZ({1, -1, 1}), PolyZ({1})) == 1);
    CHECK(resultant(PolyZ({1, -1, 1}), PolyZ({-1, 2})) == 3);
}

TEST_CASE("resultant equals the Sylvester determinant") {
    Rng rng;
    int done = 0;
    while (done < 200) {
        PolyZ f = random_poly(rng, 5, 9), g = random_poly(rng, 5, 9);
        if (f.degree() < 1 || g.degree() < 1) continue;
        BigRat oracle = sylvester_det(f, g);
        CHECK(BigRat(resultant(f, g)) == oracle);
        ++done;
    }
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant(PolyZ({1, 1})) == 1);
    CHECK(discriminant(PolyZ({1, -1, 1})) == -3);
    CHECK(discriminant(PolyZ({1, 0, 1})) == -4);
}

TEST_CASE("discriminant multiplicativity disc(fg) = disc(f) disc(g) Res(f,g)^2") {
    Rng rng;
    int done = 0;
    while (done < 120) {
        PolyZ f = random_poly(rng, 4, 6), g = random_poly(rng, 4, 6);
        if (f.degree() < 1 || g.degree() < 1) continue;
        PolyZ prod = f * g;
        if (!is_squarefree_q(prod)) continue;  // also forces f, g coprime
        BigInt r = resultant(f, g);
        CHECK(discriminant(prod) == discriminant(f) * discriminant(g) * r * r);
        ++done;
    }
}

TEST_CASE("Sturm real-root counts") {
    CHECK(count_real_roots(PolyZ({1, 0, 1})) == 0);    // y^2+1
    CHECK(count_real_roots(PolyZ({-2, 0, 1})) == 2);   // y^2-2
    CHECK(count_real_roots(PolyZ({1, 3, 1})) == 2);    // y^2+3y+1, disc 5
    CHECK(count_real_roots(PolyZ({-2, 0, 0, 1})) == 1);  // y^3-2
    CHECK(count_real_roots(PolyZ({1, -1, 1})) == 0);   // y^2-y+1
    // (y^2+1)(y-1)(y+2)
    CHECK(count_real_roots(PolyZ({1, 0, 1}) * PolyZ({-1, 1}) * PolyZ({2, 1})) == 2);
}

TEST_CASE("factor_f2 examples") {
    auto fs = factor_f2(f2({1, 1, 1}));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].poly == f2({1, 1, 1}));
    CHECK(fs[0].multiplicity == 1);

    fs = factor_f2(f2({1, 0, 1}));  // y^2+1 = (y+1)^2
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].poly == f2({1, 1}));
    CHECK(fs[0].multiplicity == 2);

    fs = factor_f2(f2({0, 1, 0, 1}));  // y^3+y = y(y+1)^2
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].poly == f2({0, 1}));
    CHECK(fs[0].multiplicity == 1);
    CHECK(fs[1].poly == f2({1, 1}));
    CHECK(fs[1].multiplicity == 2);
}

namespace {

// Brute-force F2 factorization by trial division over all polynomials of
// ascending degree.
std::vector<F2Factor> brute_factor_f2(PolyF2 f) {
    std::vector<F2Factor> out;
    for (std::uint64_t code = 2; f.degree() > 0; ++code) {
        PolyF2 cand;
        for (int b = 0; b < 32; ++b)
            if (code >> b & 1) cand = cand + PolyF2::x_power(static_cast<std::size_t>(b));
        if (cand.degree() < 1 || cand.degree() > f.degree()) {
            if (cand.degree() > f.degree()) break;
            continue;
        }
        int mult = 0;
        while (true) {
            auto [q, r] = f.divmod(cand);
            if (!r.is_zero()) break;
            f = q;
            ++mult;
        }
        if (mult) out.push_back({cand, mult});
    }
    std::sort(out.begin(), out.end(),
              [](const F2Factor& a, const F2Factor& b) { return poly_less(a.poly, b.poly); });
    return out;
}

}  // namespace

TEST_CASE("factor_f2 against brute force and reconstruction") {
    Rng rng;
    for (int it = 0; it < 150; ++it) {
        PolyF2 f;
        int d = static_cast<int>(rng.range(1, 9));
        for (int i = 0; i < d; ++i)
            if (rng.next() & 1) f.set(static_cast<std::size_t>(i));
        f.set(static_cast<std::size_t>(d));
        auto mine = factor_f2(f);
        auto brute = brute_factor_f2(f);
        REQUIRE(mine.size() == brute.size());
        PolyF2 prod = PolyF2::one();
        for (std::size_t i = 0; i < mine.size(); ++i) {
            CHECK(mine[i].poly == brute[i].poly);
            CHECK(mine[i].multiplicity == brute[i].multiplicity);
            CHECK(is_irreducible_f2(mine[i].poly));
            for (int k = 0; k < mine[i].multiplicity; ++k) prod = prod * mine[i].poly;
        }
        CHECK(prod == f);
    }
}

TEST_CASE("factor_z examples") {
    auto fs = factor_z(PolyZ({-1, 0, 1}));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0] == PolyZ({-1, 1}));
    CHECK(fs[1] == PolyZ({1, 1}));

    fs = factor_z(PolyZ({1, -1, 1}));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0] == PolyZ({1, -1, 1}));

    // cyclotomic Phi_5
    PolyZ phi5({1, 1, 1, 1, 1});
    fs = factor_z(phi5);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0] == phi5);
    // brute force: no monic factor of degree <= 2 with small coefficients
    // (Mignotte bounds any factor's coefficients by 2^4*||f||_2 < 36)
    for (long a = -36; a <= 36; ++a) {
        CHECK(eval_rat(phi5, BigRat(a)) != 0);  // no rational roots at all
        for (long b = -36; b <= 36; ++b) {
            PolyZ quad({b, a, 1});
            CHECK(!try_divide(phi5, quad).has_value());
        }
    }
}

TEST_CASE("factor_z reconstruction on random products") {
    Rng rng;
    std::vector<PolyZ> pool = {
        PolyZ({1, 1}),     PolyZ({-1, 1}),    PolyZ({1, 2}),      PolyZ({-3, 2}),
        PolyZ({1, 0, 1}),  PolyZ({1, -1, 1}), PolyZ({-2, 0, 1}),  PolyZ({1, 1, 2}),
        PolyZ({-2, 0, 0, 1}), PolyZ({1, 1, 0, 1}), PolyZ({1, 1, 1, 1, 1}),
    };
    for (int it = 0; it < 60; ++it) {
        PolyZ f = PolyZ::constant(BigInt(1));
        int parts = static_cast<int>(rng.range(1, 3));
        std::vector<std::size_t> used;
        for (int k = 0; k < parts; ++k) {
            std::size_t pick = static_cast<std::size_t>(rng.range(0, static_cast<long>(pool.size()) - 1));
            bool dup = false;
            for (auto u : used)
                if (u == pick) dup = true;
            if (dup) continue;
            used.push_back(pick);
            f = f * pool[pick];
        }
        if (!is_squarefree_q(f)) continue;
        auto fs = factor_z(f);
        CHECK(fs.size() == used.size());
        PolyZ prod = PolyZ::constant(BigInt(1));
        for (const auto& fa : fs) {
            CHECK(sign(fa.lc()) > 0);
            CHECK(content(fa) == 1);
            prod = prod * fa;
        }
        CHECK(prod == primitive_part(f));
    }
}

TEST_CASE("factor_z rejects non-squarefree input") {
    PolyZ sq = PolyZ({1, 1}) * PolyZ({1, 1});
    CHECK_THROWS_AS(factor_z(sq), std::invalid_argument);
}

TEST_CASE("minpoly in quotient examples") {
    QuotElem y = QuotElem::make(PolyZ({1, -1, 1}), PolyZ::x_power(1));
    CHECK(minpoly_in_quotient(y) == to_polyq(PolyZ({1, -1, 1})));

    QuotElem one = QuotElem::make(PolyZ({1, -1, 1}), PolyZ({1}));
    CHECK(minpoly_in_quotient(one) == to_polyq(PolyZ({-1, 1})));

    QuotElem e = QuotElem::make(PolyZ({1, -1, 1}), PolyZ({1, -2}));  // 1-2y
    CHECK(minpoly_in_quotient(e) == to_polyq(PolyZ({3, 0, 1})));    // t^2+3
    CHECK((e * e).rep == PolyQ::constant(BigRat(-3)));
}

TEST_CASE("minpoly annihilates its element") {
    Rng rng;
    std::vector<PolyZ> moduli = {PolyZ({1, -1, 1}), PolyZ({1, 1, 0, 1}), PolyZ({1, 1, 1, 1, 1}),
                                 PolyZ({-2, 0, 0, 1})};
    for (int it = 0; it < 60; ++it) {
        const PolyZ& m = moduli[static_cast<std::size_t>(rng.range(0, 3))];
        PolyZ rep = random_poly(rng, m.degree() - 1, 5);
        QuotElem e = QuotElem::make(m, rep);
        PolyQ mp = minpoly_in_quotient(e);
        CHECK(m.degree() % mp.degree() == 0);
        // evaluate mp at e inside the quotient
        QuotElem acc = QuotElem::make(m, PolyZ({}));
        for (int k = mp.degree(); k >= 0; --k) {
            acc = acc * e;
            QuotElem coeff{e.modulus, PolyQ::constant(mp.coeff(static_cast<std::size_t>(k)))};
            acc = acc + coeff;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("matrix order examples over F2") {
    PolyF2 mod = f2({1, 1});  // y+1: the field F2
    Mat2F2q id = mat2_identity(mod);
    CHECK(matrix_order(id, mod) == 1);

    Mat2F2q unipotent{F2QuotElem::one(mod), F2QuotElem::one(mod), F2QuotElem::zero(mod),
                      F2QuotElem::one(mod)};
    CHECK(matrix_order(unipotent, mod) == 2);

    Mat2F2q fib{F2QuotElem::zero(mod), F2QuotElem::one(mod), F2QuotElem::one(mod),
                F2QuotElem::one(mod)};
    CHECK(matrix_order(fib, mod) == 3);
}

TEST_CASE("matrix order matches naive iteration") {
    Rng rng;
    for (const PolyF2& mod : {f2({1, 1}), f2({1, 1, 1}), f2({1, 1, 0, 1})}) {
        int s = mod.degree();
        std::uint64_t bound = (std::uint64_t{1} << s) * ((std::uint64_t{1} << s) + 1) + 2;
        int found = 0;
        while (found < 40) {
            PolyF2 entries[4];
            for (auto& e : entries) {
                for (int b = 0; b < s; ++b)
                    if (rng.next() & 1) e.set(static_cast<std::size_t>(b));
            }
            Mat2F2q m{F2QuotElem::of(entries[0], mod), F2QuotElem::of(entries[1], mod),
                      F2QuotElem::of(entries[2], mod), F2QuotElem::of(entries[3], mod)};
            if (m.det() != F2QuotElem::one(mod)) continue;
            ++found;
            std::uint64_t naive = 0;
            Mat2F2q acc = mat2_identity(mod);
            for (std::uint64_t n = 1; n <= bound; ++n) {
                acc = acc * m;
                if (acc == mat2_identity(mod)) {
                    naive = n;
                    break;
                }
            }
            REQUIRE(naive != 0);
            CHECK(matrix_order(m, mod) == naive);
        }
    }
}

TEST_CASE("u64 divisor and primality helpers") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(2147483647ULL));                  // 2^31 - 1
    CHECK(is_prime_u64((std::uint64_t{1} << 49) - 81));  // verified externally
    CHECK(!is_prime_u64((std::uint64_t{1} << 49) - 1));  // 127 * 4432676798593
    CHECK(sorted_divisors_u64(12) == std::vector<std::uint64_t>({1, 2, 3, 4, 6, 12}));
    CHECK(sorted_divisors_u64((std::uint64_t{1} << 49) - 1) ==
          std::vector<std::uint64_t>({1, 127, 4432676798593ULL, (std::uint64_t{1} << 49) - 1}));
}
