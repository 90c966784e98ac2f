#include "tbk/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace tbk {

BigRat Real::to_exact_rat() const {
    if (mpfr_zero_p(x_)) return BigRat(0);
    if (!mpfr_number_p(x_)) throw std::range_error("to_exact_rat: non-finite value");
    BigInt m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x_);
    BigRat r(m);
    if (e >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    r.canonicalize();
    return r;
}

std::vector<Cplx> poly_roots(const PolyZ& f, mpfr_prec_t prec) {
    int n = f.degree();
    if (n < 1) return {};

    std::vector<Cplx> coeff;  // monic normalized, degree 0..n
    coeff.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        BigRat ci = make_rat(f.c[static_cast<std::size_t>(i)], f.lc());
        coeff.emplace_back(Real::of(ci, prec), Real(prec));
    }

    // Cauchy bound for the start circle radius.
    Real radius = Real::of(1.0, prec);
    for (int i = 0; i < n; ++i) {
        Real m = coeff[static_cast<std::size_t>(i)].re.abs();
        if (radius < m) radius = m;
    }
    radius = radius + Real::of(1.0, prec);

    auto eval_at = [&](const Cplx& x) {
        Cplx acc(prec);
        for (int i = n; i >= 0; --i) acc = acc * x + coeff[static_cast<std::size_t>(i)];
        return acc;
    };

    std::vector<Cplx> z;
    z.reserve(static_cast<std::size_t>(n));
    Real pi(prec);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    for (int k = 0; k < n; ++k) {
        Real theta = (Real::of(2.0 * k, prec) * pi) / Real::of(static_cast<double>(n), prec) +
                     Real::of(0.2718281828, prec);
        Real c(prec), s(prec);
        mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
        z.emplace_back(radius * c * Real::of(0.8, prec), radius * s * Real::of(0.8, prec));
    }

    Real tol(prec);
    mpfr_set_ui_2exp(tol.get(), 1, -(prec - 8), MPFR_RNDN);
    tol = tol * radius;  // roots live inside the Cauchy disc
    Real tol2 = tol * tol;

    int max_iter = 200 + 30 * n;
    for (int iter = 0; iter < max_iter; ++iter) {
        Real worst(prec);
        for (int i = 0; i < n; ++i) {
            Cplx num = eval_at(z[static_cast<std::size_t>(i)]);
            Cplx denom(prec);
            denom.re = Real::of(1.0, prec);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                denom = denom * (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            }
            Cplx delta = num / denom;
            z[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)] - delta;
            Real d2 = delta.abs2();
            if (worst < d2) worst = d2;
        }
        if (worst < tol2) break;
    }
    return z;
}

bool solve_complex(std::vector<std::vector<Cplx>>& a, std::vector<Cplx>& b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (a[piv][col].abs2() < a[r][col].abs2()) piv = r;
        if (a[piv][col].abs2().is_zero()) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            Cplx factor = a[r][col] / a[col][col];
            for (std::size_t c2 = col; c2 < n; ++c2)
                a[r][c2] = a[r][c2] - factor * a[col][c2];
            b[r] = b[r] - factor * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] = b[i] / a[i][i];
    return true;
}

bool reconstruct_rational(const Real& x, const BigInt& den_bound, BigRat& out) {
    const mpfr_prec_t prec = x.prec();
    BigRat target = x.to_exact_rat();

    BigRat scale = abs(target);
    if (scale < 1) scale = 1;
    BigRat tol = make_rat(1, bi_pow2(static_cast<unsigned long>(2 * prec / 3))) * scale;

    // Continued fraction convergents of target.
    BigInt p0 = 1, q0 = 0;  // h_{-1}/k_{-1}
    BigInt p1 = 0, q1 = 1;  // seeded so the first step yields a0/1
    BigRat rest = target;
    for (int step = 0; step < 20000; ++step) {
        BigInt a;
        mpz_fdiv_q(a.get_mpz_t(), num(rest).get_mpz_t(), den(rest).get_mpz_t());
        BigInt p = a * p0 + p1;
        BigInt q = a * q0 + q1;
        if (q > den_bound) return false;
        BigRat approx = make_rat(p, q);
        if (abs(target - approx) <= tol) {
            out = approx;
            return true;
        }
        p1 = p0;
        q1 = q0;
        p0 = p;
        q0 = q;
        BigRat frac = rest - BigRat(a);
        if (frac == 0) return false;  // exact dyadic hit without meeting tol: give up
        rest = BigRat(1) / frac;
    }
    return false;
}

}  // namespace tbk
