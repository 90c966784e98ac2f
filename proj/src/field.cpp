#include "tbk/field.hpp"

#include <algorithm>

#include "tbk/events.hpp"
#include "tbk/factor_f2.hpp"
#include "tbk/mat2.hpp"
#include "tbk/numeric.hpp"
#include "tbk/resultant.hpp"

namespace tbk {

std::string to_string(SqrtStatus s) {
    switch (s) {
        case SqrtStatus::CertifiedAbsent: return "CertifiedAbsent";
        case SqrtStatus::PresentWitness: return "PresentWitness";
        case SqrtStatus::Undetermined: return "Undetermined";
    }
    return "?";
}

namespace {

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d : sorted_divisors_u64(n))
        if (d > 1 && is_prime_u64(d)) out.push_back(d);
    return out;
}

// Ramified primes of Q(sqrt n): odd primes dividing n, plus 2 unless
// n = 1 mod 4.
std::vector<BigInt> ramified_primes(const BigInt& n) {
    std::vector<BigInt> out;
    BigInt a = bi_abs(n);
    if (a.fits_ulong_p()) {
        for (auto p : prime_factors_u64(a.get_ui()))
            if (p != 2) out.emplace_back(static_cast<unsigned long>(p));
    } else {
        return {};  // too large to factor here; the filter is simply skipped
    }
    if (bi_mod(n, BigInt(4)) != 1) out.emplace_back(2);
    return out;
}

struct SignClass {
    std::size_t root_index;                 // representative embedding
    std::optional<std::size_t> conjugate;   // paired conjugate embedding, if any
};

// Exact verification z^2 = n in Q[y]/(f).
bool verify_witness(const PolyQ& z, const PolyZ& f, const BigInt& n) {
    PolyQ fq = to_polyq(f);
    PolyQ sq = poly_mod(z * z, fq);
    return sq == PolyQ::constant(BigRat(n));
}

SqrtResult numeric_search(const PolyZ& f, const BigInt& n, const SqrtOptions& opt) {
    const int d = f.degree();
    SqrtResult res;
    res.status = SqrtStatus::Undetermined;
    if (d > opt.max_numeric_degree) {
        res.certificate = "witness search skipped: degree " + std::to_string(d) +
                          " exceeds numeric search bound";
        return res;
    }

    for (long prec = opt.start_precision_bits; prec <= opt.max_precision_bits; prec *= 2) {
        auto roots = poly_roots(f, prec);

        // Partition embeddings into sign classes: one per real root, one per
        // conjugate pair. For n < 0 a real embedding cannot carry sqrt(n); the
        // exact Sturm certificate upstream already excluded that case.
        Real tiny(prec);
        mpfr_set_ui_2exp(tiny.get(), 1, -(prec / 3), MPFR_RNDN);
        std::vector<bool> used(roots.size(), false);
        std::vector<SignClass> classes;
        std::vector<std::size_t> order(roots.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (roots[a].re < roots[b].re) return true;
            if (roots[b].re < roots[a].re) return false;
            return roots[a].im < roots[b].im;
        });
        for (std::size_t oi : order) {
            if (used[oi]) continue;
            used[oi] = true;
            if (roots[oi].im.abs() < tiny) {
                classes.push_back({oi, std::nullopt});
                continue;
            }
            // find unused conjugate: closest to conj(roots[oi])
            Cplx want = roots[oi].conj();
            std::size_t best = oi;
            bool found = false;
            Real bestd(prec);
            for (std::size_t j = 0; j < roots.size(); ++j) {
                if (used[j]) continue;
                Real dist = (roots[j] - want).abs2();
                if (!found || dist < bestd) {
                    bestd = dist;
                    best = j;
                    found = true;
                }
            }
            if (!found) {
                classes.clear();
                break;  // pairing failed at this precision
            }
            used[best] = true;
            classes.push_back({oi, best});
        }
        if (classes.empty()) continue;

        const std::size_t nc = classes.size();
        if (nc > 63 || (std::uint64_t{1} << (nc - 1)) > opt.pattern_budget) {
            res.certificate = "witness search skipped: sign pattern budget exceeded";
            return res;
        }

        bool negative = sign(n) < 0;
        Real sq = Real::of(bi_abs(n), prec).sqrt();

        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (nc - 1)); ++mask) {
            // class 0 fixed +, remaining signs from mask
            std::vector<Cplx> rhs(static_cast<std::size_t>(d), Cplx(static_cast<mpfr_prec_t>(prec)));
            bool feasible = true;
            for (std::size_t ci = 0; ci < nc; ++ci) {
                int s = (ci == 0) ? 1 : ((mask >> (ci - 1)) & 1 ? -1 : 1);
                Real re(prec), im(prec);
                if (negative) {
                    if (!classes[ci].conjugate) {
                        feasible = false;  // real embedding with n < 0
                        break;
                    }
                    im = s > 0 ? sq : -sq;
                } else {
                    re = s > 0 ? sq : -sq;
                }
                rhs[classes[ci].root_index] = Cplx(re, im);
                if (classes[ci].conjugate)
                    rhs[*classes[ci].conjugate] = Cplx(re, -im);
            }
            if (!feasible) continue;

            std::vector<std::vector<Cplx>> vand(
                static_cast<std::size_t>(d),
                std::vector<Cplx>(static_cast<std::size_t>(d), Cplx(static_cast<mpfr_prec_t>(prec))));
            for (int i = 0; i < d; ++i) {
                Cplx pw(static_cast<mpfr_prec_t>(prec));
                pw.re = Real::of(1.0, prec);
                for (int j = 0; j < d; ++j) {
                    vand[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pw;
                    pw = pw * roots[static_cast<std::size_t>(i)];
                }
            }
            std::vector<Cplx> b = rhs;
            if (!solve_complex(vand, b)) continue;

            PolyQ z;
            z.c.assign(static_cast<std::size_t>(d), BigRat(0));
            bool ok = true;
            for (int j = 0; j < d && ok; ++j) {
                const Cplx& cj = b[static_cast<std::size_t>(j)];
                if (!(cj.im.abs() < tiny)) {
                    ok = false;
                    break;
                }
                BigRat rec;
                if (!reconstruct_rational(cj.re, opt.denominator_bound, rec)) {
                    ok = false;
                    break;
                }
                z.c[static_cast<std::size_t>(j)] = rec;
            }
            if (!ok) continue;
            z.trim();
            if (verify_witness(z, f, n)) {
                res.status = SqrtStatus::PresentWitness;
                res.witness = z;
                res.certificate = "z^2 = " + to_string(n) + " verified exactly";
                return res;
            }
        }
    }
    res.certificate = "bounded numeric search failed to stabilize";
    return res;
}

}  // namespace

SqrtResult sqrt_in_field(const PolyZ& f, const BigInt& n, const SqrtOptions& opt) {
    if (f.degree() < 1) throw std::invalid_argument("sqrt_in_field: constant modulus");
    SqrtResult res;

    if (n == 1) {
        res.status = SqrtStatus::PresentWitness;
        res.witness = PolyQ::constant(BigRat(1));
        res.certificate = "trivial: n = 1";
        return res;
    }
    const int d = f.degree();
    if (d == 1) {
        res.status = SqrtStatus::CertifiedAbsent;
        res.certificate = "rational field contains no irrational square root";
        return res;
    }

    // Ramification filter on disc(f).
    BigInt disc = discriminant(f);
    for (const auto& ell : ramified_primes(n)) {
        if (!bi_divisible(disc, ell)) {
            res.status = SqrtStatus::CertifiedAbsent;
            res.certificate = "prime " + to_string(ell) + " ramifies in Q(sqrt(" + to_string(n) +
                              ")) but does not divide disc = " + to_string(disc);
            return res;
        }
    }

    if (d % 2 != 0) {
        res.status = SqrtStatus::CertifiedAbsent;
        res.certificate = "field degree " + std::to_string(d) + " is odd; no quadratic subfield";
        return res;
    }

    if (sign(n) < 0) {
        int rr = count_real_roots(f);
        if (rr > 0) {
            res.status = SqrtStatus::CertifiedAbsent;
            res.certificate = "field has " + std::to_string(rr) +
                              " real embeddings; sqrt of a negative integer cannot be real";
            return res;
        }
    }

    return numeric_search(f, n, opt);
}

std::vector<int> two_splitting(const PolyZ& f) {
    PolyF2 bar = PolyF2::reduce_mod2(f);
    if (bar.degree() != f.degree())
        throw std::invalid_argument("two_splitting: leading coefficient vanishes mod 2");
    auto factors = factor_f2(bar);
    std::vector<int> degrees;
    for (const auto& fa : factors) {
        if (fa.multiplicity != 1)
            throw ContradictionEvent("two_splitting: repeated factor mod 2 for " +
                                     poly_to_string(f));
        degrees.push_back(fa.poly.degree());
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

SqrtResult qi_exclusion(const PolyZ& f, const SqrtOptions& opt) {
    BigInt disc = discriminant(f);
    if (is_odd(disc)) {
        SqrtResult res;
        res.status = SqrtStatus::CertifiedAbsent;
        res.certificate = "disc = " + to_string(disc) +
                          " is odd; disc(Q(i)) = -4 cannot divide the field discriminant";
        return res;
    }
    return sqrt_in_field(f, BigInt(-1), opt);
}

bool arithmetic_candidate(const PolyZ& f) {
    return f.degree() == 2 && sign(discriminant(f)) < 0;
}

FieldInvariants compute_field_invariants(const PolyZ& factor, const SqrtOptions& opt) {
    FieldInvariants inv;
    inv.factor = factor;
    inv.degree = factor.degree();
    inv.disc = discriminant(factor);
    inv.disc_odd = is_odd(inv.disc);
    inv.two_split = two_splitting(factor);
    inv.qi = qi_exclusion(factor, opt);
    inv.sqrtm3 = sqrt_in_field(factor, BigInt(-3), opt);
    inv.arithmetic = arithmetic_candidate(factor);
    inv.real_roots = count_real_roots(factor);
    inv.geometric_candidate = inv.real_roots < inv.degree;
    return inv;
}

}  // namespace tbk
