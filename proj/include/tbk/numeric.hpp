#pragma once

#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "tbk/poly.hpp"

namespace tbk {

// Minimal RAII wrapper over an mpfr_t at explicit precision.
class Real {
  public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    Real(const Real& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_swap(x_, o.x_); }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(x_, o.x_, MPFR_RNDN);
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~Real() { mpfr_clear(x_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }

    static Real of(const BigRat& v, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_q(r.x_, v.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real of(const BigInt& v, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_z(r.x_, v.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real of(double v, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_d(r.x_, v, MPFR_RNDN);
        return r;
    }

    // Exact dyadic value m * 2^e as a rational (no rounding).
    BigRat to_exact_rat() const;

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(x_); }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(a.prec());
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(a.prec());
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(a.prec());
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(a.prec());
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }

    Real abs() const {
        Real r(prec());
        mpfr_abs(r.x_, x_, MPFR_RNDN);
        return r;
    }
    Real sqrt() const {
        Real r(prec());
        mpfr_sqrt(r.x_, x_, MPFR_RNDN);
        return r;
    }

  private:
    mpfr_t x_;
};

struct Cplx {
    Real re, im;

    explicit Cplx(mpfr_prec_t prec) : re(prec), im(prec) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Cplx conj() const { return {re, -im}; }
    Real abs2() const { return re * re + im * im; }
};

// All complex roots of a squarefree integer polynomial (Durand-Kerner, fixed
// deterministic start configuration). Results at the requested precision.
std::vector<Cplx> poly_roots(const PolyZ& f, mpfr_prec_t prec);

// Dense complex linear solve (partial pivoting); returns false on a
// numerically singular pivot.
bool solve_complex(std::vector<std::vector<Cplx>>& a, std::vector<Cplx>& b);

// Continued-fraction rational reconstruction of a floating value. Succeeds
// when a convergent with denominator <= den_bound approximates x to within
// 2^-(2*prec/3) relatively.
bool reconstruct_rational(const Real& x, const BigInt& den_bound, BigRat& out);

}  // namespace tbk
