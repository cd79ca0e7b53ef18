// Configurable-precision real/complex values on top of MPFR.
#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "wrt/rational.hpp"

namespace wrt {

inline constexpr mpfr_prec_t kDefaultPrec = 128;
inline constexpr mpfr_prec_t kMinPrec = 53;

// RAII wrapper around mpfr_t. Binary operations widen to the larger
// operand precision; precision is never silently reduced.
class Real {
public:
    explicit Real(mpfr_prec_t prec = kDefaultPrec) {
        mpfr_init2(x_, prec);
        mpfr_set_zero(x_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(x_, o.prec());
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(x_, o.prec());
        mpfr_swap(x_, o.x_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(x_, o.prec());
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(x_, o.x_);
        return *this;
    }
    ~Real() { mpfr_clear(x_); }

    static Real of(long v, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.x_, v, MPFR_RNDN);
        return r;
    }
    static Real of(int v, mpfr_prec_t prec) { return of(static_cast<long>(v), prec); }
    template <class U>
    static Real of(const __gmp_expr<mpz_t, U>& e, mpfr_prec_t prec) {
        return of(Int(e), prec);
    }
    static Real of(const Int& v, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_z(r.x_, v.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real of(const Rational& q, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_q(r.x_, q.raw().get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real of(double v, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_d(r.x_, v, MPFR_RNDN);
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(x_); }
    int sign() const { return mpfr_sgn(x_); }

    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }

#define WRT_REAL_BINOP(op, fn)                                      \
    friend Real operator op(const Real& a, const Real& b) {         \
        Real r(a.prec() > b.prec() ? a.prec() : b.prec());          \
        fn(r.x_, a.x_, b.x_, MPFR_RNDN);                            \
        return r;                                                   \
    }
    WRT_REAL_BINOP(+, mpfr_add)
    WRT_REAL_BINOP(-, mpfr_sub)
    WRT_REAL_BINOP(*, mpfr_mul)
    WRT_REAL_BINOP(/, mpfr_div)
#undef WRT_REAL_BINOP

    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }

    friend Real operator*(const Real& a, long b) {
        Real r(a.prec());
        mpfr_mul_si(r.x_, a.x_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, long b) {
        Real r(a.prec());
        mpfr_div_si(r.x_, a.x_, b, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.x_, b.x_); }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.x_, b.x_); }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.x_, b.x_); }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.x_, b.x_); }

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
    Real pow_si(long e) const {
        Real r(prec());
        mpfr_pow_si(r.x_, x_, e, MPFR_RNDN);
        return r;
    }

    // Round a copy to the given (smaller or larger) precision.
    Real rounded(mpfr_prec_t prec) const {
        Real r(prec);
        mpfr_set(r.x_, x_, MPFR_RNDN);
        return r;
    }

    // Decimal string with enough digits to be injective at this precision.
    std::string str() const;

private:
    mpfr_t x_;
};

struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec = kDefaultPrec) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }

    static Complex of(const Rational& r, const Rational& i, mpfr_prec_t prec) {
        return {Real::of(r, prec), Real::of(i, prec)};
    }
    static Complex one(mpfr_prec_t prec) { return {Real::of(1L, prec), Real::of(0L, prec)}; }

    Complex operator-() const { return {-re, -im}; }
    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
    friend Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }

    Complex conj() const { return {re, -im}; }
    Real abs() const { return (re * re + im * im).sqrt(); }

    std::string str() const;
};

// sin(pi * x) and cos(pi * x) for exact rational x, reduced mod 2 before
// evaluation; quarter-turn arguments yield exact 0 / +-1.
Real sin_pi(const Rational& x, mpfr_prec_t prec);
Real cos_pi(const Rational& x, mpfr_prec_t prec);

// exp(2*pi*i*t) with relative error <= 2^(1-prec).
Complex phase_exp(const PhaseTurns& t, mpfr_prec_t prec);

// i^(num/2) = exp(i*pi*num/4) as exact turns num/8.
inline PhaseTurns half_i_power(long num) { return PhaseTurns(Rational(num, 8)); }

}  // namespace wrt
