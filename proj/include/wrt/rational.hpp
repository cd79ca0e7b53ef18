// Exact rational arithmetic, rational polynomials, and phase turns.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wrt {

using Int = mpz_class;

// Raised when an operation's input violates a documented precondition.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when two routes that must agree exactly fail to do so.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an input exceeds the supported dense/brute-force envelope.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Always reduced, denominator > 0.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}           // NOLINT(google-explicit-constructor)
    Rational(const Int& n) : q_(n) {}     // NOLINT(google-explicit-constructor)
    template <class U>
    Rational(const __gmp_expr<mpz_t, U>& e) : q_(Int(e)) {}  // NOLINT
    Rational(const Int& num, const Int& den) : q_(num, den) {
        if (den == 0) throw validation_error("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    const Int& num() const { return q_.get_num(); }
    const Int& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw validation_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Int floor() const {
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return f;
    }

    // x - floor(x), in [0, 1)
    Rational frac() const { return *this - Rational(floor()); }

    Rational pow(unsigned long e) const {
        mpq_class r;
        mpz_pow_ui(r.get_num().get_mpz_t(), num().get_mpz_t(), e);
        mpz_pow_ui(r.get_den().get_mpz_t(), den().get_mpz_t(), e);
        return Rational(r);
    }

    std::string str() const { return q_.get_str(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Dense polynomial with exact rational coefficients, index = degree.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RationalPoly constant(const Rational& c) { return RationalPoly({c}); }
    static RationalPoly x() { return RationalPoly({Rational(0), Rational(1)}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    Rational operator()(const Rational& x) const {
        Rational r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    RationalPoly derivative() const {
        if (c_.size() <= 1) return RationalPoly();
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return RationalPoly(std::move(d));
    }

    RationalPoly& operator+=(const RationalPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    RationalPoly& operator-=(const RationalPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }

    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        if (a.is_zero() || b.is_zero()) return RationalPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return RationalPoly(std::move(r));
    }
    friend RationalPoly operator*(RationalPoly a, const Rational& s) {
        for (auto& c : a.c_) c *= s;
        a.trim();
        return a;
    }

    // p(x + s), exact
    RationalPoly shifted(const Rational& s) const {
        RationalPoly r;
        RationalPoly base({s, Rational(1)});
        RationalPoly pw = RationalPoly::constant(Rational(1));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            r += pw * c_[i];
            if (i + 1 < c_.size()) pw = pw * base;
        }
        return r;
    }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// exp(2*pi*i*turns) represented by its exact fractional turn count in [0, 1).
class PhaseTurns {
public:
    PhaseTurns() : t_(0) {}
    explicit PhaseTurns(const Rational& turns) : t_(turns.frac()) {}

    const Rational& turns() const { return t_; }

    PhaseTurns operator+(const PhaseTurns& o) const { return PhaseTurns(t_ + o.t_); }
    PhaseTurns operator-() const { return PhaseTurns(-t_); }
    PhaseTurns scaled(const Int& k) const { return PhaseTurns(t_ * Rational(k)); }

    friend bool operator==(const PhaseTurns& a, const PhaseTurns& b) { return a.t_ == b.t_; }
    friend bool operator<(const PhaseTurns& a, const PhaseTurns& b) { return a.t_ < b.t_; }

private:
    Rational t_;
};

}  // namespace wrt
