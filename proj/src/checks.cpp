#include "wrt/checks.hpp"

#include <cstdlib>

#include "wrt/special.hpp"

namespace wrt {

Real gauss_reciprocity_check(long n_mod, long m_mod, const Rational& k, mpfr_prec_t prec) {
    if (n_mod == 0 || m_mod == 0)
        throw validation_error("gauss_reciprocity_check: moduli must be nonzero");
    if ((Int(n_mod) * Int(m_mod)) % 2 != 0)
        throw validation_error("gauss_reciprocity_check: N*M must be even");
    if (!(k * Rational(n_mod)).is_integer())
        throw validation_error("gauss_reciprocity_check: N*k must be integral");

    const long na = std::labs(n_mod), ma = std::labs(m_mod);
    Complex lhs(prec);
    for (long n = 0; n < na; ++n) {
        // turns = (M/N) n^2 / 2 + k n
        Rational t = Rational(Int(m_mod) * Int(n) * Int(n), Int(2) * Int(n_mod)) + k * Rational(n);
        lhs += phase_exp(PhaseTurns(t), prec);
    }
    Complex rhs(prec);
    for (long n = 0; n < ma; ++n) {
        Rational nk = Rational(n) + k;
        Rational t = Rational(-n_mod, 2 * m_mod) * nk * nk;
        rhs += phase_exp(PhaseTurns(t), prec);
    }
    int sgn = (n_mod > 0) == (m_mod > 0) ? 1 : -1;
    rhs *= phase_exp(PhaseTurns(Rational(sgn, 8)), prec);
    rhs *= Complex{(Real::of(na, prec) / Real::of(ma, prec)).sqrt(), Real::of(0L, prec)};
    return (lhs - rhs).abs();
}

Real omega_bernoulli_check(long n, int k, long a, mpfr_prec_t prec) {
    if (n < 2) throw validation_error("omega_bernoulli_check: N must be >= 2");
    if (k < 1 || a < 0 || a > n - 1)
        throw validation_error("omega_bernoulli_check: requires k >= 1 and 0 <= a <= N-1");

    Complex lhs(prec);
    const Complex one = Complex::one(prec);
    for (long c = 1; c < n; ++c) {
        Complex num = phase_exp(PhaseTurns(Rational((a + 1) * c, n)), prec);
        Complex den = one - phase_exp(PhaseTurns(Rational(c, n)), prec);
        Complex dpow = Complex::one(prec);
        for (int i = 0; i < k; ++i) dpow *= den;
        lhs += num / dpow;
    }

    Rational closed(0);
    for (int j = 1; j <= k; ++j) {
        Rational bj1 = bernoulli_value(j, Rational(1));
        Rational bjn = bernoulli_value(j, Rational(a + 1, n));
        closed += Rational(stirling_first(k, j)) / Rational(j) *
                  (bj1 - Rational(int_pow(Int(n), static_cast<unsigned long>(j))) * bjn);
    }
    closed *= Rational((k % 2 == 0) ? 1 : -1) / Rational(factorial(static_cast<unsigned long>(k - 1)));

    return (lhs - Complex::of(closed, Rational(0), prec)).abs();
}

}  // namespace wrt
