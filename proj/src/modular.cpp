#include "wrt/modular.hpp"

#include <cmath>
#include <numeric>

#include "wrt/special.hpp"

namespace wrt {

Real s_matrix_entry(const SeifertData& m, const Label& row, const Label& col, mpfr_prec_t prec) {
    validate_label(m, row);
    validate_label(m, col);
    // sign exponent P(1 + sum (l_j + l'_j)/p_j) + P sum_{j != k} l_j l'_k/(p_j p_k)
    Int x(m.P);
    for (int j = 0; j < m.M; ++j) x += Int(m.P / m.p[j]) * Int(row.ell[j] + col.ell[j]);
    for (int j = 0; j < m.M; ++j)
        for (int k = 0; k < m.M; ++k)
            if (k != j) x += Int(m.P / (m.p[j] * m.p[k])) * Int(row.ell[j]) * Int(col.ell[k]);

    // 2^M i^{M - eveodd(M)} / sqrt(2P): i-power is (-1)^{(M - eveodd)/2}
    long sign = ((m.M - m.eveodd()) / 2 % 2 == 0) ? 1 : -1;
    if (x % 2 != 0) sign = -sign;

    Real r = Real::of(sign * (1L << m.M), prec) / Real::of(2L * m.P, prec).sqrt();
    for (int j = 0; j < m.M; ++j)
        r *= sin_pi(Rational(Int(m.P) * row.ell[j] * col.ell[j], Int(m.p[j]) * m.p[j]), prec);
    return r;
}

RealMatrix s_matrix(const SeifertData& m, mpfr_prec_t prec) {
    if (m.D > kMaxDenseDim) throw capacity_error("s_matrix: D exceeds dense storage envelope");
    auto orbits = enumerate_orbits(m);
    const std::size_t d = orbits.size();
    RealMatrix s(d, d, prec);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            s.at(i, j) = s_matrix_entry(m, orbits[i].representative, orbits[j].representative, prec);
    return s;
}

std::vector<Real> s_matrix_row(const SeifertData& m, const Label& row,
                               const std::vector<LabelOrbit>& orbits, mpfr_prec_t prec) {
    std::vector<Real> out;
    out.reserve(orbits.size());
    for (const auto& orb : orbits) out.push_back(s_matrix_entry(m, row, orb.representative, prec));
    return out;
}

PhaseTurns t_phase(const SeifertData& m, const Label& l) {
    validate_label(m, l);
    Rational u = Rational(1) + label_slope(m, l);
    return PhaseTurns(Rational(m.P, 4) * u * u);
}

Real theta_n_entry(long P, long a, long c, mpfr_prec_t prec) {
    if (a == 0) return Real::of(1L, prec) / Real::of(2 * P, prec).sqrt();
    if (a == P) {
        Real v = Real::of(1L, prec) / Real::of(2 * P, prec).sqrt();
        return (c % 2 == 0) ? v : -v;
    }
    return (Real::of(2L, prec) / Real::of(P, prec)).sqrt() * cos_pi(Rational(a * c, P), prec);
}

Real psi_m_entry(long P, long a, long c, mpfr_prec_t prec) {
    return (Real::of(2L, prec) / Real::of(P, prec)).sqrt() * sin_pi(Rational(a * c, P), prec);
}

ThetaPsiMatrices theta_psi_matrices(long P, mpfr_prec_t prec) {
    if (P < 2) throw validation_error("theta_psi_matrices: P must be >= 2");
    if (P + 1 > kMaxDenseDim) throw capacity_error("theta_psi_matrices: P exceeds dense envelope");
    ThetaPsiMatrices t{RealMatrix(static_cast<std::size_t>(P + 1), static_cast<std::size_t>(P + 1), prec),
                       RealMatrix(static_cast<std::size_t>(P - 1), static_cast<std::size_t>(P - 1), prec)};
    for (long a = 0; a <= P; ++a)
        for (long c = 0; c <= P; ++c)
            t.n.at(static_cast<std::size_t>(a), static_cast<std::size_t>(c)) =
                theta_n_entry(P, a, c, prec);
    for (long a = 1; a <= P - 1; ++a)
        for (long c = 1; c <= P - 1; ++c)
            t.m.at(static_cast<std::size_t>(a) - 1, static_cast<std::size_t>(c) - 1) =
                psi_m_entry(P, a, c, prec);
    return t;
}

Rational c_value(const SeifertData& m, const Label& l, int k) {
    PeriodicFunction chi = chi_function(m, l);
    const RationalPoly& b = bernoulli_polynomial(k);
    Rational sum(0);
    for (const auto& [n, v] : chi.support) sum += Rational(v) * b(Rational(n, 2 * m.P));
    return sum;
}

Rational c_value(const SeifertData& m, const Label& l) { return c_value(m, l, m.M - 2); }

namespace {

void require_coprime(long n2, long n1) {
    if (n1 <= 0) throw validation_error("eichler limit: N1 must be positive");
    if (std::gcd(std::labs(n2), n1) != 1 && !(n2 == 0 && n1 == 1))
        throw validation_error("eichler limit: N2/N1 must be in lowest terms");
}

// sum over k in [0, 2 P N1] of chi(k) e^{(N2/N1) k^2/(2P) pi i} B_deg(k/(2 P N1))
Complex eichler_bernoulli_sum(const SeifertData& m, const PeriodicFunction& chi, int deg,
                              long n2, long n1, mpfr_prec_t prec) {
    const long twoP = 2 * m.P;
    const RationalPoly& b = bernoulli_polynomial(deg);
    Complex sum(prec);
    for (const auto& [s, v] : chi.support) {
        for (long t = 0; t < n1; ++t) {
            const long k = s + twoP * t;
            if (k == 0 || k > twoP * n1) continue;
            Rational turns = Rational(Int(n2) * Int(k) * Int(k), Int(4) * m.P * n1);
            Complex ph = phase_exp(PhaseTurns(turns), prec);
            sum += ph * Real::of(Rational(v) * b(Rational(k, twoP * n1)), prec);
        }
    }
    return sum;
}

}  // namespace

EichlerValue eichler_limit(const SeifertData& m, const Label& l, long n2, long n1,
                           mpfr_prec_t prec) {
    require_coprime(n2, n1);
    PeriodicFunction chi = chi_function(m, l);
    const int e = m.eveodd();
    Complex sum = eichler_bernoulli_sum(m, chi, 2 - e, n2, n1, prec);
    Real pref = Real::of(Int(m.P) * n1, prec).pow_si(1 - e);
    return {-(sum * pref), Rational(n2, n1), l, 0};
}

EichlerValue eichler_derivative_limit(const SeifertData& m, const Label& l, int b, long n2,
                                      long n1, mpfr_prec_t prec) {
    require_coprime(n2, n1);
    if (b < 0) throw validation_error("eichler_derivative_limit: order must be >= 0");
    PeriodicFunction chi = chi_function(m, l);
    const int e = m.eveodd();
    Complex sum = eichler_bernoulli_sum(m, chi, 2 * b + 2 - e, n2, n1, prec);
    Real pref = Real::of(Int(2) * m.P * n1, prec).pow_si(2 * b + 1 - e) /
                Real::of(2 * b + 2 - e, prec);
    return {-(sum * pref), Rational(n2, n1), l, b};
}

Complex qseries_value(const SeifertData& m, const Label& l, const Rational& tau_real,
                      const Real& tau_imag, int derivative_order, mpfr_prec_t prec) {
    if (!(tau_imag > Real::of(0L, prec))) throw validation_error("qseries_value: tau_imag must be > 0");
    PeriodicFunction chi = chi_function(m, l);
    const long twoP = 2 * m.P;
    const int w = (1 - m.eveodd()) + 2 * derivative_order;
    const double thresh_log10 = -0.3 * static_cast<double>(prec);
    const double ti = tau_imag.to_double();

    // |term| = n^w exp(-pi tau_imag n^2 / (2P)); decreasing once
    // n^2 > w P / (pi tau_imag)
    const double decay = M_PI * ti / (2.0 * static_cast<double>(m.P));
    Real pi_ti = Real::pi(prec) * tau_imag;

    Complex sum(prec);
    for (long t = 0;; ++t) {
        bool all_small = t > 0;
        for (const auto& [s, v] : chi.support) {
            const long n = s + twoP * t;
            if (n == 0) continue;
            double lg = w * std::log10(static_cast<double>(n)) -
                        decay * static_cast<double>(n) * static_cast<double>(n) / M_LN10;
            bool past_peak = static_cast<double>(n) * static_cast<double>(n) * decay >
                             static_cast<double>(w);
            if (lg >= thresh_log10 || !past_peak) all_small = false;
            if (lg < thresh_log10 && past_peak) continue;
            // q^{n^2/4P} = e^{2 pi i tau_real n^2/4P} e^{-pi tau_imag n^2/2P}
            Rational turns = tau_real * Rational(Int(n) * Int(n), Int(4) * m.P);
            Complex ph = phase_exp(PhaseTurns(turns), prec);
            Real radial(prec);
            mpfr_mul_si(radial.raw(), pi_ti.raw(), -n, MPFR_RNDN);
            mpfr_mul_si(radial.raw(), radial.raw(), n, MPFR_RNDN);
            mpfr_div_si(radial.raw(), radial.raw(), twoP, MPFR_RNDN);
            mpfr_exp(radial.raw(), radial.raw(), MPFR_RNDN);
            Real weight = Real::of(v, prec) * Real::of(Int(n), prec).pow_si(w);
            sum += ph * (radial * weight);
        }
        if (all_small) break;
    }
    return sum;
}

Complex qseries_radial_limit(const SeifertData& m, const Label& l, const Rational& tau_real,
                             int derivative_order, mpfr_prec_t prec) {
    // quadratic (Neville) extrapolation to tau_imag = 0; at tau_real = N2/N1
    // the smooth regime only sets in for tau_imag well below 1/N1^2, so the
    // ladder is scaled by the squared denominator
    Rational scale(Int(1), tau_real.den() * tau_real.den());
    const Rational ts[3] = {Rational(1, 1000) * scale, Rational(1, 10000) * scale,
                            Rational(1, 100000) * scale};
    Complex f[3] = {Complex(prec), Complex(prec), Complex(prec)};
    for (int i = 0; i < 3; ++i)
        f[i] = qseries_value(m, l, tau_real, Real::of(ts[i], prec), derivative_order, prec);
    Real t[3] = {Real::of(ts[0], prec), Real::of(ts[1], prec), Real::of(ts[2], prec)};
    for (int level = 1; level < 3; ++level)
        for (int i = 0; i < 3 - level; ++i) {
            // p_i(0) through points i..i+level
            Real denom = t[i] - t[i + level];
            f[i] = (f[i + 1] * t[i] - f[i] * t[i + level]) / denom;
        }
    return f[0];
}

Complex nearly_modular_residual(const SeifertData& m, const Label& l, long n, int tail_terms,
                                mpfr_prec_t prec) {
    if (n < 2) throw validation_error("nearly_modular_residual: N must be >= 2");
    if (tail_terms < 0) throw validation_error("nearly_modular_residual: tail_terms must be >= 0");
    const int e = m.eveodd();

    Complex lhs = eichler_limit(m, l, 1, n, prec).value;

    auto orbits = enumerate_orbits(m);
    auto srow = s_matrix_row(m, l, orbits, prec);
    Complex transformed(prec);
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        Complex v = eichler_limit(m, orbits[i].representative, -n, 1, prec).value;
        transformed += v * srow[i];
    }
    // (N / i)^{3/2 - eveodd(M)}
    Real npow(prec);
    mpfr_set_si(npow.raw(), n, MPFR_RNDN);
    Real expo = Real::of(Rational(3, 2) - Rational(e), prec);
    mpfr_pow(npow.raw(), npow.raw(), expo.raw(), MPFR_RNDN);
    Complex ipow = phase_exp(PhaseTurns(Rational(2 * e - 3, 8)), prec);
    lhs += transformed * ipow * npow;

    // asymptotic tail: sum_k L(-2k-1+e, chi)/k! (pi i / 2PN)^k
    PeriodicFunction chi = chi_function(m, l);
    Real scale = Real::pi(prec) / Real::of(2L * m.P * n, prec);
    Complex tail(prec);
    for (int k = 0; k <= tail_terms; ++k) {
        Rational lv = l_value(chi, -2 * k - 1 + e);
        Real mag = scale.pow_si(k) * Real::of(lv / Rational(factorial(static_cast<unsigned long>(k))), prec);
        tail += phase_exp(PhaseTurns(Rational(k, 4)), prec) * mag;
    }
    return lhs - tail;
}

}  // namespace wrt
