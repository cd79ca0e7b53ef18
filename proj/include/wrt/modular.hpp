// Modular transformation data for the chi / theta / psi families and the
// limiting values of their Eichler integrals at rational points.
#pragma once

#include <cstddef>
#include <vector>

#include "wrt/real.hpp"
#include "wrt/seifert.hpp"

namespace wrt {

struct RealMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Real> a;  // row-major

    RealMatrix() = default;
    RealMatrix(std::size_t r, std::size_t c, mpfr_prec_t prec)
        : rows(r), cols(c), a(r * c, Real(prec)) {}
    Real& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Real& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

inline constexpr long kMaxDenseDim = 10000;

// Single S-matrix entry for arbitrary index tuples (not only orbit
// representatives); always real.
Real s_matrix_entry(const SeifertData& m, const Label& row, const Label& col, mpfr_prec_t prec);

// Full D x D matrix over the canonical orbit representatives.
RealMatrix s_matrix(const SeifertData& m, mpfr_prec_t prec);

// One row of the S-matrix against the canonical representatives.
std::vector<Real> s_matrix_row(const SeifertData& m, const Label& row,
                               const std::vector<LabelOrbit>& orbits, mpfr_prec_t prec);

// T-matrix phase: exact turns (P/4)(1 + sum ell_j/p_j)^2 mod 1.
PhaseTurns t_phase(const SeifertData& m, const Label& l);

struct ThetaPsiMatrices {
    RealMatrix n;  // (P+1) x (P+1), rows a = 0..P
    RealMatrix m;  // (P-1) x (P-1), rows a = 1..P-1
};

ThetaPsiMatrices theta_psi_matrices(long P, mpfr_prec_t prec);

// Entry helpers used where dense matrices would not fit.
Real theta_n_entry(long P, long a, long c, mpfr_prec_t prec);
Real psi_m_entry(long P, long a, long c, mpfr_prec_t prec);

// C-value sum_{n=1}^{2P} chi(n) B_k(n / 2P); k defaults to M - 2.
Rational c_value(const SeifertData& m, const Label& l, int k);
Rational c_value(const SeifertData& m, const Label& l);

struct EichlerValue {
    Complex value;
    Rational tau;
    Label label;
    int derivative_order = 0;
};

// Limiting value at tau -> N2/N1 (gcd(N1, N2) = 1, N1 > 0):
//   -(P N1)^(1 - eveodd(M)) sum_{k=0}^{2 P N1} chi(k)
//        e^{(N2/N1) k^2/(2P) pi i} B_{2-eveodd(M)}(k/(2 P N1))
EichlerValue eichler_limit(const SeifertData& m, const Label& l, long n2, long n1,
                           mpfr_prec_t prec);

// Limiting value of the b-th scaled derivative:
//   -(2 P N1)^(2b+1-eveodd(M)) / (2b+2-eveodd(M)) sum chi(n) e^{...} B_{2b+2-eveodd(M)}
EichlerValue eichler_derivative_limit(const SeifertData& m, const Label& l, int b, long n2,
                                      long n1, mpfr_prec_t prec);

// Direct q-series sum_{n>=0} n^{(1-eveodd(M)) + 2b} chi(n) q^{n^2/4P} at
// tau = tau_real + i*tau_imag, tau_imag > 0; used as an independent oracle.
Complex qseries_value(const SeifertData& m, const Label& l, const Rational& tau_real,
                      const Real& tau_imag, int derivative_order, mpfr_prec_t prec);

// Richardson extrapolation of qseries_value along tau_imag in {1e-3, 1e-4, 1e-5}.
Complex qseries_radial_limit(const SeifertData& m, const Label& l, const Rational& tau_real,
                             int derivative_order, mpfr_prec_t prec);

// Defect of the nearly modular transformation at 1/N after removing
// tail_terms + 1 terms (k = 0..tail_terms) of the L-value series.
Complex nearly_modular_residual(const SeifertData& m, const Label& l, long n, int tail_terms,
                                mpfr_prec_t prec);

}  // namespace wrt
