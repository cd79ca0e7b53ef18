// Large-N asymptotics: dominating flat-connection terms, the complete
// divergent-block expansion, tail (T-series / Ohtsuki) coefficients, and
// per-class torsion magnitudes.
#pragma once

#include <vector>

#include "wrt/modular.hpp"
#include "wrt/real.hpp"
#include "wrt/seifert.hpp"

namespace wrt {

// Dominating term of Z_N (coupling-N normalization, quantum level N+2).
Complex z_dominant(const SeifertData& m, long N, mpfr_prec_t prec = kDefaultPrec);

// Equivalent dominant form as a 2P-term Bernoulli/sine sum.
Complex z_dominant_alt(const SeifertData& m, long N, mpfr_prec_t prec = kDefaultPrec);

enum class Normalization { tau, z };

// One divergent class: amplitude * N^(M - 5/2 - growth_order) *
// exp(-2 pi i N cs_turns) in the prefactored tau normalization; the same
// term contributes N^(M - 3 - growth_order) after conversion to Z.
struct ExpansionTerm {
    int growth_order = 0;
    PhaseTurns cs_turns;
    Complex amplitude;
};

struct ExpansionReport {
    std::vector<ExpansionTerm> terms;  // sorted by (growth_order, cs_turns)
    std::vector<Rational> tail;        // T(0..tail_order)
    int tail_order = 0;
    Normalization normalization = Normalization::z;
    long N = 0;  // level the report was requested at
};

ExpansionReport full_expansion(const SeifertData& m, long N, int tail_order,
                               mpfr_prec_t prec = kDefaultPrec,
                               Normalization norm = Normalization::z);

// Numerical value of the report (divergent terms plus truncated tail) at
// level N, in the report's normalization.
Complex evaluate_expansion(const SeifertData& m, const ExpansionReport& rep, long N,
                           mpfr_prec_t prec = kDefaultPrec);

struct TSeries {
    std::vector<Rational> coefficients;  // index k
};

enum class TSeriesMethod { series, closed, both };

TSeries t_series(const SeifertData& m, int k_max, TSeriesMethod method = TSeriesMethod::series);

struct OhtsukiSeries {
    std::vector<Rational> lambdas;  // lambda_0 .. lambda_n
};

// lambda_n from the differential-operator product acting on
// G(x) = prod sinh(x/p_j)/sinh(x)^(M-2).
OhtsukiSeries ohtsuki_series(const SeifertData& m, int n_max);

// Same coefficients derived from the T-series through the Stirling
// expansion of powers of log q; an independent route to the lambdas.
std::vector<Rational> tau_infinity_series(const SeifertData& m, int order);

// |prod_j sin(P ell_j pi / p_j^2)| * C(ell)
Real torsion_magnitude(const SeifertData& m, const Label& l, mpfr_prec_t prec = kDefaultPrec);

}  // namespace wrt
