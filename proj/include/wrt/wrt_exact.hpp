// Exact evaluation of the quantum invariant tau_N by direct summation of
// the single 2PN-term phase sum, with deterministic chunked reduction.
#pragma once

#include <cstdint>

#include "wrt/real.hpp"
#include "wrt/seifert.hpp"

namespace wrt {

struct WrtResult {
    Complex tau;
    Complex z;  // tau * sin(pi/N) * sqrt(2/N)
    long N = 0;
    mpfr_prec_t precision_bits = kDefaultPrec;
    std::uint64_t term_count = 0;  // summands with N not dividing n
};

// Quantum invariant tau_N at level N (N >= 2).
WrtResult tau_exact(const SeifertData& m, long N, mpfr_prec_t prec = kDefaultPrec,
                    unsigned threads = 0 /* 0 = all cores */);

// Z_N, the coupling-N normalization used by the reference tables; equals
// tau at level N+2 divided by the S^2 x S^1 value at that level.
Complex witten_z(const SeifertData& m, long N, mpfr_prec_t prec = kDefaultPrec,
                 unsigned threads = 0);

// |sum_{n=0}^{2PN-1} chi(n) e^{pi i n^2/(2PN)}|; exact identity, so the
// result is pure accumulated rounding.
Real phase_sum_zero_check(const SeifertData& m, const Label& l, long N,
                          mpfr_prec_t prec = kDefaultPrec);

}  // namespace wrt
