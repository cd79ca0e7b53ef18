// Numeric self-tests of the phase arithmetic against exact identities.
#pragma once

#include "wrt/real.hpp"

namespace wrt {

// |LHS - RHS| of the Gauss sum reciprocity formula
//   sum_{n mod N} e^{pi i (M/N) n^2 + 2 pi i k n}
//     = sqrt|N/M| e^{(pi i/4) sign(NM)} sum_{n mod M} e^{-pi i (N/M)(n+k)^2}
// Requires N*M even, N*k integral, N and M nonzero.
Real gauss_reciprocity_check(long n_mod, long m_mod, const Rational& k, mpfr_prec_t prec);

// |sum_{c=1}^{N-1} w^{(a+1)c} / (1-w^c)^k  -  closed form|, w = e^{2 pi i/N};
// the closed form is the Stirling/Bernoulli expression
//   (-1)^k/(k-1)! sum_{j=1}^{k} (S_k^{(j)}/j) (B_j(1) - N^j B_j((a+1)/N)).
Real omega_bernoulli_check(long n, int k, long a, mpfr_prec_t prec);

}  // namespace wrt
