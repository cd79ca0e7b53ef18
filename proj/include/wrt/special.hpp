// Exact special functions: Dedekind sums, Bernoulli polynomials, Stirling
// and Lah numbers, K-numbers, the f-polynomial family, and L-values of
// mean-zero periodic functions at nonpositive integers.
#pragma once

#include "wrt/periodic.hpp"
#include "wrt/rational.hpp"

namespace wrt {

// ((x)): x - floor(x) - 1/2 for non-integer x, 0 at integers
Rational sawtooth(const Rational& x);

// s(b, a) = sum_{k=1}^{a-1} ((k/a)) ((k b/a)), a >= 1
Rational dedekind_sum(const Int& b, const Int& a);

// Bernoulli number B_k = B_k(0); cached
Rational bernoulli_number(int k);

// k-th Bernoulli polynomial, cached per degree
const RationalPoly& bernoulli_polynomial(int k);

// B_k(x) at a rational point
Rational bernoulli_value(int k, const Rational& x);

// signed Stirling number of the first kind; 0 when m > n or m < 0
Int stirling_first(int n, int m);

// Lah number (n!/m!) C(n-1, m-1), via the integer recurrence; 1 <= m <= n
Int lah_number(int n, int m);

// K(b, x; j) = C(b, j) * prod_{k=0}^{b-j-1} (1/2 + b - x - k), j <= b
Rational k_number(int b, int x, int j);

// f_m^M(x); 0 <= m <= M
const RationalPoly& f_polynomial(int m, int M);

// L(s, C) for s <= 0 and a mean-zero periodic function C
Rational l_value(const PeriodicFunction& c, int s);

}  // namespace wrt
