// Seifert fibered integral homology spheres Sigma(p_1, ..., p_M):
// manifold data, the chi/theta/psi periodic functions, label orbits, and
// the classical invariants derived from Dedekind sums.
#pragma once

#include <string>
#include <vector>

#include "wrt/periodic.hpp"
#include "wrt/rational.hpp"

namespace wrt {

struct SeifertData {
    std::vector<long> p;  // pairwise coprime fiber orders, each >= 2
    int M = 0;            // number of exceptional fibers
    long P = 0;           // product of p_j
    Int D;                // independent label classes: prod(p_j - 1) / 2^(M-1)
    Rational phi;         // 3 - 1/P + 12 sum_j s(P/p_j, p_j)

    bool odd() const { return M % 2 != 0; }
    int eveodd() const { return M % 2; }  // 1 for odd M, 0 for even M
};

struct Label {
    std::vector<long> ell;  // 1 <= ell_j <= p_j - 1

    friend bool operator==(const Label& a, const Label& b) { return a.ell == b.ell; }
    friend bool operator<(const Label& a, const Label& b) { return a.ell < b.ell; }
    std::string str() const;
};

struct LabelOrbit {
    Label representative;        // lexicographically smallest member
    std::vector<Label> members;  // the full orbit under the even flip group
};

SeifertData make_manifold(const std::vector<long>& p);

Rational phi_invariant(const SeifertData& m);

// Casson invariant lambda_C of Sigma(p)
Rational casson_invariant(const SeifertData& m);

// Chern-Simons value -(P/4)(1 + sum ell_j/p_j)^2 mod 1, in [0, 1)
Rational chern_simons(const SeifertData& m, const Label& l);

// sum_j ell_j / p_j
Rational label_slope(const SeifertData& m, const Label& l);

void validate_label(const SeifertData& m, const Label& l);

// All prod(p_j - 1) labels partitioned into the D orbits of the group
// generated by pairs of coordinate flips ell_j -> p_j - ell_j; orbits are
// sorted by representative.
std::vector<LabelOrbit> enumerate_orbits(const SeifertData& m);

// chi: modulus-2P function with value -prod(eps_j) at
// P(1 + sum eps_j ell_j/p_j) mod 2P over the 2^M sign vectors eps.
PeriodicFunction chi_function(const SeifertData& m, const Label& l);

enum class BasisKind { even, odd };

// theta (even: value 1 at +-a) or psi (odd: value +-1 at +-a) mod 2P
PeriodicFunction basis_periodic(long P, long a, BasisKind kind);

struct CheckResult {
    bool ok = false;
    std::string detail;
    explicit operator bool() const { return ok; }
};

// Verifies, as an exact polynomial identity in z, that the sign-product
// generating function (with its fold-back corrections when
// sum ell_j/p_j > 1) reproduces chi_function's coefficient vector.
CheckResult chi_generating_check(const SeifertData& m, const Label& l);

}  // namespace wrt
