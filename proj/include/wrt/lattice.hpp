// Lattice-point counts in the dilated simplex sum x_j/p_j <= t, the
// Dedekind-sum closed forms, Ehrhart polynomials, and the bridge between
// the Casson invariant and the first nontrivial Ehrhart coefficient.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wrt/rational.hpp"
#include "wrt/seifert.hpp"

namespace wrt {

// #{ l in Z_{>0}^M : sum l_j/p_j < 1 }, exact comparisons
long interior_count(const std::vector<long>& p);

// Dedekind-sum closed form for the interior count; defined for 3 or 4
// pairwise coprime orders
Rational mordell_count(const std::vector<long>& p);

struct GammaResult {
    long gamma = 0;                 // orbit representatives with C != 0
    std::vector<Label> vanishing;   // representatives with C == 0
};

GammaResult gamma_count(const SeifertData& m);

struct ConjectureReport {
    Int D;
    long gamma = 0;
    long L = 0;
    std::vector<Label> vanishing;
    // for vanishing labels with slope > 1: an interior label whose chi
    // array coincides, when one exists
    std::vector<std::pair<Label, std::optional<Label>>> coincidences;
    bool equality = false;  // D - gamma == L
};

ConjectureReport conjecture_report(const SeifertData& m);

struct EhrhartPoly {
    RationalPoly closure_poly;      // degree M, counts of the closed dilate
    std::vector<long> open_counts;  // interior counts at t = 1..M
};

EhrhartPoly ehrhart_polynomial(const std::vector<long>& p);

// first nontrivial coefficient c_{M-2} from the closed form
Rational c_coefficient(const std::vector<long>& p);

// residual of lambda_C - ((M-2)!/2) c_{M-2} against its closed form;
// exactly zero for every manifold
Rational casson_ehrhart_check(const SeifertData& m);

}  // namespace wrt
