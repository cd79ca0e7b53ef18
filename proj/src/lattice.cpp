#include "wrt/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "wrt/modular.hpp"
#include "wrt/special.hpp"

namespace wrt {

namespace {

// #{ m in Z_{>=low}^M : sum m_j/p_j (<=|<) bound }, exact, with the search
// pruned coordinate by coordinate
long count_simplex(const std::vector<long>& p, long low, const Rational& bound, bool strict) {
    long count = 0;
    auto rec = [&](auto&& self, std::size_t depth, const Rational& remaining) -> void {
        if (depth == p.size()) {
            ++count;
            return;
        }
        const Rational pj(p[depth]);
        for (long v = low;; ++v) {
            Rational used = Rational(v) / pj;
            bool last = depth + 1 == p.size();
            bool ok = strict ? (used < remaining) : (used <= remaining);
            if (!ok) break;
            if (last)
                ++count;
            else
                self(self, depth + 1, remaining - used);
        }
    };
    rec(rec, 0, bound);
    return count;
}

void require_positive(const std::vector<long>& p) {
    for (long v : p)
        if (v < 1) throw validation_error("fiber orders must be >= 1");
}

void require_pairwise_coprime(const std::vector<long>& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (std::gcd(p[i], p[j]) != 1)
                throw validation_error("orders must be pairwise coprime");
}

}  // namespace

long interior_count(const std::vector<long>& p) {
    require_positive(p);
    return count_simplex(p, 1, Rational(1), true);
}

Rational mordell_count(const std::vector<long>& p) {
    require_pairwise_coprime(p);
    if (p.size() == 3) {
        const long p1 = p[0], p2 = p[1], p3 = p[2];
        const Int P = Int(p1) * p2 * p3;
        Rational l = Rational(Int(p1 - 1) * (p2 - 1) * (p3 - 1), Int(4));
        l += Rational(Int(1), Int(12) * P) - Rational(1, 4);
        Rational sq = Rational(1) - Rational(1, p1 * p1) - Rational(1, p2 * p2) - Rational(1, p3 * p3);
        l -= Rational(P, Int(12)) * sq;
        l -= dedekind_sum(Int(p1) * p2, Int(p3));
        l -= dedekind_sum(Int(p2) * p3, Int(p1));
        l -= dedekind_sum(Int(p1) * p3, Int(p2));
        return l;
    }
    if (p.size() == 4) {
        const Int P = Int(p[0]) * p[1] * p[2] * p[3];
        Rational l(Int(1), Int(8));
        for (long pj : p) l *= Rational(pj - 1);
        l += Rational(3, 8) - Rational(P, Int(12));
        Rational s1(0);
        for (long pj : p) s1 += Rational(Int(1) + pj, Int(pj) * pj);
        l += Rational(P, Int(24)) * s1;
        Rational s2(1);
        for (long pj : p) s2 -= Rational(pj);
        l += s2 / Rational(Int(24) * P);
        Rational s3(0);
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                if (j != k) s3 += Rational(Int(1), Int(p[j]) * p[j] * p[k]);
        l -= Rational(P, Int(24)) * s3;
        for (long pj : p) {
            Int q;
            mpz_divexact_ui(q.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(pj));
            l -= dedekind_sum(q, Int(pj)) / Rational(2);
        }
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                if (j == k) continue;
                Int q;
                mpz_divexact_ui(q.get_mpz_t(), P.get_mpz_t(),
                                static_cast<unsigned long>(p[j]) * static_cast<unsigned long>(p[k]));
                l += dedekind_sum(q, Int(p[j])) / Rational(2);
            }
        return l;
    }
    throw validation_error("mordell_count: closed forms exist for 3 or 4 orders only");
}

GammaResult gamma_count(const SeifertData& m) {
    GammaResult res;
    for (const auto& orbit : enumerate_orbits(m)) {
        if (c_value(m, orbit.representative).is_zero())
            res.vanishing.push_back(orbit.representative);
        else
            ++res.gamma;
    }
    return res;
}

ConjectureReport conjecture_report(const SeifertData& m) {
    ConjectureReport rep;
    rep.D = m.D;
    GammaResult g = gamma_count(m);
    rep.gamma = g.gamma;
    rep.vanishing = std::move(g.vanishing);
    rep.L = interior_count(m.p);

    Int diff = rep.D - rep.gamma;
    if (diff < rep.L)
        throw consistency_error("lattice bound violated: D - gamma < L indicates a defect");
    rep.equality = diff == rep.L;

    // for vanishing labels beyond the interior region, look for an
    // interior label with an identical chi array
    std::vector<std::pair<Label, PeriodicFunction>> interior_chis;
    for (const auto& orbit : enumerate_orbits(m)) {
        for (const auto& member : orbit.members) {
            if (label_slope(m, member) < Rational(1))
                interior_chis.emplace_back(member, chi_function(m, member));
        }
    }
    for (const auto& v : rep.vanishing) {
        if (label_slope(m, v) < Rational(1)) continue;
        PeriodicFunction chi = chi_function(m, v);
        std::optional<Label> match;
        for (const auto& [lbl, ichi] : interior_chis)
            if (ichi == chi) {
                match = lbl;
                break;
            }
        rep.coincidences.emplace_back(v, match);
    }
    return rep;
}

EhrhartPoly ehrhart_polynomial(const std::vector<long>& p) {
    require_positive(p);
    const int M = static_cast<int>(p.size());
    Int prod(1);
    for (long pj : p) prod *= pj;
    if (prod > 10000000)
        throw capacity_error("ehrhart_polynomial: product of orders exceeds brute-force envelope");

    std::vector<Rational> counts;
    for (int t = 0; t <= M + 1; ++t)
        counts.emplace_back(count_simplex(p, 0, Rational(t), false));

    // exact Lagrange interpolation through t = 0..M
    RationalPoly poly;
    for (int i = 0; i <= M; ++i) {
        RationalPoly basis = RationalPoly::constant(Rational(1));
        Rational denom(1);
        for (int j = 0; j <= M; ++j) {
            if (j == i) continue;
            basis = basis * RationalPoly({Rational(-j), Rational(1)});
            denom *= Rational(i - j);
        }
        poly += basis * (counts[static_cast<std::size_t>(i)] / denom);
    }
    if (poly(Rational(M + 1)) != counts[static_cast<std::size_t>(M + 1)])
        throw consistency_error("ehrhart_polynomial: interpolant fails at the validation dilate");

    EhrhartPoly out;
    out.closure_poly = std::move(poly);
    for (int t = 1; t <= M; ++t)
        out.open_counts.push_back(count_simplex(p, 1, Rational(t), true));
    return out;
}

Rational c_coefficient(const std::vector<long>& p) {
    require_pairwise_coprime(p);
    const int M = static_cast<int>(p.size());
    Int P(1);
    for (long pj : p) P *= pj;

    Rational sum_sq(0), sum_lin(0), sum_s(0);
    for (long pj : p) {
        Int q;
        mpz_divexact_ui(q.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(pj));
        sum_sq += Rational(q * q);
        sum_lin += Rational(q);
        sum_s += dedekind_sum(q, Int(pj));
    }
    Rational rhs = Rational(M, 4) +
                   (Rational(2) - sum_sq + Rational(3) * sum_lin * sum_lin) / (Rational(24) * Rational(P)) -
                   sum_s;
    return rhs / Rational(factorial(static_cast<unsigned long>(M - 2)));
}

Rational casson_ehrhart_check(const SeifertData& m) {
    Rational lhs = casson_invariant(m) -
                   Rational(factorial(static_cast<unsigned long>(m.M - 2))) / Rational(2) *
                       c_coefficient(m.p);
    Rational cross(0);
    for (int j = 0; j < m.M; ++j)
        for (int k = j + 1; k < m.M; ++k) cross += Rational(Int(1), Int(m.p[j]) * m.p[k]);
    Rational rhs = Rational(-(m.M + 1), 8) - Rational(m.M - 2) * Rational(m.P) / Rational(24) -
                   Rational(m.P, 8) * cross;
    return lhs - rhs;
}

}  // namespace wrt
