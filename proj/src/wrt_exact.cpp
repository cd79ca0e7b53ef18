#include "wrt/wrt_exact.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "wrt/summation.hpp"

namespace wrt {

namespace {

// Fiber orders are packed into groups whose member product stays small, so
// a group's sine product is one table lookup of period 2*N*prod.
constexpr long kGroupProductBound = 128;

std::vector<std::vector<long>> group_fibers(const std::vector<long>& p) {
    std::vector<long> sorted(p);
    std::sort(sorted.begin(), sorted.end(), std::greater<long>());
    std::vector<std::vector<long>> groups;
    std::vector<bool> used(sorted.size(), false);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (used[i]) continue;
        std::vector<long> g{sorted[i]};
        long prod = sorted[i];
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (!used[j] && prod * sorted[j] <= kGroupProductBound) {
                prod *= sorted[j];
                g.push_back(sorted[j]);
                used[j] = true;
            }
        }
        used[i] = true;
        groups.push_back(std::move(g));
    }
    return groups;
}

struct SumTables {
    // quadratic phase e^{-2 pi i k/Q} for k = a*K + b, Q = 4PN
    std::uint64_t q = 0, k_split = 0;
    std::vector<Real> hi_re, hi_im, lo_re, lo_im;
    // per-group sine products, period 2*N*prod; group 0 carries the
    // 1/sin(pi n/N)^(M-2) denominator (zero where N | n)
    std::vector<long> period;
    std::vector<std::vector<Real>> sine;
};

SumTables build_tables(const SeifertData& m, long N, mpfr_prec_t prec) {
    SumTables t;
    t.q = 4ull * static_cast<std::uint64_t>(m.P) * static_cast<std::uint64_t>(N);
    t.k_split = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(t.q))));

    const std::uint64_t n_hi = (t.q - 1) / t.k_split + 1;
    t.hi_re.reserve(n_hi);
    t.hi_im.reserve(n_hi);
    for (std::uint64_t a = 0; a < n_hi; ++a) {
        Complex ph = phase_exp(PhaseTurns(Rational(-Int(a * t.k_split), Int(t.q))), prec);
        t.hi_re.push_back(std::move(ph.re));
        t.hi_im.push_back(std::move(ph.im));
    }
    t.lo_re.reserve(t.k_split);
    t.lo_im.reserve(t.k_split);
    for (std::uint64_t b = 0; b < t.k_split; ++b) {
        Complex ph = phase_exp(PhaseTurns(Rational(-Int(b), Int(t.q))), prec);
        t.lo_re.push_back(std::move(ph.re));
        t.lo_im.push_back(std::move(ph.im));
    }

    // per-fiber sine tables sin(pi n / (N p_j)), period 2 N p_j
    auto groups = group_fibers(m.p);
    std::vector<std::vector<Real>> per_fiber;
    std::vector<long> fiber_of;
    for (const auto& g : groups)
        for (long pj : g) {
            std::vector<Real> tab;
            tab.reserve(static_cast<std::size_t>(2 * N * pj));
            for (long n = 0; n < 2 * N * pj; ++n) tab.push_back(sin_pi(Rational(n, N * pj), prec));
            per_fiber.push_back(std::move(tab));
        }

    // inverse denominator 1/sin(pi n/N)^(M-2), period 2N, zero at N | n
    std::vector<Real> invden;
    invden.reserve(static_cast<std::size_t>(2 * N));
    const Real one = Real::of(1L, prec);
    for (long n = 0; n < 2 * N; ++n) {
        if (n % N == 0) {
            invden.push_back(Real::of(0L, prec));
        } else {
            invden.push_back(one / sin_pi(Rational(n, N), prec).pow_si(m.M - 2));
        }
    }

    std::size_t fiber_idx = 0;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        long prod = 1;
        for (long pj : groups[gi]) prod *= pj;
        const long period = 2 * N * prod;
        std::vector<Real> tab;
        tab.reserve(static_cast<std::size_t>(period));
        for (long n = 0; n < period; ++n) {
            Real v = gi == 0 ? invden[static_cast<std::size_t>(n % (2 * N))]
                             : Real::of(1L, prec);
            for (std::size_t f = 0; f < groups[gi].size(); ++f) {
                const auto& ft = per_fiber[fiber_idx + f];
                v *= ft[static_cast<std::size_t>(n) % ft.size()];
            }
            tab.push_back(std::move(v));
        }
        fiber_idx += groups[gi].size();
        t.period.push_back(period);
        t.sine.push_back(std::move(tab));
    }
    return t;
}

// Raw sum over n in [0, 2PN), N not dividing n, of
//   e^{-pi i n^2/(2PN)} * prod_j sin(pi n/(N p_j)) / sin(pi n/N)^(M-2)
Complex core_sum(const SeifertData& m, long N, mpfr_prec_t prec, unsigned threads) {
    const SumTables t = build_tables(m, N, prec);
    const std::uint64_t count = 2ull * static_cast<std::uint64_t>(m.P) * static_cast<std::uint64_t>(N);
    const std::size_t n_groups = t.sine.size();

    auto fill = [&](std::uint64_t beg, std::uint64_t end, Complex& out) {
        std::vector<std::uint64_t> r(n_groups);
        for (std::size_t g = 0; g < n_groups; ++g)
            r[g] = beg % static_cast<std::uint64_t>(t.period[g]);
        std::uint64_t rn = beg % static_cast<std::uint64_t>(N);

        Real f(prec), u(prec), v(prec), tmp(prec);
        mpfr_ptr acc_re = out.re.raw(), acc_im = out.im.raw();
        for (std::uint64_t n = beg; n < end; ++n) {
            if (rn != 0) {
                const std::uint64_t k = static_cast<std::uint64_t>(
                    (static_cast<unsigned __int128>(n) * n) % t.q);
                const std::size_t a = static_cast<std::size_t>(k / t.k_split);
                const std::size_t b = static_cast<std::size_t>(k % t.k_split);

                mpfr_srcptr fs;
                if (n_groups == 1) {
                    fs = t.sine[0][static_cast<std::size_t>(r[0])].raw();
                } else {
                    mpfr_mul(f.raw(), t.sine[0][static_cast<std::size_t>(r[0])].raw(),
                             t.sine[1][static_cast<std::size_t>(r[1])].raw(), MPFR_RNDN);
                    for (std::size_t g = 2; g < n_groups; ++g)
                        mpfr_mul(f.raw(), f.raw(),
                                 t.sine[g][static_cast<std::size_t>(r[g])].raw(), MPFR_RNDN);
                    fs = f.raw();
                }
                mpfr_mul(u.raw(), fs, t.hi_re[a].raw(), MPFR_RNDN);
                mpfr_mul(v.raw(), fs, t.hi_im[a].raw(), MPFR_RNDN);
                mpfr_mul(tmp.raw(), u.raw(), t.lo_re[b].raw(), MPFR_RNDN);
                mpfr_add(acc_re, acc_re, tmp.raw(), MPFR_RNDN);
                mpfr_mul(tmp.raw(), v.raw(), t.lo_im[b].raw(), MPFR_RNDN);
                mpfr_sub(acc_re, acc_re, tmp.raw(), MPFR_RNDN);
                mpfr_mul(tmp.raw(), u.raw(), t.lo_im[b].raw(), MPFR_RNDN);
                mpfr_add(acc_im, acc_im, tmp.raw(), MPFR_RNDN);
                mpfr_mul(tmp.raw(), v.raw(), t.lo_re[b].raw(), MPFR_RNDN);
                mpfr_add(acc_im, acc_im, tmp.raw(), MPFR_RNDN);
            }
            for (std::size_t g = 0; g < n_groups; ++g)
                if (++r[g] == static_cast<std::uint64_t>(t.period[g])) r[g] = 0;
            if (++rn == static_cast<std::uint64_t>(N)) rn = 0;
        }
    };
    return chunked_parallel_sum(count, kSumChunkSize, prec, fill,
                                threads == 0 ? default_thread_count() : threads);
}

}  // namespace

WrtResult tau_exact(const SeifertData& m, long N, mpfr_prec_t prec, unsigned threads) {
    if (N < 2) throw validation_error("tau_exact: N must be >= 2");
    if (prec < kMinPrec) throw validation_error("tau_exact: precision_bits must be >= 53");

    // pre-flight: the chi-weighted phase sum over a full period vanishes
    // identically, so its residual bounds the phase arithmetic error
    {
        Label e;
        e.ell.assign(static_cast<std::size_t>(m.M), 1);
        Real residual = phase_sum_zero_check(m, e, N, prec);
        Real bound = Real::of(Int(2) * m.P * N, prec);
        mpfr_mul_2si(bound.raw(), bound.raw(), 8 - prec, MPFR_RNDN);
        if (!(residual < bound))
            throw consistency_error("tau_exact: phase arithmetic failed the vanishing-sum check");
    }

    // The sine product term carries (2i)^M/(2i)^(M-2) = -4.
    Complex sum = core_sum(m, N, prec, threads);
    sum = Complex{sum.re * -4L, sum.im * -4L};

    Complex rhs = sum * phase_exp(PhaseTurns(Rational(1, 8)), prec);
    rhs = rhs / (Real::of(2L, prec) * Real::of(Int(2) * m.P * N, prec).sqrt());

    // divide by e^{2 pi i (phi/4 - 1/2)/N} (e^{2 pi i/N} - 1)
    Complex pref = phase_exp(PhaseTurns((m.phi / Rational(4) - Rational(1, 2)) / Rational(N)), prec);
    pref *= phase_exp(PhaseTurns(Rational(1, N)), prec) - Complex::one(prec);

    WrtResult res;
    res.tau = rhs / pref;
    res.z = res.tau * (sin_pi(Rational(1, N), prec) * (Real::of(2L, prec) / Real::of(N, prec)).sqrt());
    res.N = N;
    res.precision_bits = prec;
    res.term_count = 2ull * static_cast<std::uint64_t>(m.P) * static_cast<std::uint64_t>(N - 1);
    return res;
}

Complex witten_z(const SeifertData& m, long N, mpfr_prec_t prec, unsigned threads) {
    if (N < 2) throw validation_error("witten_z: N must be >= 2");
    // Z_N is carried by the level-(N+2) quantum invariant.
    return tau_exact(m, N + 2, prec, threads).z;
}

Real phase_sum_zero_check(const SeifertData& m, const Label& l, long N, mpfr_prec_t prec) {
    if (N < 1) throw validation_error("phase_sum_zero_check: N must be >= 1");
    PeriodicFunction chi = chi_function(m, l);
    const long twoP = 2 * m.P;
    const Int q = Int(4) * m.P * N;
    Complex sum(prec);
    for (const auto& [s, v] : chi.support) {
        for (long t = 0; t < N; ++t) {
            const Int n = Int(s) + Int(twoP) * t;
            Complex ph = phase_exp(PhaseTurns(Rational(n * n, q)), prec);
            sum += Complex{ph.re * v, ph.im * v};
        }
    }
    return sum.abs();
}

}  // namespace wrt
