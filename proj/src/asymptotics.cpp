#include "wrt/asymptotics.hpp"

#include <map>
#include <sstream>

#include "wrt/special.hpp"

namespace wrt {

namespace {

// sigma_1 applied M-1 times to (1, ..., 1)
Label sigma1_row(const SeifertData& m) {
    Label l;
    l.ell.assign(static_cast<std::size_t>(m.M), 1);
    if (m.M % 2 == 0) l.ell[0] = m.p[0] - 1;
    return l;
}

Rational inv_factorial(int n) { return Rational(Int(1), factorial(static_cast<unsigned long>(n))); }

// e^{-2 pi i N t}
Complex level_phase(long n, const PhaseTurns& t, mpfr_prec_t prec) {
    return phase_exp(PhaseTurns(-(Rational(n) * t.turns())), prec);
}

}  // namespace

Complex z_dominant(const SeifertData& m, long N, mpfr_prec_t prec) {
    if (N < 2) throw validation_error("z_dominant: N must be >= 2");
    const long level = N + 2;  // Z_N lives at quantum level N + 2
    auto orbits = enumerate_orbits(m);
    auto srow = s_matrix_row(m, sigma1_row(m), orbits, prec);
    Complex acc(prec);
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        Rational cv = c_value(m, orbits[i].representative);
        if (cv.is_zero()) continue;
        Complex ph = level_phase(level, t_phase(m, orbits[i].representative), prec);
        acc += ph * (srow[i] * Real::of(cv, prec));
    }
    // L^{M-3} e^{-phi pi i/(2L)} i^{eveodd-1} e^{-3 pi i/4} / (2 sqrt2 (M-2)!)
    Complex pref = phase_exp(PhaseTurns(-m.phi / Rational(4L * level)), prec);
    pref *= phase_exp(PhaseTurns(Rational(2 * m.eveodd() - 5, 8)), prec);
    Real mag = Real::of(level, prec).pow_si(m.M - 3) /
               (Real::of(2L, prec) * Real::of(2L, prec).sqrt() *
                Real::of(factorial(static_cast<unsigned long>(m.M - 2)), prec));
    return acc * pref * mag;
}

Complex z_dominant_alt(const SeifertData& m, long N, mpfr_prec_t prec) {
    if (N < 2) throw validation_error("z_dominant_alt: N must be >= 2");
    const long level = N + 2;
    const long twoP = 2 * m.P;
    const RationalPoly& b = bernoulli_polynomial(m.M - 2);
    Complex acc(prec);
    for (long n = 0; n < twoP; ++n) {
        bool zero = false;
        for (long pj : m.p)
            if (n % pj == 0) {
                zero = true;
                break;
            }
        if (zero) continue;
        Rational w = b(Rational(n, twoP));
        if ((n * m.M) % 2 != 0) w = -w;  // (-1)^{nM}
        Real f = Real::of(w, prec);
        for (long pj : m.p) f *= sin_pi(Rational(n, pj), prec);
        acc += phase_exp(PhaseTurns(Rational(Int(-level) * n * n, Int(4) * m.P)), prec) * f;
    }
    Complex pref = phase_exp(PhaseTurns(-m.phi / Rational(4L * level)), prec);
    pref *= phase_exp(PhaseTurns(Rational(-(2 * m.M - 3), 8)), prec);
    Real mag = Real::of(level, prec).pow_si(m.M - 3) * Real::of(1L << (m.M - 2), prec) /
               (Real::of(factorial(static_cast<unsigned long>(m.M - 2)), prec) *
                Real::of(m.P, prec).sqrt());
    return acc * pref * mag;
}

namespace {

struct TermKey {
    int growth = 0;
    Rational cs;
    friend bool operator<(const TermKey& a, const TermKey& b) {
        if (a.growth != b.growth) return a.growth < b.growth;
        return a.cs < b.cs;
    }
};

using TermMap = std::map<TermKey, Complex>;

void add_amp(TermMap& map, mpfr_prec_t prec, int growth, const Rational& cs, const Complex& amp) {
    auto [it, inserted] = map.try_emplace(TermKey{growth, cs}, Complex(prec));
    it->second += amp;
}

// enumerates (a, eta) pairs with 2a-1 < sum eta_j/p_j < 2a+1, a >= 1,
// calling fn(a, prod_eta, P*sum eta_j/p_j)
template <typename F>
void for_each_eta_window(const SeifertData& m, F&& fn) {
    const unsigned npat = 1u << m.M;
    for (unsigned mask = 0; mask < npat; ++mask) {
        long pt = 0;
        int prod_eta = 1;
        for (int j = 0; j < m.M; ++j) {
            long term = m.P / m.p[j];
            if (mask & (1u << j)) {
                pt -= term;
                prod_eta = -prod_eta;
            } else {
                pt += term;
            }
        }
        if (pt <= m.P) continue;
        const long a = (pt / m.P + 1) / 2;
        fn(a, prod_eta, pt);
    }
}

}  // namespace

ExpansionReport full_expansion(const SeifertData& m, long N, int tail_order, mpfr_prec_t prec,
                               Normalization norm) {
    if (tail_order < 0) throw validation_error("full_expansion: tail_order must be >= 0");
    if (N < 2) throw validation_error("full_expansion: N must be >= 2");

    const int M = m.M;
    const int e = m.eveodd();
    const long P = m.P;
    const int jmax = (M - 3) / 2;
    const Rational inv_m3 = inv_factorial(M - 3);
    const Real two_p_pi = Real::of(2 * P, prec) * Real::pi(prec);

    TermMap terms;

    // S-matrix block
    {
        auto orbits = enumerate_orbits(m);
        auto srow = s_matrix_row(m, sigma1_row(m), orbits, prec);
        for (int j = 0; j <= jmax; ++j) {
            Rational rc = Rational(1, 2) * inv_m3 * k_number(jmax, e, j) /
                          Rational(2 * j + 2 - e);
            Real coef = Real::of(rc, prec) * two_p_pi.pow_si(-(jmax - j));
            Complex cph = phase_exp(
                PhaseTurns(Rational(2 * e - 3, 8) + Rational(jmax - j, 4)), prec);
            for (std::size_t i = 0; i < orbits.size(); ++i) {
                Rational cv = c_value(m, orbits[i].representative, 2 * j + 2 - e);
                if (cv.is_zero()) continue;
                Complex amp = cph * (coef * srow[i] * Real::of(cv, prec));
                add_amp(terms, prec, jmax - j, t_phase(m, orbits[i].representative).turns(), amp);
            }
        }
    }

    const PeriodicFunction chi_row = chi_function(m, sigma1_row(m));

    // theta block: rows of the cosine transform against chi
    for (int mm = 1; mm <= jmax; ++mm) {
        const RationalPoly& f = f_polynomial(2 * mm, M - 2);
        std::vector<std::pair<long, Rational>> aw;
        for (const auto& [a, v] : chi_row.support)
            if (a <= P) aw.emplace_back(a, Rational(v) * f(Rational(a, 2 * P) - Rational(e, 2)));
        for (int j = 1; j <= mm; ++j) {
            Rational rc = Rational(M % 2 == 0 ? 1 : -1) * inv_m3 *
                          k_number(mm - 1, 0, j - 1) * Rational(mm, j);
            Real coef = Real::of(rc, prec) * two_p_pi.pow_si(-(mm - j));
            Complex cph = phase_exp(PhaseTurns(Rational(-3, 8) + Rational(mm - j, 4)), prec);
            const RationalPoly& b = bernoulli_polynomial(2 * j);
            for (long c = 0; c <= P; ++c) {
                Real inner(prec);
                for (const auto& [a, w] : aw)
                    inner += theta_n_entry(P, a, c, prec) * Real::of(w, prec);
                // (2 - d_{c,0} - d_{c,P})/2 weight on the boundary entries
                Rational wt = b(Rational(c, 2 * P));
                if (c == 0 || c == P) wt *= Rational(1, 2);
                Complex amp = cph * (coef * inner * Real::of(wt, prec));
                add_amp(terms, prec, M - 2 - mm - j, Rational(Int(c) * c, Int(4) * P).frac(), amp);
            }
        }
    }

    // psi block: sine transform rows
    for (int mm = 0; mm <= (M - 4) / 2 && M >= 4; ++mm) {
        const RationalPoly& f = f_polynomial(2 * mm + 1, M - 2);
        std::vector<std::pair<long, Rational>> aw;
        for (const auto& [a, v] : chi_row.support)
            if (a >= 1 && a <= P - 1)
                aw.emplace_back(a, Rational(v) * f(Rational(a, 2 * P) - Rational(e, 2)));
        for (int j = 0; j <= mm; ++j) {
            Rational rc = Rational(M % 2 == 0 ? -1 : 1) * inv_m3 * k_number(mm, 1, j) *
                          Rational(2 * mm + 1, 2 * j + 1);
            Real coef = Real::of(rc, prec) * two_p_pi.pow_si(-(mm - j));
            Complex cph = phase_exp(PhaseTurns(Rational(-1, 8) + Rational(mm - j, 4)), prec);
            const RationalPoly& b = bernoulli_polynomial(2 * j + 1);
            for (long c = 1; c <= P - 1; ++c) {
                Real inner(prec);
                for (const auto& [a, w] : aw)
                    inner += psi_m_entry(P, a, c, prec) * Real::of(w, prec);
                Complex amp = cph * (coef * inner * Real::of(b(Rational(c, 2 * P)), prec));
                add_amp(terms, prec, M - 3 - mm - j, Rational(Int(c) * c, Int(4) * P).frac(), amp);
            }
        }
    }

    // fold-back corrections, active only when sum 1/p_j > 1
    if (M >= 4) {
        const Rational inv_m4 = inv_factorial(M - 4);
        for_each_eta_window(m, [&](long a, int prod_eta, long pt) {
            // index P sum eta/p - (2a-1)P in Z_{2P}, then sigma^{M-1}
            long y = pt - (2 * a - 1) * P;  // in (0, 2P)
            long x = (M % 2 == 0) ? (P - y + 2 * P) % (2 * P) : y;
            const long xe = x <= P ? x : 2 * P - x;  // theta row index
            const int psign = x <= P ? 1 : -1;       // psi row sign
            const Rational t_eta = Rational(pt, P);
            for (long bshift = 0; bshift < a; ++bshift) {
                Rational farg = Rational(bshift) + Rational(1, 2) - t_eta / Rational(2);
                // theta part
                for (int mm = 1; mm <= jmax; ++mm) {
                    Rational fval = f_polynomial(2 * mm, M - 3)(farg);
                    if (fval.is_zero()) continue;
                    for (int j = 1; j <= mm; ++j) {
                        Rational rc = Rational(M % 2 == 0 ? -1 : 1) * inv_m4 *
                                      Rational(prod_eta) * fval * k_number(mm - 1, 0, j - 1) *
                                      Rational(mm, j);
                        Real coef = Real::of(rc, prec) * two_p_pi.pow_si(-(mm - j));
                        Complex cph =
                            phase_exp(PhaseTurns(Rational(-3, 8) + Rational(mm - j, 4)), prec);
                        const RationalPoly& b = bernoulli_polynomial(2 * j);
                        for (long c = 0; c <= P; ++c) {
                            Rational wt = b(Rational(c, 2 * P)) *
                                          ((c == 0 || c == P) ? Rational(1, 2) : Rational(1));
                            Complex amp =
                                cph * (coef * theta_n_entry(P, xe, c, prec) * Real::of(wt, prec));
                            add_amp(terms, prec, M - 2 - mm - j,
                                    Rational(Int(c) * c, Int(4) * P).frac(), amp);
                        }
                    }
                }
                // psi part
                for (int mm = 0; mm <= (M - 4) / 2; ++mm) {
                    Rational fval = f_polynomial(2 * mm + 1, M - 3)(farg);
                    if (fval.is_zero()) continue;
                    for (int j = 0; j <= mm; ++j) {
                        Rational rc = inv_m4 * Rational(prod_eta * psign) * fval *
                                      k_number(mm, 1, j) * Rational(2 * mm + 1, 2 * j + 1);
                        Real coef = Real::of(rc, prec) * two_p_pi.pow_si(-(mm - j));
                        Complex cph =
                            phase_exp(PhaseTurns(Rational(-1, 8) + Rational(mm - j, 4)), prec);
                        const RationalPoly& b = bernoulli_polynomial(2 * j + 1);
                        if (xe == P || xe == 0) continue;  // psi row vanishes
                        for (long c = 1; c <= P - 1; ++c) {
                            Complex amp = cph * (coef * psi_m_entry(P, xe, c, prec) *
                                                 Real::of(b(Rational(c, 2 * P)), prec));
                            add_amp(terms, prec, M - 3 - mm - j,
                                    Rational(Int(c) * c, Int(4) * P).frac(), amp);
                        }
                    }
                }
            }
        });
    }

    ExpansionReport rep;
    rep.tail = t_series(m, tail_order, TSeriesMethod::series).coefficients;
    rep.tail_order = tail_order;
    rep.normalization = norm;
    rep.N = N;
    rep.terms.reserve(terms.size());
    for (auto& [key, amp] : terms)
        rep.terms.push_back({key.growth, PhaseTurns(key.cs), std::move(amp)});
    return rep;
}

Complex evaluate_expansion(const SeifertData& m, const ExpansionReport& rep, long N,
                           mpfr_prec_t prec) {
    const long level = N + 2;
    const Real sqrt_n = Real::of(level, prec).sqrt();
    Complex w(prec);
    for (const auto& term : rep.terms) {
        // L^{M - 5/2 - k} = L^{M - 3 - k} sqrt(L)
        Real npow = Real::of(level, prec).pow_si(m.M - 3 - term.growth_order) * sqrt_n;
        w += level_phase(level, term.cs_turns, prec) * (term.amplitude * npow);
    }
    // tail sum_k T(k)/k! (pi i/(2PL))^k
    Real scale = Real::pi(prec) / Real::of(2L * m.P * level, prec);
    for (std::size_t k = 0; k < rep.tail.size(); ++k) {
        Real mag = scale.pow_si(static_cast<long>(k)) *
                   Real::of(rep.tail[k] * inv_factorial(static_cast<int>(k)), prec);
        w += phase_exp(PhaseTurns(Rational(static_cast<long>(k), 4)), prec) * mag;
    }
    if (rep.normalization == Normalization::z) {
        // exact conversion sin(pi/L) sqrt(2/L) / ((e^{2 pi i/L} - 1) e^{2 pi i (phi/4-1/2)/L})
        Complex conv = phase_exp(PhaseTurns(-m.phi / Rational(4L * level)), prec);
        conv = Complex{conv.im, -conv.re};  // times -i
        conv = conv * ((Real::of(2L, prec) / Real::of(level, prec)).sqrt() / Real::of(2L, prec));
        w *= conv;
    } else {
        // back out tau_L from the prefactored form
        Complex pref = phase_exp(PhaseTurns((m.phi / Rational(4) - Rational(1, 2)) / Rational(level)), prec);
        pref *= phase_exp(PhaseTurns(Rational(1, level)), prec) - Complex::one(prec);
        w = w / pref;
    }
    return w;
}

namespace {

// dense truncated power series with exact rational coefficients
using Series = std::vector<Rational>;

Series sinh_series(const Rational& a, int len) {
    Series s(static_cast<std::size_t>(len) + 1, Rational(0));
    Rational apow = a;
    for (int i = 1; i <= len; i += 2) {
        s[static_cast<std::size_t>(i)] = apow * inv_factorial(i);
        apow *= a * a;
    }
    return s;
}

Series mul_series(const Series& x, const Series& y, int len) {
    Series r(static_cast<std::size_t>(len) + 1, Rational(0));
    for (int i = 0; i <= len && i < static_cast<int>(x.size()); ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= len && j < static_cast<int>(y.size()); ++j)
            r[static_cast<std::size_t>(i + j)] +=
                x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    }
    return r;
}

// x / y with y[0] != 0
Series div_series(const Series& x, const Series& y, int len) {
    Series q(static_cast<std::size_t>(len) + 1, Rational(0));
    Rational inv0 = Rational(1) / y[0];
    for (int i = 0; i <= len; ++i) {
        Rational acc = i < static_cast<int>(x.size()) ? x[static_cast<std::size_t>(i)] : Rational(0);
        for (int j = 1; j <= i && j < static_cast<int>(y.size()); ++j)
            acc -= y[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(i - j)];
        q[static_cast<std::size_t>(i)] = acc * inv0;
    }
    return q;
}

// prod_j sinh(scale/p_j x) / sinh(scale x)^{M-2}, truncated; valuation 2
Series sinh_ratio_series(const SeifertData& m, const Rational& scale, int len) {
    const int M = m.M;
    const int extra = M - 2;
    Series num{Rational(1)};
    for (long pj : m.p) num = mul_series(num, sinh_series(scale / Rational(pj), len + extra), len + extra);
    Series den = sinh_series(scale, len + extra);
    Series denp{Rational(1)};
    for (int i = 0; i < M - 2; ++i) denp = mul_series(denp, den, len + extra);
    // both have valuations; shift down by M-2
    Series num2(static_cast<std::size_t>(len) + 1, Rational(0)),
        den2(static_cast<std::size_t>(len) + 1, Rational(0));
    for (int i = 0; i <= len; ++i) {
        num2[static_cast<std::size_t>(i)] = num[static_cast<std::size_t>(i + extra)];
        den2[static_cast<std::size_t>(i)] = denp[static_cast<std::size_t>(i + extra)];
    }
    return div_series(num2, den2, len);
}

std::vector<Rational> t_series_by_series(const SeifertData& m, int k_max) {
    Series g = sinh_ratio_series(m, Rational(m.P), 2 * k_max);
    std::vector<Rational> t(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k)
        t[static_cast<std::size_t>(k)] =
            Rational(2) * Rational(factorial(static_cast<unsigned long>(2 * k))) *
            g[static_cast<std::size_t>(2 * k)];
    return t;
}

std::vector<Rational> t_series_closed(const SeifertData& m, int k_max) {
    const int M = m.M;
    const long P = m.P;
    Label e_label;
    e_label.ell.assign(static_cast<std::size_t>(M), 1);
    PeriodicFunction chi = chi_function(m, e_label);
    const Rational sgn_m = Rational(M % 2 == 0 ? 1 : -1);

    std::vector<Rational> t(static_cast<std::size_t>(k_max) + 1, Rational(0));
    for (int k = 0; k <= k_max; ++k) {
        Rational main(0);
        for (const auto& [n, v] : chi.support) {
            Rational q = Rational(Int(n) + Int(P) * (M - 3), Int(2) * P);
            Rational inner(0);
            for (int j = 1; j <= M - 2; ++j)
                inner += Rational(j, 2 * k + j) *
                         f_polynomial(j, M - 2)(Rational(M - 2, 2) - q) *
                         bernoulli_value(2 * k + j, q);
            main += Rational(v) * inner;
        }
        main *= sgn_m * Rational(1, 2) * Rational(int_pow(Int(2) * P, 2 * static_cast<unsigned long>(k))) *
                inv_factorial(M - 3);
        t[static_cast<std::size_t>(k)] = main;
    }

    // fold-back correction
    if (M == 3) {
        for_each_eta_window(m, [&](long a, int prod_eta, long pt) {
            for (long b = 0; b < a; ++b) {
                Int wp = Int(P) * (1 + 2 * b - 2 * a) + pt;
                Int wm = Int(P) * (1 + 2 * b) - pt;
                for (int k = 0; k <= k_max; ++k) {
                    Rational add = Rational(prod_eta, 2) *
                                   (Rational(int_pow(wp, 2 * static_cast<unsigned long>(k))) +
                                    Rational(int_pow(wm, 2 * static_cast<unsigned long>(k))));
                    t[static_cast<std::size_t>(k)] += add;
                }
            }
        });
    } else {
        const Rational inv_m4 = inv_factorial(M - 4);
        for_each_eta_window(m, [&](long a, int prod_eta, long pt) {
            const Rational t_eta = Rational(pt, P);
            for (long b = 0; b < a; ++b) {
                Rational qp = Rational(M - 2, 2) + Rational(b) - Rational(a) + t_eta / Rational(2);
                Rational qm = Rational(M - 2, 2) + Rational(b) - t_eta / Rational(2);
                for (int k = 0; k <= k_max; ++k) {
                    Rational inner(0);
                    for (int j = 1; j <= M - 3; ++j) {
                        Rational fp = f_polynomial(j, M - 3)(Rational(M - 3, 2) - qp);
                        Rational fm = f_polynomial(j, M - 3)(Rational(M - 3, 2) - qm);
                        inner += Rational(j, 2 * k + j) *
                                 (sgn_m * Rational(1, 2) * fp * bernoulli_value(2 * k + j, qp) -
                                  Rational(1, 2) * fm * bernoulli_value(2 * k + j, qm));
                    }
                    t[static_cast<std::size_t>(k)] +=
                        Rational(prod_eta) * inv_m4 *
                        Rational(int_pow(Int(2) * P, 2 * static_cast<unsigned long>(k))) * inner;
                }
            }
        });
    }
    return t;
}

}  // namespace

TSeries t_series(const SeifertData& m, int k_max, TSeriesMethod method) {
    if (k_max < 0) throw validation_error("t_series: k_max must be >= 0");
    TSeries out;
    switch (method) {
        case TSeriesMethod::series:
            out.coefficients = t_series_by_series(m, k_max);
            break;
        case TSeriesMethod::closed:
            out.coefficients = t_series_closed(m, k_max);
            break;
        case TSeriesMethod::both: {
            auto a = t_series_by_series(m, k_max);
            auto b = t_series_closed(m, k_max);
            for (int k = 0; k <= k_max; ++k)
                if (a[static_cast<std::size_t>(k)] != b[static_cast<std::size_t>(k)]) {
                    std::ostringstream os;
                    os << "t_series: methods disagree at k=" << k << ": series gives "
                       << a[static_cast<std::size_t>(k)].str() << ", closed gives "
                       << b[static_cast<std::size_t>(k)].str();
                    throw consistency_error(os.str());
                }
            out.coefficients = std::move(a);
            break;
        }
    }
    return out;
}

OhtsukiSeries ohtsuki_series(const SeifertData& m, int n_max) {
    if (n_max < 0) throw validation_error("ohtsuki_series: n_max must be >= 0");
    const int len = 2 * (n_max + 1);
    Series g = sinh_ratio_series(m, Rational(1), len);

    OhtsukiSeries out;
    out.lambdas.reserve(static_cast<std::size_t>(n_max) + 1);
    const Rational quarter_p = Rational(m.P, 4);
    for (int n = 0; n <= n_max; ++n) {
        Series cur = g;
        for (int j = 0; j <= n; ++j) {
            Rational c = Rational(1, 2) - m.phi / Rational(4) - Rational(j);
            Series next(cur.size(), Rational(0));
            for (std::size_t i = 0; i < cur.size(); ++i) {
                Rational v = cur[i] * c;
                if (i + 2 < cur.size())
                    v += quarter_p * Rational(static_cast<long>((i + 1) * (i + 2))) * cur[i + 2];
                next[i] = v;
            }
            cur = std::move(next);
        }
        out.lambdas.push_back(Rational(2) * inv_factorial(n + 1) * cur[0]);
    }
    return out;
}

std::vector<Rational> tau_infinity_series(const SeifertData& m, int order) {
    if (order < 0) throw validation_error("tau_infinity_series: order must be >= 0");
    auto t = t_series(m, order + 1, TSeriesMethod::series).coefficients;

    // R_n = (1/n!) sum_k S_n^{(k)} T(k) / (4P)^k
    std::vector<Rational> r(static_cast<std::size_t>(order) + 2, Rational(0));
    for (int n = 0; n <= order + 1; ++n) {
        Rational acc(0);
        for (int k = 0; k <= n; ++k)
            acc += Rational(stirling_first(n, k)) * t[static_cast<std::size_t>(k)] /
                   Rational(int_pow(Int(4) * m.P, static_cast<unsigned long>(k)));
        r[static_cast<std::size_t>(n)] = acc * inv_factorial(n);
    }

    // (1 + u)^{1/2 - phi/4} expansion coefficients
    Rational alpha = Rational(1, 2) - m.phi / Rational(4);
    std::vector<Rational> binom(static_cast<std::size_t>(order) + 2, Rational(1));
    for (int k = 1; k <= order + 1; ++k)
        binom[static_cast<std::size_t>(k)] =
            binom[static_cast<std::size_t>(k) - 1] * (alpha - Rational(k - 1)) / Rational(k);

    std::vector<Rational> lam(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int n = 0; n <= order; ++n) {
        Rational acc(0);
        for (int j = 0; j <= n + 1; ++j)
            acc += binom[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(n + 1 - j)];
        lam[static_cast<std::size_t>(n)] = acc;
    }
    return lam;
}

Real torsion_magnitude(const SeifertData& m, const Label& l, mpfr_prec_t prec) {
    validate_label(m, l);
    Real prod = Real::of(1L, prec);
    for (int j = 0; j < m.M; ++j)
        prod *= sin_pi(Rational(Int(m.P) * l.ell[j], Int(m.p[j]) * m.p[j]), prec);
    return prod.abs() * Real::of(c_value(m, l), prec);
}

}  // namespace wrt
