#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrt/asymptotics.hpp"
#include "wrt/lattice.hpp"
#include "wrt/special.hpp"
#include "wrt/tables.hpp"
#include "wrt/wrt_exact.hpp"

using namespace wrt;

namespace {

Real rel_err(const Complex& a, const Complex& b) { return (a - b).abs() / b.abs(); }

Rational t2_closed_form(const SeifertData& m) {
    Rational s(0);
    for (long pj : m.p) s += Rational(Int(1), Int(pj) * pj);
    return Rational(8) * Rational(int_pow(Int(m.P), 3)) * (Rational(2 - m.M) + s);
}

Rational t3_closed_form(const SeifertData& m) {
    Rational s2(0), s4(0);
    for (long pj : m.p) {
        s2 += Rational(Int(1), Int(pj) * pj);
        s4 += Rational(Int(1), int_pow(Int(pj), 4));
    }
    Rational a = s2 + Rational(2 - m.M);
    Rational b = s4 + Rational(2 - m.M);
    return Rational(4) * Rational(int_pow(Int(m.P), 5)) * (Rational(5) * a * a - Rational(2) * b);
}

}  // namespace

TEST_CASE("t-series: known coefficients and method agreement") {
    SeifertData m235 = make_manifold({2, 3, 5});
    TSeries t = t_series(m235, 3, TSeriesMethod::both);
    CHECK(t.coefficients[0] == Rational(0));
    CHECK(t.coefficients[1] == Rational(4 * 30));
    CHECK(t.coefficients[2] == Rational(-129360));
    CHECK(t.coefficients[2] == t2_closed_form(m235));
    CHECK(t.coefficients[3] == t3_closed_form(m235));

    for (const auto& p :
         {std::vector<long>{2, 3, 7}, {2, 3, 5, 7}, {2, 3, 5, 7, 11}, {3, 4, 5, 7}}) {
        SeifertData m = make_manifold(p);
        TSeries both = t_series(m, 6, TSeriesMethod::both);  // throws on any mismatch
        CHECK(both.coefficients[0] == Rational(0));
        CHECK(both.coefficients[1] == Rational(4 * m.P));
        CHECK(both.coefficients[2] == t2_closed_form(m));
        CHECK(both.coefficients[3] == t3_closed_form(m));
    }
}

TEST_CASE("ohtsuki series") {
    SeifertData m = make_manifold({2, 3, 5});
    OhtsukiSeries s = ohtsuki_series(m, 2);
    CHECK(s.lambdas[0] == Rational(1));
    CHECK(s.lambdas[1] == Rational(-6));
    CHECK(s.lambdas[1] == Rational(6) * casson_invariant(m));

    // closed form for lambda_2 in phi and power sums
    Rational phi = m.phi;
    Rational s2(0), s4(0);
    for (long pj : m.p) {
        s2 += Rational(Int(1), Int(pj) * pj);
        s4 += Rational(Int(1), int_pow(Int(pj), 4));
    }
    Rational a = Rational(2 - m.M) + s2;
    Rational b = Rational(2 - m.M) + s4;
    Rational lambda2 = (Rational(3) * phi * phi + Rational(12) * phi - Rational(4)) / Rational(96) -
                       Rational(m.P, 16) * a * (phi + Rational(2)) +
                       Rational(Int(m.P) * m.P, Int(96)) * (Rational(5) * a * a - Rational(2) * b);
    CHECK(s.lambdas[2] == lambda2);

    for (const auto& p : {std::vector<long>{2, 3, 7}, {2, 3, 5, 7}, {2, 3, 5, 7, 11},
                          {3, 7, 8, 11, 13, 17}}) {
        SeifertData mm = make_manifold(p);
        OhtsukiSeries ss = ohtsuki_series(mm, 1);
        CHECK(ss.lambdas[0] == Rational(1));
        CHECK(ss.lambdas[1] == Rational(6) * casson_invariant(mm));
    }
}

TEST_CASE("tau-infinity route reproduces the ohtsuki numbers") {
    for (const auto& p : {std::vector<long>{2, 3, 5}, {2, 3, 7}, {2, 3, 5, 7}, {2, 3, 5, 7, 11}}) {
        SeifertData m = make_manifold(p);
        auto direct = ohtsuki_series(m, 4).lambdas;
        auto via_tail = tau_infinity_series(m, 4);
        CHECK(direct == via_tail);
    }
}

TEST_CASE("dominant forms agree") {
    const mpfr_prec_t prec = 128;
    Real bound = Real::of(Rational(1, Int("100000000000000000000")), prec);  // 1e-20
    SeifertData m5 = make_manifold({2, 3, 5, 7, 11});
    for (long n : {99L, 100L})
        CHECK(rel_err(z_dominant_alt(m5, n, prec), z_dominant(m5, n, prec)) < bound);
    SeifertData m3 = make_manifold({2, 3, 5});
    CHECK(rel_err(z_dominant_alt(m3, 100, prec), z_dominant(m3, 100, prec)) < bound);

    // a few more levels and manifolds
    SeifertData m4 = make_manifold({2, 3, 5, 7});
    for (long level : {31L, 57L, 80L}) {
        CHECK(rel_err(z_dominant_alt(m3, level, prec), z_dominant(m3, level, prec)) < bound);
        CHECK(rel_err(z_dominant_alt(m4, level, prec), z_dominant(m4, level, prec)) < bound);
    }

    // terms with any p_j | m vanish: the alternative form is insensitive to them
    CHECK(rel_err(z_dominant_alt(m3, 50, prec), z_dominant(m3, 50, prec)) < bound);
}

TEST_CASE("dominant term matches the reference asymptotics column") {
    const mpfr_prec_t prec = 128;
    const ReferenceTable& t1 = reference_table(1);
    SeifertData m = make_manifold(t1.p);
    for (const TableRow& row : t1.rows) {
        if (row.slow) continue;
        Complex z = z_dominant(m, row.n, prec);
        CHECK(matches_printed(z.re, row.a_re, prec));
        if (row.n == 98) continue;  // printed imaginary part is inconsistent with its own row
        CHECK(matches_printed(z.im, row.a_im, prec));
    }
}

TEST_CASE("full expansion structure") {
    const mpfr_prec_t prec = 128;
    SeifertData m3 = make_manifold({2, 3, 5});
    ExpansionReport rep3 = full_expansion(m3, 100, 6, prec);
    // three exceptional fibers leave only the leading growth order
    for (const auto& term : rep3.terms) CHECK(term.growth_order == 0);
    CHECK(rep3.tail[0] == Rational(0));
    CHECK(rep3.tail[1] == Rational(4 * m3.P));

    // leading block evaluates to the dominant term
    ExpansionReport lead = rep3;
    lead.tail.clear();
    Complex viaexp = evaluate_expansion(m3, lead, 100, prec);
    Complex direct = z_dominant(m3, 100, prec);
    CHECK((viaexp - direct).abs() / direct.abs() <
          Real::of(Rational(1, Int("10000000000000000000000000")), prec));

    // divergent phases come only from the two families
    SeifertData m5 = make_manifold({2, 3, 5, 7});
    ExpansionReport rep5 = full_expansion(m5, 100, 4, prec);
    auto orbits = enumerate_orbits(m5);
    for (const auto& term : rep5.terms) {
        bool from_t = false;
        for (const auto& orbit : orbits)
            if (t_phase(m5, orbit.representative).turns() == term.cs_turns.turns()) from_t = true;
        bool from_c = false;
        for (long c = 0; c <= m5.P; ++c)
            if (Rational(Int(c) * c, Int(4) * m5.P).frac() == term.cs_turns.turns()) from_c = true;
        CHECK((from_t || from_c));
    }
}

TEST_CASE("leading block of the five-fiber expansion matches the dominant term") {
    const mpfr_prec_t prec = 128;
    SeifertData m = make_manifold({2, 3, 5, 7, 11});
    ExpansionReport rep = full_expansion(m, 100, 0, prec);
    ExpansionReport lead = rep;
    lead.terms.clear();
    lead.tail.clear();
    for (const auto& t : rep.terms)
        if (t.growth_order == 0) lead.terms.push_back(t);
    Complex viaexp = evaluate_expansion(m, lead, 100, prec);
    Complex direct = z_dominant(m, 100, prec);
    CHECK((viaexp - direct).abs() / direct.abs() <
          Real::of(Rational(1, Int("1000000000000000000000")), prec));
}

TEST_CASE("expansion approaches the exact value as the tail grows") {
    const mpfr_prec_t prec = 128;
    SeifertData m = make_manifold({2, 3, 5});
    Complex exact = witten_z(m, 100, prec, 1);
    Real prev_err(prec);
    bool first = true;
    // improvement before the asymptotic series turns (around six terms here)
    for (int tail : {0, 2, 4}) {
        ExpansionReport rep = full_expansion(m, 100, tail, prec);
        Real err = (evaluate_expansion(m, rep, 100, prec) - exact).abs();
        if (!first) CHECK(err < prev_err);
        prev_err = err;
        first = false;
    }
    {
        ExpansionReport rep0 = full_expansion(m, 100, 0, prec);
        ExpansionReport rep8 = full_expansion(m, 100, 8, prec);
        CHECK((evaluate_expansion(m, rep8, 100, prec) - exact).abs() <
              (evaluate_expansion(m, rep0, 100, prec) - exact).abs());
    }
    // remainder after the dominant term plus an 8-term tail shrinks with N
    Real prev(prec);
    first = true;
    for (long n : {50L, 100L, 200L}) {
        Complex ex = witten_z(m, n, prec, 1);
        ExpansionReport rep = full_expansion(m, n, 8, prec);
        Real err = (evaluate_expansion(m, rep, n, prec) - ex).abs();
        if (!first) CHECK(err < prev);
        prev = err;
        first = false;
    }
}

TEST_CASE("growth-order hierarchy against the exact sum") {
    // truncating the five-fiber expansion at successive growth orders must
    // shed error like the corresponding powers of N; this exercises every
    // divergent block family, including the fold-back corrections
    const mpfr_prec_t prec = 128;
    SeifertData m = make_manifold({2, 3, 5, 7, 11});
    for (long n : {200L, 400L}) {
        Complex exact = witten_z(m, n, prec, 1);
        ExpansionReport rep = full_expansion(m, n, 1, prec);
        ExpansionReport k0 = rep, k1 = rep;
        k0.terms.clear();
        k1.terms.clear();
        k0.tail.clear();
        k1.tail.clear();
        for (const auto& t : rep.terms) {
            if (t.growth_order <= 0) k0.terms.push_back(t);
            if (t.growth_order <= 1) k1.terms.push_back(t);
        }
        Real e0 = (evaluate_expansion(m, k0, n, prec) - exact).abs();
        Real e1 = (evaluate_expansion(m, k1, n, prec) - exact).abs();
        Real e2 = (evaluate_expansion(m, rep, n, prec) - exact).abs();
        CHECK(e1 < e0 / 50L);
        CHECK(e2 < e1 / 10L);
    }
}

TEST_CASE("t-series agreement on six-fiber manifolds") {
    // slope below one (no fold-back windows) and above one (active windows)
    SeifertData a = make_manifold({3, 7, 8, 11, 13, 17});
    TSeries ta = t_series(a, 3, TSeriesMethod::both);
    CHECK(ta.coefficients[1] == Rational(4 * a.P));

    SeifertData b = make_manifold({2, 3, 5, 7, 11, 13});
    REQUIRE(label_slope(b, Label{{1, 1, 1, 1, 1, 1}}) > Rational(1));
    TSeries tb = t_series(b, 3, TSeriesMethod::both);
    CHECK(tb.coefficients[1] == Rational(4 * b.P));
}

TEST_CASE("torsion magnitudes") {
    const mpfr_prec_t prec = 128;
    SeifertData m = make_manifold({2, 3, 5});
    Label l{{1, 1, 1}};
    Real expect = Real::of(3L, prec).sqrt() * sin_pi(Rational(1, 5), prec);
    CHECK((torsion_magnitude(m, l, prec) - expect).abs() <
          Real::of(Rational(1, Int("10000000000000000000000000000000000")), prec));

    // interior label has vanishing torsion through C = 0
    SeifertData m7 = make_manifold({2, 3, 7});
    CHECK(torsion_magnitude(m7, Label{{1, 1, 1}}, prec).is_zero());

    // orbit invariance
    for (const auto& orbit : enumerate_orbits(m)) {
        Real base = torsion_magnitude(m, orbit.representative, prec);
        for (const auto& member : orbit.members)
            CHECK((torsion_magnitude(m, member, prec) - base).abs() <
                  Real::of(Rational(1, Int("10000000000000000000000000")), prec));
    }
}
