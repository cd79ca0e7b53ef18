#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrt/modular.hpp"
#include "wrt/special.hpp"
#include "wrt/tables.hpp"

using namespace wrt;

namespace {

Real tol_atbits(mpfr_prec_t prec, int bits_lost) {
    Real t = Real::of(1L, prec);
    mpfr_mul_2si(t.raw(), t.raw(), -(prec - bits_lost), MPFR_RNDN);
    return t;
}

}  // namespace

TEST_CASE("s-matrix entries") {
    const mpfr_prec_t prec = 128;
    SeifertData m = make_manifold({2, 3, 5});
    Label l{{1, 1, 1}};
    Real entry = s_matrix_entry(m, l, l, prec);
    // (2/sqrt 5) sin(pi/5)
    Real expect = Real::of(2L, prec) / Real::of(5L, prec).sqrt() * sin_pi(Rational(1, 5), prec);
    CHECK((entry - expect).abs() < tol_atbits(prec, 8));

    // invariance under sigma_i sigma_j on either index
    auto orbits = enumerate_orbits(m);
    for (const auto& oa : orbits)
        for (const auto& ob : orbits) {
            Real base = s_matrix_entry(m, oa.representative, ob.representative, prec);
            for (const auto& ma : oa.members)
                for (const auto& mb : ob.members) {
                    Real other = s_matrix_entry(m, ma, mb, prec);
                    CHECK((base - other).abs() < tol_atbits(prec, 8));
                }
        }

    // symmetry under simultaneous exchange of the index pair
    RealMatrix s = s_matrix(m, prec);
    for (std::size_t i = 0; i < s.rows; ++i)
        for (std::size_t j = 0; j < s.cols; ++j)
            CHECK((s.at(i, j) - s.at(j, i)).abs() <
                  Real::of(Rational(1, Int("10000000000000000000000000")), prec));
}

TEST_CASE("t phases") {
    SeifertData m = make_manifold({2, 3, 5});
    CHECK(t_phase(m, Label{{1, 1, 1}}).turns() == Rational(1, 120));
    // t_phase + chern_simons = 0 mod 1 on every label
    for (const auto& orbit : enumerate_orbits(m))
        for (const auto& l : orbit.members)
            CHECK((t_phase(m, l).turns() + chern_simons(m, l)).frac() == Rational(0));

    Rational u = Rational(1) + Rational(1, 2) + Rational(1, 3) + Rational(2, 5);
    CHECK(t_phase(m, Label{{1, 1, 2}}).turns() == (Rational(30, 4) * u * u).frac());
}

TEST_CASE("theta/psi transform matrices") {
    const mpfr_prec_t prec = 128;
    {
        ThetaPsiMatrices t = theta_psi_matrices(2, prec);
        CHECK(t.m.rows == 1);
        CHECK((t.m.at(0, 0) - Real::of(1L, prec)).abs() < tol_atbits(prec, 8));
    }
    // involution m * m = id for P <= 30
    Real bound = Real::of(Rational(1, Int("1000000000000000000000000000000")), prec);  // 1e-30
    for (long P : {2L, 3L, 5L, 12L, 30L}) {
        ThetaPsiMatrices t = theta_psi_matrices(P, prec);
        for (std::size_t i = 0; i < t.m.rows; ++i)
            for (std::size_t j = 0; j < t.m.cols; ++j) {
                Real acc(prec);
                for (std::size_t k = 0; k < t.m.cols; ++k) acc += t.m.at(i, k) * t.m.at(k, j);
                Real expect = Real::of(i == j ? 1L : 0L, prec);
                CHECK((acc - expect).abs() < bound);
            }
        // N row a = 0 is constant 1/sqrt(2P)
        Real c = Real::of(1L, prec) / Real::of(2 * P, prec).sqrt();
        for (std::size_t b = 0; b < t.n.cols; ++b)
            CHECK((t.n.at(0, b) - c).abs() < tol_atbits(prec, 8));
    }
}

TEST_CASE("c values") {
    SeifertData m = make_manifold({2, 3, 5});
    Label l{{1, 1, 1}};
    CHECK(c_value(m, l, 1) == Rational(2));
    CHECK(c_value(m, l, 0) == Rational(0));

    // interior label: C^k = 0 for k <= M-1
    SeifertData m7 = make_manifold({2, 3, 7});
    Label li{{1, 1, 1}};
    REQUIRE(label_slope(m7, li) < Rational(1));
    for (int k = 0; k <= m7.M - 1; ++k) CHECK(c_value(m7, li, k) == Rational(0));
    CHECK(c_value(m7, li) == Rational(0));

    // C is an orbit invariant
    for (const auto& orbit : enumerate_orbits(m)) {
        Rational base = c_value(m, orbit.representative);
        for (const auto& member : orbit.members) CHECK(c_value(m, member) == base);
    }
}

TEST_CASE("eichler limits at rational points") {
    const mpfr_prec_t prec = 128;
    SeifertData m = make_manifold({2, 3, 5});
    Label l{{1, 1, 1}};

    EichlerValue v0 = eichler_limit(m, l, 0, 1, prec);
    CHECK((v0.value.re - Real::of(-2L, prec)).abs() < tol_atbits(prec, 10));
    CHECK(v0.value.im.abs() < tol_atbits(prec, 10));

    // value at integer tau = k equals t_phase^k times the value at 0
    for (long k : {1L, 2L, 5L, -3L}) {
        EichlerValue vk = eichler_limit(m, l, k, 1, prec);
        Complex expect = phase_exp(PhaseTurns(t_phase(m, l).turns() * Rational(k)), prec) * v0.value;
        CHECK((vk.value - expect).abs() < tol_atbits(prec, 12));
    }

    // M odd: values at 0 are real rationals
    for (const auto& orbit : enumerate_orbits(m)) {
        EichlerValue v = eichler_limit(m, orbit.representative, 0, 1, prec);
        CHECK(v.value.im.abs() < Real::of(Rational(1, Int("10000000000000000000000000")), prec));
    }

    // shift by one unit multiplies by the t-phase exactly
    EichlerValue v13 = eichler_limit(m, l, 1, 3, prec);
    EichlerValue v43 = eichler_limit(m, l, 4, 3, prec);
    Complex expect = phase_exp(t_phase(m, l), prec) * v13.value;
    CHECK((v43.value - expect).abs() < tol_atbits(prec, 14));
}

TEST_CASE("q-series oracle matches the limiting values") {
    const mpfr_prec_t prec = 128;
    SeifertData m = make_manifold({2, 3, 5});
    Label l{{1, 1, 1}};
    Real tol = Real::of(Rational(1, 1000), prec);

    // tau -> 0 radially recovers L(0, chi) = -2
    Complex at0 = qseries_radial_limit(m, l, Rational(0), 0, prec);
    CHECK((at0 - Complex::of(Rational(-2), Rational(0), prec)).abs() < tol);

    for (const auto& [n2, n1] : {std::pair<long, long>{1, 3}, {1, 8}}) {
        Complex lim = eichler_limit(m, l, n2, n1, prec).value;
        Complex orc = qseries_radial_limit(m, l, Rational(n2, n1), 0, prec);
        CHECK((lim - orc).abs() < tol);
    }

    // q-series vanishes for large imaginary part
    Complex far = qseries_value(m, l, Rational(0), Real::of(500L, prec), 0, prec);
    CHECK(far.abs() < tol);

    CHECK_THROWS_AS(qseries_value(m, l, Rational(0), Real::of(0L, prec), 0, prec),
                    validation_error);
}

TEST_CASE("derivative limits match the differentiated oracle") {
    const mpfr_prec_t prec = 128;
    SeifertData m = make_manifold({2, 3, 5});
    Label l{{1, 1, 1}};

    // b = 0 coincides with the plain limit
    Complex d0 = eichler_derivative_limit(m, l, 0, 0, 1, prec).value;
    Complex plain = eichler_limit(m, l, 0, 1, prec).value;
    CHECK((d0 - plain).abs() < tol_atbits(prec, 12));

    // exact value of the b = 1 limit at tau = 0 from the Bernoulli sum
    PeriodicFunction chi = chi_function(m, l);
    Rational sum(0);
    for (const auto& [n, v] : chi.support)
        sum += Rational(v) * bernoulli_value(3, Rational(n, chi.modulus));
    Rational expect = -Rational(int_pow(Int(chi.modulus), 2)) / Rational(3) * sum;
    Complex d1 = eichler_derivative_limit(m, l, 1, 0, 1, prec).value;
    CHECK((d1.re - Real::of(expect, prec)).abs() < tol_atbits(prec, 24));

    // radial oracle comparison at derivative order 1
    Complex orc = qseries_radial_limit(m, l, Rational(1, 3), 1, prec);
    Complex lim = eichler_derivative_limit(m, l, 1, 1, 3, prec).value;
    CHECK((lim - orc).abs() / lim.abs() < Real::of(Rational(1, 100), prec));
}

TEST_CASE("nearly modular residual decays at the expected order") {
    const mpfr_prec_t prec = 192;
    SeifertData m = make_manifold({2, 3, 5});
    Label l{{1, 1, 1}};

    for (int k : {1, 2, 4}) {
        Real r1 = nearly_modular_residual(m, l, 50, k, prec).abs();
        Real r2 = nearly_modular_residual(m, l, 100, k, prec).abs();
        // residual ~ N^{-(k+1)}: doubling N shrinks it by about 2^{k+1}
        Real ratio = r2 / r1;
        CHECK(ratio < Real::of(Rational(1, 1L << k), prec));
    }

    // more tail terms improve the defect once N is deep enough in the
    // asymptotic regime (at N = 50 the series already turns at four terms)
    Real loose = nearly_modular_residual(m, l, 100, 1, prec).abs();
    Real tight = nearly_modular_residual(m, l, 100, 4, prec).abs();
    CHECK(tight < loose);
}
