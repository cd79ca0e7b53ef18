#include "wrt/real.hpp"

#include <cstdio>
#include <vector>

namespace wrt {

std::string Real::str() const {
    // digits10 + 2 is enough for an injective decimal rendering
    long digits = static_cast<long>(static_cast<double>(prec()) * 0.30103) + 2;
    char* s = nullptr;
    int n = mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits), x_);
    std::string out = n >= 0 ? std::string(s) : std::string("nan");
    mpfr_free_str(s);
    return out;
}

std::string Complex::str() const {
    std::string r = re.str();
    std::string i = im.str();
    if (!i.empty() && i[0] != '-') i.insert(i.begin(), '+');
    return r + " " + i + "i";
}

namespace {

// sin(pi * x) with x already reduced to [0, 1/2]; plain mpfr evaluation
// with guard bits.
Real sin_pi_reduced(const Rational& x, mpfr_prec_t prec) {
    mpfr_prec_t work = prec + 16;
    Real arg = Real::of(x, work) * Real::pi(work);
    Real r(work);
    mpfr_sin(r.raw(), arg.raw(), MPFR_RNDN);
    return r.rounded(prec);
}

}  // namespace

Real sin_pi(const Rational& x, mpfr_prec_t prec) {
    // reduce mod 2, then fold into [0, 1/2]
    Rational t = (x / Rational(2)).frac() * Rational(2);  // [0, 2)
    int sign = 1;
    if (t >= Rational(1)) {
        t -= Rational(1);
        sign = -1;
    }
    if (t > Rational(1, 2)) t = Rational(1) - t;
    if (t.is_zero()) return Real::of(0L, prec);
    if (t == Rational(1, 2)) return Real::of(static_cast<long>(sign), prec);
    Real r = sin_pi_reduced(t, prec);
    return sign > 0 ? r : -r;
}

Real cos_pi(const Rational& x, mpfr_prec_t prec) {
    return sin_pi(Rational(1, 2) - x, prec);
}

Complex phase_exp(const PhaseTurns& t, mpfr_prec_t prec) {
    if (prec < kMinPrec) throw validation_error("phase_exp: precision_bits must be >= 53");
    const Rational& half_turns = t.turns() * Rational(2);  // angle in units of pi
    return {cos_pi(half_turns, prec), sin_pi(half_turns, prec)};
}

}  // namespace wrt
