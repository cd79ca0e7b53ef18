#include "wrt/seifert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "wrt/special.hpp"

namespace wrt {

std::string Label::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < ell.size(); ++i) os << (i ? "," : "") << ell[i];
    os << ')';
    return os.str();
}

SeifertData make_manifold(const std::vector<long>& p) {
    if (p.size() < 3) throw validation_error("manifold requires at least 3 exceptional fibers");
    SeifertData m;
    m.p = p;
    m.M = static_cast<int>(p.size());
    Int prod(1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 2) throw validation_error("fiber orders must be >= 2");
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (std::gcd(p[i], p[j]) != 1) {
                std::ostringstream os;
                os << "p must be pairwise coprime: (" << p[i] << "," << p[j] << ")";
                throw validation_error(os.str());
            }
        }
        prod *= p[i];
    }
    if (!prod.fits_slong_p()) throw capacity_error("fiber product exceeds supported range");
    m.P = prod.get_si();

    Int d(1);
    for (long pj : p) d *= Int(pj - 1);
    Int denom = int_pow(Int(2), static_cast<unsigned long>(m.M - 1));
    if (d % denom != 0) throw consistency_error("D = prod(p_j - 1)/2^(M-1) must be integral");
    m.D = d / denom;

    Rational s(0);
    for (long pj : p) s += dedekind_sum(Int(m.P / pj), Int(pj));
    m.phi = Rational(3) - Rational(1, m.P) + Rational(12) * s;
    return m;
}

Rational phi_invariant(const SeifertData& m) { return m.phi; }

Rational casson_invariant(const SeifertData& m) {
    Rational sum_sq(0), sum_s(0);
    for (long pj : m.p) {
        sum_sq += Rational(Int(m.P / pj) * Int(m.P / pj));
        sum_s += dedekind_sum(Int(m.P / pj), Int(pj));
    }
    Rational inner = Rational(1) + sum_sq - Rational(m.M - 2) * Rational(Int(m.P) * Int(m.P));
    return Rational(-1, 8) + inner / Rational(24L * m.P) - sum_s / Rational(2);
}

void validate_label(const SeifertData& m, const Label& l) {
    if (static_cast<int>(l.ell.size()) != m.M)
        throw validation_error("label length must equal the number of fibers");
    for (int j = 0; j < m.M; ++j)
        if (l.ell[j] < 1 || l.ell[j] > m.p[j] - 1)
            throw validation_error("label entries must satisfy 1 <= ell_j <= p_j - 1");
}

Rational label_slope(const SeifertData& m, const Label& l) {
    Rational s(0);
    for (int j = 0; j < m.M; ++j) s += Rational(l.ell[j], m.p[j]);
    return s;
}

Rational chern_simons(const SeifertData& m, const Label& l) {
    validate_label(m, l);
    Rational u = Rational(1) + label_slope(m, l);
    return (Rational(-m.P, 4) * u * u).frac();
}

namespace {

// image of l under the flip pattern encoded by mask bits
Label apply_flips(const SeifertData& m, const Label& l, unsigned mask) {
    Label out = l;
    for (int j = 0; j < m.M; ++j)
        if (mask & (1u << j)) out.ell[j] = m.p[j] - out.ell[j];
    return out;
}

bool even_popcount(unsigned v) { return __builtin_popcount(v) % 2 == 0; }

}  // namespace

std::vector<LabelOrbit> enumerate_orbits(const SeifertData& m) {
    if (m.M > 20) throw capacity_error("orbit enumeration supports at most 20 fibers");
    const unsigned npat = 1u << m.M;

    std::vector<LabelOrbit> orbits;
    Label cur;
    cur.ell.assign(static_cast<std::size_t>(m.M), 1);
    for (;;) {
        // canonical representative = lexicographic minimum over even flips
        Label best = cur;
        std::vector<Label> members;
        members.reserve(1u << (m.M - 1));
        for (unsigned mask = 0; mask < npat; ++mask) {
            if (!even_popcount(mask)) continue;
            Label im = apply_flips(m, cur, mask);
            if (im < best) best = im;
            members.push_back(std::move(im));
        }
        if (best == cur) {
            std::sort(members.begin(), members.end());
            members.erase(std::unique(members.begin(), members.end()), members.end());
            orbits.push_back({cur, std::move(members)});
        }
        // next label in mixed radix
        int j = m.M - 1;
        while (j >= 0 && cur.ell[j] == m.p[j] - 1) cur.ell[j--] = 1;
        if (j < 0) break;
        ++cur.ell[j];
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const LabelOrbit& a, const LabelOrbit& b) { return a.representative < b.representative; });
    if (Int(static_cast<long>(orbits.size())) != m.D)
        throw consistency_error("orbit count does not equal D");
    return orbits;
}

PeriodicFunction chi_function(const SeifertData& m, const Label& l) {
    validate_label(m, l);
    const long twoP = 2 * m.P;
    std::vector<std::pair<long, long>> pts;
    pts.reserve(1u << m.M);
    const unsigned npat = 1u << m.M;
    for (unsigned mask = 0; mask < npat; ++mask) {
        long n = m.P;
        int prod_eps = 1;
        for (int j = 0; j < m.M; ++j) {
            long term = (m.P / m.p[j]) * l.ell[j];
            if (mask & (1u << j)) {
                n -= term;
                prod_eps = -prod_eps;
            } else {
                n += term;
            }
        }
        n %= twoP;
        if (n < 0) n += twoP;
        pts.emplace_back(n, -prod_eps);
    }
    PeriodicFunction chi = PeriodicFunction::from_support(twoP, m.odd() ? -1 : 1, std::move(pts));
    if (chi.support.size() != (1u << m.M))
        throw consistency_error("chi: sign vectors collided on a residue");
    return chi;
}

PeriodicFunction basis_periodic(long P, long a, BasisKind kind) {
    if (P < 2) throw validation_error("basis_periodic: P must be >= 2");
    const long twoP = 2 * P;
    if (kind == BasisKind::even) {
        if (a < 0 || a > P) throw validation_error("theta: requires 0 <= a <= P");
        std::vector<std::pair<long, long>> pts{{a, 1}};
        if (a != 0 && a != P) pts.emplace_back(twoP - a, 1);
        return PeriodicFunction::from_support(twoP, 1, std::move(pts));
    }
    if (a <= 0 || a >= P) throw validation_error("psi: requires 0 < a < P");
    return PeriodicFunction::from_support(twoP, -1, {{a, 1}, {twoP - a, -1}});
}

CheckResult chi_generating_check(const SeifertData& m, const Label& l) {
    validate_label(m, l);
    const long twoP = 2 * m.P;
    // exponents of the raw product -z^P prod_j (z^{P l_j/p_j} - z^{-P l_j/p_j})
    std::map<long, long> poly;
    const unsigned npat = 1u << m.M;
    for (unsigned mask = 0; mask < npat; ++mask) {
        long e = m.P;
        int prod_eps = 1;
        for (int j = 0; j < m.M; ++j) {
            long term = (m.P / m.p[j]) * l.ell[j];
            if (mask & (1u << j)) {
                e -= term;
                prod_eps = -prod_eps;
            } else {
                e += term;
            }
        }
        poly[e] -= prod_eps;
    }
    // fold-back corrections: for each a >= 1 and eta with
    // 2a-1 < sum eta_j l_j/p_j < 2a+1, add
    //   prod(eta) z^P (z^{aP} - z^{-aP}) (z^{P(t-a)} + (-1)^{M+1} z^{-P(t-a)})
    const int sgn_m1 = (m.M % 2 == 0) ? -1 : 1;  // (-1)^{M+1}
    for (unsigned mask = 0; mask < npat; ++mask) {
        long pt = 0;  // P * sum eta_j l_j / p_j
        int prod_eta = 1;
        for (int j = 0; j < m.M; ++j) {
            long term = (m.P / m.p[j]) * l.ell[j];
            if (mask & (1u << j)) {
                pt -= term;
                prod_eta = -prod_eta;
            } else {
                pt += term;
            }
        }
        if (pt <= m.P) continue;  // needs t > 1, i.e. a >= 1
        const long a = (pt / m.P + 1) / 2;  // window 2a-1 < t < 2a+1
        const long base = m.P + pt - a * m.P;
        // z^{P(1+t-a)} (z^{aP} - z^{-aP})
        poly[base + a * m.P] += prod_eta;
        poly[base - a * m.P] -= prod_eta;
        const long rbase = m.P - pt + a * m.P;
        poly[rbase + a * m.P] += sgn_m1 * prod_eta;
        poly[rbase - a * m.P] -= sgn_m1 * prod_eta;
    }

    std::erase_if(poly, [](const auto& p) { return p.second == 0; });
    PeriodicFunction chi = chi_function(m, l);
    for (const auto& [e, c] : poly) {
        if (e < 0 || e > twoP) {
            std::ostringstream os;
            os << "exponent " << e << " outside [0, 2P] with coefficient " << c;
            return {false, os.str()};
        }
        if (chi.at(e) != c) {
            std::ostringstream os;
            os << "coefficient of z^" << e << ": generating product gives " << c
               << ", chi gives " << chi.at(e);
            return {false, os.str()};
        }
    }
    if (poly.size() != chi.support.size())
        return {false, "support size mismatch between generating product and chi"};
    return {true, {}};
}

}  // namespace wrt
