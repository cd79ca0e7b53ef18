#include "wrt/special.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace wrt {

Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return x.frac() - Rational(1, 2);
}

Rational dedekind_sum(const Int& b, const Int& a) {
    if (a < 1) throw validation_error("dedekind_sum: a must be >= 1");
    Rational s(0);
    for (Int k = 1; k < a; ++k)
        s += sawtooth(Rational(k, a)) * sawtooth(Rational(k * b, a));
    return s;
}

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli_numbers;       // B_k(0)
std::vector<RationalPoly> g_bernoulli_polys;     // B_k(x)

// Extends the caches through degree k. Bernoulli numbers via the
// recurrence sum_{j=0}^{k} C(k+1, j) B_j = 0, then
// B_k(x) = sum_j C(k, j) B_j x^(k-j).
void ensure_bernoulli(int k) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    while (static_cast<int>(g_bernoulli_numbers.size()) <= k) {
        int n = static_cast<int>(g_bernoulli_numbers.size());
        if (n == 0) {
            g_bernoulli_numbers.emplace_back(1);
        } else {
            Rational s(0);
            for (int j = 0; j < n; ++j)
                s += Rational(binomial(n + 1, j)) * g_bernoulli_numbers[j];
            g_bernoulli_numbers.push_back(-s / Rational(n + 1));
        }
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
        for (int j = 0; j <= n; ++j)
            c[static_cast<std::size_t>(n - j)] = Rational(binomial(n, j)) * g_bernoulli_numbers[j];
        g_bernoulli_polys.emplace_back(std::move(c));
    }
}

}  // namespace

Rational bernoulli_number(int k) {
    if (k < 0) throw validation_error("bernoulli_number: negative degree");
    ensure_bernoulli(k);
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    return g_bernoulli_numbers[static_cast<std::size_t>(k)];
}

const RationalPoly& bernoulli_polynomial(int k) {
    if (k < 0) throw validation_error("bernoulli_polynomial: negative degree");
    ensure_bernoulli(k);
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    return g_bernoulli_polys[static_cast<std::size_t>(k)];
}

Rational bernoulli_value(int k, const Rational& x) { return bernoulli_polynomial(k)(x); }

Int stirling_first(int n, int m) {
    if (n < 0 || m < 0) throw validation_error("stirling_first: negative argument");
    if (m > n) return Int(0);
    // S_{n+1}^{(m)} = S_n^{(m-1)} - n S_n^{(m)}
    std::vector<Int> row{Int(1)};  // S_0
    for (int i = 0; i < n; ++i) {
        std::vector<Int> next(static_cast<std::size_t>(i) + 2, Int(0));
        for (int j = 0; j <= i; ++j) {
            next[static_cast<std::size_t>(j) + 1] += row[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(j)] -= Int(i) * row[static_cast<std::size_t>(j)];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(m)];
}

Int lah_number(int n, int m) {
    if (m < 1 || m > n) throw validation_error("lah_number: requires 1 <= m <= n");
    // A_{n+1}^{(m)} = A_n^{(m-1)} + (n + m) A_n^{(m)}, indexed row[m]
    std::vector<Int> row{Int(0), Int(1)};  // A_1
    for (int cur = 1; cur < n; ++cur) {
        std::vector<Int> next(static_cast<std::size_t>(cur) + 2, Int(0));
        for (int mm = 1; mm <= cur + 1; ++mm) {
            Int v(0);
            if (mm >= 2) v += row[static_cast<std::size_t>(mm) - 1];
            if (mm <= cur) v += Int(cur + mm) * row[static_cast<std::size_t>(mm)];
            next[static_cast<std::size_t>(mm)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(m)];
}

Rational k_number(int b, int x, int j) {
    if (j > b || j < 0 || b < 0) throw validation_error("k_number: requires 0 <= j <= b");
    Rational prod(binomial(b, j));
    for (int k = 0; k < b - j; ++k)
        prod *= Rational(1, 2) + Rational(b - x - k);
    return prod;
}

namespace {

std::mutex g_fpoly_mutex;
std::map<std::pair<int, int>, RationalPoly> g_fpoly_cache;

RationalPoly build_f_polynomial(int m, int M) {
    // f_m^M(x) = sum_{k=max(m,1)}^{M} (1/k) S_M^{(k)} C(k, m) (x + M/2)^{k-m}
    RationalPoly shifted_x({Rational(M, 2), Rational(1)});  // x + M/2
    RationalPoly pw = RationalPoly::constant(Rational(1));
    RationalPoly f;
    int k0 = m > 0 ? m : 1;
    // pw = (x + M/2)^(k - m); for m = 0 the sum starts at power 1
    for (int i = 0; i < k0 - m; ++i) pw = pw * shifted_x;
    for (int k = k0; k <= M; ++k) {
        f += pw * (Rational(stirling_first(M, k)) / Rational(k) * Rational(binomial(k, m)));
        pw = pw * shifted_x;
    }
    return f;
}

}  // namespace

const RationalPoly& f_polynomial(int m, int M) {
    if (m < 0 || m > M || M < 1) throw validation_error("f_polynomial: requires 0 <= m <= M, M >= 1");
    std::lock_guard<std::mutex> lock(g_fpoly_mutex);
    auto key = std::make_pair(m, M);
    auto it = g_fpoly_cache.find(key);
    if (it == g_fpoly_cache.end())
        it = g_fpoly_cache.emplace(key, build_f_polynomial(m, M)).first;
    return it->second;
}

Rational l_value(const PeriodicFunction& c, int s) {
    if (s > 0) throw validation_error("l_value: s must be <= 0");
    if (!c.mean_zero()) throw validation_error("l_value: periodic function must have mean value zero");
    // L(-m, C) = f^m sum_k C(k) zeta(-m, k/f),  zeta(1-k, z) = -B_k(z)/k
    int m = -s;
    const RationalPoly& b = bernoulli_polynomial(m + 1);
    Rational sum(0);
    for (const auto& [n, v] : c.support) {
        long k = n == 0 ? c.modulus : n;  // k runs 1..f
        sum += Rational(v) * b(Rational(k, c.modulus));
    }
    return Rational(int_pow(Int(c.modulus), static_cast<unsigned long>(m))) * (-sum / Rational(m + 1));
}

}  // namespace wrt
