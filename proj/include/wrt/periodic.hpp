// Integer-valued periodic functions on Z/modulus with definite parity,
// stored by their (sparse) support.
#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "wrt/rational.hpp"

namespace wrt {

struct PeriodicFunction {
    long modulus = 1;
    int parity = 1;  // +1 even, -1 odd: f(-n) = parity * f(n)
    // sorted by residue in [0, modulus), zero values omitted
    std::vector<std::pair<long, long>> support;

    long at(long n) const {
        long r = n % modulus;
        if (r < 0) r += modulus;
        auto it = std::lower_bound(support.begin(), support.end(), r,
                                   [](const auto& p, long v) { return p.first < v; });
        return (it != support.end() && it->first == r) ? it->second : 0;
    }

    long sum() const {
        long s = 0;
        for (const auto& [n, v] : support) s += v;
        return s;
    }
    bool mean_zero() const { return sum() == 0; }

    std::vector<long> dense() const {
        std::vector<long> out(static_cast<std::size_t>(modulus), 0);
        for (const auto& [n, v] : support) out[static_cast<std::size_t>(n)] = v;
        return out;
    }

    // checks f(modulus - n) = parity * f(n) pointwise
    bool parity_consistent() const {
        for (const auto& [n, v] : support)
            if (at(modulus - n) != parity * v) return false;
        return true;
    }

    static PeriodicFunction from_support(long modulus, int parity,
                                         std::vector<std::pair<long, long>> pts) {
        std::sort(pts.begin(), pts.end());
        PeriodicFunction f;
        f.modulus = modulus;
        f.parity = parity;
        f.support.reserve(pts.size());
        for (auto& [n, v] : pts) {
            if (v == 0) continue;
            if (!f.support.empty() && f.support.back().first == n)
                f.support.back().second += v;
            else
                f.support.emplace_back(n, v);
        }
        std::erase_if(f.support, [](const auto& p) { return p.second == 0; });
        return f;
    }

    friend bool operator==(const PeriodicFunction& a, const PeriodicFunction& b) {
        return a.modulus == b.modulus && a.support == b.support;
    }
};

}  // namespace wrt
