// Test-only oracles, independent of the library's computation paths:
// monomial expansions straight from the defining formulas, plus small
// combinatorial counters used to pin expected values.
#pragma once

#include <map>
#include <set>
#include <vector>

#include "chromsym/numeric.hpp"
#include "chromsym/partition.hpp"

namespace chromsym::oracle {

// Polynomial in k variables: exponent vector (length k) -> coefficient.
using Poly = std::map<std::vector<int>, Rational>;

inline Poly poly_constant(int k, const Rational& c) {
    Poly p;
    if (c != 0) p[std::vector<int>(static_cast<size_t>(k), 0)] = c;
    return p;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b) {
        auto [it, inserted] = r.emplace(e, c);
        if (!inserted && (it->second += c) == 0) r.erase(it);
    }
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            auto [it, inserted] = r.emplace(std::move(e), ca * cb);
            if (!inserted && (it->second += ca * cb) == 0) r.erase(it);
        }
    return r;
}

// m_lambda: one monomial per distinct exponent pattern reachable by an
// injective assignment of parts to variables (the defining sum).
inline Poly m_poly(const Partition& lam, int k) {
    std::set<std::vector<int>> monomials;
    std::vector<int> exps(static_cast<size_t>(k), 0);
    std::vector<bool> used(static_cast<size_t>(k), false);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == lam.length()) {
            monomials.insert(exps);
            return;
        }
        for (int i = 0; i < k; ++i) {
            if (used[static_cast<size_t>(i)]) continue;
            used[static_cast<size_t>(i)] = true;
            exps[static_cast<size_t>(i)] = lam.part(j);
            self(self, j + 1);
            exps[static_cast<size_t>(i)] = 0;
            used[static_cast<size_t>(i)] = false;
        }
    };
    rec(rec, 0);
    Poly p;
    for (const auto& e : monomials) p[e] = 1;
    return p;
}

inline Poly p_poly(const Partition& lam, int k) {
    Poly r = poly_constant(k, 1);
    for (int part : lam.parts()) {
        Poly pr;
        for (int i = 0; i < k; ++i) {
            std::vector<int> e(static_cast<size_t>(k), 0);
            e[static_cast<size_t>(i)] = part;
            pr[std::move(e)] = 1;
        }
        r = poly_mul(r, pr);
    }
    return r;
}

inline Poly e_poly(const Partition& lam, int k) {
    Poly r = poly_constant(k, 1);
    for (int part : lam.parts()) {
        Poly er;
        std::vector<int> idx;
        auto rec = [&](auto&& self, int from) -> void {
            if (static_cast<int>(idx.size()) == part) {
                std::vector<int> e(static_cast<size_t>(k), 0);
                for (int i : idx) e[static_cast<size_t>(i)] = 1;
                er[std::move(e)] = 1;
                return;
            }
            for (int i = from; i < k; ++i) {
                idx.push_back(i);
                self(self, i + 1);
                idx.pop_back();
            }
        };
        rec(rec, 0);
        r = poly_mul(r, er);
    }
    return r;
}

inline Poly h_poly(const Partition& lam, int k) {
    Poly r = poly_constant(k, 1);
    for (int part : lam.parts()) {
        Poly hr;
        std::vector<int> e(static_cast<size_t>(k), 0);
        auto rec = [&](auto&& self, int var, int remaining) -> void {
            if (var == k) {
                if (remaining == 0) hr[e] = 1;
                return;
            }
            for (int d = 0; d <= remaining; ++d) {
                e[static_cast<size_t>(var)] = d;
                self(self, var + 1, remaining - d);
            }
            e[static_cast<size_t>(var)] = 0;
        };
        rec(rec, 0, part);
        r = poly_mul(r, hr);
    }
    return r;
}

// s_lambda = sum over SSYT of shape lambda with entries <= k of x^content.
inline Poly s_poly(const Partition& lam, int k) {
    Poly r;
    std::vector<std::vector<int>> grid(static_cast<size_t>(lam.length()));
    for (int i = 0; i < lam.length(); ++i)
        grid[static_cast<size_t>(i)].assign(static_cast<size_t>(lam.part(i)), 0);
    auto rec = [&](auto&& self, int row, int col) -> void {
        if (row == lam.length()) {
            std::vector<int> e(static_cast<size_t>(k), 0);
            for (const auto& g : grid)
                for (int v : g) ++e[static_cast<size_t>(v - 1)];
            auto [it, inserted] = r.emplace(std::move(e), 1);
            if (!inserted) it->second += 1;
            return;
        }
        if (col == lam.part(row)) {
            self(self, row + 1, 0);
            return;
        }
        const int left = col > 0 ? grid[static_cast<size_t>(row)][static_cast<size_t>(col - 1)] : 1;
        const int above =
            row > 0 && col < lam.part(row - 1)
                ? grid[static_cast<size_t>(row - 1)][static_cast<size_t>(col)] + 1
                : 1;
        for (int v = std::max(left, above); v <= k; ++v) {
            grid[static_cast<size_t>(row)][static_cast<size_t>(col)] = v;
            self(self, row, col + 1);
        }
        grid[static_cast<size_t>(row)][static_cast<size_t>(col)] = 0;
    };
    rec(rec, 0, 0);
    return r;
}

// Partition counts by the pentagonal-number recurrence.
inline std::vector<long long> partition_counts(int max_n) {
    std::vector<long long> p(static_cast<size_t>(max_n) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            const int g2 = j * (3 * j + 1) / 2;
            if (g1 > n) break;
            const long long sign = j % 2 == 1 ? 1 : -1;
            p[static_cast<size_t>(n)] += sign * p[static_cast<size_t>(n - g1)];
            if (g2 <= n) p[static_cast<size_t>(n)] += sign * p[static_cast<size_t>(n - g2)];
        }
    }
    return p;
}

inline bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    int sa = 0, sb = 0;
    for (int i = 0; i < std::max(a.length(), b.length()); ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

}  // namespace chromsym::oracle
