#pragma once

// Test-only oracles, kept independent of the library code paths they
// check: cofactor determinants, Smith invariant factors via determinantal
// divisors, and deterministic random generators.

#include "k3fib/lattice.hpp"
#include "k3fib/poly.hpp"

#include <random>
#include <vector>

namespace k3fib::testing {

// Recursive cofactor expansion. Exponential, fine for n <= 5.
inline Int cofactor_determinant(const IMat& m) {
    const int n = m.rows();
    if (n == 0) return Int(1);
    if (n == 1) return m.at(0, 0);
    Int det(0);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IMat minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i)
            for (int k = 0, c = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, c++) = m.at(i, k);
            }
        Int term = m.at(0, j) * cofactor_determinant(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Invariant factors through determinantal divisors: d_k = D_k / D_{k-1}
// with D_k the gcd of all k x k minors. Completely independent of the
// elimination-based implementation.
inline std::vector<Int> invariant_factors_oracle(const IMat& m) {
    const int n = std::min(m.rows(), m.cols());
    std::vector<Int> divisors;  // D_1, D_2, ...
    for (int k = 1; k <= n; ++k) {
        // all k-subsets of rows and columns
        std::vector<int> rows(k), cols(k);
        for (int i = 0; i < k; ++i) rows[i] = i;
        Int gcd(0);
        bool more_rows = true;
        while (more_rows) {
            for (int i = 0; i < k; ++i) cols[i] = i;
            bool more_cols = true;
            while (more_cols) {
                IMat sub(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
                gcd = int_gcd(gcd, cofactor_determinant(sub));
                // next column subset
                int pos = k - 1;
                while (pos >= 0 && cols[pos] == m.cols() - k + pos) --pos;
                if (pos < 0) more_cols = false;
                else {
                    ++cols[pos];
                    for (int i = pos + 1; i < k; ++i) cols[i] = cols[i - 1] + 1;
                }
            }
            int pos = k - 1;
            while (pos >= 0 && rows[pos] == m.rows() - k + pos) --pos;
            if (pos < 0) more_rows = false;
            else {
                ++rows[pos];
                for (int i = pos + 1; i < k; ++i) rows[i] = rows[i - 1] + 1;
            }
        }
        if (gcd == 0) break;  // rank reached
        divisors.push_back(gcd);
    }
    std::vector<Int> factors;
    Int prev(1);
    for (const Int& d : divisors) {
        factors.push_back(d / prev);
        prev = d;
    }
    return factors;
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
    }
    Rat rat() {
        std::int64_t den = int_in(1, 6);
        return Rat(Int(int_in(-9, 9)), Int(den));
    }
    QPoly poly(int max_degree, bool nonzero = false) {
        while (true) {
            std::vector<Rat> coeffs(static_cast<std::size_t>(int_in(0, max_degree)) + 1);
            for (auto& c : coeffs) c = int_in(0, 2) == 0 ? Rat(0) : rat();
            QPoly p = QPoly::from_coeffs(std::move(coeffs));
            if (!nonzero || !p.is_zero()) return p;
        }
    }
    IMat matrix(int n, std::int64_t lo, std::int64_t hi) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Int(int_in(lo, hi));
        return m;
    }
};

}  // namespace k3fib::testing
