#include "k3fib/cyclotomic.hpp"

#include <algorithm>

namespace k3fib {

bool is_non_unimodular_order(std::int64_t n) {
    return std::find(kNonUnimodularOrders.begin(), kNonUnimodularOrders.end(), n) !=
           kNonUnimodularOrders.end();
}

std::int64_t phi_euler(std::int64_t n) {
    if (n < 1) throw error("phi requires n >= 1");
    std::int64_t result = n, m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::int64_t mobius(std::int64_t n) {
    if (n < 1) throw error("mobius requires n >= 1");
    std::int64_t count = 0;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++count;
    }
    if (n > 1) ++count;
    return count % 2 == 0 ? 1 : -1;
}

std::int64_t ramanujan_sum(std::int64_t n, std::int64_t k) {
    if (n < 1) throw error("ramanujan_sum requires n >= 1");
    std::int64_t g = gcd_i64(n, k);
    if (g == 0) g = n;  // k == 0
    std::int64_t sum = 0;
    for (std::int64_t d = 1; d <= g; ++d)
        if (g % d == 0) sum += d * mobius(n / d);
    return sum;
}

QPoly cyclotomic_poly(std::int64_t n) {
    if (n < 1) throw error("cyclotomic_poly requires n >= 1");
    // x^n - 1
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
    c[0] = Rat(-1);
    c.back() = Rat(1);
    QPoly result = QPoly::from_coeffs(std::move(c));
    for (std::int64_t d = 1; d < n; ++d)
        if (n % d == 0) result = exact_div(result, cyclotomic_poly(d));
    return result;
}

CycloModel cyclo_model(std::int64_t n) {
    QPoly phi_poly = cyclotomic_poly(n);
    const int deg = phi_poly.degree();
    CycloModel m{n, deg, IMat(deg, deg)};
    for (int i = 0; i + 1 < deg; ++i) m.companion.at(i + 1, i) = 1;
    for (int i = 0; i < deg; ++i) {
        Rat c = phi_poly.coeff(i);
        if (denominator(c) != 1) throw error("cyclotomic polynomial is not integral");
        m.companion.at(i, deg - 1) = -numerator(c);
    }
    return m;
}

std::int64_t trace_power(std::int64_t n, std::int64_t k) {
    if (k < 0) throw error("trace_power requires k >= 0");
    CycloModel m = cyclo_model(n);
    IMat power = IMat::identity(static_cast<int>(m.phi));
    for (std::int64_t i = 0; i < k; ++i) power = power * m.companion;
    Int tr(0);
    for (int i = 0; i < power.rows(); ++i) tr += power.at(i, i);
    return to_int64(tr);
}

namespace {

// Column-echelon rank over F_p via Gaussian elimination.
std::vector<std::vector<std::int64_t>> kernel_mod_p(const IMat& m, std::int64_t p) {
    const int n = m.rows();
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int r = m.at(i, j) % p;
            if (r < 0) r += p;
            a[i][j] = to_int64(r);
        }

    auto inv_mod = [p](std::int64_t x) {
        // Fermat inverse; p is prime.
        std::int64_t result = 1, base = mod_i64(x, p), e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };

    std::vector<int> pivot_col_of_row(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int row = rank; row < n; ++row)
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        std::int64_t inv = inv_mod(a[rank][col]);
        for (int j = 0; j < n; ++j) a[rank][j] = a[rank][j] * inv % p;
        for (int row = 0; row < n; ++row) {
            if (row == rank || a[row][col] == 0) continue;
            std::int64_t f = a[row][col];
            for (int j = 0; j < n; ++j) a[row][j] = mod_i64(a[row][j] - f * a[rank][j], p);
        }
        pivot_col_of_row[rank] = col;
        ++rank;
    }

    std::vector<bool> is_pivot_col(n, false);
    for (int r = 0; r < rank; ++r) is_pivot_col[static_cast<std::size_t>(pivot_col_of_row[r])] = true;

    std::vector<std::vector<std::int64_t>> basis;
    for (int col = 0; col < n; ++col) {
        if (is_pivot_col[col]) continue;
        std::vector<std::int64_t> v(n, 0);
        v[static_cast<std::size_t>(col)] = 1;
        for (int r = 0; r < rank; ++r) v[static_cast<std::size_t>(pivot_col_of_row[r])] = mod_i64(-a[r][col], p);
        // Canonical scaling: first nonzero coordinate becomes 1.
        for (std::int64_t x : v)
            if (x != 0) {
                std::int64_t s = inv_mod(x);
                for (auto& y : v) y = y * s % p;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::vector<std::vector<std::int64_t>> fixed_kernel_mod_p(std::int64_t n, std::int64_t p) {
    if (!is_prime_i64(p) || n % p != 0) throw error("p must be a prime divisor of n");
    CycloModel m = cyclo_model(n);
    IMat shifted = m.companion;
    for (int i = 0; i < shifted.rows(); ++i) shifted.at(i, i) -= 1;
    return kernel_mod_p(shifted, p);
}

std::int64_t fixed_discriminant_dimension(std::int64_t n, std::int64_t p) {
    return static_cast<std::int64_t>(fixed_kernel_mod_p(n, p).size());
}

}  // namespace k3fib
