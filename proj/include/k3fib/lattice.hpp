#pragma once

#include "k3fib/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace k3fib {

// Dense matrix of arbitrary-precision integers.
class IMat {
public:
    IMat() : rows_(0), cols_(0) {}
    IMat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Int(0)) {
        if (rows < 0 || cols < 0) throw error("negative matrix dimension");
    }
    static IMat identity(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return e_[index(i, j)]; }
    const Int& at(int i, int j) const { return e_[index(i, j)]; }

    IMat operator*(const IMat& o) const;
    bool operator==(const IMat& o) const = default;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    // row i += c * row j
    void add_row(int i, int j, const Int& c);
    // col i += c * col j
    void add_col(int i, int j, const Int& c);
    void negate_row(int i);

    bool is_symmetric() const;

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw error("matrix index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }
    int rows_, cols_;
    std::vector<Int> e_;
};

// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IMat& m);

// Symmetric integer bilinear form. Every lattice built here is even and
// nondegenerate; root lattices are stored negative definite.
struct IntLattice {
    IMat gram;
    std::string name;
    std::vector<std::string> components;  // direct summand names, in order

    int rank() const { return gram.rows(); }
};

enum class LatticeName { U, A, D, E6, E7, E8 };

// U is the rank-2 hyperbolic plane [[0,1],[1,0]]; A_n (n>=1), D_n (n>=4),
// E6, E7, E8 are the negated Cartan matrices.
IntLattice named_lattice(LatticeName name, int n = 0);

// "U", "A2", "D5", "E8".
IntLattice named_lattice(const std::string& name);

// Mini-grammar for the CLI: names joined by '+', e.g. "U+E8+E8+A2".
IntLattice parse_lattice_spec(const std::string& spec);

IntLattice direct_sum(const std::vector<IntLattice>& parts);

// Sylvester inertia (positive count, negative count) by exact rational
// congruence diagonalization. Throws on a degenerate Gram matrix.
std::pair<int, int> signature(const IntLattice& lattice);

struct SmithNormalForm {
    IMat d;  // diagonal, non-negative, d_1 | d_2 | ...
    IMat u;  // unimodular row transform
    IMat v;  // unimodular column transform; u * m * v == d
};

// Pivot rule: smallest nonzero absolute value, scanned rows-then-columns.
SmithNormalForm smith_normal_form(const IMat& m);

struct DiscriminantGroup {
    std::vector<Int> invariant_factors;  // d_1 | d_2 | ..., each > 1

    Int order() const {
        Int n(1);
        for (const Int& d : invariant_factors) n *= d;
        return n;
    }
    bool trivial() const { return invariant_factors.empty(); }
};

DiscriminantGroup discriminant_group(const IntLattice& lattice);

// is_p_elementary iff every invariant factor equals p; ell = factor count.
std::pair<bool, int> p_elementary_profile(const IntLattice& lattice, std::int64_t p);

// Same direct summands up to reordering (Gram matrices then agree up to a
// basis permutation).
bool same_components(const IntLattice& a, const IntLattice& b);

}  // namespace k3fib
