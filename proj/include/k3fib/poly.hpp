#pragma once

#include "k3fib/numeric.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace k3fib {

// Valuation value: a non-negative integer or +infinity (the valuation of
// the zero polynomial). +infinity compares above every integer.
class ExtVal {
public:
    ExtVal() : finite_(0) {}
    static ExtVal infinity() {
        ExtVal v;
        v.infinite_ = true;
        return v;
    }
    static ExtVal of(std::int64_t k) {
        if (k < 0) throw error("valuation must be non-negative");
        ExtVal v;
        v.finite_ = k;
        return v;
    }

    bool is_infinite() const { return infinite_; }
    std::int64_t value() const {
        if (infinite_) throw error("infinite valuation has no finite value");
        return finite_;
    }

    friend bool operator==(const ExtVal& a, const ExtVal& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.finite_ == b.finite_);
    }
    friend std::strong_ordering operator<=>(const ExtVal& a, const ExtVal& b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.finite_ <=> b.finite_;
    }
    friend bool operator==(const ExtVal& a, std::int64_t k) { return !a.infinite_ && a.finite_ == k; }
    friend std::strong_ordering operator<=>(const ExtVal& a, std::int64_t k) {
        if (a.infinite_) return std::strong_ordering::greater;
        return a.finite_ <=> k;
    }

    ExtVal operator+(const ExtVal& o) const {
        if (infinite_ || o.infinite_) return infinity();
        return of(finite_ + o.finite_);
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(finite_); }

private:
    std::int64_t finite_;
    bool infinite_ = false;
};

// Dense univariate polynomial over Q in the formal variable t.
// Canonical form: no trailing zero coefficient; the zero polynomial holds
// an empty coefficient vector and has degree -1 (the "-infinity" sentinel).
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(Rat constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    explicit QPoly(std::int64_t constant) : QPoly(Rat(constant)) {}

    static QPoly from_coeffs(std::vector<Rat> coeffs) {
        QPoly p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }
    static QPoly monomial(Rat coeff, int exp) {
        if (exp < 0) throw error("negative exponent");
        if (coeff == 0) return QPoly();
        std::vector<Rat> c(static_cast<std::size_t>(exp) + 1, Rat(0));
        c.back() = std::move(coeff);
        return from_coeffs(std::move(c));
    }
    static QPoly variable() { return monomial(Rat(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }
    const Rat& leading() const {
        if (is_zero()) throw error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_constant() const { return degree() <= 0; }
    bool is_monic() const { return !is_zero() && leading() == 1; }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& s) const;
    friend QPoly operator*(const Rat& s, const QPoly& p) { return p * s; }
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

    QPoly pow(int e) const;
    QPoly derivative() const;
    Rat eval(const Rat& x) const;
    QPoly monic() const;

    // p(c * t), coefficientwise c^k scaling.
    QPoly scale_argument(const Rat& c) const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

// Quotient and remainder with deg(rem) < deg(divisor). Throws on zero divisor.
std::pair<QPoly, QPoly> divrem(const QPoly& p, const QPoly& q);

// Exact quotient; throws if the division leaves a remainder.
QPoly exact_div(const QPoly& p, const QPoly& q);

bool divides(const QPoly& d, const QPoly& p);

// Monic gcd. gcd(p, 0) = monic(p). Throws if both are zero.
QPoly gcd_poly(const QPoly& p, const QPoly& q);

struct SquarefreeDecomposition {
    Rat content;                              // leading coefficient of the input
    std::vector<std::pair<QPoly, int>> factors;  // monic squarefree, pairwise coprime
};

// Yun's gcd chain: input = content * prod factor^multiplicity. Throws on zero.
SquarefreeDecomposition squarefree_decomposition(const QPoly& p);

// Largest k with place^k | p; +infinity for p = 0.
// place must be monic, non-constant and squarefree.
ExtVal valuation_at(const QPoly& p, const QPoly& place);

// s^weight * p(1/s) as a polynomial in s; requires deg(p) <= weight.
QPoly reverse_at_infinity(const QPoly& p, int weight);

// Pairwise-coprime monic basis such that every input is a scalar times a
// product of basis elements. Inputs must be squarefree; constants are
// skipped. The basis is returned sorted (degree, then coefficients).
std::vector<QPoly> gcd_free_basis(const std::vector<QPoly>& inputs);

}  // namespace k3fib
