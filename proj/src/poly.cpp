#include "k3fib/poly.hpp"

#include <algorithm>

namespace k3fib {

QPoly QPoly::operator-() const {
    std::vector<Rat> c(coeffs_);
    for (auto& x : c) x = -x;
    return from_coeffs(std::move(c));
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return from_coeffs(std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return from_coeffs(std::move(c));
}

QPoly QPoly::operator*(const Rat& s) const {
    if (s == 0) return QPoly();
    std::vector<Rat> c(coeffs_);
    for (auto& x : c) x *= s;
    return from_coeffs(std::move(c));
}

QPoly QPoly::pow(int e) const {
    if (e < 0) throw error("negative polynomial power");
    QPoly r(Rat(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

QPoly QPoly::derivative() const {
    if (degree() <= 0) return QPoly();
    std::vector<Rat> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rat(static_cast<std::int64_t>(i));
    return from_coeffs(std::move(c));
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::monic() const {
    if (is_zero()) throw error("zero polynomial cannot be made monic");
    return *this * (Rat(1) / leading());
}

QPoly QPoly::scale_argument(const Rat& c) const {
    std::vector<Rat> out(coeffs_);
    Rat p(1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= p;
        p *= c;
    }
    return from_coeffs(std::move(out));
}

std::pair<QPoly, QPoly> divrem(const QPoly& p, const QPoly& q) {
    if (q.is_zero()) throw error("polynomial division by zero");
    std::vector<Rat> rem(p.coeffs());
    const int dq = q.degree();
    const Rat lead = q.leading();
    if (p.degree() < dq) return {QPoly(), p};
    std::vector<Rat> quot(static_cast<std::size_t>(p.degree() - dq) + 1, Rat(0));
    for (int k = p.degree(); k >= dq; --k) {
        Rat c = rem[static_cast<std::size_t>(k)] / lead;
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k - dq)] = c;
        for (int j = 0; j <= dq; ++j)
            rem[static_cast<std::size_t>(k - dq + j)] -= c * q.coeff(j);
    }
    return {QPoly::from_coeffs(std::move(quot)), QPoly::from_coeffs(std::move(rem))};
}

QPoly exact_div(const QPoly& p, const QPoly& q) {
    auto [quot, rem] = divrem(p, q);
    if (!rem.is_zero()) throw error("inexact polynomial division");
    return quot;
}

bool divides(const QPoly& d, const QPoly& p) {
    if (d.is_zero()) return p.is_zero();
    return divrem(p, d).second.is_zero();
}

QPoly gcd_poly(const QPoly& p, const QPoly& q) {
    if (p.is_zero() && q.is_zero()) throw error("gcd of two zero polynomials");
    QPoly a = p, b = q;
    while (!b.is_zero()) {
        QPoly r = divrem(a, b).second;
        a = b;
        // Normalizing each remainder keeps coefficient growth in check.
        b = r.is_zero() ? QPoly() : r.monic();
    }
    return a.monic();
}

SquarefreeDecomposition squarefree_decomposition(const QPoly& p) {
    if (p.is_zero()) throw error("squarefree decomposition of zero");
    SquarefreeDecomposition out;
    out.content = p.leading();
    QPoly f = p.monic();
    if (f.degree() == 0) return out;

    // Yun's algorithm (characteristic 0).
    QPoly u = gcd_poly(f, f.derivative());
    QPoly v = exact_div(f, u);
    QPoly w = exact_div(f.derivative(), u);
    int mult = 1;
    while (v.degree() > 0) {
        QPoly z = w - v.derivative();
        QPoly g = gcd_poly(v, z);
        if (g.degree() > 0) out.factors.emplace_back(g, mult);
        v = exact_div(v, g);
        w = z.is_zero() ? QPoly() : exact_div(z, g);
        ++mult;
    }
    return out;
}

ExtVal valuation_at(const QPoly& p, const QPoly& place) {
    if (place.is_zero() || place.degree() < 1) throw error("place must be non-constant");
    if (!place.is_monic()) throw error("place must be monic");
    if (gcd_poly(place, place.derivative()).degree() != 0)
        throw error("place must be squarefree");
    if (p.is_zero()) return ExtVal::infinity();
    std::int64_t k = 0;
    QPoly r = p;
    while (true) {
        auto [quot, rem] = divrem(r, place);
        if (!rem.is_zero()) return ExtVal::of(k);
        r = quot;
        ++k;
    }
}

QPoly reverse_at_infinity(const QPoly& p, int weight) {
    if (weight < 0) throw error("negative weight");
    if (p.degree() > weight)
        throw error("weighted degree overflow: deg " + std::to_string(p.degree()) +
                    " exceeds weight " + std::to_string(weight));
    if (p.is_zero()) return QPoly();
    std::vector<Rat> c(static_cast<std::size_t>(weight) + 1, Rat(0));
    for (int k = 0; k <= p.degree(); ++k) c[static_cast<std::size_t>(weight - k)] = p.coeff(k);
    return QPoly::from_coeffs(std::move(c));
}

std::vector<QPoly> gcd_free_basis(const std::vector<QPoly>& inputs) {
    std::vector<QPoly> basis;
    for (const QPoly& raw : inputs) {
        if (raw.is_zero() || raw.degree() < 1) continue;
        QPoly f = raw.monic();
        std::vector<QPoly> next;
        for (const QPoly& b : basis) {
            if (f.degree() == 0) {
                next.push_back(b);
                continue;
            }
            QPoly g = gcd_poly(f, b);
            if (g.degree() == 0) {
                next.push_back(b);
                continue;
            }
            QPoly b_rest = exact_div(b, g);
            if (b_rest.degree() > 0) next.push_back(b_rest);
            next.push_back(g);
            f = exact_div(f, g);
        }
        if (f.degree() > 0) next.push_back(f);
        basis = std::move(next);
    }
    std::sort(basis.begin(), basis.end(), [](const QPoly& a, const QPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int k = a.degree(); k >= 0; --k)
            if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
        return false;
    });
    return basis;
}

}  // namespace k3fib
