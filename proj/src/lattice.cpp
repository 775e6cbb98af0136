#include "k3fib/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace k3fib {

IMat IMat::operator*(const IMat& o) const {
    if (cols_ != o.rows_) throw error("matrix shape mismatch");
    IMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

void IMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IMat::add_row(int i, int j, const Int& c) {
    for (int k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IMat::add_col(int i, int j, const Int& c) {
    for (int k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IMat::negate_row(int i) {
    for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

bool IMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Int determinant(const IMat& m) {
    if (m.rows() != m.cols()) throw error("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return Int(1);
    IMat a = m;
    Int sign(1), prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Int(0);
            a.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

IMat negated_cartan(int n, const std::vector<std::pair<int, int>>& edges) {
    IMat g(n, n);
    for (int i = 0; i < n; ++i) g.at(i, i) = -2;
    for (auto [a, b] : edges) {
        g.at(a, b) = 1;
        g.at(b, a) = 1;
    }
    return g;
}

std::vector<std::pair<int, int>> path_edges(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return e;
}

}  // namespace

IntLattice named_lattice(LatticeName name, int n) {
    IntLattice l;
    switch (name) {
        case LatticeName::U: {
            l.gram = IMat(2, 2);
            l.gram.at(0, 1) = 1;
            l.gram.at(1, 0) = 1;
            l.name = "U";
            break;
        }
        case LatticeName::A: {
            if (n < 1) throw error("A_n requires n >= 1");
            l.gram = negated_cartan(n, path_edges(n));
            l.name = "A" + std::to_string(n);
            break;
        }
        case LatticeName::D: {
            if (n < 4) throw error("D_n requires n >= 4");
            auto edges = path_edges(n - 1);
            edges.emplace_back(n - 3, n - 1);  // fork at the penultimate node
            l.gram = negated_cartan(n, edges);
            l.name = "D" + std::to_string(n);
            break;
        }
        case LatticeName::E6:
        case LatticeName::E7:
        case LatticeName::E8: {
            int rank = name == LatticeName::E6 ? 6 : name == LatticeName::E7 ? 7 : 8;
            // Bourbaki numbering: chain 1-3-4-5-...-rank with node 2 attached to 4.
            std::vector<std::pair<int, int>> edges = {{0, 2}, {1, 3}};
            for (int i = 2; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
            l.gram = negated_cartan(rank, edges);
            l.name = "E" + std::to_string(rank);
            break;
        }
    }
    l.components = {l.name};
    return l;
}

IntLattice named_lattice(const std::string& name) {
    if (name == "U") return named_lattice(LatticeName::U);
    if (name == "E6") return named_lattice(LatticeName::E6);
    if (name == "E7") return named_lattice(LatticeName::E7);
    if (name == "E8") return named_lattice(LatticeName::E8);
    if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'D')) {
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw parse_error("unknown lattice name '" + name + "'");
        int n = std::stoi(name.substr(1));
        return named_lattice(name[0] == 'A' ? LatticeName::A : LatticeName::D, n);
    }
    throw parse_error("unknown lattice name '" + name + "'");
}

IntLattice parse_lattice_spec(const std::string& spec) {
    std::vector<IntLattice> parts;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, '+')) {
        std::string trimmed;
        for (char c : token)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty()) throw parse_error("empty lattice summand in '" + spec + "'");
        parts.push_back(named_lattice(trimmed));
    }
    if (parts.empty()) throw parse_error("empty lattice spec");
    return direct_sum(parts);
}

IntLattice direct_sum(const std::vector<IntLattice>& parts) {
    if (parts.empty()) throw error("direct sum of no lattices");
    int rank = 0;
    for (const auto& p : parts) rank += p.rank();
    IntLattice l;
    l.gram = IMat(rank, rank);
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.rank(); ++i)
            for (int j = 0; j < p.rank(); ++j) l.gram.at(off + i, off + j) = p.gram.at(i, j);
        off += p.rank();
        for (const auto& c : p.components) l.components.push_back(c);
        if (!l.name.empty()) l.name += "+";
        l.name += p.name;
    }
    return l;
}

std::pair<int, int> signature(const IntLattice& lattice) {
    if (!lattice.gram.is_symmetric()) throw error("Gram matrix is not symmetric");
    const int n = lattice.rank();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rat(lattice.gram.at(i, j));

    int pos = 0, neg = 0;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            int swap = -1, mix = -1;
            for (int j = k + 1; j < n; ++j) {
                if (swap < 0 && m[j][j] != 0) swap = j;
                if (mix < 0 && m[k][j] != 0) mix = j;
            }
            if (swap >= 0) {
                std::swap(m[swap], m[k]);
                for (int i = 0; i < n; ++i) std::swap(m[i][swap], m[i][k]);
            } else if (mix >= 0) {
                // Zero diagonal block: fold row/col `mix` into k to expose
                // a nonzero diagonal entry (congruence transform).
                for (int i = 0; i < n; ++i) m[k][i] += m[mix][i];
                for (int i = 0; i < n; ++i) m[i][k] += m[i][mix];
            } else {
                throw error("degenerate Gram matrix");
            }
        }
        const Rat d = m[k][k];
        if (d > 0) ++pos;
        else ++neg;
        for (int j = k + 1; j < n; ++j) {
            if (m[k][j] == 0) continue;
            Rat f = m[k][j] / d;
            for (int i = 0; i < n; ++i) m[j][i] -= f * m[k][i];
            for (int i = 0; i < n; ++i) m[i][j] -= f * m[i][k];
        }
    }
    return {pos, neg};
}

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// Position of the smallest-|.|-nonzero entry of m in the trailing block
// starting at (k, k); rows scanned before columns. {-1,-1} if all zero.
std::pair<int, int> find_pivot(const IMat& m, int k) {
    std::pair<int, int> best{-1, -1};
    Int best_abs(0);
    for (int i = k; i < m.rows(); ++i)
        for (int j = k; j < m.cols(); ++j) {
            const Int& e = m.at(i, j);
            if (e == 0) continue;
            Int a = int_abs(e);
            if (best.first < 0 || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    return best;
}

}  // namespace

SmithNormalForm smith_normal_form(const IMat& m) {
    SmithNormalForm s{m, IMat::identity(m.rows()), IMat::identity(m.cols())};
    IMat& d = s.d;
    const int n = std::min(m.rows(), m.cols());

    int k = 0;
    while (k < n) {
        auto [pi, pj] = find_pivot(d, k);
        if (pi < 0) break;
        d.swap_rows(k, pi);
        s.u.swap_rows(k, pi);
        d.swap_cols(k, pj);
        s.v.swap_cols(k, pj);

        bool dirty = false;
        // Clear column k.
        for (int i = k + 1; i < d.rows(); ++i) {
            if (d.at(i, k) == 0) continue;
            Int q = d.at(i, k) / d.at(k, k);
            d.add_row(i, k, -q);
            s.u.add_row(i, k, -q);
            if (d.at(i, k) != 0) {
                d.swap_rows(k, i);
                s.u.swap_rows(k, i);
                dirty = true;
            }
        }
        if (dirty) continue;
        // Clear row k.
        for (int j = k + 1; j < d.cols(); ++j) {
            if (d.at(k, j) == 0) continue;
            Int q = d.at(k, j) / d.at(k, k);
            d.add_col(j, k, -q);
            s.v.add_col(j, k, -q);
            if (d.at(k, j) != 0) {
                d.swap_cols(k, j);
                s.v.swap_cols(k, j);
                dirty = true;
            }
        }
        if (dirty) continue;
        // Pivot must divide the remaining block for the divisibility chain.
        bool divides_all = true;
        for (int i = k + 1; i < d.rows() && divides_all; ++i)
            for (int j = k + 1; j < d.cols(); ++j)
                if (d.at(i, j) % d.at(k, k) != 0) {
                    d.add_row(k, i, Int(1));
                    s.u.add_row(k, i, Int(1));
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;
        ++k;
    }

    for (int i = 0; i < n; ++i)
        if (d.at(i, i) < 0) {
            d.negate_row(i);
            s.u.negate_row(i);
        }
    return s;
}

DiscriminantGroup discriminant_group(const IntLattice& lattice) {
    if (determinant(lattice.gram) == 0) throw error("degenerate Gram matrix");
    SmithNormalForm s = smith_normal_form(lattice.gram);
    DiscriminantGroup g;
    for (int i = 0; i < s.d.rows(); ++i)
        if (s.d.at(i, i) > 1) g.invariant_factors.push_back(s.d.at(i, i));
    return g;
}

std::pair<bool, int> p_elementary_profile(const IntLattice& lattice, std::int64_t p) {
    if (!is_prime_i64(p)) throw error("p must be prime");
    DiscriminantGroup g = discriminant_group(lattice);
    bool elementary = true;
    for (const Int& d : g.invariant_factors)
        if (d != p) elementary = false;
    return {elementary, static_cast<int>(g.invariant_factors.size())};
}

bool same_components(const IntLattice& a, const IntLattice& b) {
    std::vector<std::string> ca = a.components, cb = b.components;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
}

}  // namespace k3fib
