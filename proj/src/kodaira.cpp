#include "k3fib/kodaira.hpp"

#include <algorithm>
#include <cctype>

namespace k3fib {

std::string fiber_type_name(const FiberType& t) {
    switch (t.kind) {
        case FiberKind::In: return "I" + std::to_string(t.n);
        case FiberKind::InStar: return "I" + std::to_string(t.n) + "*";
        case FiberKind::II: return "II";
        case FiberKind::III: return "III";
        case FiberKind::IV: return "IV";
        case FiberKind::IIStar: return "II*";
        case FiberKind::IIIStar: return "III*";
        case FiberKind::IVStar: return "IV*";
    }
    throw error("unreachable fiber kind");
}

FiberType parse_fiber_type(const std::string& name) {
    if (name == "II") return kFiberII;
    if (name == "III") return kFiberIII;
    if (name == "IV") return kFiberIV;
    if (name == "II*") return kFiberIIStar;
    if (name == "III*") return kFiberIIIStar;
    if (name == "IV*") return kFiberIVStar;
    if (name.size() >= 2 && name[0] == 'I' && std::isdigit(static_cast<unsigned char>(name[1]))) {
        bool star = name.back() == '*';
        std::string digits = name.substr(1, name.size() - 1 - (star ? 1 : 0));
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw parse_error("bad fiber type '" + name + "'");
        int n = std::stoi(digits);
        return star ? fiber_InStar(n) : fiber_In(n);
    }
    throw parse_error("bad fiber type '" + name + "'");
}

FiberType classify_valuations(const ExtVal& va, const ExtVal& vb, std::int64_t vd) {
    if (vd < 0) throw error("negative discriminant valuation");
    const auto triple = [&] {
        return "(" + va.to_string() + ", " + vb.to_string() + ", " + std::to_string(vd) + ")";
    };
    if (va >= 4 && vb >= 6)
        throw non_minimal_error("non-minimal valuation triple " + triple());
    if (vd == 0) return fiber_In(0);
    if (va == 0) return fiber_In(static_cast<int>(vd));

    // Additive rows: each pins vd to the type's Euler number.
    const auto require = [&](std::int64_t expected, FiberType t) {
        if (vd != expected)
            throw inconsistent_error("valuation triple " + triple() + " matches no row");
        return t;
    };
    if (va >= 1 && vb == 1) return require(2, kFiberII);
    if (va == 1 && vb >= 2) return require(3, kFiberIII);
    if (va >= 2 && vb == 2) return require(4, kFiberIV);
    if (va >= 2 && vb >= 3 && vd == 6) return fiber_InStar(0);
    if (va == 2 && vb == 3 && vd >= 7) return fiber_InStar(static_cast<int>(vd - 6));
    if (va >= 3 && vb == 4) return require(8, kFiberIVStar);
    if (va == 3 && vb >= 5) return require(9, kFiberIIIStar);
    if (va >= 4 && vb == 5) return require(10, kFiberIIStar);
    throw inconsistent_error("valuation triple " + triple() + " matches no row");
}

std::int64_t euler_number(const FiberType& t) {
    switch (t.kind) {
        case FiberKind::In: return t.n;
        case FiberKind::InStar: return t.n + 6;
        case FiberKind::II: return 2;
        case FiberKind::III: return 3;
        case FiberKind::IV: return 4;
        case FiberKind::IVStar: return 8;
        case FiberKind::IIIStar: return 9;
        case FiberKind::IIStar: return 10;
    }
    throw error("unreachable fiber kind");
}

std::int64_t component_count(const FiberType& t) {
    switch (t.kind) {
        case FiberKind::In: return t.n == 0 ? 1 : t.n;
        case FiberKind::InStar: return t.n + 5;
        case FiberKind::II: return 1;
        case FiberKind::III: return 2;
        case FiberKind::IV: return 3;
        case FiberKind::IVStar: return 7;
        case FiberKind::IIIStar: return 8;
        case FiberKind::IIStar: return 9;
    }
    throw error("unreachable fiber kind");
}

std::optional<IntLattice> fiber_root_lattice(const FiberType& t) {
    switch (t.kind) {
        case FiberKind::In:
            if (t.n >= 2) return named_lattice(LatticeName::A, t.n - 1);
            return std::nullopt;
        case FiberKind::InStar: return named_lattice(LatticeName::D, t.n + 4);
        case FiberKind::II: return std::nullopt;
        case FiberKind::III: return named_lattice(LatticeName::A, 1);
        case FiberKind::IV: return named_lattice(LatticeName::A, 2);
        case FiberKind::IVStar: return named_lattice(LatticeName::E6);
        case FiberKind::IIIStar: return named_lattice(LatticeName::E7);
        case FiberKind::IIStar: return named_lattice(LatticeName::E8);
    }
    throw error("unreachable fiber kind");
}

std::vector<Rat> contribution_values(const FiberType& t) {
    std::vector<Rat> values;
    switch (t.kind) {
        case FiberKind::In:
            for (int i = 0; i <= t.n; ++i)
                values.push_back(t.n == 0 ? Rat(0) : Rat(Int(i) * Int(t.n - i), Int(t.n)));
            break;
        case FiberKind::InStar:
            values = {Rat(0), Rat(1), Rat(1) + Rat(Int(t.n), Int(4))};
            break;
        case FiberKind::II:
        case FiberKind::IIStar:
            values = {Rat(0)};
            break;
        case FiberKind::III:
            values = {Rat(0), Rat(Int(1), Int(2))};
            break;
        case FiberKind::IV:
            values = {Rat(0), Rat(Int(2), Int(3))};
            break;
        case FiberKind::IVStar:
            values = {Rat(0), Rat(Int(4), Int(3))};
            break;
        case FiberKind::IIIStar:
            values = {Rat(0), Rat(Int(3), Int(2))};
            break;
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

bool stable_type_allowed(const FiberType& t, std::int64_t p) {
    if (p < 5 || !is_prime_i64(p)) throw error("stable_type_allowed requires a prime p >= 5");
    switch (t.kind) {
        case FiberKind::In:
        case FiberKind::InStar: return t.n % p == 0;
        default: return true;
    }
}

}  // namespace k3fib
