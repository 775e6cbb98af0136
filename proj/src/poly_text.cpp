#include "k3fib/poly_text.hpp"

#include <cctype>
#include <sstream>

namespace k3fib {

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw parse_error("polynomial parse error at position " + std::to_string(pos) + ": " + what);
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Int(std::string(s.substr(start, pos - start)));
    }

    Rat number() {
        Int num = integer();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            Int den = integer();
            if (den == 0) fail("zero denominator");
            return Rat(num, den);
        }
        return Rat(num);
    }

    QPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos;
            QPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 't') {
            ++pos;
            return QPoly::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return QPoly(number());
        fail("expected number, 't' or '('");
    }

    QPoly power() {
        QPoly base = primary();
        while (eat('^')) {
            skip_ws();
            Int e = integer();
            if (e < 0 || e > 1000) fail("exponent out of range");
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }

    bool starts_factor() {
        char c = peek();
        return c == '(' || c == 't' || std::isdigit(static_cast<unsigned char>(c));
    }

    QPoly term() {
        QPoly acc = power();
        while (true) {
            if (eat('*')) {
                acc = acc * power();
            } else if (starts_factor()) {
                acc = acc * power();  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    QPoly signed_term() {
        bool neg = false;
        while (true) {
            if (eat('-')) neg = !neg;
            else if (eat('+')) continue;
            else break;
        }
        QPoly t = term();
        return neg ? -t : t;
    }

    QPoly expr() {
        QPoly acc = signed_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc = acc + signed_term();
            } else if (c == '-') {
                ++pos;
                acc = acc - signed_term();
            } else {
                break;
            }
        }
        return acc;
    }
};

std::string monomial_string(const Rat& c, int k) {
    std::string coeff;
    Rat abs = c < 0 ? -c : c;
    if (k == 0 || abs != 1) coeff = rat_to_string(abs);
    std::string var;
    if (k == 1) var = "t";
    else if (k > 1) var = "t^" + std::to_string(k);
    if (coeff.empty()) return var;
    if (var.empty()) return coeff;
    return coeff + "*" + var;
}

}  // namespace

QPoly parse_poly(const std::string& text) {
    Parser p{text};
    QPoly result = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return result;
}

std::string poly_to_string(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rat c = p.coeff(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        out << monomial_string(c, k);
    }
    return out.str();
}

}  // namespace k3fib
