#include "qdilog/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace qdl {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) c_.emplace(0, Int(c));
}

LaurentPoly::LaurentPoly(const Int& c) {
    if (c != 0) c_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int exp, const Int& coeff) {
    LaurentPoly p;
    if (coeff != 0) p.c_.emplace(exp, coeff);
    return p;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (c_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (c_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

const Int& LaurentPoly::lead() const {
    if (c_.empty()) throw std::logic_error("lead of zero polynomial");
    return c_.rbegin()->second;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, v] : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

void LaurentPoly::add_term(int exp, const Int& v) {
    if (v == 0) return;
    auto [it, fresh] = c_.emplace(exp, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_.emplace_hint(r.c_.end(), e + k, v);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, v] : r.c_) v = -v;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) add_term(e, v);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) add_term(e, -v);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    Int prod;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) {
            prod = va * vb;
            r.add_term(ea + eb, prod);
        }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::divided_exact(const Int& d) const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) {
        Int q;
        mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
        r.c_.emplace_hint(r.c_.end(), e, q);
    }
    return r;
}

std::string q_power_str(int exp) {
    if (exp == 0) return "";
    if (exp == 2) return "q";
    if (exp % 2 == 0) return "q^{" + std::to_string(exp / 2) + "}";
    return "q^{" + std::to_string(exp) + "/2}";
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, v] = *it;
        bool neg = v < 0;
        Int mag = abs(v);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono = q_power_str(e);
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
        first = false;
    }
    return out;
}

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, LpOp op) {
    return op == LpOp::Add ? a + b : a * b;
}

LaurentPoly qpochhammer_denominator(int j) {
    if (j < 0) throw std::invalid_argument("qpochhammer_denominator: j must be >= 0");
    LaurentPoly r(1);
    for (int i = 1; i <= j; ++i) r *= LaurentPoly::monomial(i) - LaurentPoly::monomial(-i);
    return r;
}

namespace {

struct Cursor {
    std::string_view s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError("expected '" + std::string(1, c) + "' at offset " + std::to_string(i) +
                             " in \"" + std::string(s) + "\"");
    }
    std::string digits() {
        skip();
        size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (b == i) throw ParseError("expected digits at offset " + std::to_string(b));
        return std::string(s.substr(b, i - b));
    }
};

// exponent in halves after "q"
int parse_q_exponent(Cursor& c) {
    if (!c.accept('^')) return 2;
    c.expect('{');
    bool neg = c.accept('-');
    int v = std::stoi(c.digits());
    int halves = 2 * v;
    if (c.accept('/')) {
        if (c.digits() != "2") throw ParseError("only /2 denominators allowed in exponents");
        halves = v;
    }
    c.expect('}');
    return neg ? -halves : halves;
}

LaurentPoly parse_term(Cursor& c) {
    Int coeff = 1;
    bool have_num = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = Int(c.digits());
        have_num = true;
        if (!c.accept('*')) return LaurentPoly(coeff);
    }
    if (c.peek() != 'q') {
        if (have_num) throw ParseError("expected 'q' after '*'");
        throw ParseError("expected a term at offset " + std::to_string(c.i));
    }
    ++c.i;
    return LaurentPoly::monomial(parse_q_exponent(c), coeff);
}

LaurentPoly parse_poly_at(Cursor& c) {
    LaurentPoly r;
    bool neg = c.accept('-');
    r += neg ? -parse_term(c) : parse_term(c);
    for (;;) {
        char p = c.peek();
        if (p == '+') {
            ++c.i;
            r += parse_term(c);
        } else if (p == '-') {
            ++c.i;
            r -= parse_term(c);
        } else {
            break;
        }
    }
    return r;
}

}  // namespace

LaurentPoly parse_laurent(std::string_view s) {
    Cursor c{s};
    LaurentPoly r = parse_poly_at(c);
    if (!c.eof()) throw ParseError("trailing input in \"" + std::string(s) + "\"");
    return r;
}

}  // namespace qdl
