#include "qdilog/ratfunc.hpp"

#include <vector>

namespace qdl {

namespace {

using QPoly = std::vector<mpq_class>;  // dense, index = degree

QPoly to_dense(const LaurentPoly& p) {
    int lo = p.min_exp();
    QPoly d(p.max_exp() - lo + 1);
    for (const auto& [e, v] : p.terms()) d[e - lo] = v;
    return d;
}

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_monic(QPoly& p) {
    mpq_class l = p.back();
    for (auto& c : p) c /= l;
}

// remainder of a by monic b
void rem_monic(QPoly& a, const QPoly& b) {
    size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        mpq_class f = a.back();
        size_t shift = a.size() - b.size();
        if (f != 0)
            for (size_t i = 0; i < db; ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
}

LaurentPoly primitive_from(const QPoly& p) {
    Int l = 1;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    LaurentPoly r;
    for (size_t i = 0; i < p.size(); ++i) {
        mpq_class v = p[i] * l;
        r += LaurentPoly::monomial(static_cast<int>(i), v.get_num());
    }
    Int g = r.content();
    if (r.lead() < 0) g = -g;
    return r.divided_exact(g);
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly(0);
    if (a.is_zero() || b.is_zero()) {
        const LaurentPoly& x = a.is_zero() ? b : a;
        LaurentPoly r = x.shifted(-x.min_exp());
        Int g = r.content();
        if (r.lead() < 0) g = -g;
        return r.divided_exact(g);
    }
    if (a.max_exp() == a.min_exp() || b.max_exp() == b.min_exp()) return LaurentPoly(1);
    QPoly x = to_dense(a), y = to_dense(b);
    if (x.size() < y.size()) std::swap(x, y);
    make_monic(y);
    for (;;) {
        rem_monic(x, y);
        if (x.empty()) break;
        if (x.size() == 1) return LaurentPoly(1);
        std::swap(x, y);
        make_monic(y);
    }
    return primitive_from(y);
}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    int shift = den_.min_exp();
    if (shift != 0) {
        den_ = den_.shifted(-shift);
        num_ = num_.shifted(-shift);
    }
    if (den_.max_exp() > 0) {
        LaurentPoly g = poly_gcd(num_, den_);
        if (!(g == LaurentPoly(1))) {
            int gs = num_.min_exp();
            LaurentPoly np = num_.shifted(-gs);
            // exact division over Z[t] of primitive-by-primitive gcd
            QPoly qn = to_dense(np), qd = to_dense(den_), qg = to_dense(g);
            auto divide = [&](const QPoly& a) {
                QPoly r(a.size() - qg.size() + 1);
                QPoly w = a;
                for (size_t k = r.size(); k-- > 0;) {
                    mpq_class f = w[k + qg.size() - 1] / qg.back();
                    r[k] = f;
                    for (size_t i = 0; i < qg.size(); ++i) w[k + i] -= f * qg[i];
                }
                LaurentPoly out;
                for (size_t i = 0; i < r.size(); ++i) {
                    if (r[i].get_den() != 1) throw std::logic_error("inexact gcd division");
                    out += LaurentPoly::monomial(static_cast<int>(i), r[i].get_num());
                }
                return out;
            };
            num_ = divide(qn).shifted(gs);
            den_ = divide(qd);
        }
    }
    Int c = gcd(num_.content(), den_.content());
    if (den_.lead() < 0) c = -c;
    if (c != 1) {
        num_ = num_.divided_exact(c);
        den_ = den_.divided_exact(c);
    }
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) return *this = RatFunc();
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (is_zero()) return *this;
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
}

RatFunc RatFunc::times_t(int k) const { return RatFunc(num_.shifted(k), den_, Raw{}); }

std::string RatFunc::str() const {
    if (den_ == LaurentPoly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc rf_arith(const RatFunc& a, const RatFunc& b, RfOp op) {
    switch (op) {
        case RfOp::Add: return a + b;
        case RfOp::Mul: return a * b;
        case RfOp::Div: return a / b;
    }
    throw std::invalid_argument("unknown op");
}

RatFunc parse_ratfunc(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\n");
    if (b == std::string_view::npos) throw ParseError("empty rational function");
    if (s[b] != '(') return RatFunc(parse_laurent(s));
    int depth = 0;
    size_t close = std::string_view::npos;
    for (size_t i = b; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) {
            close = i;
            break;
        }
    }
    if (close == std::string_view::npos) throw ParseError("unbalanced parentheses");
    LaurentPoly num = parse_laurent(s.substr(b + 1, close - b - 1));
    std::string_view rest = s.substr(close + 1);
    size_t slash = rest.find_first_not_of(" \t\n");
    if (slash == std::string_view::npos) return RatFunc(num);
    if (rest[slash] != '/') throw ParseError("expected '/' after numerator");
    rest = rest.substr(slash + 1);
    size_t ob = rest.find_first_not_of(" \t\n");
    size_t cb = rest.find_last_not_of(" \t\n");
    if (ob == std::string_view::npos || rest[ob] != '(' || rest[cb] != ')')
        throw ParseError("denominator must be parenthesized");
    LaurentPoly den = parse_laurent(rest.substr(ob + 1, cb - ob - 1));
    return RatFunc(num, den);
}

}  // namespace qdl
