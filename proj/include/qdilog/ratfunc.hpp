#pragma once

#include "qdilog/laurent.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdl {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by the zero function") {}
};

// num/den in lowest terms. den has min exponent 0 and positive leading
// coefficient, and the integer contents of num and den are coprime, so
// equal values compare equal structurally.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}
    RatFunc(LaurentPoly num, LaurentPoly den);

    static RatFunc t_power(int exp) { return RatFunc(LaurentPoly::monomial(exp)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    // Multiply by t^k without renormalizing the denominator.
    RatFunc times_t(int k) const;

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    struct Raw {};
    RatFunc(LaurentPoly num, LaurentPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

enum class RfOp { Add, Mul, Div };

RatFunc rf_arith(const RatFunc& a, const RatFunc& b, RfOp op);

// Greatest common divisor of two Laurent polynomials, returned primitive with
// min exponent 0 and positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

RatFunc parse_ratfunc(std::string_view s);

}  // namespace qdl
