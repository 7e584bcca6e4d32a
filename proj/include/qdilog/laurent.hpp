#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qdl {

using Int = mpz_class;

// Laurent polynomial in t = q^{1/2}; exponents count half-powers of q.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(const Int& c);

    static LaurentPoly monomial(int exp, const Int& coeff = 1);

    const std::map<int, Int>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Int coeff(int exp) const;
    int min_exp() const;
    int max_exp() const;
    const Int& lead() const;
    Int content() const;

    LaurentPoly shifted(int k) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    // Exact division of every coefficient by an integer.
    LaurentPoly divided_exact(const Int& d) const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    void add_term(int exp, const Int& v);
    std::map<int, Int> c_;
};

enum class LpOp { Add, Mul };

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, LpOp op);

// prod_{i=1}^{j} (q^{i/2} - q^{-i/2})
LaurentPoly qpochhammer_denominator(int j);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LaurentPoly parse_laurent(std::string_view s);

// "q^{3/2}", "q", "q^{-1}", "" for exponent 0.
std::string q_power_str(int exp);

}  // namespace qdl
