#pragma once

#include "qdilog/curves.hpp"
#include "qdilog/quiver.hpp"
#include "qdilog/ratfunc.hpp"
#include "qdilog/report.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qdl {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ZeroVector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAdmissible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NegativeClass : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

int degree(const ExpVec& v);

// Graded order: total degree first, then lexicographic.
struct DegLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Antisymmetric form of the unidirectional A_n quiver, in halves.
struct QForm {
    int n;
    int operator()(const ExpVec& a, const ExpVec& b) const;
};

int qform(const QuiverSpec& q, const ExpVec& a, const ExpVec& b);

class TorusSeries {
public:
    using Terms = std::map<ExpVec, RatFunc, DegLex>;

    TorusSeries(int n, int D) : n_(n), D_(D) {}
    static TorusSeries unit(int n, int D);
    static TorusSeries monomial(const ExpVec& a, int D, const RatFunc& c = RatFunc(1));

    int n() const { return n_; }
    int D() const { return D_; }
    const Terms& terms() const { return terms_; }
    RatFunc coeff(const ExpVec& a) const;
    void add(const ExpVec& a, const RatFunc& c);

    friend bool operator==(const TorusSeries& a, const TorusSeries& b) {
        return a.n_ == b.n_ && a.D_ == b.D_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    int D_;
    Terms terms_;
};

TorusSeries series_mul(const TorusSeries& a, const TorusSeries& b);
TorusSeries series_product(const std::vector<TorusSeries>& factors);

// Keller: q^{j/2} / prod_{i=1}^{j} (q^i - 1).
// Literal: 1 / prod_{i=1}^{j} (q^{i/2} - q^{-i/2}).
enum class DilogCoefficient { Keller, Literal };

std::string coefficient_str(DilogCoefficient c);
DilogCoefficient parse_coefficient(const std::string& s);

RatFunc dilog_coefficient(int j, DilogCoefficient kind);

struct Conventions {
    DilogCoefficient coefficient = DilogCoefficient::Keller;
    int pentagon_middle_halves = 0;  // middle argument q^{c} x_(1,1), c in halves
    int skein_shift_halves = 0;      // extra q-power per unit of degree in skein_to_torus
};

// sum_j coeff_j * q^{shift*j/2} * x_alpha^j, truncated at total degree D.
TorusSeries qdilog(const ExpVec& alpha, int D, DilogCoefficient kind = DilogCoefficient::Keller,
                   int shift_halves = 0);

struct Discrepancy {
    ExpVec exponent;
    RatFunc lhs;
    RatFunc rhs;
};

std::optional<Discrepancy> first_discrepancy(const TorusSeries& lhs, const TorusSeries& rhs);

Report compare_report(const std::string& identity, const TorusSeries& lhs, const TorusSeries& rhs);

TorusSeries pentagon_lhs(int D, const Conventions& conv = {});
TorusSeries pentagon_rhs(int D, const Conventions& conv = {});
Report verify_pentagon(int D, const Conventions& conv = {});

// Values of c (halves) for which the pentagon holds at degree D, from candidates.
std::vector<int> scan_pentagon_middle(int D, const std::vector<int>& candidates, DilogCoefficient kind);

TorusSeries reineke_lhs(int n, int D, const Conventions& conv = {});
TorusSeries reineke_rhs(const Order& order, int D, const Conventions& conv = {});
// require_admissible=false is for negative controls on arbitrary permutations.
Report verify_reineke(const Order& order, int D, const Conventions& conv = {}, bool require_admissible = true);

TorusSeries skein_to_torus(const std::vector<CurveClass>& word, int n, int D, const Conventions& conv = {});

json exponent_json(const ExpVec& v);
json series_json(const TorusSeries& s);

}  // namespace qdl
