#include "qdilog/torus.hpp"

#include <algorithm>
#include <numeric>

namespace qdl {

int degree(const ExpVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool DegLex::operator()(const ExpVec& a, const ExpVec& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a < b;
}

int QForm::operator()(const ExpVec& a, const ExpVec& b) const {
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw DimensionMismatch("exponent vectors must have length " + std::to_string(n));
    int r = 0;
    for (int i = 0; i + 1 < n; ++i) r += a[i] * b[i + 1] - a[i + 1] * b[i];
    return r;
}

int qform(const QuiverSpec& q, const ExpVec& a, const ExpVec& b) { return QForm{q.n}(a, b); }

TorusSeries TorusSeries::unit(int n, int D) {
    TorusSeries s(n, D);
    s.add(ExpVec(n, 0), RatFunc(1));
    return s;
}

TorusSeries TorusSeries::monomial(const ExpVec& a, int D, const RatFunc& c) {
    TorusSeries s(static_cast<int>(a.size()), D);
    s.add(a, c);
    return s;
}

RatFunc TorusSeries::coeff(const ExpVec& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? RatFunc() : it->second;
}

void TorusSeries::add(const ExpVec& a, const RatFunc& c) {
    if (static_cast<int>(a.size()) != n_) throw DimensionMismatch("exponent length differs from series dimension");
    for (int v : a)
        if (v < 0) throw std::invalid_argument("negative exponent");
    if (degree(a) > D_ || c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(a, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TorusSeries series_mul(const TorusSeries& a, const TorusSeries& b) {
    if (a.n() != b.n()) throw DimensionMismatch("series dimensions differ");
    if (a.D() != b.D()) throw DimensionMismatch("series truncation degrees differ");
    const int n = a.n(), D = a.D();
    QForm form{n};
    TorusSeries out(n, D);
    const bool a_outer = a.terms().size() <= b.terms().size();
    const auto& outer = a_outer ? a.terms() : b.terms();
    const auto& inner = a_outer ? b.terms() : a.terms();
    ExpVec key(n);
    for (const auto& [eo, co] : outer) {
        const int dego = degree(eo);
        for (const auto& [ei, ci] : inner) {
            if (dego + degree(ei) > D) break;  // inner is graded
            const ExpVec& ea = a_outer ? eo : ei;
            const ExpVec& eb = a_outer ? ei : eo;
            for (int k = 0; k < n; ++k) key[k] = ea[k] + eb[k];
            const RatFunc& ca = a_outer ? co : ci;
            const RatFunc& cb = a_outer ? ci : co;
            out.add(key, (ca * cb).times_t(form(ea, eb)));
        }
    }
    return out;
}

TorusSeries series_product(const std::vector<TorusSeries>& factors) {
    if (factors.empty()) throw std::invalid_argument("empty product");
    TorusSeries r = factors[0];
    for (size_t k = 1; k < factors.size(); ++k) r = series_mul(r, factors[k]);
    return r;
}

std::string coefficient_str(DilogCoefficient c) {
    return c == DilogCoefficient::Keller ? "keller" : "literal";
}

DilogCoefficient parse_coefficient(const std::string& s) {
    if (s == "keller") return DilogCoefficient::Keller;
    if (s == "literal") return DilogCoefficient::Literal;
    throw std::invalid_argument("unknown coefficient convention \"" + s + "\"");
}

RatFunc dilog_coefficient(int j, DilogCoefficient kind) {
    if (kind == DilogCoefficient::Literal) return RatFunc(LaurentPoly(1), qpochhammer_denominator(j));
    LaurentPoly den(1);
    for (int i = 1; i <= j; ++i) den *= LaurentPoly::monomial(2 * i) - LaurentPoly(1);
    return RatFunc(LaurentPoly::monomial(j), den);
}

TorusSeries qdilog(const ExpVec& alpha, int D, DilogCoefficient kind, int shift_halves) {
    const int n = static_cast<int>(alpha.size());
    const int d = degree(alpha);
    if (d == 0) throw ZeroVector("qdilog needs a nonzero exponent vector");
    TorusSeries out = TorusSeries::unit(n, D);
    TorusSeries x = TorusSeries::monomial(alpha, D);
    TorusSeries power = TorusSeries::unit(n, D);
    for (int j = 1; j * d <= D; ++j) {
        power = series_mul(power, x);
        RatFunc c = dilog_coefficient(j, kind).times_t(shift_halves * j);
        for (const auto& [e, v] : power.terms()) out.add(e, v * c);
    }
    return out;
}

std::optional<Discrepancy> first_discrepancy(const TorusSeries& lhs, const TorusSeries& rhs) {
    if (lhs.n() != rhs.n() || lhs.D() != rhs.D()) throw DimensionMismatch("cannot compare series of different shape");
    auto i = lhs.terms().begin(), j = rhs.terms().begin();
    DegLex less;
    while (i != lhs.terms().end() || j != rhs.terms().end()) {
        if (j == rhs.terms().end() || (i != lhs.terms().end() && less(i->first, j->first)))
            return Discrepancy{i->first, i->second, RatFunc()};
        if (i == lhs.terms().end() || less(j->first, i->first))
            return Discrepancy{j->first, RatFunc(), j->second};
        if (!(i->second == j->second)) return Discrepancy{i->first, i->second, j->second};
        ++i;
        ++j;
    }
    return std::nullopt;
}

json exponent_json(const ExpVec& v) { return json(v); }

json series_json(const TorusSeries& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back({{"exponent", e}, {"coefficient", c.str()}});
    return {{"n", s.n()}, {"D", s.D()}, {"terms", terms}};
}

Report compare_report(const std::string& identity, const TorusSeries& lhs, const TorusSeries& rhs) {
    Report rep;
    rep.identity = identity;
    rep.params["n"] = lhs.n();
    rep.params["D"] = lhs.D();
    if (auto d = first_discrepancy(lhs, rhs)) {
        rep.status = Status::Fail;
        rep.first_discrepancy = {{"exponent", d->exponent}, {"lhs", d->lhs.str()}, {"rhs", d->rhs.str()}};
    }
    return rep;
}

TorusSeries pentagon_lhs(int D, const Conventions& conv) {
    return series_mul(qdilog({1, 0}, D, conv.coefficient), qdilog({0, 1}, D, conv.coefficient));
}

TorusSeries pentagon_rhs(int D, const Conventions& conv) {
    return series_product({qdilog({0, 1}, D, conv.coefficient),
                           qdilog({1, 1}, D, conv.coefficient, conv.pentagon_middle_halves),
                           qdilog({1, 0}, D, conv.coefficient)});
}

Report verify_pentagon(int D, const Conventions& conv) {
    Stopwatch sw;
    Report rep = compare_report("pentagon", pentagon_lhs(D, conv), pentagon_rhs(D, conv));
    rep.params["middle_halves"] = conv.pentagon_middle_halves;
    rep.params["coefficient"] = coefficient_str(conv.coefficient);
    rep.runtime_ms = sw.ms();
    return rep;
}

std::vector<int> scan_pentagon_middle(int D, const std::vector<int>& candidates, DilogCoefficient kind) {
    std::vector<int> winners;
    for (int c : candidates) {
        Conventions conv;
        conv.coefficient = kind;
        conv.pentagon_middle_halves = c;
        if (!first_discrepancy(pentagon_lhs(D, conv), pentagon_rhs(D, conv))) winners.push_back(c);
    }
    return winners;
}

TorusSeries reineke_lhs(int n, int D, const Conventions& conv) {
    std::vector<TorusSeries> f;
    for (int i = 1; i <= n; ++i) f.push_back(qdilog(dimension_vector({i, i}, n), D, conv.coefficient));
    return series_product(f);
}

TorusSeries reineke_rhs(const Order& order, int D, const Conventions& conv) {
    int n = order_dimension(order);
    std::vector<TorusSeries> f;
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        f.push_back(qdilog(dimension_vector(*it, n), D, conv.coefficient));
    return series_product(f);
}

Report verify_reineke(const Order& order, int D, const Conventions& conv, bool require_admissible) {
    Stopwatch sw;
    bool admissible = is_admissible_order(order);
    if (require_admissible && !admissible) throw NotAdmissible("order is not admissible");
    int n = order_dimension(order);
    Report rep = compare_report("reineke", reineke_lhs(n, D, conv), reineke_rhs(order, D, conv));
    json ord = json::array();
    for (const Interval& iv : order) ord.push_back({iv.lo, iv.hi});
    rep.params["order"] = ord;
    rep.params["admissible"] = admissible;
    rep.params["coefficient"] = coefficient_str(conv.coefficient);
    rep.runtime_ms = sw.ms();
    return rep;
}

TorusSeries skein_to_torus(const std::vector<CurveClass>& word, int n, int D, const Conventions& conv) {
    for (const CurveClass& c : word)
        if (c.sign < 0) throw NegativeClass("skein_to_torus needs positive classes, got " + c.str());
    TorusSeries r = TorusSeries::unit(n, D);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        Interval refl{n - it->iv.hi + 1, n - it->iv.lo + 1};
        r = series_mul(r, qdilog(dimension_vector(refl, n), D, conv.coefficient, conv.skein_shift_halves));
    }
    return r;
}

}  // namespace qdl
