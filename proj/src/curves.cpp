#include "qdilog/curves.hpp"

#include <map>
#include <regex>

namespace qdl {

std::string CurveClass::str() const {
    return std::string(sign > 0 ? "+" : "-") + "L[" + std::to_string(iv.lo) + "," +
           std::to_string(iv.hi) + "]";
}

CurveClass parse_curve(const std::string& s) {
    static const std::regex re(R"(\s*([+-]?)\s*L\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("bad curve \"" + s + "\"");
    CurveClass c{m[1] == "-" ? -1 : 1, {std::stoi(m[2]), std::stoi(m[3])}};
    if (c.iv.lo < 1 || c.iv.lo > c.iv.hi) throw std::invalid_argument("bad interval in \"" + s + "\"");
    return c;
}

std::string twist_case_str(TwistCase c) {
    switch (c) {
        case TwistCase::Identical: return "identical";
        case TwistCase::Disjoint: return "disjoint";
        case TwistCase::LeftAddition: return "left-addition";
        case TwistCase::RightAddition: return "right-addition";
        case TwistCase::RightSubtraction: return "right-subtraction";
        case TwistCase::RightOverspill: return "right-overspill";
        case TwistCase::LeftOverspill: return "left-overspill";
    }
    return "?";
}

TwistCase classify_twist(const CurveClass& twister, const CurveClass& target) {
    const int a = twister.iv.lo, b = twister.iv.hi;
    const int c = target.iv.lo, d = target.iv.hi;
    if (a == c && b == d) return TwistCase::Identical;
    if (b + 1 < c || d + 1 < a) return TwistCase::Disjoint;
    if (a == b && c == a + 1) return TwistCase::LeftAddition;
    if (c == d && c == b + 1) return TwistCase::RightAddition;
    if (b == d && c == a - 1) return TwistCase::LeftOverspill;
    if (b == d && c < a) return TwistCase::RightSubtraction;
    if (a == c && d < b) return TwistCase::RightOverspill;
    throw UnsupportedTwistCase("no rewrite rule for tau_" + twister.str() + "(" + target.str() + ")");
}

CurveClass dehn_twist(const CurveClass& twister, const CurveClass& target) {
    const int a = twister.iv.lo, b = twister.iv.hi;
    const int c = target.iv.lo, d = target.iv.hi;
    const int s = target.sign;
    switch (classify_twist(twister, target)) {
        case TwistCase::Identical:
        case TwistCase::Disjoint: return target;
        case TwistCase::LeftAddition: return L(a, d, s);
        case TwistCase::RightAddition: return L(a, d, s);
        case TwistCase::LeftOverspill:
        case TwistCase::RightSubtraction: return L(c, a - 1, s);
        case TwistCase::RightOverspill: return L(d + 1, b, -s);
    }
    throw std::logic_error("unreachable");
}

std::vector<CurveClass> all_curves(int n) {
    std::vector<CurveClass> out;
    for (const Interval& iv : enumerate_intervals(n)) {
        out.push_back({1, iv});
        out.push_back({-1, iv});
    }
    return out;
}

CurveClass inverse_dehn_twist(const CurveClass& twister, const CurveClass& target, int n) {
    std::vector<CurveClass> found;
    for (const CurveClass& y : all_curves(n)) {
        try {
            if (dehn_twist(twister, y) == target) found.push_back(y);
        } catch (const UnsupportedTwistCase&) {
        }
    }
    if (found.size() != 1)
        throw UnsupportedTwistCase("inverse of tau_" + twister.str() + " at " + target.str() + " has " +
                                   std::to_string(found.size()) + " preimages");
    return found[0];
}

HomologyVec homology_class(const CurveClass& c, int n) {
    HomologyVec v(n, 0);
    for (int k = c.iv.lo; k <= c.iv.hi; ++k) v.at(k - 1) = c.sign;
    return v;
}

int chain_pairing(const HomologyVec& x, const HomologyVec& y, int sign) {
    int r = 0;
    for (size_t i = 0; i + 1 < x.size(); ++i) r += sign * (x[i] * y[i + 1] - x[i + 1] * y[i]);
    return r;
}

HomologyVec homology_twist(const HomologyVec& twister, const HomologyVec& target, int sign) {
    int k = chain_pairing(target, twister, sign);
    HomologyVec r = target;
    for (size_t i = 0; i < r.size(); ++i) r[i] += k * twister[i];
    return r;
}

HomologyVec homology_inverse_twist(const HomologyVec& twister, const HomologyVec& target, int sign) {
    int k = chain_pairing(target, twister, sign);
    HomologyVec r = target;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= k * twister[i];
    return r;
}

Report check_twist_consistency(int n, int sign) {
    Stopwatch sw;
    Report rep;
    rep.identity = "twist-consistency";
    rep.params["n"] = n;
    rep.params["D"] = nullptr;
    rep.params["pairing_sign"] = sign;
    std::map<std::string, int> counts;
    json violations = json::array();
    int nviol = 0;
    for (const CurveClass& c : all_curves(n))
        for (const CurveClass& x : all_curves(n)) {
            TwistCase tc;
            try {
                tc = classify_twist(c, x);
            } catch (const UnsupportedTwistCase&) {
                continue;
            }
            ++counts[twist_case_str(tc)];
            HomologyVec got = homology_class(dehn_twist(c, x), n);
            HomologyVec want = homology_twist(homology_class(c, n), homology_class(x, n), sign);
            if (got == want) continue;
            if (++nviol <= 20)
                violations.push_back({{"twister", c.str()}, {"target", x.str()},
                                      {"case", twist_case_str(tc)}, {"rewrite", got}, {"homology", want}});
        }
    rep.params["cases"] = counts;
    if (!violations.empty()) {
        rep.status = Status::Fail;
        rep.first_discrepancy = violations[0];
        rep.params["violations"] = nviol;
    }
    rep.runtime_ms = sw.ms();
    return rep;
}

}  // namespace qdl

namespace qdl {

Report verify_twist_identities(int n) {
    Stopwatch sw;
    Report rep;
    rep.identity = "twist-identities";
    rep.params["n"] = n;
    rep.params["D"] = nullptr;
    std::map<std::string, int> counts;
    int roundtrips = 0;
    auto check = [&](const std::string& name, const CurveClass& t, const CurveClass& x, const CurveClass& want) {
        if (!rep.passed()) return;
        for (int s : {1, -1}) {
            CurveClass xs = s > 0 ? x : x.negated();
            CurveClass ws = s > 0 ? want : want.negated();
            json where = {{"identity", name}, {"twister", t.str()}, {"target", xs.str()}, {"expected", ws.str()}};
            CurveClass got;
            try {
                got = dehn_twist(t, xs);
            } catch (const UnsupportedTwistCase& ex) {
                where["error"] = ex.what();
                rep.status = Status::Fail;
                rep.first_discrepancy = where;
                return;
            }
            HomologyVec hom = homology_twist(homology_class(t, n), homology_class(xs, n));
            if (!(got == ws) || hom != homology_class(ws, n)) {
                where["rewrite"] = got.str();
                where["homology"] = hom;
                rep.status = Status::Fail;
                rep.first_discrepancy = where;
                return;
            }
        }
        ++counts[name];
    };
    for (int a = 1; a <= n; ++a)
        for (int k = a; k <= n; ++k) {
            if (k > a) check("left-addition", L(a, a), L(a + 1, k), L(a, k));
            if (k + 1 <= n) check("right-addition", L(a, k), L(k + 1, k + 1), L(a, k + 1));
            for (int j = a + 1; j <= k; ++j) {
                CurveClass t = L(j, k, -1), x = L(a, k), y = L(a, j - 1);
                check("right-subtraction", t, x, y);
                if (!rep.passed()) break;
                CurveClass back = inverse_dehn_twist(t, y, n);
                HomologyVec hb = homology_inverse_twist(homology_class(t, n), homology_class(y, n));
                if (!(back == x) || hb != homology_class(x, n)) {
                    rep.status = Status::Fail;
                    rep.first_discrepancy = {{"identity", "round-trip"}, {"twister", t.str()},
                                             {"start", x.str()}, {"returned", back.str()}};
                    break;
                }
                ++roundtrips;
            }
            for (int j = a; j < k; ++j) check("right-overspill", L(a, k, -1), L(a, j), L(j + 1, k, -1));
            if (k > a) check("left-overspill", L(a + 1, k, -1), L(a, k), L(a, a));
        }
    rep.params["instances"] = counts;
    rep.params["round_trips"] = roundtrips;
    rep.runtime_ms = sw.ms();
    return rep;
}

}  // namespace qdl
