#include "qdilog/linkskein.hpp"

#include "qdilog/curves.hpp"

#include <cctype>
#include <cstdlib>
#include <tuple>

namespace qdl {

PairingConfig PairingConfig::chain(int n) {
    PairingConfig c{n, std::vector<std::vector<int>>(2 * n, std::vector<int>(2 * n, 0))};
    for (int i = 0; i + 1 < n; ++i) {
        c.m[i][i + 1] = kChainPairingSign;
        c.m[i + 1][i] = -kChainPairingSign;
    }
    return c;
}

int PairingConfig::operator()(const SurfaceClass& x, const SurfaceClass& y) const {
    const size_t d = 2 * static_cast<size_t>(n);
    if (x.size() != d || y.size() != d) throw DimensionMismatch("surface classes must have 2n coordinates");
    int r = 0;
    for (size_t i = 0; i < d; ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) r += x[i] * m[i][j] * y[j];
    }
    return r;
}

std::string PairingConfig::validate() const {
    const size_t d = 2 * static_cast<size_t>(n);
    if (m.size() != d) return "pairing matrix must be 2n x 2n";
    for (const auto& row : m)
        if (row.size() != d) return "pairing matrix must be 2n x 2n";
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            if (m[i][j] != -m[j][i]) return "pairing matrix is not antisymmetric";
    for (int i = 0; i + 1 < n; ++i)
        if (m[i][i + 1] != kChainPairingSign) return "L_i ^ L_{i+1} must match the chain pairing";
    return {};
}

SkeinTerm surface_mul(const SkeinTerm& x, const SkeinTerm& y, const PairingConfig& cfg) {
    if (x.cls.size() != y.cls.size()) throw DimensionMismatch("surface classes differ in dimension");
    SkeinTerm r;
    r.a_power = x.a_power + y.a_power;
    r.cls.resize(x.cls.size());
    for (size_t i = 0; i < x.cls.size(); ++i) r.cls[i] = x.cls[i] + y.cls[i];
    r.coeff = (x.coeff * y.coeff).times_t(cfg(x.cls, y.cls));
    return r;
}

FaceOperator face_operator(const std::vector<FaceTermSpec>& spec, int n) {
    FaceOperator op;
    int unknots = 0;
    for (const FaceTermSpec& s : spec) {
        if (s.unknot) {
            op.unknot_index = op.terms.size();
            op.terms.push_back({-1, SurfaceClass(2 * n, 0), RatFunc(1)});
            ++unknots;
        } else {
            if (static_cast<int>(s.cls.size()) != 2 * n) throw DimensionMismatch("face term class has wrong dimension");
            op.terms.push_back({s.gamma, s.cls, RatFunc(s.gamma % 2 == 0 ? 1 : -1)});
        }
    }
    if (unknots == 0) throw MissingUnknotTerm("face operator needs the a^{-1}[unknot] term");
    if (unknots > 1) throw std::invalid_argument("face operator has more than one unknot term");
    return op;
}

namespace {

using Key = std::tuple<int, int, SurfaceClass>;  // E-degree, a-power, class
using SkeinSeries = std::map<Key, RatFunc>;

void accumulate(SkeinSeries& s, int deg, const SkeinTerm& t) {
    if (t.coeff.is_zero()) return;
    Key k{deg, t.a_power, t.cls};
    auto [it, fresh] = s.emplace(k, t.coeff);
    if (!fresh) {
        it->second += t.coeff;
        if (it->second.is_zero()) s.erase(it);
    }
}

std::string class_str(const SurfaceClass& c) {
    const int n = static_cast<int>(c.size()) / 2;
    std::string out;
    for (int i = 0; i < 2 * n; ++i) {
        if (c[i] == 0) continue;
        std::string name = (i < n ? "L_" : "M_") + std::to_string(i < n ? i + 1 : i - n + 1);
        int v = c[i];
        if (v < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (std::abs(v) != 1) out += std::to_string(std::abs(v));
        out += name;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

Report verify_conjugation(const FaceOperator& before, const FaceOperator& after, const SurfaceClass& e, int D,
                          const PairingConfig& cfg, DilogCoefficient kind) {
    Stopwatch sw;
    size_t p = 0;
    while (p < e.size() && e[p] == 0) ++p;
    if (p == e.size()) throw ZeroClass("conjugating class must be nonzero");
    const int step = std::abs(e[p]);
    const int orient = e[p] > 0 ? 1 : -1;
    auto grade = [&](const SurfaceClass& c) { return orient * c.at(p); };
    int base = grade(before.terms.at(0).cls);
    for (const auto* op : {&before, &after})
        for (const SkeinTerm& t : op->terms) base = std::min(base, grade(t.cls));
    auto degree_of = [&](const SurfaceClass& c) { return (grade(c) - base) / step; };
    auto keep = [&](const SurfaceClass& c) { return grade(c) - base <= D * step; };

    std::vector<SkeinTerm> dilog;
    SkeinTerm power{0, SurfaceClass(e.size(), 0), RatFunc(1)};
    const SkeinTerm x{0, e, RatFunc(1)};
    for (int j = 0; j <= D; ++j) {
        if (j > 0) power = surface_mul(power, x, cfg);
        SkeinTerm t = power;
        t.coeff = power.coeff * dilog_coefficient(j, kind);
        dilog.push_back(t);
    }

    SkeinSeries lhs, rhs;
    for (const SkeinTerm& a : after.terms)
        for (const SkeinTerm& d : dilog) {
            SkeinTerm t = surface_mul(a, d, cfg);
            if (keep(t.cls)) accumulate(lhs, degree_of(t.cls), t);
        }
    for (const SkeinTerm& d : dilog)
        for (const SkeinTerm& b : before.terms) {
            SkeinTerm t = surface_mul(d, b, cfg);
            if (keep(t.cls)) accumulate(rhs, degree_of(t.cls), t);
        }

    Report rep;
    rep.identity = "conjugation";
    rep.params["n"] = cfg.n;
    rep.params["D"] = D;
    rep.params["E"] = class_str(e);
    auto mismatch = [&](const Key& k, const RatFunc& l, const RatFunc& r) {
        rep.status = Status::Fail;
        rep.first_discrepancy = {{"degree", std::get<0>(k)}, {"a_power", std::get<1>(k)},
                                 {"class", class_str(std::get<2>(k))}, {"lhs", l.str()}, {"rhs", r.str()}};
    };
    auto i = lhs.begin(), j = rhs.begin();
    while (rep.passed() && (i != lhs.end() || j != rhs.end())) {
        if (j == rhs.end() || (i != lhs.end() && i->first < j->first)) {
            mismatch(i->first, i->second, RatFunc());
        } else if (i == lhs.end() || j->first < i->first) {
            mismatch(j->first, RatFunc(), j->second);
        } else {
            if (!(i->second == j->second)) mismatch(i->first, i->second, j->second);
            ++i;
            ++j;
        }
    }
    rep.runtime_ms = sw.ms();
    return rep;
}

SurfaceClass parse_surface_class(const std::string& s, int n) {
    SurfaceClass c(2 * n, 0);
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    if (s.substr(i) == "0") return c;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        skip();
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in \"" + s + "\"");
        }
        skip();
        int mult = 0;
        bool have = false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            mult = mult * 10 + (s[i++] - '0');
            have = true;
        }
        if (!have) mult = 1;
        if (i + 1 >= s.size() || (s[i] != 'L' && s[i] != 'M') || s[i + 1] != '_')
            throw std::invalid_argument("expected L_k or M_k in \"" + s + "\"");
        bool is_m = s[i] == 'M';
        i += 2;
        int k = 0;
        bool digits = false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            k = k * 10 + (s[i++] - '0');
            digits = true;
        }
        if (!digits || k < 1 || k > n) throw std::invalid_argument("basis index out of range in \"" + s + "\"");
        c[(is_m ? n : 0) + k - 1] += sign * mult;
        first = false;
        skip();
    }
    return c;
}

namespace {

std::vector<FaceTermSpec> load_terms(const json& arr, int n) {
    std::vector<FaceTermSpec> out;
    for (const auto& t : arr) {
        if (t.value("unknot", false))
            out.push_back({true, 0, {}});
        else
            out.push_back({false, t.at("gamma").get<int>(), parse_surface_class(t.at("class").get<std::string>(), n)});
    }
    return out;
}

}  // namespace

LinkskeinConfig load_linkskein_config(const json& j) {
    LinkskeinConfig c;
    int n = j.at("n").get<int>();
    c.pairing.n = n;
    c.pairing.m = j.at("pairing").get<std::vector<std::vector<int>>>();
    if (std::string err = c.pairing.validate(); !err.empty()) throw std::invalid_argument(err);
    c.before = load_terms(j.at("before"), n);
    c.after = load_terms(j.at("after"), n);
    c.e = parse_surface_class(j.at("E").get<std::string>(), n);
    c.D = j.value("D", 4);
    if (j.contains("labels"))
        for (auto it = j["labels"].begin(); it != j["labels"].end(); ++it)
            c.labels[it.key()] = parse_surface_class(it.value().get<std::string>(), n);
    if (j.contains("faces"))
        for (auto it = j["faces"].begin(); it != j["faces"].end(); ++it)
            c.faces[it.key()] = it.value().get<std::vector<std::string>>();
    return c;
}

}  // namespace qdl

namespace qdl {

Report check_face_sums(const LinkskeinConfig& cfg) {
    Stopwatch sw;
    Report rep;
    rep.identity = "face-sums";
    rep.params["n"] = cfg.pairing.n;
    rep.params["D"] = nullptr;
    rep.params["faces"] = cfg.faces.size();
    for (const auto& [face, labels] : cfg.faces) {
        SurfaceClass sum(2 * cfg.pairing.n, 0);
        for (const std::string& l : labels) {
            auto it = cfg.labels.find(l);
            if (it == cfg.labels.end()) {
                rep.status = Status::Error;
                rep.first_discrepancy = {{"face", face}, {"error", "unknown label " + l}};
                break;
            }
            for (size_t i = 0; i < sum.size(); ++i) sum[i] += it->second[i];
        }
        if (!rep.passed()) break;
        for (int v : sum)
            if (v != 0) {
                rep.status = Status::Fail;
                rep.first_discrepancy = {{"face", face}, {"sum", class_str(sum)}};
                break;
            }
        if (!rep.passed()) break;
    }
    rep.runtime_ms = sw.ms();
    return rep;
}

}  // namespace qdl
