#include "qdilog/quiver.hpp"

#include <algorithm>
#include <set>

namespace qdl {

std::vector<Interval> enumerate_intervals(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<Interval> out;
    out.reserve(interval_count(n));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.push_back({i, j});
    return out;
}

bool hom_nonzero(Interval a, Interval b) {
    bool overlap = std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
    return overlap && a.lo >= b.lo && a.hi >= b.hi;
}

int order_dimension(const Order& seq) {
    for (int n = 1; interval_count(n) <= static_cast<int>(seq.size()); ++n)
        if (interval_count(n) == static_cast<int>(seq.size())) return n;
    return -1;
}

bool is_admissible_order(const Order& seq) {
    int n = order_dimension(seq);
    if (n < 1) throw NotAPermutation("length " + std::to_string(seq.size()) + " is not n(n+1)/2");
    std::vector<std::vector<int>> pos(n + 2, std::vector<int>(n + 2, -1));
    for (size_t k = 0; k < seq.size(); ++k) {
        Interval iv = seq[k];
        if (iv.lo < 1 || iv.lo > iv.hi || iv.hi > n)
            throw NotAPermutation("interval " + iv.str() + " invalid for n=" + std::to_string(n));
        if (pos[iv.lo][iv.hi] >= 0) throw NotAPermutation("interval " + iv.str() + " repeated");
        pos[iv.lo][iv.hi] = static_cast<int>(k);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            if (j + 1 <= n && pos[i][j] > pos[i][j + 1]) return false;
            if (i + 1 <= j && pos[i][j] > pos[i + 1][j]) return false;
        }
    return true;
}

namespace {

void extend(int n, std::vector<Interval>& prefix, std::set<Interval>& placed,
            const std::vector<Interval>& all, std::vector<Order>& out) {
    if (prefix.size() == all.size()) {
        out.push_back(prefix);
        return;
    }
    for (const Interval& iv : all) {
        if (placed.count(iv)) continue;
        bool left_done = iv.hi - 1 < iv.lo || placed.count({iv.lo, iv.hi - 1});
        bool lower_done = iv.lo - 1 < 1 || placed.count({iv.lo - 1, iv.hi});
        if (!left_done || !lower_done) continue;
        prefix.push_back(iv);
        placed.insert(iv);
        extend(n, prefix, placed, all, out);
        placed.erase(iv);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Order> enumerate_admissible_orders(int n, int cap) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > cap)
        throw LimitExceeded("n=" + std::to_string(n) + " exceeds the order enumeration cap " +
                            std::to_string(cap));
    auto all = enumerate_intervals(n);
    std::vector<Order> out;
    std::vector<Interval> prefix;
    std::set<Interval> placed;
    extend(n, prefix, placed, all, out);
    return out;
}

TupleSeq order_to_tuple_sequence(const Order& order) {
    if (!is_admissible_order(order)) throw std::invalid_argument("order is not admissible");
    int n = order_dimension(order);
    Tuple a(n, 0);
    TupleSeq out{a};
    for (const Interval& iv : order) {
        a[iv.hi - 1] = std::max(a[iv.hi - 1], iv.lo);
        out.push_back(a);
    }
    return out;
}

int staircase_prefix(const Tuple& a) {
    int m = 0;
    while (m < static_cast<int>(a.size()) && a[m] == m + 1) ++m;
    return m;
}

namespace {

TupleCheck fail(int property, int index, std::string msg) {
    return {false, property, index, std::move(msg)};
}

bool tail_non_increasing(const Tuple& a) {
    int skip = std::max(staircase_prefix(a) - 1, 0);
    for (size_t j = skip + 1; j < a.size(); ++j)
        if (a[j] > a[j - 1]) return false;
    return true;
}

}  // namespace

TupleCheck validate_tuple_sequence(const TupleSeq& ts) {
    if (ts.empty()) return fail(0, -1, "empty sequence");
    const size_t n = ts[0].size();
    if (n == 0) return fail(0, 0, "tuples must have length >= 1");
    for (size_t k = 0; k < ts.size(); ++k)
        if (ts[k].size() != n) return fail(0, static_cast<int>(k), "tuple length differs from a_0");

    for (int v : ts[0])
        if (v != 0) return fail(2, 0, "a_0 is not (0,...,0)");

    for (size_t k = 0; k < ts.size(); ++k) {
        const Tuple& a = ts[k];
        int ki = static_cast<int>(k);
        if (!tail_non_increasing(a))
            return fail(3, ki, "entries after the staircase prefix are not non-increasing");
        if (k > 0) {
            const Tuple& prev = ts[k - 1];
            int changed = -1, count = 0;
            for (size_t j = 0; j < n; ++j)
                if (a[j] != prev[j]) {
                    changed = static_cast<int>(j);
                    ++count;
                }
            if (count != 1) return fail(4, ki, "expected exactly one entry to change");
            if (a[changed] != prev[changed] + 1) return fail(4, ki, "entry not raised by exactly 1");
            int m = staircase_prefix(prev);
            if (changed < m) return fail(4, ki, "raised entry lies in the staircase prefix");
            if (changed > m && prev[changed - 1] == prev[changed])
                return fail(4, ki, "raised entry does not start a maximal constant run");
        }
        for (size_t j = 0; j < n; ++j)
            if (a[j] < 0 || a[j] > static_cast<int>(j) + 1)
                return fail(1, ki, "entry " + std::to_string(j + 1) + " out of range");
    }
    size_t expect = static_cast<size_t>(interval_count(static_cast<int>(n))) + 1;
    if (ts.size() != expect)
        return fail(0, -1, "expected " + std::to_string(expect) + " tuples, got " + std::to_string(ts.size()));
    return {};
}

Order tuple_sequence_to_order(const TupleSeq& ts) {
    TupleCheck chk = validate_tuple_sequence(ts);
    if (!chk.ok)
        throw InvalidTupleSeq("property (" + std::to_string(chk.property) + ") at a_" +
                              std::to_string(chk.index) + ": " + chk.message);
    Order out;
    for (size_t k = 1; k < ts.size(); ++k)
        for (size_t j = 0; j < ts[k].size(); ++j)
            if (ts[k][j] != ts[k - 1][j]) out.push_back({ts[k][j], static_cast<int>(j) + 1});
    return out;
}

ExpVec dimension_vector(Interval iv, int n) {
    if (iv.lo < 1 || iv.lo > iv.hi || iv.hi > n)
        throw std::invalid_argument("interval " + iv.str() + " invalid for n=" + std::to_string(n));
    ExpVec d(n, 0);
    for (int k = iv.lo; k <= iv.hi; ++k) d[k - 1] = 1;
    return d;
}

namespace {

std::vector<Order> filter_permutations(int n, bool admissible) {
    if (n < 1 || n > 3) throw LimitExceeded("exhaustive permutation filtering needs 1 <= n <= 3");
    Order p = enumerate_intervals(n);
    std::sort(p.begin(), p.end());
    std::vector<Order> out;
    do {
        if (is_admissible_order(p) == admissible) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

std::vector<Order> non_admissible_permutations(int n) { return filter_permutations(n, false); }

Report verify_order_census(int n_max, int cap) {
    Stopwatch sw;
    Report rep;
    rep.identity = "order-census";
    rep.params["n"] = n_max;
    rep.params["D"] = nullptr;
    json counts = json::array();
    auto fail = [&](json d) {
        if (rep.passed()) {
            rep.status = Status::Fail;
            rep.first_discrepancy = std::move(d);
        }
    };
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Order> orders = enumerate_admissible_orders(n, cap);
        counts.push_back(orders.size());
        if (n <= 3 && orders != filter_permutations(n, true))
            fail({{"n", n}, {"check", "enumeration differs from permutation filtering"}});
        Tuple last(n);
        for (int i = 0; i < n; ++i) last[i] = i + 1;
        for (size_t k = 0; k < orders.size(); ++k) {
            TupleSeq ts = order_to_tuple_sequence(orders[k]);
            if (ts.front() != Tuple(n, 0) || ts.back() != last)
                fail({{"n", n}, {"order_index", k + 1}, {"check", "endpoints"}});
            if (!validate_tuple_sequence(ts).ok || tuple_sequence_to_order(ts) != orders[k])
                fail({{"n", n}, {"order_index", k + 1}, {"check", "round trip"}});
        }
    }
    rep.params["counts"] = counts;
    rep.runtime_ms = sw.ms();
    return rep;
}

}  // namespace qdl
