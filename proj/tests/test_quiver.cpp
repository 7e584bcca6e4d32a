#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qdilog/quiver.hpp"

#include <algorithm>
#include <set>

using namespace qdl;

namespace {

bool in(Interval a, int v) { return a.lo <= v && v <= a.hi; }

// dim Hom(V_a, V_b) > 0 by solving the commutative squares f_{v+1} a_v = b_v f_v.
bool hom_oracle(Interval a, Interval b, int n) {
    std::vector<int> var(n + 2, -1);
    int nv = 0;
    for (int v = 1; v <= n; ++v)
        if (in(a, v) && in(b, v)) var[v] = nv++;
    if (nv == 0) return false;
    std::vector<std::vector<long>> rows;
    for (int v = 1; v < n; ++v) {
        std::vector<long> r(nv, 0);
        bool amap = in(a, v) && in(a, v + 1);
        bool bmap = in(b, v) && in(b, v + 1);
        if (amap && var[v + 1] >= 0) r[var[v + 1]] += 1;
        if (bmap && var[v] >= 0) r[var[v]] -= 1;
        rows.push_back(r);
    }
    int rank = 0;
    for (int c = 0; c < nv; ++c) {
        int p = -1;
        for (size_t i = rank; i < rows.size(); ++i)
            if (rows[i][c] != 0) p = static_cast<int>(i);
        if (p < 0) continue;
        std::swap(rows[rank], rows[p]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == rank || rows[i][c] == 0) continue;
            long f = rows[i][c], g = rows[rank][c];
            for (int k = 0; k < nv; ++k) rows[i][k] = rows[i][k] * g - rows[rank][k] * f;
        }
        ++rank;
    }
    return nv - rank > 0;
}

bool hom_condition_admissible(const Order& o) {
    for (size_t i = 0; i < o.size(); ++i)
        for (size_t j = i + 1; j < o.size(); ++j)
            if (hom_nonzero(o[i], o[j])) return false;  // o[j] must precede o[i]
    return true;
}

std::vector<Order> permutation_filter(int n) {
    Order p = enumerate_intervals(n);
    std::sort(p.begin(), p.end());
    std::vector<Order> out;
    do {
        if (is_admissible_order(p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

TEST_CASE("enumerate_intervals") {
    CHECK(enumerate_intervals(1) == Order{{1, 1}});
    CHECK(enumerate_intervals(2) == Order{{1, 1}, {1, 2}, {2, 2}});
    CHECK(enumerate_intervals(3).size() == 6);
}

TEST_CASE("hom_nonzero examples") {
    CHECK(hom_nonzero({1, 2}, {1, 1}));
    CHECK_FALSE(hom_nonzero({1, 1}, {1, 2}));
    CHECK_FALSE(hom_nonzero({1, 1}, {3, 3}));
}

TEST_CASE("hom_nonzero agrees with the commutative-square oracle") {
    for (int n = 1; n <= 5; ++n)
        for (Interval a : enumerate_intervals(n))
            for (Interval b : enumerate_intervals(n)) {
                INFO(a.str() << " " << b.str());
                CHECK(hom_nonzero(a, b) == hom_oracle(a, b, n));
            }
}

TEST_CASE("is_admissible_order examples") {
    CHECK(is_admissible_order({{1, 1}, {1, 2}, {2, 2}}));
    CHECK_FALSE(is_admissible_order({{1, 2}, {1, 1}, {2, 2}}));
    CHECK(is_admissible_order({{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}}));
    CHECK_THROWS_AS(is_admissible_order({{1, 1}, {1, 1}, {2, 2}}), NotAPermutation);
    CHECK_THROWS_AS(is_admissible_order({{1, 1}, {1, 2}}), NotAPermutation);
}

TEST_CASE("enumerate_admissible_orders counts") {
    CHECK(enumerate_admissible_orders(1).size() == 1);
    CHECK(enumerate_admissible_orders(2).size() == 1);
    CHECK(enumerate_admissible_orders(3).size() == 2);
    CHECK(enumerate_admissible_orders(4).size() == 12);
    CHECK(enumerate_admissible_orders(5).size() == 286);
    CHECK_THROWS_AS(enumerate_admissible_orders(6), LimitExceeded);
    CHECK_THROWS_AS(enumerate_admissible_orders(4, 3), LimitExceeded);
}

TEST_CASE("enumeration matches exhaustive permutation filtering") {
    for (int n = 1; n <= 3; ++n) {
        auto a = enumerate_admissible_orders(n);
        CHECK(a == permutation_filter(n));  // both lexicographic
    }
}

TEST_CASE("orders are distinct, admissible and satisfy the Hom condition") {
    for (int n = 1; n <= 5; ++n) {
        auto orders = enumerate_admissible_orders(n);
        CHECK(std::set<Order>(orders.begin(), orders.end()).size() == orders.size());
        CHECK(std::is_sorted(orders.begin(), orders.end()));
        for (const Order& o : orders) {
            CHECK(is_admissible_order(o));
            CHECK(hom_condition_admissible(o));
        }
    }
    for (const Order& p : permutation_filter(3)) CHECK(hom_condition_admissible(p));
    Order p = enumerate_intervals(3);
    std::sort(p.begin(), p.end());
    do {
        CHECK(is_admissible_order(p) == hom_condition_admissible(p));
    } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("order_to_tuple_sequence examples") {
    CHECK(order_to_tuple_sequence({{1, 1}, {1, 2}, {2, 2}}) == TupleSeq{{0, 0}, {1, 0}, {1, 1}, {1, 2}});
    CHECK(order_to_tuple_sequence({{1, 1}}) == TupleSeq{{0}, {1}});
    TupleSeq ts = order_to_tuple_sequence(enumerate_admissible_orders(3)[0]);
    CHECK(ts.size() == 7);
    CHECK(ts.back() == Tuple{1, 2, 3});
}

TEST_CASE("tuple_sequence_to_order examples") {
    CHECK(tuple_sequence_to_order({{0, 0}, {1, 0}, {1, 1}, {1, 2}}) == Order{{1, 1}, {1, 2}, {2, 2}});
    CHECK(tuple_sequence_to_order({{0}, {1}}) == Order{{1, 1}});
    CHECK_THROWS_AS(tuple_sequence_to_order({{0, 0}, {0, 1}, {1, 1}, {1, 2}}), InvalidTupleSeq);
}

TEST_CASE("round trip and endpoints for n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Order& o : enumerate_admissible_orders(n)) {
            TupleSeq ts = order_to_tuple_sequence(o);
            CHECK(validate_tuple_sequence(ts).ok);
            CHECK(tuple_sequence_to_order(ts) == o);
            CHECK(order_to_tuple_sequence(tuple_sequence_to_order(ts)) == ts);
            CHECK(ts.front() == Tuple(n, 0));
            Tuple last(n);
            for (int i = 0; i < n; ++i) last[i] = i + 1;
            CHECK(ts.back() == last);
            for (size_t k = 1; k < ts.size(); ++k) {
                int changed = 0;
                for (int i = 0; i < n; ++i) {
                    int d = ts[k][i] - ts[k - 1][i];
                    CHECK((d == 0 || d == 1));
                    changed += d;
                }
                CHECK(changed == 1);
            }
        }
}

TEST_CASE("validate_tuple_sequence diagnostics") {
    CHECK(validate_tuple_sequence({{0, 0}, {1, 0}, {1, 1}, {1, 2}}).ok);
    TupleCheck p3 = validate_tuple_sequence({{0, 0}, {0, 1}, {1, 1}, {1, 2}});
    CHECK_FALSE(p3.ok);
    CHECK(p3.property == 3);
    CHECK(p3.index == 1);
    TupleCheck p4 = validate_tuple_sequence({{0, 0}, {2, 0}, {2, 1}, {1, 2}});
    CHECK_FALSE(p4.ok);
    CHECK(p4.property == 4);
    CHECK(p4.index == 1);
    TupleCheck p2 = validate_tuple_sequence({{1, 0}, {1, 1}, {1, 2}, {1, 2}});
    CHECK(p2.property == 2);
    TupleCheck shape = validate_tuple_sequence({{0, 0}, {1}});
    CHECK(shape.property == 0);
    CHECK_FALSE(shape.ok);
}

TEST_CASE("staircase_prefix") {
    CHECK(staircase_prefix({0, 0, 0}) == 0);
    CHECK(staircase_prefix({1, 0, 0}) == 1);
    CHECK(staircase_prefix({1, 2, 1}) == 2);
    CHECK(staircase_prefix({1, 2, 3}) == 3);
}

TEST_CASE("dimension_vector") {
    CHECK(dimension_vector({1, 1}, 2) == ExpVec{1, 0});
    CHECK(dimension_vector({1, 2}, 2) == ExpVec{1, 1});
    CHECK(dimension_vector({2, 3}, 4) == ExpVec{0, 1, 1, 0});
}

TEST_CASE("non_admissible_permutations") {
    CHECK(non_admissible_permutations(1).empty());
    CHECK(non_admissible_permutations(2).size() == 5);
    auto bad3 = non_admissible_permutations(3);
    CHECK(bad3.size() == 718);
    for (const Order& o : bad3) CHECK_FALSE(hom_condition_admissible(o));
    CHECK_THROWS_AS(non_admissible_permutations(4), LimitExceeded);
}

TEST_CASE("verify_order_census") {
    Report r = verify_order_census(5);
    CHECK(r.passed());
    CHECK(r.params["counts"] == json::array({1, 1, 2, 12, 286}));
    CHECK_THROWS_AS(verify_order_census(6), LimitExceeded);
}
