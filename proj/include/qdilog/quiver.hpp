#pragma once

#include "qdilog/report.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdl {

struct QuiverSpec {
    int n;
};

struct Interval {
    int lo;
    int hi;
    auto operator<=>(const Interval&) const = default;
    std::string str() const { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }
};

using Order = std::vector<Interval>;
using Tuple = std::vector<int>;
using TupleSeq = std::vector<Tuple>;
using ExpVec = std::vector<int>;

struct NotAPermutation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LimitExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidTupleSeq : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline int interval_count(int n) { return n * (n + 1) / 2; }

std::vector<Interval> enumerate_intervals(int n);

// Hom(V_a, V_b) != 0
bool hom_nonzero(Interval a, Interval b);

// n is inferred from the length; throws NotAPermutation.
bool is_admissible_order(const Order& seq);
int order_dimension(const Order& seq);  // n with n(n+1)/2 == size, or -1

constexpr int kDefaultOrderCap = 5;
std::vector<Order> enumerate_admissible_orders(int n, int cap = kDefaultOrderCap);

TupleSeq order_to_tuple_sequence(const Order& order);
Order tuple_sequence_to_order(const TupleSeq& ts);

struct TupleCheck {
    bool ok = true;
    int property = 0;  // first violated property (1..4), 0 for shape errors or success
    int index = -1;    // offending tuple index
    std::string message;
};

TupleCheck validate_tuple_sequence(const TupleSeq& ts);

// Length M of the longest prefix equal to (1, 2, ..., M).
int staircase_prefix(const Tuple& a);

ExpVec dimension_vector(Interval iv, int n);

// Permutations of enumerate_intervals(n) that are not admissible, in
// lexicographic order. Exhaustive, so n is limited to 3.
std::vector<Order> non_admissible_permutations(int n);

// Enumeration against exhaustive filtering for n <= min(n_max, 3), then the
// order/tuple round trip and the endpoints a_0, a_N for every n <= n_max.
Report verify_order_census(int n_max, int cap = kDefaultOrderCap);

}  // namespace qdl
