#pragma once

#include "qdilog/curves.hpp"
#include "qdilog/quiver.hpp"
#include "qdilog/report.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qdl {

struct NoSuchEdge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BigonEdge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidTuple : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct MissingPositiveEdge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vertex {
    int column = 0;
    int height = 0;
    bool operator==(const Vertex&) const = default;
};

struct Edge {
    int u = 0;  // u < w
    int w = 0;
    CurveClass label;
    bool operator==(const Edge&) const = default;
};

// A twist word letter: sign +1 is a forward twist, -1 an inverse twist.
using TwistWord = std::vector<CurveClass>;

TwistWord reduce_word(const TwistWord& w);

struct HalfEdge {
    int vertex = 0;
    TwistWord word;
    bool operator==(const HalfEdge&) const = default;
};

// Bottom-row model of the subsquare: vertices v_0..v_n, internal edges, and
// the boundary half-edges H_{-1}..H_{n+1} in cyclic order.
class MutGraph {
public:
    MutGraph() = default;
    explicit MutGraph(int n);

    int n() const { return n_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const HalfEdge& half_edge(int k) const { return half_.at(k + 1); }
    int half_edge_count() const { return static_cast<int>(half_.size()); }

    Vertex& vertex(int id) { return vertices_.at(id); }
    HalfEdge& half_edge_mut(int k) { return half_.at(k + 1); }
    void set_edge(int a, int b, const CurveClass& label);
    void remove_edge(int a, int b);
    const Edge* find_edge(int a, int b) const;

    // Empty when degree-3, single-edge and height invariants hold.
    std::string check_invariants() const;

private:
    int n_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;  // sorted by (u, w)
    std::vector<HalfEdge> half_;
};

// Which branch each endpoint keeps during a positive mutation.
enum class PinningRule { KeepFirst, KeepSecond };

MutGraph square_graph(int n);
MutGraph canoe_graph(int n);
MutGraph positive_mutation(const MutGraph& g, const CurveClass& edge_curve,
                           PinningRule rule = PinningRule::KeepFirst);
MutGraph graph_for_tuple(const Tuple& a);

struct TraceStep {
    CurveClass mutated;
    MutGraph graph;
};

struct MutationTrace {
    MutGraph initial;
    std::vector<TraceStep> steps;
    const MutGraph& final_graph() const { return steps.empty() ? initial : steps.back().graph; }
};

MutationTrace short_sequence(int n);
MutationTrace long_sequence(const Order& order);

struct GraphDiff {
    bool equal = true;
    std::string diagnostic;
};

GraphDiff graphs_equal(const MutGraph& a, const MutGraph& b);

Report verify_mutation_equivalence(int n, int cap = kDefaultOrderCap);

json graph_json(const MutGraph& g);
json trace_json(const MutationTrace& t);

}  // namespace qdl
