#include "qdilog/graphs.hpp"

#include <algorithm>
#include <set>

namespace qdl {

TwistWord reduce_word(const TwistWord& w) {
    TwistWord out;
    for (const CurveClass& c : w) {
        if (!out.empty() && out.back().iv == c.iv && out.back().sign == -c.sign)
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

MutGraph::MutGraph(int n) : n_(n), vertices_(n + 1), half_(n + 3) {
    for (int i = 0; i <= n; ++i) vertices_[i] = {i, -n};
}

const Edge* MutGraph::find_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (const Edge& e : edges_)
        if (e.u == a && e.w == b) return &e;
    return nullptr;
}

void MutGraph::set_edge(int a, int b, const CurveClass& label) {
    if (a == b) throw BigonEdge("edge would be a loop at v_" + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (find_edge(a, b))
        throw BigonEdge("second edge between v_" + std::to_string(a) + " and v_" + std::to_string(b));
    Edge e{a, b, label};
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), e, [](const Edge& x, const Edge& y) {
        return std::pair(x.u, x.w) < std::pair(y.u, y.w);
    });
    edges_.insert(pos, e);
}

void MutGraph::remove_edge(int a, int b) {
    if (a > b) std::swap(a, b);
    auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.u == a && e.w == b; });
    if (it == edges_.end()) throw NoSuchEdge("no edge between v_" + std::to_string(a) + " and v_" + std::to_string(b));
    edges_.erase(it);
}

std::string MutGraph::check_invariants() const {
    std::vector<int> deg(n_ + 1, 0);
    for (const Edge& e : edges_) {
        ++deg.at(e.u);
        ++deg.at(e.w);
    }
    for (const HalfEdge& h : half_) ++deg.at(h.vertex);
    for (int v = 0; v <= n_; ++v) {
        if (deg[v] != 3) return "v_" + std::to_string(v) + " has degree " + std::to_string(deg[v]);
        int h = vertices_[v].height;
        if (h < -n_ || h > n_) return "v_" + std::to_string(v) + " height out of range";
    }
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].u == edges_[i - 1].u && edges_[i].w == edges_[i - 1].w) return "duplicate edge";
    return {};
}

MutGraph square_graph(int n) {
    if (n < 2) throw std::invalid_argument("square graph needs n >= 2");
    MutGraph g(n);
    for (int j = 1; j <= n; ++j) g.set_edge(j - 1, j, L(j, j));
    g.half_edge_mut(-1).vertex = 0;
    g.half_edge_mut(0).vertex = 0;
    for (int k = 1; k <= n; ++k) g.half_edge_mut(k).vertex = k;
    g.half_edge_mut(n + 1).vertex = n;
    return g;
}

MutGraph canoe_graph(int n) {
    if (n < 2) throw std::invalid_argument("canoe graph needs n >= 2");
    Tuple a(n);
    for (int j = 0; j < n; ++j) a[j] = j + 1;
    return graph_for_tuple(a);
}

namespace {

struct Branch {
    bool half = false;
    int id = 0;  // half-edge index k, or the neighbouring vertex
    std::set<int> leaves;
};

void collect_leaves(const MutGraph& g, int v, int from, std::set<int>& out) {
    for (int k = -1; k <= g.n() + 1; ++k)
        if (g.half_edge(k).vertex == v) out.insert(k);
    for (const Edge& e : g.edges()) {
        int o = e.u == v ? e.w : (e.w == v ? e.u : -1);
        if (o >= 0 && o != from) collect_leaves(g, o, v, out);
    }
}

// The two branches at x other than the edge to `other`, ordered so that the
// first one holds the start of their contiguous block of boundary leaves.
std::pair<Branch, Branch> split(const MutGraph& g, int x, int other) {
    std::vector<Branch> br;
    for (int k = -1; k <= g.n() + 1; ++k)
        if (g.half_edge(k).vertex == x) br.push_back({true, k, {k}});
    for (const Edge& e : g.edges()) {
        int o = e.u == x ? e.w : (e.w == x ? e.u : -1);
        if (o < 0 || o == other) continue;
        Branch b{false, o, {}};
        collect_leaves(g, o, x, b.leaves);
        br.push_back(b);
    }
    if (br.size() != 2) throw std::logic_error("vertex v_" + std::to_string(x) + " is not trivalent");
    const int cyc = g.n() + 3;
    auto idx = [](int k) { return k + 1; };
    std::set<int> all;
    for (const Branch& b : br)
        for (int k : b.leaves) all.insert(idx(k));
    std::vector<int> starts;
    for (int i : all)
        if (!all.count((i - 1 + cyc) % cyc)) starts.push_back(i);
    if (starts.size() != 1) throw std::logic_error("leaf block at v_" + std::to_string(x) + " is not contiguous");
    int start_leaf = starts[0] - 1;
    if (br[0].leaves.count(start_leaf)) return {br[0], br[1]};
    return {br[1], br[0]};
}

// Chain curves met by H_k in the square graph.
bool meets_base_support(int n, int k, const Interval& iv) {
    int s = std::clamp(k, 0, n);
    auto in = [&](int m) { return m >= iv.lo && m <= iv.hi; };
    return (s >= 1 && in(s)) || (s + 1 <= n && in(s + 1));
}

}  // namespace

MutGraph positive_mutation(const MutGraph& g, const CurveClass& edge_curve, PinningRule rule) {
    const Edge* e = nullptr;
    int count = 0;
    for (const Edge& x : g.edges())
        if (x.label == edge_curve) {
            e = &x;
            ++count;
        }
    if (count == 0) throw NoSuchEdge("no edge labeled " + edge_curve.str());
    if (count > 1) throw NoSuchEdge("edge label " + edge_curve.str() + " is not unique");
    const int u = e->u, w = e->w;
    const CurveClass E = edge_curve.positive();
    auto [uf, us] = split(g, u, w);
    auto [wf, ws] = split(g, w, u);
    const Branch& up = rule == PinningRule::KeepFirst ? us : uf;
    const Branch& wp = rule == PinningRule::KeepFirst ? ws : wf;

    MutGraph r = g;
    r.remove_edge(u, w);
    struct Pending {
        int to;
        int other;
        CurveClass label;
    };
    std::vector<Pending> pending;
    auto pass = [&](const Branch& b, int from, int to) {
        if (b.half) {
            HalfEdge& h = r.half_edge_mut(b.id);
            h.vertex = to;
            if (meets_base_support(g.n(), b.id, E.iv)) {
                h.word.push_back(E);
            } else {
                for (CurveClass& c : h.word) c = {c.sign, dehn_twist(E, c.positive()).iv};
            }
            h.word = reduce_word(h.word);
        } else {
            const Edge* old = g.find_edge(from, b.id);
            r.remove_edge(from, b.id);
            pending.push_back({to, b.id, dehn_twist(E, old->label)});
        }
    };
    pass(up, u, w);
    pass(wp, w, u);
    for (const Pending& p : pending) r.set_edge(p.to, p.other, p.label);
    r.set_edge(u, w, edge_curve.negated());
    r.vertex(w).height = -g.n() + g.vertices()[u].column + 1;
    return r;
}

MutGraph graph_for_tuple(const Tuple& a) {
    const int n = static_cast<int>(a.size());
    if (n < 2) throw InvalidTuple("tuple must have length >= 2");
    for (int j = 0; j < n; ++j)
        if (a[j] < 0 || a[j] > j + 1)
            throw InvalidTuple("entry " + std::to_string(j + 1) + " violates 0 <= i_j <= j");
    const int M = staircase_prefix(a);
    for (int j = std::max(M - 1, 0) + 1; j < n; ++j)
        if (a[j] > a[j - 1]) throw InvalidTuple("tail after the staircase prefix is not non-increasing");

    std::vector<int> i(n + 1, 0);
    for (int k = 1; k <= n; ++k) i[k] = a[k - 1];
    MutGraph g(n);
    for (int k = 0; k <= n; ++k) g.vertex(k) = {k, -n + i[k]};
    auto add = [&](int x, int y) {
        if (x > y) std::swap(x, y);
        int sign = g.vertices()[x].height == g.vertices()[y].height ? 1 : -1;
        g.set_edge(x, y, L(x + 1, y, sign));
    };
    for (int h = 0; h <= M; ++h) {
        std::vector<int> level{h};
        for (int j = M + 1; j <= n; ++j)
            if (i[j] == h) level.push_back(j);
        for (size_t k = 1; k < level.size(); ++k) add(level[k - 1], level[k]);
    }
    for (int l = 0; l < M; ++l) {
        int mx = -1;
        for (int j = 1; j <= n; ++j)
            if (i[j] == l + 1) mx = j;
        add(l, mx);
    }
    for (int k = -1; k < M; ++k) g.half_edge_mut(k).vertex = k + 1;
    g.half_edge_mut(M).vertex = M;
    for (int k = M + 1; k <= n; ++k) g.half_edge_mut(k).vertex = k;
    g.half_edge_mut(n + 1).vertex = i[n] == 0 ? n : 0;
    for (int k = 0; k < M; ++k) g.half_edge_mut(k).word = {L(k + 1, k + 1)};
    if (i[n] >= 1) g.half_edge_mut(n + 1).word = {L(1, n)};
    return g;
}

MutationTrace short_sequence(int n) {
    MutationTrace t{square_graph(n), {}};
    for (int i = n; i >= 1; --i) {
        CurveClass c = L(i, i);
        t.steps.push_back({c, positive_mutation(t.final_graph(), c)});
    }
    return t;
}

MutationTrace long_sequence(const Order& order) {
    if (!is_admissible_order(order)) throw NotAPermutation("order is not admissible");
    int n = order_dimension(order);
    MutationTrace t{square_graph(n), {}};
    for (const Interval& iv : order) {
        CurveClass c{1, iv};
        const MutGraph& g = t.final_graph();
        bool found = std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return e.label == c; });
        if (!found) throw MissingPositiveEdge("no positively labeled edge for " + c.str());
        t.steps.push_back({c, positive_mutation(g, c)});
    }
    return t;
}

namespace {

std::string word_str(const TwistWord& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + w[i].str();
    return s + "]";
}

}  // namespace

GraphDiff graphs_equal(const MutGraph& a, const MutGraph& b) {
    if (a.n() != b.n()) return {false, "different n"};
    for (const Edge& e : a.edges()) {
        const Edge* f = b.find_edge(e.u, e.w);
        std::string where = "edge v_" + std::to_string(e.u) + "-v_" + std::to_string(e.w);
        if (!f) return {false, where + " labeled " + e.label.str() + " missing in second graph"};
        if (!(f->label == e.label)) return {false, where + " labeled " + e.label.str() + " vs " + f->label.str()};
    }
    for (const Edge& e : b.edges())
        if (!a.find_edge(e.u, e.w))
            return {false, "edge v_" + std::to_string(e.u) + "-v_" + std::to_string(e.w) + " labeled " +
                               e.label.str() + " missing in first graph"};
    for (int v = 0; v <= a.n(); ++v) {
        const Vertex& x = a.vertices()[v];
        const Vertex& y = b.vertices()[v];
        if (!(x == y))
            return {false, "v_" + std::to_string(v) + " at (" + std::to_string(x.column) + "," +
                               std::to_string(x.height) + ") vs (" + std::to_string(y.column) + "," +
                               std::to_string(y.height) + ")"};
    }
    for (int k = -1; k <= a.n() + 1; ++k) {
        const HalfEdge& x = a.half_edge(k);
        const HalfEdge& y = b.half_edge(k);
        std::string where = "H_" + std::to_string(k);
        if (x.vertex != y.vertex)
            return {false, where + " at v_" + std::to_string(x.vertex) + " vs v_" + std::to_string(y.vertex)};
        TwistWord wx = reduce_word(x.word), wy = reduce_word(y.word);
        if (wx != wy) return {false, where + " word " + word_str(wx) + " vs " + word_str(wy)};
    }
    return {};
}

namespace {

json order_json(const Order& o) {
    json j = json::array();
    for (const Interval& iv : o) j.push_back({iv.lo, iv.hi});
    return j;
}

}  // namespace

Report verify_mutation_equivalence(int n, int cap) {
    Stopwatch sw;
    Report rep;
    rep.identity = "mutation-equivalence";
    rep.params["n"] = n;
    rep.params["D"] = nullptr;
    auto fail = [&](Status st, json d) {
        rep.status = st;
        rep.first_discrepancy = std::move(d);
        rep.runtime_ms = sw.ms();
        return rep;
    };
    std::vector<Order> orders;
    MutationTrace shrt;
    try {
        orders = enumerate_admissible_orders(n, cap);
        shrt = short_sequence(n);
    } catch (const std::exception& ex) {
        return fail(Status::Error, {{"error", ex.what()}});
    }
    rep.params["orders"] = orders.size();
    const MutGraph canoe = canoe_graph(n);
    if (auto d = graphs_equal(shrt.final_graph(), canoe); !d.equal)
        return fail(Status::Fail, {{"check", "short-final-vs-canoe"}, {"diff", d.diagnostic}});
    for (size_t oi = 0; oi < orders.size(); ++oi) {
        const Order& order = orders[oi];
        json where = {{"order_index", oi}, {"order", order_json(order)}};
        MutationTrace tr;
        try {
            tr = long_sequence(order);
        } catch (const std::exception& ex) {
            where["check"] = "long-trace";
            where["diff"] = ex.what();
            return fail(Status::Fail, where);
        }
        TupleSeq ts = order_to_tuple_sequence(order);
        for (size_t k = 0; k < tr.steps.size(); ++k) {
            if (!(tr.steps[k].mutated == CurveClass{1, order[k]})) {
                where["check"] = "mutated-curve";
                where["step"] = k + 1;
                where["diff"] = tr.steps[k].mutated.str();
                return fail(Status::Fail, where);
            }
            if (auto d = graphs_equal(tr.steps[k].graph, graph_for_tuple(ts[k + 1])); !d.equal) {
                where["check"] = "step-vs-graph-for-tuple";
                where["step"] = k + 1;
                where["diff"] = d.diagnostic;
                return fail(Status::Fail, where);
            }
            if (std::string inv = tr.steps[k].graph.check_invariants(); !inv.empty()) {
                where["check"] = "invariants";
                where["step"] = k + 1;
                where["diff"] = inv;
                return fail(Status::Fail, where);
            }
        }
        if (auto d = graphs_equal(tr.final_graph(), shrt.final_graph()); !d.equal) {
            where["check"] = "long-final-vs-short-final";
            where["diff"] = d.diagnostic;
            return fail(Status::Fail, where);
        }
    }
    rep.runtime_ms = sw.ms();
    return rep;
}

json graph_json(const MutGraph& g) {
    json verts = json::array(), edges = json::array(), halves = json::array();
    for (int v = 0; v <= g.n(); ++v)
        verts.push_back({{"id", v}, {"column", g.vertices()[v].column}, {"height", g.vertices()[v].height}});
    for (const Edge& e : g.edges()) edges.push_back({{"u", e.u}, {"w", e.w}, {"label", e.label.str()}});
    for (int k = -1; k <= g.n() + 1; ++k) {
        json word = json::array();
        for (const CurveClass& c : g.half_edge(k).word) word.push_back(c.str());
        halves.push_back({{"id", k}, {"vertex", g.half_edge(k).vertex}, {"word", word}});
    }
    return {{"n", g.n()}, {"vertices", verts}, {"edges", edges}, {"half_edges", halves}};
}

json trace_json(const MutationTrace& t) {
    json steps = json::array();
    for (const TraceStep& s : t.steps) steps.push_back({{"mutated", s.mutated.str()}, {"graph", graph_json(s.graph)}});
    return {{"initial", graph_json(t.initial)}, {"steps", steps}};
}

}  // namespace qdl
