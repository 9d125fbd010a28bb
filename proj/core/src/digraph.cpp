#include "symdyn/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symdyn {

int DiGraph::add_vertex() {
    out_.emplace_back();
    return static_cast<int>(out_.size()) - 1;
}

void DiGraph::add_edge(int from, int to) {
    if (from < 0 || from >= vertex_count() || to < 0 || to >= vertex_count())
        throw input_error("digraph: edge endpoint out of range");
    out_[static_cast<size_t>(from)].push_back(to);
}

int DiGraph::edge_count() const {
    int n = 0;
    for (const auto& o : out_) n += static_cast<int>(o.size());
    return n;
}

SccResult strongly_connected_components(const DiGraph& g) {
    const int n = g.vertex_count();
    SccResult res;
    res.component.assign(static_cast<size_t>(n), -1);
    std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<char> on_stack(static_cast<size_t>(n), 0);
    std::vector<int> stack;
    int next_index = 0;

    // Iterative Tarjan.
    struct Frame { int v; size_t ei; };
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<size_t>(root)] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<size_t>(root)] = 1;
        while (!call.empty()) {
            auto& [v, ei] = call.back();
            const auto& succ = g.out(v);
            if (ei < succ.size()) {
                int w = succ[ei++];
                if (index[static_cast<size_t>(w)] == -1) {
                    index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<size_t>(w)] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[static_cast<size_t>(w)]) {
                    low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
                }
            } else {
                if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
                    res.members.emplace_back();
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<size_t>(w)] = 0;
                        res.component[static_cast<size_t>(w)] = res.count;
                        res.members.back().push_back(w);
                    } while (w != v);
                    ++res.count;
                }
                int parent_done = v;
                call.pop_back();
                if (!call.empty()) {
                    int p = call.back().v;
                    low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(parent_done)]);
                }
            }
        }
    }
    // Tarjan emits components in reverse topological order.
    res.topo_order.resize(static_cast<size_t>(res.count));
    std::iota(res.topo_order.rbegin(), res.topo_order.rend(), 0);
    return res;
}

bool is_irreducible(const DiGraph& g) {
    if (g.vertex_count() == 0) return false;
    auto scc = strongly_connected_components(g);
    if (scc.count != 1) return false;
    return g.edge_count() > 0; // a single vertex must carry a self-loop
}

int graph_period(const DiGraph& g) {
    if (!is_irreducible(g)) throw precondition_error("graph_period: graph is not irreducible");
    const int n = g.vertex_count();
    std::vector<int> level(static_cast<size_t>(n), -1);
    std::vector<int> queue{0};
    level[0] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int u : g.out(v)) {
            if (level[static_cast<size_t>(u)] == -1) {
                level[static_cast<size_t>(u)] = level[static_cast<size_t>(v)] + 1;
                queue.push_back(u);
            }
        }
    }
    int d = 0;
    for (int v = 0; v < n; ++v)
        for (int u : g.out(v))
            d = std::gcd(d, level[static_cast<size_t>(v)] + 1 - level[static_cast<size_t>(u)]);
    return d == 0 ? 1 : std::abs(d);
}

BigInt count_paths(const DiGraph& g, int from, int to, int n) {
    const int nv = g.vertex_count();
    if (from < 0 || from >= nv || to < 0 || to >= nv)
        throw input_error("count_paths: vertex out of range");
    if (n < 0) throw input_error("count_paths: negative length");
    std::vector<BigInt> dp(static_cast<size_t>(nv), 0);
    dp[static_cast<size_t>(from)] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> next(static_cast<size_t>(nv), 0);
        for (int v = 0; v < nv; ++v) {
            if (dp[static_cast<size_t>(v)] == 0) continue;
            for (int u : g.out(v)) next[static_cast<size_t>(u)] += dp[static_cast<size_t>(v)];
        }
        dp.swap(next);
    }
    return dp[static_cast<size_t>(to)];
}

std::pair<double, double> graph_entropy(const DiGraph& g, double tol, int max_iter) {
    if (tol <= 0) throw input_error("graph_entropy: tol must be positive");
    if (!is_irreducible(g)) throw precondition_error("graph_entropy: graph is not irreducible");
    const int n = g.vertex_count();
    // Iterate on A + I: primitive for any irreducible A, so the
    // Collatz-Wielandt ratio bounds close. lambda(A) = lambda(A+I) - 1.
    std::vector<BigInt> x(static_cast<size_t>(n), 1);
    double lo_e = 0.0, hi_e = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        std::vector<BigInt> y(x); // identity part
        for (int v = 0; v < n; ++v)
            for (int u : g.out(v)) y[static_cast<size_t>(v)] += x[static_cast<size_t>(u)];
        BigRat lo, hi;
        for (int v = 0; v < n; ++v) {
            BigRat r(y[static_cast<size_t>(v)], x[static_cast<size_t>(v)]);
            if (v == 0 || r < lo) lo = r;
            if (v == 0 || r > hi) hi = r;
        }
        BigRat lo_a = lo - 1, hi_a = hi - 1;
        if (lo_a < 1) lo_a = 1; // irreducible graphs contain a cycle, so lambda >= 1
        lo_e = log_big(lo_a);
        hi_e = log_big(hi_a);
        if (hi_e - lo_e <= tol) return {lo_e, hi_e};
        x.swap(y);
    }
    std::ostringstream os;
    os << "graph_entropy: enclosure width " << (hi_e - lo_e) << " > tol " << tol
       << " after " << max_iter << " iterations; last enclosure [" << lo_e << ", " << hi_e << "]";
    throw budget_error(os.str());
}

} // namespace symdyn
