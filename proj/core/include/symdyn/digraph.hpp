#ifndef SYMDYN_DIGRAPH_HPP
#define SYMDYN_DIGRAPH_HPP

#include <utility>
#include <vector>

#include "symdyn/bigint.hpp"
#include "symdyn/errors.hpp"

namespace symdyn {

/// Directed multigraph; parallel edges allowed.
class DiGraph {
public:
    DiGraph() = default;
    explicit DiGraph(int vertices) : out_(static_cast<size_t>(vertices)) {}

    int vertex_count() const { return static_cast<int>(out_.size()); }
    int add_vertex();
    void add_edge(int from, int to);

    /// Out-neighbours of `v` (with multiplicity).
    const std::vector<int>& out(int v) const { return out_.at(static_cast<size_t>(v)); }
    int edge_count() const;

private:
    std::vector<std::vector<int>> out_;
};

struct SccResult {
    std::vector<int> component;        // vertex -> component id
    int count = 0;                     // number of components
    std::vector<std::vector<int>> members;   // component id -> vertices
    std::vector<int> topo_order;       // component ids in topological (condensation) order
};

/// Tarjan strongly connected components. Component ids in `topo_order` run
/// from sources to sinks of the condensation.
SccResult strongly_connected_components(const DiGraph& g);

/// True iff g is a single SCC covering every vertex (and has at least one edge
/// when it has one vertex, so that bi-infinite walks exist).
bool is_irreducible(const DiGraph& g);

/// gcd of all cycle lengths of an irreducible graph, via BFS level differences.
/// precondition_error when g is not irreducible.
int graph_period(const DiGraph& g);

/// Exact number of paths of length n from I to J.
BigInt count_paths(const DiGraph& g, int from, int to, int n);

/// Certified enclosure [lo, hi] (nats) of log of the Perron eigenvalue of an
/// irreducible graph's adjacency matrix. Power iteration on A + I with exact
/// integer vectors; Collatz-Wielandt ratio bounds shrink until hi - lo <= tol.
/// budget_error (carrying the last enclosure in the message) if the iteration
/// cap is hit first.
std::pair<double, double> graph_entropy(const DiGraph& g, double tol, int max_iter = 4096);

} // namespace symdyn

#endif
