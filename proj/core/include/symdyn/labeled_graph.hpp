#ifndef SYMDYN_LABELED_GRAPH_HPP
#define SYMDYN_LABELED_GRAPH_HPP

#include <optional>
#include <vector>

#include "symdyn/alphabet.hpp"
#include "symdyn/digraph.hpp"

namespace symdyn {

/// Directed multigraph with totally labeled edges; carrier for sofic
/// presentations and Fischer covers.
class LabeledGraph {
public:
    struct Edge {
        int to;
        int symbol;
    };

    LabeledGraph(Alphabet a, int vertices)
        : alphabet_(std::move(a)), out_(static_cast<size_t>(vertices)) {}

    int vertex_count() const { return static_cast<int>(out_.size()); }
    int edge_count() const;
    int add_vertex();
    void add_edge(int from, int to, int symbol);

    const std::vector<Edge>& out(int v) const { return out_.at(static_cast<size_t>(v)); }
    const Alphabet& alphabet() const { return alphabet_; }

    /// "for each vertex I the edges starting at I carry different labels"
    bool right_resolving() const;

    /// Deterministic step for right-resolving graphs: -1 when no edge.
    int step(int v, int symbol) const;

    /// Forget the labels.
    DiGraph underlying() const;

private:
    Alphabet alphabet_;
    std::vector<std::vector<Edge>> out_;
    mutable std::optional<bool> right_resolving_;
};

/// Deterministic subset automaton of a labeled graph, built breadth-first from
/// the full vertex set (or a custom start subset). Transitions into the empty
/// subset are absent; a walk exists from the start iff the word is an
/// admissible block of the presented sofic shift.
class SubsetAutomaton {
public:
    static constexpr int default_state_cap = 1 << 16;

    explicit SubsetAutomaton(const LabeledGraph& g, int state_cap = default_state_cap);
    SubsetAutomaton(const LabeledGraph& g, std::vector<int> start_subset, int state_cap = default_state_cap);

    int start() const { return 0; }
    int state_count() const { return static_cast<int>(members_.size()); }
    int symbol_count() const { return symbols_; }
    int step(int state, int symbol) const { return trans_[static_cast<size_t>(state)][static_cast<size_t>(symbol)]; }
    int walk(int state, const Word& w) const;
    const std::vector<int>& members(int state) const { return members_[static_cast<size_t>(state)]; }

private:
    void build(const LabeledGraph& g, std::vector<int> start_subset, int state_cap);

    int symbols_ = 0;
    std::vector<std::vector<int>> members_;
    std::vector<std::vector<int>> trans_;
};

struct DeterminizeResult {
    LabeledGraph graph;                          // right-resolving, same sofic language
    std::vector<std::vector<int>> state_members; // output vertex -> input-vertex subset
    int start;                                   // vertex corresponding to the full subset
};

/// Subset construction; reachable (nonempty) subsets only.
DeterminizeResult determinize(const LabeledGraph& g, int state_cap = SubsetAutomaton::default_state_cap);

/// Minimal right-resolving presentation of the irreducible sofic shift
/// presented by g: determinize, merge follower-set-equivalent states by
/// partition refinement, take the unique nontrivial terminal component of the
/// condensation. precondition_error when there is no unique irreducible sink.
LabeledGraph fischer_cover_sofic(const LabeledGraph& g);

/// Shortest word whose subset-transition image is a singleton, via BFS over
/// subsets; such a word is synchronizing for the presented shift.
/// nullopt when none of length <= max_len exists. Requires right-resolving g.
std::optional<Word> find_synchronizing_word(const LabeledGraph& g, int max_len);

/// Exact number of admissible n-blocks of the presented sofic shift.
BigInt sofic_block_count(const LabeledGraph& g, int n);

/// Number of label words w of length n with w-periodic points in the presented
/// shift (fixed points of sigma^n). Requires right-resolving g.
BigInt periodic_points_sofic(const LabeledGraph& g, int n);

} // namespace symdyn

#endif
