#include "symdyn/labeled_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace symdyn {

int LabeledGraph::edge_count() const {
    int n = 0;
    for (const auto& o : out_) n += static_cast<int>(o.size());
    return n;
}

int LabeledGraph::add_vertex() {
    out_.emplace_back();
    right_resolving_.reset();
    return static_cast<int>(out_.size()) - 1;
}

void LabeledGraph::add_edge(int from, int to, int symbol) {
    if (from < 0 || from >= vertex_count() || to < 0 || to >= vertex_count())
        throw input_error("labeled graph: edge endpoint out of range");
    if (symbol < 0 || symbol >= alphabet_.size())
        throw input_error("labeled graph: edge label out of range");
    out_[static_cast<size_t>(from)].push_back({to, symbol});
    right_resolving_.reset();
}

bool LabeledGraph::right_resolving() const {
    if (!right_resolving_) {
        bool rr = true;
        for (const auto& edges : out_) {
            std::set<int> seen;
            for (const auto& e : edges)
                if (!seen.insert(e.symbol).second) { rr = false; break; }
            if (!rr) break;
        }
        right_resolving_ = rr;
    }
    return *right_resolving_;
}

int LabeledGraph::step(int v, int symbol) const {
    for (const auto& e : out_.at(static_cast<size_t>(v)))
        if (e.symbol == symbol) return e.to;
    return -1;
}

DiGraph LabeledGraph::underlying() const {
    DiGraph g(vertex_count());
    for (int v = 0; v < vertex_count(); ++v)
        for (const auto& e : out(v)) g.add_edge(v, e.to);
    return g;
}

SubsetAutomaton::SubsetAutomaton(const LabeledGraph& g, int state_cap) {
    std::vector<int> all(static_cast<size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) all[static_cast<size_t>(i)] = i;
    build(g, std::move(all), state_cap);
}

SubsetAutomaton::SubsetAutomaton(const LabeledGraph& g, std::vector<int> start_subset, int state_cap) {
    build(g, std::move(start_subset), state_cap);
}

void SubsetAutomaton::build(const LabeledGraph& g, std::vector<int> start_subset, int state_cap) {
    symbols_ = g.alphabet().size();
    std::sort(start_subset.begin(), start_subset.end());
    start_subset.erase(std::unique(start_subset.begin(), start_subset.end()), start_subset.end());
    if (start_subset.empty()) throw input_error("subset automaton: empty start subset");

    std::map<std::vector<int>, int> id;
    members_.push_back(start_subset);
    id.emplace(std::move(start_subset), 0);
    for (size_t qi = 0; qi < members_.size(); ++qi) {
        trans_.emplace_back(static_cast<size_t>(symbols_), -1);
        for (int a = 0; a < symbols_; ++a) {
            std::set<int> img;
            for (int v : members_[qi])
                for (const auto& e : g.out(v))
                    if (e.symbol == a) img.insert(e.to);
            if (img.empty()) continue;
            std::vector<int> key(img.begin(), img.end());
            auto it = id.find(key);
            int target;
            if (it != id.end()) {
                target = it->second;
            } else {
                target = static_cast<int>(members_.size());
                if (target >= state_cap)
                    throw budget_error("subset automaton: state cap exceeded");
                members_.push_back(key);
                id.emplace(std::move(key), target);
            }
            trans_[qi][static_cast<size_t>(a)] = target;
        }
    }
}

int SubsetAutomaton::walk(int state, const Word& w) const {
    int s = state;
    for (int c : w) {
        if (s < 0) return -1;
        s = step(s, c);
    }
    return s;
}

DeterminizeResult determinize(const LabeledGraph& g, int state_cap) {
    SubsetAutomaton aut(g, state_cap);
    LabeledGraph out(g.alphabet(), aut.state_count());
    for (int s = 0; s < aut.state_count(); ++s)
        for (int a = 0; a < aut.symbol_count(); ++a)
            if (int t = aut.step(s, a); t >= 0) out.add_edge(s, t, a);
    DeterminizeResult res{std::move(out), {}, aut.start()};
    res.state_members.reserve(static_cast<size_t>(aut.state_count()));
    for (int s = 0; s < aut.state_count(); ++s) res.state_members.push_back(aut.members(s));
    return res;
}

namespace {

/// Hopcroft-style refinement on "same follower set": two states are merged
/// when for every symbol they agree on having a transition and the targets are
/// equivalent.
std::vector<int> follower_partition(const LabeledGraph& det) {
    const int n = det.vertex_count();
    const int k = det.alphabet().size();
    std::vector<int> cls(static_cast<size_t>(n), 0);
    int classes = 1;
    for (;;) {
        std::map<std::vector<int>, int> sig_id;
        std::vector<int> next(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig;
            sig.reserve(static_cast<size_t>(k) + 1);
            sig.push_back(cls[static_cast<size_t>(v)]);
            for (int a = 0; a < k; ++a) {
                int t = det.step(v, a);
                sig.push_back(t < 0 ? -1 : cls[static_cast<size_t>(t)]);
            }
            auto [it, fresh] = sig_id.emplace(std::move(sig), static_cast<int>(sig_id.size()));
            (void)fresh;
            next[static_cast<size_t>(v)] = it->second;
        }
        int next_classes = static_cast<int>(sig_id.size());
        if (next_classes == classes) return next;
        classes = next_classes;
        cls = std::move(next);
    }
}

} // namespace

LabeledGraph fischer_cover_sofic(const LabeledGraph& g) {
    DeterminizeResult det = determinize(g);
    std::vector<int> cls = follower_partition(det.graph);
    int classes = 1 + *std::max_element(cls.begin(), cls.end());

    // Quotient by follower-set equivalence. Ties in state naming: each class
    // is represented by its smallest-subset-lexicographic member.
    std::vector<int> rep(static_cast<size_t>(classes), -1);
    for (int v = 0; v < det.graph.vertex_count(); ++v) {
        int c = cls[static_cast<size_t>(v)];
        if (rep[static_cast<size_t>(c)] < 0 ||
            det.state_members[static_cast<size_t>(v)] < det.state_members[static_cast<size_t>(rep[static_cast<size_t>(c)])])
            rep[static_cast<size_t>(c)] = v;
    }
    LabeledGraph quot(g.alphabet(), classes);
    for (int c = 0; c < classes; ++c) {
        int v = rep[static_cast<size_t>(c)];
        for (const auto& e : det.graph.out(v))
            quot.add_edge(c, cls[static_cast<size_t>(e.to)], e.symbol);
    }

    // The Fischer cover is the unique irreducible sink of the condensation.
    SccResult scc = strongly_connected_components(quot.underlying());
    std::vector<char> is_sink(static_cast<size_t>(scc.count), 1);
    std::vector<char> has_edge(static_cast<size_t>(scc.count), 0);
    for (int v = 0; v < quot.vertex_count(); ++v)
        for (const auto& e : quot.out(v)) {
            int cv = scc.component[static_cast<size_t>(v)], ct = scc.component[static_cast<size_t>(e.to)];
            if (cv != ct) is_sink[static_cast<size_t>(cv)] = 0;
            else has_edge[static_cast<size_t>(cv)] = 1;
        }
    int sink = -1;
    for (int c = 0; c < scc.count; ++c) {
        if (!is_sink[static_cast<size_t>(c)] || !has_edge[static_cast<size_t>(c)]) continue;
        if (sink >= 0)
            throw precondition_error("fischer_cover_sofic: presentation has multiple irreducible "
                                     "sink components (shift is not irreducible sofic)");
        sink = c;
    }
    if (sink < 0)
        throw precondition_error("fischer_cover_sofic: no irreducible sink component");

    // Order the sink's states by their representative subsets for determinism.
    std::vector<int> verts = scc.members[static_cast<size_t>(sink)];
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        return det.state_members[static_cast<size_t>(rep[static_cast<size_t>(a)])] <
               det.state_members[static_cast<size_t>(rep[static_cast<size_t>(b)])];
    });
    std::vector<int> remap(static_cast<size_t>(classes), -1);
    for (size_t i = 0; i < verts.size(); ++i) remap[static_cast<size_t>(verts[i])] = static_cast<int>(i);
    LabeledGraph cover(g.alphabet(), static_cast<int>(verts.size()));
    for (int v : verts)
        for (const auto& e : quot.out(v))
            cover.add_edge(remap[static_cast<size_t>(v)], remap[static_cast<size_t>(e.to)], e.symbol);
    return cover;
}

std::optional<Word> find_synchronizing_word(const LabeledGraph& g, int max_len) {
    if (!g.right_resolving())
        throw precondition_error("find_synchronizing_word: graph is not right-resolving");
    if (max_len <= 0) throw input_error("find_synchronizing_word: max_len must be positive");
    SubsetAutomaton aut(g);
    struct Back { int parent; int symbol; };
    std::vector<Back> back(static_cast<size_t>(aut.state_count()), {-1, -1});
    std::vector<int> depth(static_cast<size_t>(aut.state_count()), -1);
    std::vector<int> queue{aut.start()};
    depth[static_cast<size_t>(aut.start())] = 0;
    auto reconstruct = [&](int s) {
        Word w;
        while (back[static_cast<size_t>(s)].parent >= 0) {
            w.push_back(back[static_cast<size_t>(s)].symbol);
            s = back[static_cast<size_t>(s)].parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    if (aut.members(aut.start()).size() == 1) return Word{};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int s = queue[qi];
        if (depth[static_cast<size_t>(s)] >= max_len) continue;
        for (int a = 0; a < aut.symbol_count(); ++a) {
            int t = aut.step(s, a);
            if (t < 0 || depth[static_cast<size_t>(t)] >= 0) continue;
            depth[static_cast<size_t>(t)] = depth[static_cast<size_t>(s)] + 1;
            back[static_cast<size_t>(t)] = {s, a};
            if (aut.members(t).size() == 1) return reconstruct(t);
            queue.push_back(t);
        }
    }
    return std::nullopt;
}

BigInt sofic_block_count(const LabeledGraph& g, int n) {
    if (n < 0) throw input_error("sofic_block_count: negative length");
    SubsetAutomaton aut(g);
    std::vector<BigInt> dp(static_cast<size_t>(aut.state_count()), 0);
    dp[static_cast<size_t>(aut.start())] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> next(static_cast<size_t>(aut.state_count()), 0);
        for (int s = 0; s < aut.state_count(); ++s) {
            if (dp[static_cast<size_t>(s)] == 0) continue;
            for (int a = 0; a < aut.symbol_count(); ++a)
                if (int t = aut.step(s, a); t >= 0) next[static_cast<size_t>(t)] += dp[static_cast<size_t>(s)];
        }
        dp.swap(next);
    }
    BigInt total = 0;
    for (const auto& c : dp) total += c;
    return total;
}

namespace {

/// w^inf is a point of the presented shift iff iterating the (partial,
/// deterministic) w-action on vertices finds a periodic orbit.
bool periodic_word_admissible(const LabeledGraph& g, const Word& w) {
    const int n = g.vertex_count();
    std::vector<int> action(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        int cur = v;
        for (int c : w) {
            cur = g.step(cur, c);
            if (cur < 0) break;
        }
        action[static_cast<size_t>(v)] = cur;
    }
    for (int v = 0; v < n; ++v) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        int cur = v;
        while (cur >= 0 && !seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = 1;
            cur = action[static_cast<size_t>(cur)];
        }
        if (cur >= 0) return true; // revisit: cycle under the w-action
    }
    return false;
}

void enumerate_periodic(const LabeledGraph& g, const SubsetAutomaton& aut, int state, Word& prefix,
                        int n, BigInt& count) {
    if (static_cast<int>(prefix.size()) == n) {
        if (periodic_word_admissible(g, prefix)) ++count;
        return;
    }
    for (int a = 0; a < aut.symbol_count(); ++a) {
        int t = aut.step(state, a);
        if (t < 0) continue;
        prefix.push_back(a);
        enumerate_periodic(g, aut, t, prefix, n, count);
        prefix.pop_back();
    }
}

} // namespace

BigInt periodic_points_sofic(const LabeledGraph& g, int n) {
    if (n <= 0) throw input_error("periodic_points_sofic: n must be positive");
    if (!g.right_resolving())
        throw precondition_error("periodic_points_sofic: graph is not right-resolving");
    SubsetAutomaton aut(g);
    BigInt count = 0;
    Word prefix;
    enumerate_periodic(g, aut, aut.start(), prefix, n, count);
    return count;
}

} // namespace symdyn
