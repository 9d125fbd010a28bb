#include "symdyn/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace symdyn {

std::vector<int> GeneratorSet::listed_lengths() const {
    std::vector<int> out;
    out.reserve(returns.size());
    for (const auto& w : returns) out.push_back(static_cast<int>(w.size()));
    std::sort(out.begin(), out.end());
    return out;
}

void LoopSpec::validate() const {
    for (int l : finite_lengths)
        if (l < 1) throw input_error("loop spec: loop lengths must be >= 1");
    for (auto [start, step] : progressions)
        if (start < 1 || step < 1) throw input_error("loop spec: progression start and step must be >= 1");
}

int LoopSpec::count_at(int n) const {
    int c = static_cast<int>(std::count(finite_lengths.begin(), finite_lengths.end(), n));
    for (auto [start, step] : progressions)
        if (n >= start && (n - start) % step == 0) ++c;
    return c;
}

namespace {

constexpr int member_budget = 200000;

struct ProductState {
    int d; // subset-automaton state after alpha . v-prefix
    int k; // KMP match length of alpha within v
    bool operator<(const ProductState& o) const { return d < o.d || (d == o.d && k < o.k); }
};

/// DFA over candidate prefixes v: dead when alpha.v becomes inadmissible or
/// alpha completes a match inside v. Accept when alpha is readable next.
struct VAutomaton {
    std::vector<ProductState> states;
    std::vector<std::vector<int>> trans; // state x symbol -> state or -1
    std::vector<char> accept;
    std::vector<char> trimmed; // co-reachable to an accept state
    int init = -1;             // -1 when alpha.v has no admissible continuation at all
};

VAutomaton build_v_automaton(const SubsetAutomaton& aut, const Word& alpha, int symbols) {
    VAutomaton va;
    int d0 = aut.walk(aut.start(), alpha);
    if (d0 < 0) throw input_error("extract_generators: alpha is not admissible");
    auto fail = kmp_failure(alpha);

    std::map<ProductState, int> id;
    std::vector<char> can_read_alpha(static_cast<size_t>(aut.state_count()), 2);
    auto accepts = [&](int d) {
        if (can_read_alpha[static_cast<size_t>(d)] == 2)
            can_read_alpha[static_cast<size_t>(d)] = aut.walk(d, alpha) >= 0 ? 1 : 0;
        return can_read_alpha[static_cast<size_t>(d)] == 1;
    };

    ProductState s0{d0, 0};
    va.states.push_back(s0);
    id.emplace(s0, 0);
    va.init = 0;
    for (size_t qi = 0; qi < va.states.size(); ++qi) {
        va.trans.emplace_back(static_cast<size_t>(symbols), -1);
        ProductState cur = va.states[qi];
        for (int a = 0; a < symbols; ++a) {
            int d = aut.step(cur.d, a);
            if (d < 0) continue;
            int k = kmp_step(alpha, fail, cur.k, a);
            if (k == static_cast<int>(alpha.size())) continue; // alpha occurred inside v
            ProductState nxt{d, k};
            auto [it, fresh] = id.emplace(nxt, static_cast<int>(va.states.size()));
            if (fresh) va.states.push_back(nxt);
            va.trans[qi][static_cast<size_t>(a)] = it->second;
        }
    }
    va.accept.resize(va.states.size());
    for (size_t i = 0; i < va.states.size(); ++i) va.accept[i] = accepts(va.states[i].d) ? 1 : 0;

    // Trim to states with an accepting continuation (reverse reachability).
    std::vector<std::vector<int>> rev(va.states.size());
    for (size_t i = 0; i < va.states.size(); ++i)
        for (int a = 0; a < symbols; ++a)
            if (int t = va.trans[i][static_cast<size_t>(a)]; t >= 0) rev[static_cast<size_t>(t)].push_back(static_cast<int>(i));
    va.trimmed.assign(va.states.size(), 0);
    std::vector<int> queue;
    for (size_t i = 0; i < va.states.size(); ++i)
        if (va.accept[i]) { va.trimmed[i] = 1; queue.push_back(static_cast<int>(i)); }
    for (size_t qi = 0; qi < queue.size(); ++qi)
        for (int p : rev[static_cast<size_t>(queue[qi])])
            if (!va.trimmed[static_cast<size_t>(p)]) { va.trimmed[static_cast<size_t>(p)] = 1; queue.push_back(p); }
    if (!va.trimmed[static_cast<size_t>(va.init)]) va.init = -1;
    return va;
}

void collect_members(const VAutomaton& va, int state, Word& v, int max_v_len, const Word& alpha,
                     std::vector<Word>& out) {
    if (va.accept[static_cast<size_t>(state)]) {
        Word member = v;
        member.insert(member.end(), alpha.begin(), alpha.end());
        out.push_back(std::move(member));
        if (static_cast<int>(out.size()) > member_budget)
            throw budget_error("extract_generators: member budget exceeded");
    }
    if (static_cast<int>(v.size()) == max_v_len) return;
    for (size_t a = 0; a < va.trans[static_cast<size_t>(state)].size(); ++a) {
        int t = va.trans[static_cast<size_t>(state)][a];
        if (t < 0 || !va.trimmed[static_cast<size_t>(t)]) continue;
        v.push_back(static_cast<int>(a));
        collect_members(va, t, v, max_v_len, alpha, out);
        v.pop_back();
    }
}

GeneratorSet extract_by_cover(const Language& lang, const Word& alpha, int horizon) {
    const LabeledGraph& cover = *lang.cover();
    SubsetAutomaton aut(cover);
    VAutomaton va = build_v_automaton(aut, alpha, cover.alphabet().size());

    GeneratorSet s;
    s.alphabet = lang.alphabet();
    s.alpha = alpha;
    s.horizon = horizon;
    if (va.init < 0) {
        s.complete = true; // no member exists at any length
        return s;
    }

    int max_v_len = horizon - static_cast<int>(alpha.size());
    if (max_v_len >= 0) {
        Word v;
        collect_members(va, va.init, v, max_v_len, alpha, s.returns);
    }

    // Cycle analysis on the trimmed automaton.
    const int n = static_cast<int>(va.states.size());
    std::vector<std::vector<int>> succ(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (!va.trimmed[static_cast<size_t>(i)]) continue;
        for (size_t a = 0; a < va.trans[static_cast<size_t>(i)].size(); ++a)
            if (int t = va.trans[static_cast<size_t>(i)][a]; t >= 0 && va.trimmed[static_cast<size_t>(t)])
                succ[static_cast<size_t>(i)].push_back(t);
    }
    // Acyclic iff the trimmed subgraph has a topological order.
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    int live = 0;
    for (int i = 0; i < n; ++i) {
        if (va.trimmed[static_cast<size_t>(i)]) ++live;
        for (int t : succ[static_cast<size_t>(i)]) ++indeg[static_cast<size_t>(t)];
    }
    std::vector<int> order;
    for (int i = 0; i < n; ++i)
        if (va.trimmed[static_cast<size_t>(i)] && indeg[static_cast<size_t>(i)] == 0) order.push_back(i);
    for (size_t qi = 0; qi < order.size(); ++qi)
        for (int t : succ[static_cast<size_t>(order[qi])])
            if (--indeg[static_cast<size_t>(t)] == 0) order.push_back(t);
    const bool acyclic = static_cast<int>(order.size()) == live;

    if (acyclic) {
        // Longest accepted |v| bounds the longest member.
        std::vector<int> longest(static_cast<size_t>(n), -1);
        longest[static_cast<size_t>(va.init)] = 0;
        int max_accept = -1;
        for (int i : order) {
            if (longest[static_cast<size_t>(i)] < 0) continue;
            if (va.accept[static_cast<size_t>(i)])
                max_accept = std::max(max_accept, longest[static_cast<size_t>(i)]);
            for (int t : succ[static_cast<size_t>(i)])
                longest[static_cast<size_t>(t)] = std::max(longest[static_cast<size_t>(t)], longest[static_cast<size_t>(i)] + 1);
        }
        s.complete = max_accept < 0 || max_accept + static_cast<int>(alpha.size()) <= horizon;
        return s;
    }

    // Infinite set. When every trimmed state has at most one trimmed
    // successor the automaton is a tail leading into a single cycle, so the
    // length set is a finite tail plus unit-multiplicity progressions.
    bool functional = true;
    for (int i = 0; i < n && functional; ++i)
        if (va.trimmed[static_cast<size_t>(i)] && succ[static_cast<size_t>(i)].size() > 1) functional = false;
    if (functional) {
        std::vector<int> visit_len(static_cast<size_t>(n), -1);
        int cur = va.init, len = 0;
        while (visit_len[static_cast<size_t>(cur)] < 0) {
            visit_len[static_cast<size_t>(cur)] = len;
            if (succ[static_cast<size_t>(cur)].empty()) break;
            cur = succ[static_cast<size_t>(cur)].front();
            ++len;
        }
        const int cycle_entry_len = visit_len[static_cast<size_t>(cur)];
        const int cycle_len = len - cycle_entry_len;
        const int asz = static_cast<int>(alpha.size());
        for (int i = 0; i < n; ++i) {
            if (visit_len[static_cast<size_t>(i)] < 0 || !va.accept[static_cast<size_t>(i)]) continue;
            if (cycle_len > 0 && visit_len[static_cast<size_t>(i)] >= cycle_entry_len)
                s.progressions.emplace_back(visit_len[static_cast<size_t>(i)] + asz, cycle_len);
            else
                s.tail_lengths.push_back(visit_len[static_cast<size_t>(i)] + asz);
        }
        std::sort(s.tail_lengths.begin(), s.tail_lengths.end());
        std::sort(s.progressions.begin(), s.progressions.end());
        s.structure_proved = true;
    }
    return s;
}

void extract_by_oracle_rec(const Language& lang, const Word& alpha, Word& v, int max_v_len,
                           std::vector<Word>& out) {
    Word ava = alpha;
    ava.insert(ava.end(), v.begin(), v.end());
    if (!lang.admissible(ava)) return; // factorial language: no extension can recover
    if (contains_factor(v, alpha)) return; // alpha inside v is unrecoverable too
    Word avaa = ava;
    avaa.insert(avaa.end(), alpha.begin(), alpha.end());
    if (lang.admissible(avaa)) {
        Word member = v;
        member.insert(member.end(), alpha.begin(), alpha.end());
        out.push_back(std::move(member));
        if (static_cast<int>(out.size()) > member_budget)
            throw budget_error("extract_generators: member budget exceeded");
    }
    if (static_cast<int>(v.size()) == max_v_len) return;
    for (int a = 0; a < lang.alphabet().size(); ++a) {
        v.push_back(a);
        extract_by_oracle_rec(lang, alpha, v, max_v_len, out);
        v.pop_back();
    }
}

} // namespace

GeneratorSet extract_generators(const Language& lang, const Word& alpha, int horizon) {
    if (alpha.empty()) throw input_error("extract_generators: alpha must be nonempty");
    if (horizon < 1) throw input_error("extract_generators: horizon must be positive");
    if (!lang.admissible(alpha)) throw input_error("extract_generators: alpha is not admissible");
    if (lang.cover() != nullptr) return extract_by_cover(lang, alpha, horizon);

    GeneratorSet s;
    s.alphabet = lang.alphabet();
    s.alpha = alpha;
    s.horizon = horizon;
    s.complete = false;
    int max_v_len = horizon - static_cast<int>(alpha.size());
    if (max_v_len >= 0) {
        Word v;
        extract_by_oracle_rec(lang, alpha, v, max_v_len, s.returns);
    }
    return s;
}

LoopGraphResult generators_to_loop_graph(const GeneratorSet& s) {
    LoopGraphResult res;
    if (s.structure_proved) {
        res.spec.finite_lengths = s.tail_lengths;
        res.spec.progressions = s.progressions;
    } else {
        res.spec.finite_lengths = s.listed_lengths();
    }
    res.spec.validate();
    res.graph = DiGraph(1);
    res.base = 0;
    for (int l : res.spec.finite_lengths) {
        int prev = res.base;
        for (int i = 1; i < l; ++i) {
            int v = res.graph.add_vertex();
            res.graph.add_edge(prev, v);
            prev = v;
        }
        res.graph.add_edge(prev, res.base);
    }
    return res;
}

namespace {

int generator_gcd(const GeneratorSet& s) {
    int g = 0;
    for (const auto& w : s.returns) g = std::gcd(g, static_cast<int>(w.size()));
    for (int l : s.tail_lengths) g = std::gcd(g, l);
    for (auto [start, step] : s.progressions) g = std::gcd(std::gcd(g, start), step);
    return g;
}

} // namespace

MixingVerdict mixing_gcd_test(const GeneratorSet& s) {
    if (s.returns.empty() && s.tail_lengths.empty() && s.progressions.empty())
        throw input_error("mixing_gcd_test: generator set is empty beyond the empty word");
    int g = generator_gcd(s);
    if (g == 1) return {MixingStatus::mixing, 1, 1};
    if (s.complete || s.structure_proved) return {MixingStatus::not_mixing, g, g};
    return {MixingStatus::inconclusive, g, 0};
}

int cyclic_cover_period(const GeneratorSet& s) {
    if (s.returns.empty() && s.tail_lengths.empty() && s.progressions.empty())
        throw input_error("cyclic_cover_period: generator set is empty beyond the empty word");
    int g = generator_gcd(s);
    if (g != 1 && !s.complete && !s.structure_proved) {
        std::ostringstream os;
        os << "cyclic_cover_period: generator set incomplete at horizon " << s.horizon
           << "; gcd-at-horizon " << g;
        throw precondition_error(os.str());
    }
    return g;
}

namespace {

/// Is there a word w of length exactly n with left.w.right admissible?
/// Prefers the cover's subset automaton; falls back to pruned DFS.
bool connectable(const Language& lang, const Word& left, const Word& right, int n) {
    if (const LabeledGraph* cover = lang.cover()) {
        SubsetAutomaton aut(*cover);
        int s = aut.walk(aut.start(), left);
        if (s < 0) return false;
        std::vector<char> reach(static_cast<size_t>(aut.state_count()), 0);
        reach[static_cast<size_t>(s)] = 1;
        for (int step = 0; step < n; ++step) {
            std::vector<char> next(static_cast<size_t>(aut.state_count()), 0);
            for (int q = 0; q < aut.state_count(); ++q) {
                if (!reach[static_cast<size_t>(q)]) continue;
                for (int a = 0; a < aut.symbol_count(); ++a)
                    if (int t = aut.step(q, a); t >= 0) next[static_cast<size_t>(t)] = 1;
            }
            reach.swap(next);
        }
        for (int q = 0; q < aut.state_count(); ++q)
            if (reach[static_cast<size_t>(q)] && aut.walk(q, right) >= 0) return true;
        return false;
    }
    // DFS over middle words.
    struct Rec {
        const Language& lang;
        const Word& left;
        const Word& right;
        bool found = false;
        void go(Word& mid, int remaining) {
            if (found) return;
            Word lm = left;
            lm.insert(lm.end(), mid.begin(), mid.end());
            if (!lang.admissible(lm)) return;
            if (remaining == 0) {
                lm.insert(lm.end(), right.begin(), right.end());
                if (lang.admissible(lm)) found = true;
                return;
            }
            for (int a = 0; a < lang.alphabet().size() && !found; ++a) {
                mid.push_back(a);
                go(mid, remaining - 1);
                mid.pop_back();
            }
        }
    } rec{lang, left, right};
    Word mid;
    rec.go(mid, n);
    return rec.found;
}

} // namespace

std::optional<int> svgl_witness(const Language& lang, int max_N, int word_horizon) {
    if (max_N < 0 || word_horizon < 1) throw input_error("svgl_witness: bad bounds");
    auto words = admissible_words_up_to(lang, word_horizon);
    int needed = 0;
    for (const auto& u : words) {
        for (const auto& v : words) {
            int gap = -1;
            for (int n = 0; n <= max_N; ++n)
                if (connectable(lang, u, v, n)) { gap = n; break; }
            if (gap < 0) return std::nullopt;
            needed = std::max(needed, gap);
        }
    }
    return needed;
}

std::optional<int> mixing_transition_length(const Language& lang, const Word& alpha, int max_N, int span) {
    std::vector<char> ok(static_cast<size_t>(max_N + span + 1), 0);
    for (int n = 0; n <= max_N + span; ++n)
        ok[static_cast<size_t>(n)] = connectable(lang, alpha, alpha, n) ? 1 : 0;
    for (int N = 0; N <= max_N; ++N) {
        bool all = true;
        for (int n = N; n <= N + span; ++n)
            if (!ok[static_cast<size_t>(n)]) { all = false; break; }
        if (all) return N;
    }
    return std::nullopt;
}

bool totally_irreducible_check(const Language& lang, int n_max, int word_horizon, int len_cap) {
    auto words = admissible_words_up_to(lang, word_horizon);
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& u : words) {
            for (const auto& v : words) {
                bool joined = false;
                for (int len = n; len <= len_cap && !joined; len += n)
                    joined = connectable(lang, u, v, len);
                if (!joined) return false;
            }
        }
    }
    return true;
}

bool weak_mixing_check(const Language& lang, int word_horizon, int run_len, int n_cap) {
    auto words = admissible_words_up_to(lang, word_horizon);
    for (const auto& u : words) {
        for (const auto& v : words) {
            int run = 0;
            bool found = false;
            for (int n = 0; n <= n_cap; ++n) {
                run = connectable(lang, u, v, n) ? run + 1 : 0;
                if (run >= run_len) { found = true; break; }
            }
            if (!found) return false;
        }
    }
    return true;
}

} // namespace symdyn
