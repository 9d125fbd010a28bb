#ifndef SYMDYN_TESTS_FIXTURES_HPP
#define SYMDYN_TESTS_FIXTURES_HPP

#include <symdyn/labeled_graph.hpp>
#include <symdyn/sft.hpp>

namespace fixtures {

using symdyn::Alphabet;
using symdyn::LabeledGraph;
using symdyn::SftPresentation;
using symdyn::Word;

inline Alphabet binary() { return Alphabet({"0", "1"}); }

inline SftPresentation golden_mean() {
    return SftPresentation(binary(), {Word{1, 1}});
}

inline SftPresentation full_2shift() {
    return SftPresentation(binary(), {});
}

// aa, ac, bb, ba, cc, cb forbidden: only a->b->c->a survives.
inline SftPresentation three_cycle() {
    Alphabet a({"a", "b", "c"});
    return SftPresentation(a, {Word{0, 0}, Word{0, 2}, Word{1, 1}, Word{1, 0}, Word{2, 2}, Word{2, 1}});
}

// Maximal interior 1-runs between 0s have even length. Vertex 0 = "even run
// seen", vertex 1 = "odd run in progress".
inline LabeledGraph even_shift() {
    LabeledGraph g(binary(), 2);
    g.add_edge(0, 0, 0);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 0, 1);
    return g;
}

// Full 2-shift presented non-deterministically (not right-resolving).
inline LabeledGraph full_shift_messy() {
    LabeledGraph g(binary(), 2);
    g.add_edge(0, 0, 0);
    g.add_edge(0, 1, 0);
    g.add_edge(0, 0, 1);
    g.add_edge(1, 0, 0);
    g.add_edge(1, 1, 1);
    g.add_edge(1, 0, 1);
    return g;
}

} // namespace fixtures

#endif
