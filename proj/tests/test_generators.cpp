#include <doctest.h>

#include <numeric>

#include <symdyn/generators.hpp>
#include <symdyn/language.hpp>

#include "fixtures.hpp"

using namespace symdyn;

namespace {

std::vector<int> lengths(const GeneratorSet& s) { return s.listed_lengths(); }

} // namespace

TEST_CASE("golden mean generators are complete") {
    SftLanguage gm(fixtures::golden_mean());
    GeneratorSet s = extract_generators(gm, Word{0}, 9);
    CHECK(s.complete);
    CHECK(s.includes_empty);
    REQUIRE(s.returns.size() == 2);
    CHECK(s.returns[0] == Word{0});
    CHECK(s.returns[1] == Word{1, 0});
    CHECK(lengths(s) == std::vector<int>{1, 2});
}

TEST_CASE("even shift generators form an arithmetic progression") {
    SoficLanguage even(fixtures::even_shift());
    GeneratorSet s = extract_generators(even, Word{0}, 9);
    CHECK_FALSE(s.complete);
    CHECK(s.structure_proved);
    CHECK(s.tail_lengths.empty());
    REQUIRE(s.progressions.size() == 1);
    CHECK(s.progressions[0] == std::pair<int, int>{1, 2});
    CHECK(lengths(s) == std::vector<int>{1, 3, 5, 7, 9});
    // Every member is 1^{2k} 0.
    for (const auto& r : s.returns) {
        CHECK(r.back() == 0);
        for (size_t i = 0; i + 1 < r.size(); ++i) CHECK(r[i] == 1);
    }
}

TEST_CASE("three-cycle generators") {
    SftLanguage cyc(fixtures::three_cycle());
    GeneratorSet s = extract_generators(cyc, Word{0}, 9);
    CHECK(s.complete);
    REQUIRE(s.returns.size() == 1);
    CHECK(s.returns[0] == Word{1, 2, 0}); // bca
    CHECK(lengths(s) == std::vector<int>{3});
}

TEST_CASE("full shift generators") {
    SftLanguage full(fixtures::full_2shift());
    GeneratorSet s = extract_generators(full, Word{0}, 6);
    CHECK((s.complete || s.structure_proved));
    CHECK(lengths(s).front() == 1);
    // Members are exactly the words 1^k 0 here.
    for (const auto& r : s.returns) CHECK(r.back() == 0);
}

TEST_CASE("members satisfy the defining conditions") {
    SoficLanguage even(fixtures::even_shift());
    Word alpha{0};
    GeneratorSet s = extract_generators(even, alpha, 9);
    for (const auto& r : s.returns) {
        // r = v alpha; alpha v alpha admissible; alpha not inside v.
        Word v(r.begin(), r.end() - static_cast<long>(alpha.size()));
        Word ava = alpha;
        ava.insert(ava.end(), v.begin(), v.end());
        ava.insert(ava.end(), alpha.begin(), alpha.end());
        CHECK(even.admissible(ava));
        CHECK_FALSE(contains_factor(v, alpha));
    }
}

TEST_CASE("mixing gcd test") {
    SoficLanguage even(fixtures::even_shift());
    auto v_even = mixing_gcd_test(extract_generators(even, Word{0}, 9));
    CHECK(v_even.status == MixingStatus::mixing);
    CHECK(v_even.gcd == 1);

    SftLanguage cyc(fixtures::three_cycle());
    auto v_cyc = mixing_gcd_test(extract_generators(cyc, Word{0}, 9));
    CHECK(v_cyc.status == MixingStatus::not_mixing);
    CHECK(v_cyc.period == 3);

    // Uncertified gcd > 1 must stay inconclusive.
    GeneratorSet partial;
    partial.alphabet = fixtures::binary();
    partial.alpha = Word{0};
    partial.returns = {Word{1, 1, 0}};
    partial.horizon = 3;
    partial.complete = false;
    CHECK(mixing_gcd_test(partial).status == MixingStatus::inconclusive);
    CHECK_THROWS_AS(cyclic_cover_period(partial), precondition_error);
}

TEST_CASE("gcd monotonicity in the horizon") {
    SoficLanguage even(fixtures::even_shift());
    SftLanguage gm(fixtures::golden_mean());
    for (const Language* lang : {static_cast<const Language*>(&even), static_cast<const Language*>(&gm)}) {
        int prev_gcd = 0;
        for (int h = 2; h <= 10; h += 2) {
            auto ls = lengths(extract_generators(*lang, Word{0}, h));
            int g = 0;
            for (int l : ls) g = std::gcd(g, l);
            if (prev_gcd != 0 && g != 0) CHECK(prev_gcd % g == 0); // longer horizon only refines
            if (g != 0) prev_gcd = g;
        }
    }
}

TEST_CASE("cyclic cover period") {
    SftLanguage cyc(fixtures::three_cycle());
    CHECK(cyclic_cover_period(extract_generators(cyc, Word{0}, 9)) == 3);
    SftLanguage gm(fixtures::golden_mean());
    CHECK(cyclic_cover_period(extract_generators(gm, Word{0}, 9)) == 1);
    SoficLanguage even(fixtures::even_shift());
    CHECK(cyclic_cover_period(extract_generators(even, Word{0}, 9)) == 1);
}

TEST_CASE("loop graph from generators") {
    SftLanguage gm(fixtures::golden_mean());
    auto res = generators_to_loop_graph(extract_generators(gm, Word{0}, 9));
    CHECK(res.spec.finite_lengths == std::vector<int>{1, 2});
    CHECK(res.spec.progressions.empty());
    CHECK(res.graph.vertex_count() == 2); // base + one interior vertex of the 2-loop
    CHECK(res.graph.edge_count() == 3);
}

TEST_CASE("loop spec validation and counting") {
    LoopSpec spec;
    spec.finite_lengths = {1, 2};
    spec.validate();
    CHECK(spec.count_at(1) == 1);
    CHECK(spec.count_at(2) == 1);
    CHECK(spec.count_at(3) == 0);

    LoopSpec prog;
    prog.progressions = {{1, 2}};
    CHECK(prog.count_at(1) == 1);
    CHECK(prog.count_at(2) == 0);
    CHECK(prog.count_at(5) == 1);

    LoopSpec bad;
    bad.finite_lengths = {0};
    CHECK_THROWS_AS(bad.validate(), input_error);
}

TEST_CASE("svgl witness") {
    SftLanguage cyc(fixtures::three_cycle());
    auto n_cyc = svgl_witness(cyc, 10, 4);
    REQUIRE(n_cyc.has_value());
    CHECK(*n_cyc == 2);

    SftLanguage gm(fixtures::golden_mean());
    auto n_gm = svgl_witness(gm, 10, 4);
    REQUIRE(n_gm.has_value());
    CHECK(*n_gm <= 2);

    SoficLanguage even(fixtures::even_shift());
    auto n_even = svgl_witness(even, 10, 4);
    REQUIRE(n_even.has_value());
}

TEST_CASE("direct mixing witness") {
    SoficLanguage even(fixtures::even_shift());
    auto n = mixing_transition_length(even, Word{0}, 20, 3);
    REQUIRE(n.has_value()); // consecutive gap lengths achievable -> mixing evidence

    // Period-3 shift: gaps between two a's are always ≡ 2 mod 3.
    SftLanguage cyc(fixtures::three_cycle());
    CHECK_FALSE(mixing_transition_length(cyc, Word{0}, 20, 3).has_value());
}

TEST_CASE("totally irreducible and weak mixing evidence") {
    SftLanguage gm(fixtures::golden_mean());
    CHECK(totally_irreducible_check(gm, 3, 3, 24));
    CHECK(weak_mixing_check(gm, 3, 4, 20));

    SftLanguage cyc(fixtures::three_cycle());
    CHECK_FALSE(totally_irreducible_check(cyc, 3, 3, 24));
    CHECK_FALSE(weak_mixing_check(cyc, 3, 4, 20));
}
