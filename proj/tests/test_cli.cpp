#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include <symdyn/report.hpp>

using namespace symdyn;
using nlohmann::json;

TEST_CASE("presentation parsing") {
    auto p = parse_presentation_text(R"({"kind":"sft","alphabet":["0","1"],"forbidden":["11"]})");
    const auto* sft = std::get_if<SftPresentation>(&p);
    REQUIRE(sft != nullptr);
    CHECK(sft->forbidden() == std::vector<Word>{Word{1, 1}});

    auto loops = parse_presentation_text(R"({"kind":"loop_graph","finite":[1,2]})");
    const auto* spec = std::get_if<LoopSpec>(&loops);
    REQUIRE(spec != nullptr);
    CHECK(spec->finite_lengths == std::vector<int>{1, 2});

    auto d = parse_presentation_text(R"x({"kind":"dyck","forbidden":"()"})x");
    CHECK(std::holds_alternative<DyckSystem>(d));

    CHECK_THROWS_AS(parse_presentation_text("{"), input_error);
    CHECK_THROWS_AS(parse_presentation_text(R"({"kind":"sft"})"), input_error);
    CHECK_THROWS_AS(parse_presentation_text(R"({"kind":"nope"})"), input_error);
    CHECK_THROWS_AS(parse_presentation_text(R"({"kind":"sft","alphabet":["0"],"bogus":1})"),
                    input_error); // unknown fields rejected
}

TEST_CASE("labeled graph validation prunes stranded vertices") {
    // Vertex 1 has no out-edge: pruned; the remaining loop survives.
    auto p = parse_presentation_text(
        R"({"kind":"labeled_graph","vertices":2,"edges":[[0,0,"1"],[0,1,"0"]]})");
    const auto* g = std::get_if<LabeledGraph>(&p);
    REQUIRE(g != nullptr);
    CHECK(g->vertex_count() == 1);

    // Nothing on a bi-infinite walk: rejected.
    CHECK_THROWS_AS(
        parse_presentation_text(R"({"kind":"labeled_graph","vertices":2,"edges":[[0,1,"a"]]})"),
        input_error);
    CHECK_THROWS_AS(
        parse_presentation_text(R"({"kind":"labeled_graph","vertices":1,"edges":[[0,2,"a"]]})"),
        input_error); // endpoint out of range
}

TEST_CASE("round trip is stable") {
    const char* docs[] = {
        R"({"kind":"sft","alphabet":["0","1"],"forbidden":["11"]})",
        R"({"kind":"labeled_graph","alphabet":["0","1"],"vertices":2,"edges":[[0,0,"0"],[0,1,"1"],[1,0,"1"]]})",
        R"({"kind":"loop_graph","finite":[3],"progressions":[[1,2]]})",
        R"({"kind":"generators","alphabet":["a","b","c"],"alpha":"a","returns":["bca"],"horizon":9,"complete":true})",
        R"x({"kind":"dyck","forbidden":"(())"})x",
    };
    for (const char* doc : docs) {
        auto p1 = parse_presentation_text(doc);
        json e1 = emit_presentation(p1);
        auto p2 = parse_presentation_text(e1.dump());
        CHECK(emit_presentation(p2) == e1);
    }
}

TEST_CASE("reports are deterministic") {
    auto p = parse_presentation_text(R"({"kind":"sft","alphabet":["0","1"],"forbidden":["11"]})");
    CommandOptions opts;
    opts.alpha = "0";
    json a = run_command("mixing", p, opts);
    json b = run_command("mixing", p, opts);
    CHECK(a.dump() == b.dump());
    CHECK(a.at("command") == "mixing");
    CHECK(a.at("input").at("kind") == "sft");
    CHECK(a.at("results").at("verdict").at("status") == "mixing");
}

TEST_CASE("zeta command emits exact coefficients") {
    auto p = parse_presentation_text(R"({"kind":"sft","alphabet":["0","1"],"forbidden":["11"]})");
    CommandOptions opts;
    opts.order = 6;
    json rep = run_command("zeta", p, opts);
    auto coeff = rep.at("results").at("zeta_coefficients");
    std::vector<std::string> expect{"1", "1", "2", "3", "5", "8", "13"};
    REQUIRE(coeff.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) CHECK(coeff[i] == expect[i]);
}

TEST_CASE("bounded verdicts carry warnings") {
    auto even = parse_presentation_text(
        R"({"kind":"labeled_graph","alphabet":["0","1"],"vertices":2,"edges":[[0,0,"0"],[0,1,"1"],[1,0,"1"]]})");
    CommandOptions opts;
    json rep = run_command("svgl", even, opts);
    bool labeled = false;
    for (const auto& w : rep.at("warnings"))
        if (w.get<std::string>().find("bounded") != std::string::npos) labeled = true;
    CHECK(labeled);
    CHECK_THROWS_AS(run_command("no-such-command", even, opts), input_error);
    CHECK_THROWS_AS(run_command("hsyn", even, opts), input_error); // --alpha required
}

TEST_CASE("growth csv") {
    CountTable t;
    t.kind = CountKind::block;
    t.counts[1] = 2;
    t.counts[2] = 3;
    t.counts[3] = 5;
    const std::string path = "symdyn_test_growth.csv";
    emit_growth_csv(t, path);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    CHECK(text.rfind("n,count,log_count,ratio_to_previous\n", 0) == 0);
    CHECK(text.find("\n3,5,") != std::string::npos);
    CHECK(text.back() == '\n');
    std::remove(path.c_str());

    CountTable empty;
    CHECK_THROWS_AS(emit_growth_csv(empty, path), input_error);
    std::ifstream check(path);
    CHECK_FALSE(check.good()); // no file created on error
}
