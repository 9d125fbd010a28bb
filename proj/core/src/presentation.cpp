#include "symdyn/presentation.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace symdyn {

using nlohmann::json;

namespace {

void reject_unknown_fields(const json& doc, const std::set<std::string>& allowed) {
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!allowed.count(it.key()))
            throw input_error("presentation: unknown field '" + it.key() + "'");
}

Alphabet parse_alphabet(const json& arr) {
    if (!arr.is_array() || arr.empty()) throw input_error("presentation: 'alphabet' must be a nonempty array");
    std::vector<std::string> toks;
    for (const auto& t : arr) {
        if (!t.is_string()) throw input_error("presentation: alphabet tokens must be strings");
        toks.push_back(t.get<std::string>());
    }
    return Alphabet(std::move(toks));
}

Word parse_word_field(const Alphabet& a, const json& v, const std::string& where) {
    if (v.is_string()) return parse_word(a, v.get<std::string>());
    if (v.is_array()) {
        std::vector<std::string> toks;
        for (const auto& t : v) {
            if (!t.is_string()) throw input_error("presentation: " + where + ": word tokens must be strings");
            toks.push_back(t.get<std::string>());
        }
        return parse_word(a, toks);
    }
    throw input_error("presentation: " + where + ": a word must be a string or a token array");
}

bool single_char_alphabet(const Alphabet& a) {
    for (const auto& t : a.tokens())
        if (t.size() != 1) return false;
    return true;
}

json emit_word(const Alphabet& a, const Word& w) {
    if (single_char_alphabet(a)) return format_word(a, w);
    json arr = json::array();
    for (int c : w) arr.push_back(a.token(c));
    return arr;
}

Presentation parse_sft(const json& doc) {
    reject_unknown_fields(doc, {"kind", "alphabet", "forbidden"});
    if (!doc.contains("alphabet")) throw input_error("sft: missing 'alphabet'");
    Alphabet a = parse_alphabet(doc.at("alphabet"));
    std::vector<Word> forbidden;
    if (doc.contains("forbidden")) {
        if (!doc.at("forbidden").is_array()) throw input_error("sft: 'forbidden' must be an array");
        for (const auto& f : doc.at("forbidden")) forbidden.push_back(parse_word_field(a, f, "forbidden"));
    }
    return SftPresentation(std::move(a), std::move(forbidden));
}

Presentation parse_labeled_graph(const json& doc) {
    reject_unknown_fields(doc, {"kind", "alphabet", "vertices", "edges"});
    if (!doc.contains("vertices") || !doc.at("vertices").is_number_integer())
        throw input_error("labeled_graph: missing integer 'vertices'");
    const int n = doc.at("vertices").get<int>();
    if (n <= 0) throw input_error("labeled_graph: 'vertices' must be positive");
    if (!doc.contains("edges") || !doc.at("edges").is_array())
        throw input_error("labeled_graph: missing 'edges' array");

    std::vector<std::tuple<int, int, std::string>> edges;
    std::set<std::string> labels;
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() || !e[2].is_string())
            throw input_error("labeled_graph: each edge must be [from, to, \"label\"]");
        int from = e[0].get<int>(), to = e[1].get<int>();
        if (from < 0 || from >= n || to < 0 || to >= n)
            throw input_error("labeled_graph: edge endpoint out of range");
        std::string lab = e[2].get<std::string>();
        labels.insert(lab);
        edges.emplace_back(from, to, std::move(lab));
    }
    Alphabet a = doc.contains("alphabet")
                     ? parse_alphabet(doc.at("alphabet"))
                     : Alphabet(std::vector<std::string>(labels.begin(), labels.end()));

    // Every vertex on a bi-infinite walk needs in- and out-edges; prune
    // stranded vertices iteratively and reject an empty result.
    std::vector<char> alive(static_cast<size_t>(n), 1);
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<int> indeg(static_cast<size_t>(n), 0), outdeg(static_cast<size_t>(n), 0);
        for (const auto& [from, to, lab] : edges) {
            if (!alive[static_cast<size_t>(from)] || !alive[static_cast<size_t>(to)]) continue;
            ++outdeg[static_cast<size_t>(from)];
            ++indeg[static_cast<size_t>(to)];
        }
        for (int v = 0; v < n; ++v)
            if (alive[static_cast<size_t>(v)] && (indeg[static_cast<size_t>(v)] == 0 || outdeg[static_cast<size_t>(v)] == 0)) {
                alive[static_cast<size_t>(v)] = 0;
                changed = true;
            }
    }
    std::vector<int> remap(static_cast<size_t>(n), -1);
    int alive_count = 0;
    for (int v = 0; v < n; ++v)
        if (alive[static_cast<size_t>(v)]) remap[static_cast<size_t>(v)] = alive_count++;
    if (alive_count == 0)
        throw input_error("labeled_graph: no vertex lies on a bi-infinite walk (not a shift presentation)");
    LabeledGraph g(std::move(a), alive_count);
    for (const auto& [from, to, lab] : edges) {
        if (!alive[static_cast<size_t>(from)] || !alive[static_cast<size_t>(to)]) continue;
        g.add_edge(remap[static_cast<size_t>(from)], remap[static_cast<size_t>(to)], g.alphabet().index_of(lab));
    }
    return g;
}

Presentation parse_loop_graph(const json& doc) {
    reject_unknown_fields(doc, {"kind", "finite", "progressions"});
    LoopSpec spec;
    if (doc.contains("finite")) {
        if (!doc.at("finite").is_array()) throw input_error("loop_graph: 'finite' must be an array");
        for (const auto& l : doc.at("finite")) {
            if (!l.is_number_integer()) throw input_error("loop_graph: loop lengths must be integers");
            spec.finite_lengths.push_back(l.get<int>());
        }
    }
    if (doc.contains("progressions")) {
        if (!doc.at("progressions").is_array()) throw input_error("loop_graph: 'progressions' must be an array");
        for (const auto& pr : doc.at("progressions")) {
            if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() || !pr[1].is_number_integer())
                throw input_error("loop_graph: each progression must be [start, step]");
            spec.progressions.emplace_back(pr[0].get<int>(), pr[1].get<int>());
        }
    }
    if (spec.empty()) throw input_error("loop_graph: empty loop set");
    std::sort(spec.finite_lengths.begin(), spec.finite_lengths.end());
    std::sort(spec.progressions.begin(), spec.progressions.end());
    spec.validate();
    return spec;
}

Presentation parse_generators(const json& doc) {
    reject_unknown_fields(doc, {"kind", "alphabet", "alpha", "returns", "horizon", "complete"});
    if (!doc.contains("alphabet")) throw input_error("generators: missing 'alphabet'");
    GeneratorSet s;
    s.alphabet = parse_alphabet(doc.at("alphabet"));
    if (!doc.contains("alpha")) throw input_error("generators: missing 'alpha'");
    s.alpha = parse_word_field(s.alphabet, doc.at("alpha"), "alpha");
    if (s.alpha.empty()) throw input_error("generators: alpha must be nonempty");
    if (doc.contains("returns")) {
        if (!doc.at("returns").is_array()) throw input_error("generators: 'returns' must be an array");
        for (const auto& r : doc.at("returns")) s.returns.push_back(parse_word_field(s.alphabet, r, "returns"));
    }
    int max_len = static_cast<int>(s.alpha.size());
    for (const auto& r : s.returns) max_len = std::max(max_len, static_cast<int>(r.size()));
    s.horizon = max_len;
    if (doc.contains("horizon")) {
        if (!doc.at("horizon").is_number_integer()) throw input_error("generators: 'horizon' must be an integer");
        s.horizon = doc.at("horizon").get<int>();
        if (s.horizon < max_len) throw input_error("generators: horizon shorter than a listed member");
    }
    if (doc.contains("complete")) {
        if (!doc.at("complete").is_boolean()) throw input_error("generators: 'complete' must be a boolean");
        s.complete = doc.at("complete").get<bool>();
    }
    std::sort(s.returns.begin(), s.returns.end(), [](const Word& x, const Word& y) {
        return x.size() < y.size() || (x.size() == y.size() && x < y);
    });
    return s;
}

Presentation parse_dyck(const json& doc) {
    reject_unknown_fields(doc, {"kind", "forbidden"});
    if (!doc.contains("forbidden")) return DyckSystem();
    Word f = parse_word_field(DyckSystem::dyck_alphabet(), doc.at("forbidden"), "forbidden");
    return DyckSystem(std::move(f));
}

} // namespace

Presentation parse_presentation(const json& doc) {
    if (!doc.is_object()) throw input_error("presentation: document must be a JSON object");
    if (!doc.contains("kind") || !doc.at("kind").is_string())
        throw input_error("presentation: missing string 'kind'");
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "sft") return parse_sft(doc);
    if (kind == "labeled_graph") return parse_labeled_graph(doc);
    if (kind == "loop_graph") return parse_loop_graph(doc);
    if (kind == "generators") return parse_generators(doc);
    if (kind == "dyck") return parse_dyck(doc);
    throw input_error("presentation: unknown kind '" + kind + "'");
}

Presentation parse_presentation_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("presentation: ") + e.what());
    }
    return parse_presentation(doc);
}

Presentation parse_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("presentation: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation_text(buf.str());
}

json emit_presentation(const Presentation& p) {
    json doc;
    if (const auto* sft = std::get_if<SftPresentation>(&p)) {
        doc["kind"] = "sft";
        doc["alphabet"] = sft->alphabet().tokens();
        json forb = json::array();
        for (const auto& w : sft->forbidden()) forb.push_back(emit_word(sft->alphabet(), w));
        doc["forbidden"] = forb;
    } else if (const auto* g = std::get_if<LabeledGraph>(&p)) {
        doc["kind"] = "labeled_graph";
        doc["alphabet"] = g->alphabet().tokens();
        doc["vertices"] = g->vertex_count();
        json edges = json::array();
        for (int v = 0; v < g->vertex_count(); ++v)
            for (const auto& e : g->out(v))
                edges.push_back(json::array({v, e.to, g->alphabet().token(e.symbol)}));
        doc["edges"] = edges;
    } else if (const auto* spec = std::get_if<LoopSpec>(&p)) {
        doc["kind"] = "loop_graph";
        doc["finite"] = spec->finite_lengths;
        json prog = json::array();
        for (auto [start, step] : spec->progressions) prog.push_back(json::array({start, step}));
        doc["progressions"] = prog;
    } else if (const auto* s = std::get_if<GeneratorSet>(&p)) {
        doc["kind"] = "generators";
        doc["alphabet"] = s->alphabet.tokens();
        doc["alpha"] = emit_word(s->alphabet, s->alpha);
        json rets = json::array();
        for (const auto& w : s->returns) rets.push_back(emit_word(s->alphabet, w));
        doc["returns"] = rets;
        doc["horizon"] = s->horizon;
        doc["complete"] = s->complete;
    } else if (const auto* d = std::get_if<DyckSystem>(&p)) {
        doc["kind"] = "dyck";
        if (d->forbidden()) doc["forbidden"] = emit_word(DyckSystem::dyck_alphabet(), *d->forbidden());
    }
    return doc;
}

const char* presentation_kind(const Presentation& p) {
    switch (p.index()) {
        case 0: return "sft";
        case 1: return "labeled_graph";
        case 2: return "loop_graph";
        case 3: return "generators";
        default: return "dyck";
    }
}

std::unique_ptr<Language> make_language(const Presentation& p) {
    if (const auto* sft = std::get_if<SftPresentation>(&p)) return std::make_unique<SftLanguage>(*sft);
    if (const auto* g = std::get_if<LabeledGraph>(&p)) return std::make_unique<SoficLanguage>(*g);
    if (const auto* d = std::get_if<DyckSystem>(&p)) return std::make_unique<DyckLanguage>(*d);
    throw input_error(std::string("presentation kind '") + presentation_kind(p) +
                      "' does not define a language oracle");
}

} // namespace symdyn
