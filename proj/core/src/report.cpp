#include "symdyn/report.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include <nlohmann/json.hpp>

#include "symdyn/series.hpp"
#include "symdyn/version.hpp"

namespace symdyn {

using nlohmann::json;

namespace {

json big(const BigInt& x) { return x.str(); }
json rat(const BigRat& x) { return x.str(); }

json series_json(const IntSeries& s) {
    json arr = json::array();
    for (const auto& c : s.coeff) arr.push_back(big(c));
    return arr;
}

json count_table_json(const CountTable& t) {
    json obj = json::object();
    for (const auto& [n, c] : t.counts) obj[std::to_string(n)] = big(c);
    return obj;
}

const char* method_name(EntropyMethod m) {
    switch (m) {
        case EntropyMethod::perron: return "perron";
        case EntropyMethod::slope: return "slope";
        case EntropyMethod::ratio: return "ratio";
        default: return "loop_root";
    }
}

json estimate_json(const EntropyEstimate& e) {
    json obj;
    obj["point"] = e.point;
    obj["method"] = method_name(e.method);
    if (e.horizon > 0) obj["horizon"] = e.horizon;
    obj["ratio_estimate"] = e.ratio_estimate;
    if (e.enclosure) obj["enclosure"] = json::array({e.enclosure->first, e.enclosure->second});
    if (e.transient) obj["transient"] = true;
    return obj;
}

json enclosure_json(const std::pair<double, double>& e) {
    return json::array({e.first, e.second});
}

const Alphabet& presentation_alphabet(const Presentation& p) {
    if (const auto* sft = std::get_if<SftPresentation>(&p)) return sft->alphabet();
    if (const auto* g = std::get_if<LabeledGraph>(&p)) return g->alphabet();
    if (const auto* s = std::get_if<GeneratorSet>(&p)) return s->alphabet;
    if (std::holds_alternative<DyckSystem>(p)) return DyckSystem::dyck_alphabet();
    throw input_error("this presentation kind has no alphabet");
}

struct Ctx {
    const Presentation& p;
    const CommandOptions& opts;
    std::unique_ptr<Language> lang_; // lazily built
    std::vector<std::string> warnings;

    const Language& language(const std::string& cmd) {
        if (!lang_) {
            try {
                lang_ = make_language(p);
            } catch (const input_error&) {
                throw input_error("command '" + cmd +
                                  "' requires a language presentation (sft, labeled_graph, dyck)");
            }
        }
        return *lang_;
    }

    Word alpha(const std::string& cmd) {
        if (!opts.alpha) throw input_error("command '" + cmd + "' requires --alpha");
        return parse_word(presentation_alphabet(p), *opts.alpha);
    }

    void warn(std::string msg) { warnings.push_back(std::move(msg)); }
};

json generator_set_json(const GeneratorSet& s) {
    json obj;
    obj["alpha"] = format_word(s.alphabet, s.alpha);
    json members = json::array();
    for (const auto& w : s.returns) members.push_back(format_word(s.alphabet, w));
    obj["returns"] = members;
    obj["lengths"] = s.listed_lengths();
    obj["horizon"] = s.horizon;
    obj["complete"] = s.complete;
    obj["structure_proved"] = s.structure_proved;
    if (s.structure_proved) {
        obj["tail_lengths"] = s.tail_lengths;
        json prog = json::array();
        for (auto [start, step] : s.progressions) prog.push_back(json::array({start, step}));
        obj["progressions"] = prog;
    }
    return obj;
}

json mixing_json(const MixingVerdict& v) {
    json obj;
    obj["status"] = v.status == MixingStatus::mixing ? "mixing"
                  : v.status == MixingStatus::not_mixing ? "not_mixing"
                                                         : "inconclusive";
    obj["gcd"] = v.gcd;
    if (v.status == MixingStatus::not_mixing) obj["period"] = v.period;
    return obj;
}

GeneratorSet generators_of(Ctx& c, const std::string& cmd) {
    if (const auto* s = std::get_if<GeneratorSet>(&c.p)) {
        if (!c.opts.alpha) return *s;
    }
    const Language& lang = c.language(cmd);
    GeneratorSet s = extract_generators(lang, c.alpha(cmd), c.opts.horizon);
    if (!s.complete && !s.structure_proved)
        c.warn("horizon-bounded generator list (horizon " + std::to_string(s.horizon) + ")");
    return s;
}

LoopSpec loop_spec_of(Ctx& c, const std::string& cmd) {
    if (const auto* spec = std::get_if<LoopSpec>(&c.p)) return *spec;
    GeneratorSet s = generators_of(c, cmd);
    if (!s.complete && !s.structure_proved)
        c.warn("loop graph built from an uncertified generator list");
    return generators_to_loop_graph(s).spec;
}

PeriodicTable periodic_table_of(Ctx& c, const std::string& cmd, int order) {
    if (const auto* sft = std::get_if<SftPresentation>(&c.p)) return periodic_table_sft(*sft, order);
    const Language& lang = c.language(cmd);
    const LabeledGraph* cover = lang.cover();
    if (cover == nullptr || !cover->right_resolving())
        throw precondition_error("command '" + cmd + "': periodic-point counts need a right-resolving cover");
    return periodic_table_sofic(*cover, order);
}

json cmd_analyze(Ctx& c) {
    json res;
    if (const auto* spec = std::get_if<LoopSpec>(&c.p)) {
        res["entropy"] = estimate_json(loop_entropy(*spec, c.opts.tol));
        RecurrenceReport rec = classify_recurrence(*spec);
        res["recurrence_class"] = rec.cls == RecurrenceClass::positive_recurrent ? "positive_recurrent"
                                : rec.cls == RecurrenceClass::null_recurrent     ? "null_recurrent"
                                                                                 : "transient";
        if (rec.mean_return_time) res["mean_return_time"] = *rec.mean_return_time;
        return res;
    }
    if (const auto* s = std::get_if<GeneratorSet>(&c.p)) {
        res["generators"] = generator_set_json(*s);
        res["mixing"] = mixing_json(mixing_gcd_test(*s));
        return res;
    }
    const Language& lang = c.language("analyze");
    res["alphabet"] = lang.alphabet().tokens();
    const int N = std::holds_alternative<DyckSystem>(c.p) ? std::min(c.opts.N, dyck_dp_cap) : c.opts.N;
    CountTable counts = block_count_table(lang, N);
    res["block_counts"] = count_table_json(counts);
    res["entropy_estimate"] = estimate_json(entropy_from_counts(counts, c.opts.window));
    c.warn("entropy estimated from finite counts at horizon " + std::to_string(N) + "; no certification");
    if (const LabeledGraph* cover = lang.cover()) {
        json cov;
        cov["vertices"] = cover->vertex_count();
        cov["edges"] = cover->edge_count();
        cov["right_resolving"] = cover->right_resolving();
        DiGraph u = cover->underlying();
        cov["irreducible"] = is_irreducible(u);
        if (is_irreducible(u)) {
            cov["period"] = graph_period(u);
            res["entropy_enclosure"] = enclosure_json(graph_entropy(u, c.opts.tol));
        }
        res["cover"] = cov;
    }
    if (c.opts.csv_path) emit_growth_csv(counts, *c.opts.csv_path);
    return res;
}

json cmd_entropy(Ctx& c) {
    json res;
    if (const auto* spec = std::get_if<LoopSpec>(&c.p)) {
        res["entropy"] = estimate_json(loop_entropy(*spec, c.opts.tol));
        return res;
    }
    if (std::holds_alternative<GeneratorSet>(c.p)) {
        res["entropy"] = estimate_json(loop_entropy(loop_spec_of(c, "entropy"), c.opts.tol));
        return res;
    }
    const Language& lang = c.language("entropy");
    const int N = std::holds_alternative<DyckSystem>(c.p) ? std::min(c.opts.N, dyck_dp_cap) : c.opts.N;
    CountTable counts = block_count_table(lang, N);
    res["count_estimate"] = estimate_json(entropy_from_counts(counts, c.opts.window));
    c.warn("count estimate at horizon " + std::to_string(N) + "; no certification");
    const LabeledGraph* cover = lang.cover();
    if (cover != nullptr && is_irreducible(cover->underlying())) {
        auto enc = graph_entropy(cover->underlying(), c.opts.tol);
        res["enclosure"] = enclosure_json(enc);
        res["point"] = 0.5 * (enc.first + enc.second);
    } else if (cover == nullptr) {
        c.warn("no finite cover: count estimate only");
    }
    if (c.opts.csv_path) emit_growth_csv(counts, *c.opts.csv_path);
    return res;
}

json cmd_hsyn(Ctx& c) {
    const Language& lang = c.language("hsyn");
    Word alpha = c.alpha("hsyn");
    json res;
    res["alpha"] = format_word(lang.alphabet(), alpha);
    CountTable counts = synchronized_count_table(lang, alpha, c.opts.N);
    res["synchronized_counts"] = count_table_json(counts);
    res["hsyn"] = estimate_json(h_syn(lang, alpha, c.opts.N, c.opts.window));
    c.warn("synchronized-count estimate at horizon " + std::to_string(c.opts.N) + "; no certification");
    if (const LabeledGraph* cover = lang.cover(); cover != nullptr && is_irreducible(cover->underlying())) {
        ConsistencyReport rep = entropy_consistency_check(*cover, lang, alpha, c.opts.N, 0.02);
        res["cover_entropy_enclosure"] = enclosure_json(rep.cover_entropy);
        res["consistent_with_cover_entropy"] = rep.consistent;
        res["consistency_tol"] = 0.02;
    }
    if (c.opts.csv_path) emit_growth_csv(counts, *c.opts.csv_path);
    return res;
}

json cmd_mixing(Ctx& c) {
    GeneratorSet s = generators_of(c, "mixing");
    json res;
    res["generators"] = generator_set_json(s);
    res["verdict"] = mixing_json(mixing_gcd_test(s));
    return res;
}

json cmd_period(Ctx& c) {
    GeneratorSet s = generators_of(c, "period");
    json res;
    res["generators"] = generator_set_json(s);
    res["period"] = cyclic_cover_period(s);
    return res;
}

json cmd_fischer(Ctx& c) {
    const LabeledGraph* g = nullptr;
    LabeledGraph built(Alphabet({"_"}), 1);
    if (const auto* lg = std::get_if<LabeledGraph>(&c.p)) {
        g = lg;
    } else if (const auto* sft = std::get_if<SftPresentation>(&c.p)) {
        built = sft_to_labeled_graph(*sft);
        g = &built;
    } else {
        throw input_error("command 'fischer' requires an sft or labeled_graph presentation");
    }
    LabeledGraph cover = fischer_cover_sofic(*g);
    json res;
    res["vertices"] = cover.vertex_count();
    res["edges"] = cover.edge_count();
    res["right_resolving"] = cover.right_resolving();
    res["cover"] = emit_presentation(Presentation(cover));
    if (auto w = find_synchronizing_word(cover, c.opts.max_len))
        res["synchronizing_word"] = format_word(cover.alphabet(), *w);
    return res;
}

json cmd_sync_words(Ctx& c) {
    const Language& lang = c.language("sync-words");
    json res;
    if (const LabeledGraph* cover = lang.cover()) {
        if (auto w = find_synchronizing_word(*cover, c.opts.max_len))
            res["shortest_synchronizing_word"] = format_word(lang.alphabet(), *w);
        else {
            res["shortest_synchronizing_word"] = nullptr;
            c.warn("no synchronizing word of length <= " + std::to_string(c.opts.max_len) + " found");
        }
    }
    if (c.opts.alpha) {
        Word w = c.alpha("sync-words");
        SyncVerdict v;
        if (const auto* sft = dynamic_cast<const SftLanguage*>(&lang))
            v = is_synchronizing_word(*sft, w, c.opts.word_horizon);
        else
            v = is_synchronizing_word(lang, w, c.opts.word_horizon);
        json ver;
        ver["word"] = format_word(lang.alphabet(), w);
        ver["status"] = v.status == SyncStatus::yes ? "yes" : v.status == SyncStatus::no ? "no" : "unknown";
        if (v.status == SyncStatus::no) {
            ver["counterexample_u"] = format_word(lang.alphabet(), v.counter_u);
            ver["counterexample_z"] = format_word(lang.alphabet(), v.counter_z);
        }
        if (v.status == SyncStatus::unknown)
            c.warn("synchronizing-word test bounded by context length " + std::to_string(c.opts.word_horizon));
        res["verdict"] = ver;
    }
    return res;
}

json cmd_zeta(Ctx& c) {
    PeriodicTable t = periodic_table_of(c, "zeta", c.opts.order);
    json res;
    json pn = json::object();
    for (int n = 1; n <= c.opts.order; ++n) pn[std::to_string(n)] = big(t.at(n));
    res["periodic_points"] = pn;
    res["zeta_coefficients"] = series_json(zeta_from_periodic(t, c.opts.order));
    res["order"] = c.opts.order;
    return res;
}

json cmd_loop_zeta(Ctx& c) {
    LoopSpec spec = loop_spec_of(c, "loop-zeta");
    json res;
    IntSeries f = first_return_series(spec, c.opts.order);
    res["first_return_series"] = series_json(f);
    res["zeta_coefficients"] = series_json(zeta_loop(f, c.opts.order));
    if (!c.opts.tower.empty()) {
        std::vector<IntSeries> fs{f};
        for (const auto& path : c.opts.tower) {
            Presentation q = parse_presentation_file(path);
            const auto* qs = std::get_if<LoopSpec>(&q);
            if (qs == nullptr) throw input_error("loop-zeta: tower file '" + path + "' is not a loop_graph");
            fs.push_back(first_return_series(*qs, c.opts.order));
        }
        res["depth_product_coefficients"] = series_json(zeta_depth_product(fs, c.opts.order));
        res["depth"] = static_cast<int>(fs.size());
    }
    res["order"] = c.opts.order;
    return res;
}

json cmd_recurrence(Ctx& c) {
    json res;
    if (std::holds_alternative<LoopSpec>(c.p) || std::holds_alternative<GeneratorSet>(c.p)) {
        LoopSpec spec = loop_spec_of(c, "recurrence");
        RecurrenceReport rep = classify_recurrence(spec);
        res["class"] = rep.cls == RecurrenceClass::positive_recurrent ? "positive_recurrent"
                     : rep.cls == RecurrenceClass::null_recurrent     ? "null_recurrent"
                                                                      : "transient";
        res["entropy"] = rep.entropy;
        if (rep.mean_return_time) res["mean_return_time"] = *rep.mean_return_time;
        return res;
    }
    const int points = std::max(c.opts.order, 2 * c.opts.max_order + 2);
    PeriodicTable t = periodic_table_of(c, "recurrence", points);
    json pn = json::object();
    for (int n = 1; n <= points; ++n) pn[std::to_string(n)] = big(t.at(n));
    res["periodic_points"] = pn;
    if (auto rec = detect_linear_recurrence(t, c.opts.max_order)) {
        json r;
        r["order"] = rec->order;
        json coeff = json::array();
        for (const auto& x : rec->coeff) coeff.push_back(rat(x));
        r["coefficients"] = coeff;
        r["start"] = rec->start;
        res["recurrence"] = r;
    } else {
        res["recurrence"] = nullptr;
        c.warn("no linear recurrence of order <= " + std::to_string(c.opts.max_order) +
               " fits the first " + std::to_string(points) + " periodic-point counts");
    }
    return res;
}

json cmd_svgl(Ctx& c) {
    const Language& lang = c.language("svgl");
    json res;
    auto witness = svgl_witness(lang, c.opts.max_N, c.opts.word_horizon);
    res["transition_length"] = witness ? json(*witness) : json(nullptr);
    c.warn("witness search bounded: max transition length " + std::to_string(c.opts.max_N) +
           ", word pairs up to length " + std::to_string(c.opts.word_horizon));
    if (c.opts.alpha) {
        Word alpha = c.alpha("svgl");
        auto mix = mixing_transition_length(lang, alpha, c.opts.max_N, c.opts.word_horizon);
        res["mixing_transition_length"] = mix ? json(*mix) : json(nullptr);
    }
    return res;
}

json cmd_gap(Ctx& c) {
    const Language& lang = c.language("gap");
    GapReport rep = subsystem_gap_harness(lang, c.opts.extend_len, c.opts.N, c.opts.window);
    json res;
    res["base_entropy"] = rep.base_entropy;
    res["all_gaps_positive"] = rep.all_positive;
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json row;
        row["extension"] = format_word(lang.alphabet(), e.extension);
        row["empty_subsystem"] = e.empty_subsystem;
        row["subsystem_entropy"] = e.empty_subsystem ? json("-inf") : json(e.subsystem_entropy);
        row["gap"] = e.gap;
        row["positive_gap"] = e.positive_gap;
        entries.push_back(std::move(row));
    }
    res["entries"] = entries;
    c.warn("gap estimates at horizon " + std::to_string(c.opts.N) + "; no certification");
    return res;
}

const DyckSystem& require_dyck(const Presentation& p, const std::string& cmd) {
    const auto* d = std::get_if<DyckSystem>(&p);
    if (d == nullptr) throw input_error("command '" + cmd + "' requires a dyck presentation");
    return *d;
}

json cmd_dyck_count(Ctx& c) {
    const DyckSystem& d = require_dyck(c.p, "dyck-count");
    const int n = std::min(c.opts.n, dyck_enumeration_cap);
    if (n < c.opts.n)
        c.warn("class counts capped at the enumeration limit n = " + std::to_string(dyck_enumeration_cap));
    DyckClassCounts classes = dyck_count_classes(d, n);
    json res;
    json blocks = json::array(), a = json::array(), bal = json::array(), cc = json::array();
    for (int k = 0; k <= n; ++k) {
        blocks.push_back(big(classes.blocks[static_cast<size_t>(k)]));
        a.push_back(big(classes.a[static_cast<size_t>(k)]));
        bal.push_back(big(classes.balanced[static_cast<size_t>(k)]));
        cc.push_back(big(classes.c[static_cast<size_t>(k)]));
    }
    res["blocks"] = blocks;
    res["a"] = a;
    res["balanced"] = bal;
    res["c"] = cc;
    res["n"] = n;
    return res;
}

json cmd_dyck_entropy(Ctx& c) {
    const DyckSystem& d = require_dyck(c.p, "dyck-entropy");
    const int N = std::min(std::max(c.opts.N, 2), dyck_dp_cap);
    DyckEntropyReport rep = dyck_entropy_report(d, N, std::min(c.opts.window + 1, N - 1));
    json res;
    res["block_counts"] = count_table_json(rep.counts);
    res["estimate"] = estimate_json(rep.estimate);
    res["ratios"] = rep.ratios;
    if (rep.claimed_bound) {
        res["claimed_bound"] = *rep.claimed_bound;
        res["bound_margin"] = *rep.bound_margin;
    }
    if (rep.b3_exact) {
        res["b3_exact"] = big(*rep.b3_exact);
        res["b3_claim_discrepancy"] = rep.b3_claim_discrepancy;
        if (rep.b3_claim_discrepancy)
            c.warn("claimed |B_3| = 64 disagrees with the exact count " + rep.b3_exact->str());
    }
    DyckGrowthCheck growth = dyck_growth_inequality_check(d, std::min(N, dyck_enumeration_cap));
    res["growth_inequality_violations"] = growth.violations;
    c.warn("estimate from exact counts at horizon " + std::to_string(N) + "; no certification");
    if (c.opts.csv_path) emit_growth_csv(rep.counts, *c.opts.csv_path);
    return res;
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{
        "analyze", "entropy",  "hsyn",      "mixing", "period",
        "fischer", "sync-words", "zeta",    "loop-zeta", "recurrence",
        "svgl",    "gap",      "dyck-count", "dyck-entropy"};
    return names;
}

json run_command(const std::string& cmd, const Presentation& p, const CommandOptions& opts) {
    Ctx c{p, opts, nullptr, {}};
    json results;
    if (cmd == "analyze") results = cmd_analyze(c);
    else if (cmd == "entropy") results = cmd_entropy(c);
    else if (cmd == "hsyn") results = cmd_hsyn(c);
    else if (cmd == "mixing") results = cmd_mixing(c);
    else if (cmd == "period") results = cmd_period(c);
    else if (cmd == "fischer") results = cmd_fischer(c);
    else if (cmd == "sync-words") results = cmd_sync_words(c);
    else if (cmd == "zeta") results = cmd_zeta(c);
    else if (cmd == "loop-zeta") results = cmd_loop_zeta(c);
    else if (cmd == "recurrence") results = cmd_recurrence(c);
    else if (cmd == "svgl") results = cmd_svgl(c);
    else if (cmd == "gap") results = cmd_gap(c);
    else if (cmd == "dyck-count") results = cmd_dyck_count(c);
    else if (cmd == "dyck-entropy") results = cmd_dyck_entropy(c);
    else throw input_error("unknown command '" + cmd + "'");

    json report;
    report["command"] = cmd;
    report["input"] = emit_presentation(p);
    report["results"] = results;
    report["warnings"] = c.warnings;
    report["version"] = version_string;
    return report;
}

void emit_growth_csv(const CountTable& counts, const std::string& path) {
    if (counts.counts.empty()) throw input_error("emit_growth_csv: empty count table");
    std::ofstream out(path);
    if (!out) throw input_error("emit_growth_csv: cannot open '" + path + "' for writing");
    out << "n,count,log_count,ratio_to_previous\n";
    const BigInt* prev = nullptr;
    for (const auto& [n, c] : counts.counts) {
        out << n << ',' << c.str() << ',';
        if (c > 0) out << log_big(c);
        else out << "-inf";
        out << ',';
        if (prev != nullptr && *prev > 0 && c > 0) {
            BigRat ratio(c, *prev);
            out << ratio.convert_to<double>();
        }
        out << '\n';
        prev = &c;
    }
    if (!out) throw input_error("emit_growth_csv: write failure on '" + path + "'");
}

} // namespace symdyn
