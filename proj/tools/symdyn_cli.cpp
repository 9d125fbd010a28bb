#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symdyn/report.hpp"
#include "symdyn/version.hpp"

namespace {

struct Invocation {
    std::string command;
    std::string file;
    symdyn::CommandOptions opts;
};

void add_common_options(CLI::App* sub, Invocation& inv) {
    sub->add_option("file", inv.file, "presentation document (JSON)")->required();
    sub->add_option("--tol", inv.opts.tol, "entropy enclosure width (nats)")->capture_default_str();
    sub->add_option("--alpha", inv.opts.alpha, "synchronizing word (token string)");
    sub->add_option("--horizon", inv.opts.horizon, "generator-list length bound")->capture_default_str();
    sub->add_option("--order", inv.opts.order, "series truncation order")->capture_default_str();
    sub->add_option("--max-len", inv.opts.max_len, "synchronizing-word search bound")->capture_default_str();
    sub->add_option("--extend-len", inv.opts.extend_len, "gap-harness extension length")->capture_default_str();
    sub->add_option("-N,--count-horizon", inv.opts.N, "count horizon")->capture_default_str();
    sub->add_option("--window", inv.opts.window, "estimator window")->capture_default_str();
    sub->add_option("--max-N", inv.opts.max_N, "witness-search bound")->capture_default_str();
    sub->add_option("--word-horizon", inv.opts.word_horizon, "pair-enumeration bound for connecting-word tests")
        ->capture_default_str();
    sub->add_option("--max-order", inv.opts.max_order, "linear-recurrence order bound")->capture_default_str();
    sub->add_option("-n,--class-horizon", inv.opts.n, "class-count horizon")->capture_default_str();
    sub->add_option("--tower", inv.opts.tower, "additional loop_graph files for the depth product");
    sub->add_option("--csv", inv.opts.csv_path, "write the growth table as CSV to this path");
}

const char* command_help(const std::string& cmd) {
    if (cmd == "analyze") return "overview: counts, entropy, cover structure";
    if (cmd == "entropy") return "entropy enclosure (cover) and count-based estimate";
    if (cmd == "hsyn") return "synchronized-word counts and entropy estimate";
    if (cmd == "mixing") return "generator-length gcd mixing test";
    if (cmd == "period") return "cyclic-cover period from a certified generator set";
    if (cmd == "fischer") return "minimal right-resolving presentation";
    if (cmd == "sync-words") return "find/test synchronizing words";
    if (cmd == "zeta") return "periodic-point counts and zeta coefficients";
    if (cmd == "loop-zeta") return "loop-graph zeta 1/(1-f) and depth products";
    if (cmd == "recurrence") return "recurrence class (loop graphs) or linear recurrence of counts";
    if (cmd == "svgl") return "bounded transition-length witness search";
    if (cmd == "gap") return "entropy gap over single-word subsystem extensions";
    if (cmd == "dyck-count") return "Dyck block and class counts";
    if (cmd == "dyck-entropy") return "Dyck entropy estimate with claimed bounds";
    return "";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic-dynamics workbench"};
    app.set_version_flag("--version", symdyn::version_string);
    app.require_subcommand(1);

    std::vector<Invocation> invs(symdyn::command_names().size());
    size_t i = 0;
    for (const auto& name : symdyn::command_names()) {
        Invocation& inv = invs[i++];
        inv.command = name;
        add_common_options(app.add_subcommand(name, command_help(name)), inv);
    }

    CLI11_PARSE(app, argc, argv);

    const Invocation* chosen = nullptr;
    for (const auto& inv : invs)
        if (app.get_subcommand(inv.command)->parsed()) chosen = &inv;
    if (chosen == nullptr) return 1; // unreachable with require_subcommand(1)

    try {
        symdyn::Presentation p = symdyn::parse_presentation_file(chosen->file);
        nlohmann::json report = symdyn::run_command(chosen->command, p, chosen->opts);
        std::cout << report.dump(2) << '\n';
        return 0;
    } catch (const symdyn::input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return symdyn::input_error::exit_code;
    } catch (const symdyn::precondition_error& e) {
        std::cerr << "precondition error: " << e.what() << '\n';
        return symdyn::precondition_error::exit_code;
    } catch (const symdyn::budget_error& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return symdyn::budget_error::exit_code;
    } catch (const symdyn::integrity_error& e) {
        std::cerr << "integrity error: " << e.what() << '\n';
        return symdyn::integrity_error::exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return symdyn::input_error::exit_code;
    }
}
