#ifndef SYMDYN_REPORT_HPP
#define SYMDYN_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "symdyn/presentation.hpp"
#include "symdyn/spectra.hpp"

namespace symdyn {

/// Options shared by the report commands; each command reads the subset it
/// documents. Defaults are chosen so that every command runs in seconds on
/// desk-scale inputs.
struct CommandOptions {
    double tol = 1e-6;        // entropy enclosure width
    int horizon = 9;          // generator-list length bound
    int order = 16;           // series truncation order
    std::optional<std::string> alpha; // parsed against the presentation's alphabet
    int max_len = 12;         // synchronizing-word search bound
    int extend_len = 2;       // gap harness extension length
    int N = 12;               // count horizon
    int window = 6;           // estimator window
    int max_N = 10;           // witness-search bound
    int word_horizon = 4;     // pair-enumeration bound for connecting-word tests
    int max_order = 6;        // linear-recurrence order bound
    int n = 8;                // dyck class-count horizon
    std::vector<std::string> tower; // extra presentation files for depth products
    std::optional<std::string> csv_path;
};

/// Dispatch one named command against a presentation. The report is a
/// deterministic document: command, canonical input echo, results, warnings
/// (every bounded search is labeled with its horizon), and the tool version.
/// Big integers are serialized as decimal strings.
nlohmann::json run_command(const std::string& cmd, const Presentation& p,
                           const CommandOptions& opts);

const std::vector<std::string>& command_names();

/// Growth table as CSV: columns n, count, log_count, ratio_to_previous.
/// input_error on an empty table or write failure.
void emit_growth_csv(const CountTable& counts, const std::string& path);

} // namespace symdyn

#endif
