#ifndef SYMDYN_PRESENTATION_HPP
#define SYMDYN_PRESENTATION_HPP

#include <memory>
#include <string>
#include <variant>

#include <nlohmann/json_fwd.hpp>

#include "symdyn/dyck.hpp"
#include "symdyn/generators.hpp"
#include "symdyn/labeled_graph.hpp"
#include "symdyn/sft.hpp"

namespace symdyn {

/// Tagged union of shift-space descriptions accepted by the file format.
using Presentation =
    std::variant<SftPresentation, LabeledGraph, LoopSpec, GeneratorSet, DyckSystem>;

/// Parse one presentation document. Unknown fields are rejected; labeled
/// graphs are pruned of stranded vertices (no in- or no out-edges) and
/// rejected when nothing remains.
Presentation parse_presentation(const nlohmann::json& doc);
Presentation parse_presentation_text(const std::string& text);
Presentation parse_presentation_file(const std::string& path);

/// Canonical serialized form; parse(emit(p)) reproduces p byte-identically.
nlohmann::json emit_presentation(const Presentation& p);

const char* presentation_kind(const Presentation& p);

/// Language oracle for sft / labeled_graph / dyck presentations; input_error
/// for kinds that carry no language.
std::unique_ptr<Language> make_language(const Presentation& p);

} // namespace symdyn

#endif
