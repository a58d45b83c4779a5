#ifndef BERKSKEL_MODEL_IO_HPP
#define BERKSKEL_MODEL_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "berkskel/essential.hpp"
#include "berkskel/model.hpp"
#include "berkskel/modify.hpp"

namespace berkskel {

/**
 * Model files are JSON documents:
 *
 *   { "kind": "sncd-over-dvr" | "log-resolution", "m": 1, "ambient_dim": 2,
 *     "components": [ { "id": "E1", "name": "E1", "N": 2, "mu": 1 }, ... ],
 *     "strata": [ { "id": "s12", "vertices": ["E1", "E2"],
 *                   "faces": { "E1": "v_E2", "E2": "v_E1" },
 *                   "touches_zero": false, "touches_pole": false,
 *                   "horizontal": { "num": [[0, 1]], "den": [[0, 0]] } }, ... ] }
 *
 * "name", "faces", the flags and "horizontal" are optional. Parse failures
 * throw ParseError whose location is "line L, column C" for syntax errors
 * and a JSON pointer for schema errors. Structural validity is not checked
 * here; see validate().
 */
SncdModel parse_model(std::string_view text);
std::string serialize_model(const SncdModel& model);

SncdModel load_model(const std::filesystem::path& path);
void save_model(const SncdModel& model, const std::filesystem::path& path);

/// { "m": 1, "mu": { "E1": 1, ... }, "touches_zero": { "s": true }, "touches_pole": {} }
FormData parse_form(std::string_view text);
std::string serialize_form(const FormData& form);
FormData load_form(const std::filesystem::path& path);

std::string serialize_trace(const BlowupTrace& trace);
BlowupTrace parse_trace(std::string_view text);

/// Re-applies the steps of a trace to a model.
BlowupResult replay_trace(const SncdModel& model, const BlowupTrace& trace);

std::string read_file(const std::filesystem::path& path);

}  // namespace berkskel

#endif
