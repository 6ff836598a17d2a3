#pragma once

#include <string>

#include "json.hpp"

namespace perispec {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "perispec.report/1";

/// Clifford sign, index sign and ln-branch, with their textual statements.
Json convention_block();

/// Versioned report document:
///   { schema, command: {name, args}, conventions, results, tolerances, timing }
Json make_report(const std::string& command, Json args, Json results, Json tolerances,
                 double elapsed_ms);

/// Two-space indented JSON plus a trailing newline. Parsing the output with
/// parse_report and dumping again reproduces it byte for byte.
std::string dump_report(const Json& report);

/// Parses a report and checks the schema tag and top-level keys. Throws
/// ParseError.
Json parse_report(const std::string& text);

}  // namespace perispec
