#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starnoma/system_config.hpp"

namespace starnoma {

/// One parse problem, tied to a 1-based source line (0 for file-level
/// problems such as an unreadable path).
struct ParseDiagnostic {
    int line = 0;
    std::string message;
};

struct ConfigParseResult {
    std::optional<SystemConfig> config; // set only when `errors` is empty
    std::vector<ParseDiagnostic> errors;
};

/// Parses the flat `key = value` configuration dialect: one assignment per
/// line, `#` starts a comment, blank lines ignored, link parameters under
/// dotted keys (`link.<role>.<field>`). Unknown keys and malformed values
/// are reported with line numbers; on any error no config is produced.
/// Parsing starts from `defaults` and overlays assignments in order, so a
/// file only needs the keys it changes.
ConfigParseResult parse_config_text(std::string_view text,
                                    const SystemConfig& defaults);

ConfigParseResult load_config_file(const std::string& path,
                                   const SystemConfig& defaults);

/// Canonical full dump of a configuration; parsing it back reproduces the
/// same configuration exactly.
std::string config_to_text(const SystemConfig& cfg);

} // namespace starnoma
