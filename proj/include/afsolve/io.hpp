#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "afsolve/framework.hpp"
#include "afsolve/semantics.hpp"

namespace afsolve::io {

enum class InputFormat { apx, tgf };

struct ParseDiagnostics {
    std::vector<std::pair<std::size_t, std::string>> warnings;  // (line, message)
    std::vector<std::string> lenient_declarations;
};

struct ParsedFramework {
    ArgumentationFramework framework;
    ParseDiagnostics diagnostics;
};

/// apx facts: `arg(name).` and `att(name,name).`, `%` comments, free whitespace.
/// Names are [a-z][A-Za-z0-9_]* or a double-quoted string (kept with its quotes).
/// Throws ParseError with the offending line.
ParsedFramework parse_apx(std::string_view text, EndpointPolicy policy = EndpointPolicy::strict);

/// Trivial graph format: node ids (optionally followed by a label), a `#` line, then `src dst` edges.
ParsedFramework parse_tgf(std::string_view text, EndpointPolicy policy = EndpointPolicy::strict);

ParsedFramework parse(std::string_view text, InputFormat format, EndpointPolicy policy = EndpointPolicy::strict);

std::optional<InputFormat> parse_format(std::string_view name) noexcept;
// `.tgf` files are tgf, everything else apx.
InputFormat format_for_path(const std::filesystem::path& path);

enum class OutputStyle {
    lines,   // one `[a,c,f]` per line
    single,  // `[[a,c,f],[a,d,f]]`, no trailing newline
};

std::string format_set(const ArgumentationFramework& af, const ArgumentSet& s);
std::string format_extensions(const ArgumentationFramework& af, const ExtensionSet& exts, OutputStyle style);

/// Whole file as text; throws IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace afsolve::io
