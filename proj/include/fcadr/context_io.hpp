#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "fcadr/context.hpp"

namespace fcadr {

enum class ContextFormat {
  /// Header row `;a;b;...`, object label in the first column. The separator
  /// (`;` or `,`) is taken from the header line. Cells: `1`, `x`, `X`, `×`
  /// are true; `0` and blank are false.
  csv,
  /// Burmeister `.cxt`: `B`, optional name line, object and attribute counts,
  /// labels, then one `X`/`.` row per object.
  burmeister,
};

/// Parses a context. Row and column order follow the file. Throws ParseError
/// (with line and column) on ragged rows, duplicate labels, unknown cell
/// tokens or malformed headers.
FormalContext parse_context(std::string_view text, ContextFormat format);

/// Inverse of parse_context. CSV output uses `;` and `1`/`0` cells.
std::string serialize_context(const FormalContext& ctx, ContextFormat format);

/// Parses one table and splits off the named decision attributes.
FormalDecisionContext parse_decision_context(std::string_view text, std::span<const std::string> decision_labels,
                                             ContextFormat format = ContextFormat::csv);

/// `.cxt` files are Burmeister, everything else CSV.
ContextFormat format_for_path(const std::filesystem::path& path);

/// Reads and parses a file; I/O failures raise fcadr::Error.
FormalContext load_context(const std::filesystem::path& path);

}  // namespace fcadr
