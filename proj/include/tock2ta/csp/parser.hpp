#pragma once

#include <string>
#include <string_view>

#include "tock2ta/csp/ast.hpp"

namespace tock2ta::csp {

/// Parses CSPM-style definitions (`P = e -> Q`, `[]`, `|~|`, `;`, `[|{..}|]`,
/// `|||`, `/\`, `\ {..}`, `[[a <- b]]`). Comments start with `--`.
///
/// The definition named MAIN is the main process if present, otherwise the
/// first definition. The result is closed and guardedness-checked; every
/// problem is reported as a SpecError carrying a source position.
CspSpec parse(std::string_view source);

/// Reads and parses a `.tcsp` file.
CspSpec parseFile(const std::string& path);

/// Renders a spec in the concrete syntax accepted by parse(). Binary
/// operators are fully parenthesised, so parse(print(s)) == s.
std::string print(const CspSpec& spec);
std::string print(const Process& p);

}  // namespace tock2ta::csp
