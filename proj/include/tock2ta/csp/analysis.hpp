#pragma once

#include "tock2ta/csp/ast.hpp"

namespace tock2ta::csp {

/// Checks closure and the static side conditions; throws SpecError.
void checkSpec(const CspSpec& spec);

/// User events reachable from main, after applying enclosing renamings.
/// Never contains tock.
EventSet alphabet(const CspSpec& spec);

/// True if every way for `p` to terminate passes through some prefix.
/// A process that can never terminate satisfies this trivially.
bool guardsTermination(const Process& p, const Definitions& defs);

/// True if every way for `p` to terminate passes through a visible,
/// non-tock event that is not hidden inside `p`. Conservative: renaming
/// counts as "unknown" and yields false.
bool engagesBeforeTermination(const Process& p, const Definitions& defs);

}  // namespace tock2ta::csp
