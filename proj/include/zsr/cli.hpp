#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zsr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `zsr` invocation. args excludes the program name.
///
/// Exit codes: 0 on success with nothing found, 1 when a theorem, lemma or
/// conjecture check reports a violation, 2 on usage or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zsr::cli
