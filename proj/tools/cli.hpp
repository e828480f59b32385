// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lunehankel::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; args excludes the program name. The table goes to
/// out, the JSON document to --output (or to out after the table).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lunehankel::cli
