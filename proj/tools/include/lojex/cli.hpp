#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace lojex::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInconclusive = 2, kInvariant = 3 };

/// Runs one invocation; args[0] is the program name. Reports go to `out`,
/// usage errors to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Version of the report layout written under "schema_version".
inline constexpr const char* kSchemaVersion = "1.0";

}  // namespace lojex::cli
