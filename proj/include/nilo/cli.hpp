#pragma once

// Command-line surface: orbit enumeration, pair tables, classical
// partition reports, per-diagram verification suites, and the model-module
// combinatorics, in text, JSON, or CSV form.

#include <cstdint>
#include <iosfwd>

namespace nilo {

enum class Numbering { kBourbaki, kVo };
enum class OutputFormat { kText, kJson, kCsv };

struct RunConfig {
  std::uint64_t seed = 1;
  int trials = 8;  // must be >= 1
  Numbering numbering = Numbering::kBourbaki;
  OutputFormat output = OutputFormat::kText;
};

// Exit codes: CI can tell a mathematical refutation from an exhausted
// search budget.
inline constexpr int kExitOk = 0;            // all requested checks pass
inline constexpr int kExitRefuted = 1;       // a check is mathematically false
inline constexpr int kExitUsage = 2;         // bad arguments or invalid input
inline constexpr int kExitInconclusive = 3;  // a verdict ran out of budget

/// Parses argv and runs one subcommand (orbits, pairs, classical, verify,
/// sl3), writing the report to `out` and diagnostics to `err`. Returns the
/// process exit code. Identical inputs, seed, and trials produce
/// byte-identical output.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nilo
