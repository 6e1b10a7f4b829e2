#pragma once

// Command-line surface of the `artin` tool.
//
//   artin check     (--degrees D | --group NAME) --orders V [--no-dedekind]
//                   [--require-trivial-nonneg] [--s0 LABEL] [--json]
//   artin hilbert   --orders V [--engine enum|frontier] [--oracle-verify] [--json]
//   artin factorize --orders V --element K [--cap N] [--json]
//   artin sweep     (--degrees D | --group NAME) --order-bound B [--no-dedekind]
//                   [--require-trivial-nonneg] [--out PATH] [--workers N]
//                   [--summary-json PATH] [--summary-csv PATH]
//   artin catalog   list | show NAME
//
// Exit codes: 0 all checked assertions hold, 1 counterexample or failed
// cross-check, 2 invalid input.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "artin/core_model.hpp"
#include "artin/hilbert.hpp"
#include "artin/sweep.hpp"

namespace artin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct CheckCommand {
  DegreeVector degrees;
  OrderVector orders;
  InstanceFlags flags;
  std::optional<std::string> s0;
  bool json = false;
};

struct HilbertCommand {
  OrderVector orders;
  HilbertEngine engine = HilbertEngine::Oracle;
  bool oracle_verify = false;
  bool json = false;
};

struct FactorizeCommand {
  OrderVector orders;
  ExponentVector element;
  std::int64_t cap = 2;
  bool json = false;
};

struct SweepCommand {
  SweepPlan plan;
  std::optional<std::filesystem::path> summary_json;
  std::optional<std::filesystem::path> summary_csv;
};

struct CatalogCommand {
  std::optional<std::string> show;  // nullopt lists every entry
};

using CliCommand =
    std::variant<CheckCommand, HilbertCommand, FactorizeCommand, SweepCommand, CatalogCommand>;

/// Comma-separated decimal integers, e.g. "1,-1,0". Throws UsageError.
std::vector<std::int64_t> parse_int_list(const std::string& text);

/// `args` excludes the program name. Throws Error(UsageError) on bad input.
CliCommand parse_command(const std::vector<std::string>& args);

int run_command(const CliCommand& command, std::ostream& out, std::ostream& err);

/// parse_command + run_command with the exit-code contract applied.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artin::cli
