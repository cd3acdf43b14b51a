#pragma once

#include "resolvekit/error.hpp"
#include "resolvekit/families.hpp"
#include "resolvekit/resolvability.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace resolvekit {

/// 0 ok, 1 a checked claim failed, 2 bad input or usage, 3 out of budget.
auto exit_code_for(ErrorKind kind) noexcept -> int;

struct ChainReport {
    Family family = Family::web;
    int n = 0;
    std::size_t vertex = 0;
    std::size_t edge = 0;
    std::size_t mixed = 0;
    /// vertex < edge < mixed
    bool strict = false;
};

/// Exact vertex, edge and mixed dimensions of one family member. The mixed
/// value comes from the polynomial certificate, the other two from search.
/// Needs n >= 5.
auto chain_check(Family family, int n, const SearchOptions& opts = {}) -> ChainReport;

/// "6" or "4..12", inclusive.
struct IntRange {
    int first = 0;
    int last = 0;
};
auto parse_range(const std::string& text) -> IntRange;

/// RESOLVE_KIT_BUDGET when set and valid, else the built-in default.
/// A malformed value is a usage error.
auto budget_from_environment() -> std::uint64_t;

enum class Command { gen, dim, check_set, verify_paper, codes, validate_tables, chain };
enum class OutputFormat { text, json, csv };

struct RunConfig {
    Command command = Command::dim;
    std::optional<Family> family;
    std::optional<std::string> n;
    std::optional<std::string> input;
    ResolutionMode mode = ResolutionMode::mixed;
    SearchOptions search;
    bool greedy_only = false;
    std::string landmarks;
    std::optional<std::string> output;
    OutputFormat format = OutputFormat::text;
};

/// Runs one subcommand, writing the report to out (or config.output) and
/// diagnostics to err. Returns the process exit code.
auto run(const RunConfig& config, std::ostream& out, std::ostream& err) -> int;

} // namespace resolvekit
