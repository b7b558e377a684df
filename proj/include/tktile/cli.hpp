#pragma once

#include "tktile/report.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tktile::cli {

/// Everything a single command needs. Numeric parameters that may be
/// fractional stay as "p/q" strings until validate() has parsed them.
struct RunConfig {
    std::string command;
    /// gen only: extremal | random | complete | codegree.
    std::string kind;
    std::vector<std::string> inputs;
    std::optional<int> k, n;
    std::optional<std::string> gamma, gamma_prime, beta, p;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::uint64_t cap = default_copy_cap;
    unsigned workers = 1;
    /// lattice: exact | packing. reach: certificate | exact.
    std::string mode;
    std::optional<int> t, m, u, v, delta;
    std::optional<int> from_block, to_block;
    /// Vertex lists: "0-4,7"; partitions separate blocks with ';'.
    std::optional<std::string> partition, set, classes, avoid, extremal_set;
    bool fallback = false;
    bool column_generation = false;
    bool min_max = false;
    bool cover = false;
    std::string output;
    std::string witness_path;
    std::string sidecar;
    unsigned jobs = 1;

    auto echo() const -> Json;
};

struct Report {
    std::string command;
    std::string anchor;
    /// Absent for gen and info, which decide nothing.
    std::optional<Verdict> verdict;
    std::string value;
    Json result = Json::object();
    Json witness;
    std::string witness_path;
    Json config;
    double ms = 0;

    /// 0 decided or informational, 2 budget.
    auto exit_code() const -> int { return verdict == Verdict::unknown ? 2 : 0; }
    /// The full document; without timing it is byte-identical across runs.
    auto to_json(bool timing = true) const -> Json;
};

/// Default node budget: TKTILE_BUDGET when set, else 50,000,000.
auto default_budget() -> std::uint64_t;

/// Parses "p/q" parameters and checks their domains. Throws Error.
void validate(const RunConfig & config);

/// Runs one command. Throws Error for bad input; a BudgetExceeded from
/// enumeration comes back as an unknown-budget report.
auto dispatch(const RunConfig & config) -> Report;

/// Parses a command line (without the program name) into a config.
/// Returns nullopt and sets exit_code after --help or a usage error.
auto parse_args(const std::vector<std::string> & args, std::ostream & out, std::ostream & err, int & exit_code)
    -> std::optional<RunConfig>;

struct BatchRow {
    std::string id;
    std::string command;
    /// Verdict string, "error", or empty for informational commands.
    std::string verdict;
    std::string value;
    std::string witness_path;
    double ms = 0;
};

/// Manifest rows are `<id> <command> <args...>`, whitespace separated; blank
/// lines and '#' comments are skipped. Rows run on `jobs` workers and come
/// back in manifest order; a failing row is recorded, never fatal.
auto run_batch(const std::filesystem::path & manifest, unsigned jobs) -> std::vector<BatchRow>;

/// Header plus one line per row. ms is left out when `timing` is false.
auto format_csv(const std::vector<BatchRow> & rows, bool timing = true) -> std::string;

/// Whole CLI: exit 0 decided, 2 budget, 1 usage or input error.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

}
