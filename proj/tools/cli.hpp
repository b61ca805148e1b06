#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qseries/residues.hpp"
#include "qseries/series.hpp"

namespace qseries::cli {

enum class Subcommand { expand, verify, congruence, oracle, residues, suite };

struct CommandSpec {
    Subcommand subcommand = Subcommand::expand;
    std::size_t order = 100;
    bool order_given = false;
    bool structured = false;
    std::optional<std::filesystem::path> out;

    // expand / congruence use expr; verify uses lhs and rhs
    std::string expr;
    std::string lhs;
    std::string rhs;
    std::optional<Integer> modulus;
    std::size_t step = 1;
    std::size_t residue = 0;

    // oracle
    std::string oracle_kind = "cphi";
    int colors = 4;

    // residues
    QuadraticFormQuery query;
    std::optional<CompletedSquareForm> completed;

    // suite
    std::string suite_name = "paper-all";
    std::optional<std::filesystem::path> fixtures;
    bool parallel = true;

    /// Throws ContractViolation when the options are inconsistent.
    void validate() const;
};

enum ExitCode : int { success = 0, violated = 1, usage_error = 2 };

/// Default order from the QSERIES_ORDER environment variable, else 100.
std::size_t default_order();

struct ParsedCommand {
    std::optional<CommandSpec> spec; // empty when parsing ended the run
    int exit_code = success;         // meaningful when spec is empty
};

/// Parses argv; usage errors are written to err and mapped to exit code 2.
ParsedCommand parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes a command. Reports go to `out` (or to spec.out when set),
/// diagnostics to `err`.
int run(const CommandSpec& spec, std::ostream& out, std::ostream& err);

} // namespace qseries::cli
