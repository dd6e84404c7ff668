#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace localhk::cli {

enum class Command { solve_exact, solve_local, solve_greens, hkpr_exact, hkpr_approx, sweep_norms, validate };

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;     ///< I/O, parse or capacity problem
inline constexpr int kExitValidation = 2;  ///< subset or parameters rejected

struct RunConfig {
    Command command = Command::validate;
    std::filesystem::path graph_path;
    std::filesystem::path subset_path;
    std::filesystem::path boundary_path;
    /// hkpr-*: "id value" lines on S; defaults to b2.
    std::optional<std::filesystem::path> pref_path;
    std::optional<double> gamma;
    std::optional<double> epsilon;
    std::uint64_t seed = 0;
    bool restricted_range = false;
    std::optional<std::filesystem::path> output_path;
    unsigned workers = 1;
    std::optional<double> constant_override;
    /// hkpr-*: pagerank time.
    std::optional<double> t;
    /// sweep-norms: horizon (defaults to the schedule's T) and grid size.
    std::optional<double> t_max;
    std::size_t points = 200;
};

std::string command_name(Command c);

/// Executes one command. Artifacts go to `config.output_path` or `out`;
/// diagnostics and violation lists go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Configures logging, parses argv into a RunConfig and runs it. Usage errors
/// return kExitValidation.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Sets the stderr log level from SOLVER_LOG (error, info or debug; default
/// error). Safe to call more than once.
void configure_logging();

}  // namespace localhk::cli
