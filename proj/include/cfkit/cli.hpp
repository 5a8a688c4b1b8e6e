#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cfkit::cli {

inline constexpr std::uint64_t kDefaultSeed = 2024;
inline constexpr const char* kSeedEnvVar = "CFKIT_SEED";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kIo = 3,
  kDomain = 4,
};

enum class Subcommand { Distance, Score, Simulate, PainEval, Sweep, ExportFigures };
enum class OutputFormat { Plain, Json, Csv };

/// Everything a subcommand needs, filled in by the argument parser. Numeric
/// fields are still text here; dispatch() validates them before computing.
struct RunConfig {
  Subcommand command = Subcommand::Distance;
  OutputFormat format = OutputFormat::Plain;

  std::string measure = "c";
  std::vector<std::string> p_values;
  std::vector<double> lambda_values;
  std::vector<std::string> cfns;

  bool sweep = false;
  bool legacy_sweep = false;
  std::string sweep_kind;

  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 100;
  std::optional<double> threshold;

  std::optional<std::filesystem::path> input;
  std::optional<std::filesystem::path> batch;
  std::optional<std::filesystem::path> out;
  std::filesystem::path out_dir = "figures";
};

/// Runs a parsed configuration. Throws cfkit::Error on failure.
void dispatch(const RunConfig& config, std::ostream& out);

/// Parses `args` (without the program name), runs the chosen subcommand and
/// returns the process exit status. Data goes to `out` or to --out; errors
/// go to `err` as a single JSON object {"error": code, "message": text}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes fig2.csv, fig3.csv, fig4.csv, fig5.csv, fig7.csv and fig8.csv into
/// `out_dir` (created if missing). Throws Error{IoError}.
void export_figure_datasets(const std::filesystem::path& out_dir, std::uint64_t seed);

/// CFKIT_SEED when set and parseable, otherwise kDefaultSeed.
std::uint64_t default_seed();

}  // namespace cfkit::cli
