#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dioph/natural.hpp"

namespace dioph::cli {

enum class Command { Classify, Search, Sweep, FamilyPrimes, Catalan, Frenicle };
enum class OutputFormat { Jsonl, Csv, Human };

// Everything an invocation needs, already parsed. The frontend only maps
// flags onto this; run() does the validation, so it can be driven in-process.
struct RunConfig {
  Command command = Command::Classify;
  OutputFormat format = OutputFormat::Jsonl;

  std::optional<std::filesystem::path> cache_path;
  bool no_cache = false;  // ignore the cache even if the environment sets one
  unsigned workers = 0;   // 0 = auto

  std::optional<std::uint64_t> n;  // classify, search, family-primes, frenicle
  std::optional<Natural> p;

  std::optional<Natural> a;  // search over a generic equation
  std::optional<Natural> b;

  std::uint64_t x_max = 0;
  std::uint64_t y_max = 0;

  bool residue_filter = true;  // search only
  std::optional<std::filesystem::path> checkpoint_path;
  bool resume_from_checkpoint = false;

  std::vector<std::uint64_t> n_values;  // sweep
  std::vector<Natural> p_list;
  std::optional<Natural> p_max;
  std::uint64_t max_power_bits = 4096;

  std::uint64_t k_max = 0;  // family-primes

  std::uint64_t max_family_exponent = 1'000'000;  // classify

  Natural max_base = 2;  // catalan
  std::uint64_t max_exp = 2;

  std::optional<Natural> max_value;  // frenicle
};

// exit codes
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kDisagree = 2;
inline constexpr int kInternalError = 3;

/// Executes one command: streams records to out, diagnostics to err, returns
/// the exit status. Results are served from the cache when an identical
/// request was stored before (records then carry "cached": true).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Default cache location from the DIOPH_CACHE environment variable.
std::optional<std::filesystem::path> env_cache_path();

/// The request serialization the cache is keyed on: the command and its
/// mathematical parameters only, never output format or worker count.
std::string canonical_request(const RunConfig& config);

}  // namespace dioph::cli
