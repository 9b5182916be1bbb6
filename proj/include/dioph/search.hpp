#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <vector>

#include "dioph/model.hpp"

namespace dioph {

// Finite restriction of the exponent grid: x in [0, x_max], y in [0, y_max].
struct SearchBox {
  std::uint64_t x_max = 0;
  std::uint64_t y_max = 0;
  friend bool operator==(const SearchBox&, const SearchBox&) = default;
};

struct SearchOptions {
  unsigned workers = 0;  // 0 = one per hardware thread
  bool residue_filter = true;
  // When set, progress is persisted after every finished row
  // (write-then-rename, so a crash never leaves a torn file).
  std::optional<std::filesystem::path> checkpoint_path;
};

struct Checkpoint {
  EquationInstance instance;
  SearchBox box;
  std::set<std::uint64_t> completed_rows;
  std::vector<SolutionTriple> found;
};

/// Exhaustive enumeration: every (x, y, z) in the box with
/// base1^x + base2^y = z^2, sorted by (x, y, z). Rows of constant x are
/// independent work units; output is identical for any worker count.
std::vector<SolutionTriple> enumerate(const EquationInstance& inst, const SearchBox& box,
                                      const SearchOptions& opts = {});

/// Finishes a partial run. Result is identical to enumerate from scratch.
/// Rejects checkpoints whose rows or triples are inconsistent with the box.
std::vector<SolutionTriple> resume(const Checkpoint& cp, const SearchOptions& opts = {});

/// One x-row: solutions with this x and y <= y_max, ascending y.
std::vector<SolutionTriple> enumerate_row(const EquationInstance& inst, std::uint64_t x,
                                          std::uint64_t y_max, bool residue_filter = true);

/// Quadratic-residue prefilter (mod 64 and mod 63). False means the value is
/// certainly not a square; true means the full root extraction must decide.
bool maybe_square(const Natural& s);

Checkpoint load_checkpoint(const std::filesystem::path& path);
void save_checkpoint(const Checkpoint& cp, const std::filesystem::path& path);

}  // namespace dioph
