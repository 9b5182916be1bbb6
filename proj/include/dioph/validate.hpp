#pragma once

#include <cstdint>
#include <vector>

#include "dioph/classifier.hpp"
#include "dioph/search.hpp"

namespace dioph {

enum class Verdict { Agree, Disagree };

// Side-by-side comparison of the closed-form solution set with the brute
// force enumeration over one box. Disagree in either direction is a finding,
// never noise; the difference lists pin it down exactly.
struct ValidationReport {
  EquationInstance instance;
  SearchBox box;  // effective box after the power-size clamp
  std::vector<SolutionTriple> classifier_in_box;
  std::vector<SolutionTriple> oracle;
  std::vector<SolutionTriple> missing_from_classifier;
  std::vector<SolutionTriple> extra_in_classifier;
  Verdict verdict = Verdict::Agree;
};

struct ValidateOptions {
  SearchOptions search{};
  ClassifyOptions classify{};
  // y_max is clamped so base2^y never exceeds this many bits.
  std::uint64_t max_power_bits = 4096;
  unsigned workers = 0;  // sweep-level parallelism across (n, p) pairs
};

/// Projects a solution-set description onto a box: sporadic triples are
/// filtered, families instantiated at every admissible k with x <= x_max.
std::vector<SolutionTriple> restrict_to_box(const SolutionSetDescription& desc,
                                            const SearchBox& box);

/// Diffs the two (unsorted) triple lists into a report.
ValidationReport build_report(EquationInstance inst, SearchBox box,
                              std::vector<SolutionTriple> classifier_in_box,
                              std::vector<SolutionTriple> oracle);

/// Classifies (n, p), enumerates the box independently, and diffs the two.
ValidationReport cross_validate(std::uint64_t n, const Natural& p, const SearchBox& box,
                                const ValidateOptions& opts = {});

/// One report per (n, p) pair, n-major in the given order. Every p is
/// checked to be an odd prime up front; a bad one aborts the whole sweep
/// before any work starts. Pairs run in parallel, each pair single threaded.
std::vector<ValidationReport> sweep(const std::vector<std::uint64_t>& n_values,
                                    const std::vector<Natural>& primes, const SearchBox& box,
                                    const ValidateOptions& opts = {});

}  // namespace dioph
