#include "dioph/validate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "dioph/ntheory.hpp"

namespace dioph {

std::vector<SolutionTriple> restrict_to_box(const SolutionSetDescription& desc,
                                            const SearchBox& box) {
  std::vector<SolutionTriple> out;
  for (const auto& t : desc.sporadic) {
    if (t.x <= box.x_max && t.y <= box.y_max) out.push_back(t);
  }
  for (const auto& fam : desc.families) {
    for (std::uint64_t k = 0; k <= box.x_max; ++k) {
      if (!fam.admits(k)) continue;
      auto t = instantiate_family(fam, k);
      if (t.y <= box.y_max) out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ValidationReport build_report(EquationInstance inst, SearchBox box,
                              std::vector<SolutionTriple> classifier_in_box,
                              std::vector<SolutionTriple> oracle) {
  std::sort(classifier_in_box.begin(), classifier_in_box.end());
  std::sort(oracle.begin(), oracle.end());

  ValidationReport report{std::move(inst), box, std::move(classifier_in_box),
                          std::move(oracle),  {},  {},
                          Verdict::Agree};
  std::set_difference(report.oracle.begin(), report.oracle.end(),
                      report.classifier_in_box.begin(), report.classifier_in_box.end(),
                      std::back_inserter(report.missing_from_classifier));
  std::set_difference(report.classifier_in_box.begin(), report.classifier_in_box.end(),
                      report.oracle.begin(), report.oracle.end(),
                      std::back_inserter(report.extra_in_classifier));
  if (!report.missing_from_classifier.empty() || !report.extra_in_classifier.empty()) {
    report.verdict = Verdict::Disagree;
  }
  return report;
}

namespace {

// Largest y_max whose power base2^y_max stays within the bit budget.
SearchBox clamp_box(const SearchBox& box, const Natural& base2, std::uint64_t max_power_bits) {
  std::uint64_t y_max = box.y_max;
  while (y_max > 0 && Natural::pow(base2, y_max).bit_length() > max_power_bits) --y_max;
  return SearchBox{box.x_max, y_max};
}

}  // namespace

ValidationReport cross_validate(std::uint64_t n, const Natural& p, const SearchBox& box,
                                const ValidateOptions& opts) {
  auto result = classify(n, p, opts.classify);
  const auto& inst = result.description.instance;
  const SearchBox effective = clamp_box(box, inst.base2(), opts.max_power_bits);
  auto predicted = restrict_to_box(result.description, effective);
  auto oracle = enumerate(inst, effective, opts.search);
  return build_report(inst, effective, std::move(predicted), std::move(oracle));
}

std::vector<ValidationReport> sweep(const std::vector<std::uint64_t>& n_values,
                                    const std::vector<Natural>& primes, const SearchBox& box,
                                    const ValidateOptions& opts) {
  for (const auto& p : primes) {
    if (!p.is_odd() || !ntheory::is_prime(p, opts.classify.primality)) {
      throw std::invalid_argument("sweep: p = " + p.str() + " is not an odd prime");
    }
  }
  for (std::uint64_t n : n_values) {
    if (n == 0) throw std::invalid_argument("sweep: n must be at least 1");
  }

  struct Pair {
    std::uint64_t n;
    Natural p;
  };
  std::vector<Pair> pairs;
  pairs.reserve(n_values.size() * primes.size());
  for (std::uint64_t n : n_values) {
    for (const auto& p : primes) pairs.push_back(Pair{n, p});
  }

  // Pairs are the unit of parallelism; the inner enumeration stays single
  // threaded so worker counts do not multiply.
  ValidateOptions pair_opts = opts;
  pair_opts.search.workers = 1;
  pair_opts.search.checkpoint_path.reset();

  std::vector<ValidationReport> reports(pairs.size(),
                                        ValidationReport{EquationInstance::generic(2, 3),
                                                         SearchBox{}, {}, {}, {}, {},
                                                         Verdict::Agree});
  unsigned workers = opts.workers != 0 ? opts.workers
                                       : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(pairs.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= pairs.size()) return;
        reports[i] = cross_validate(pairs[i].n, pairs[i].p, box, pair_opts);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  return reports;
}

}  // namespace dioph
