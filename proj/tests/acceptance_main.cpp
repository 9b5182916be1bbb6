// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each check is self-contained and uses exact arithmetic only.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dioph/classifier.hpp"
#include "dioph/ntheory.hpp"
#include "dioph/records.hpp"
#include "dioph/search.hpp"
#include "dioph/validate.hpp"

using namespace dioph;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
  if (!ok) ++failures;
}

bool contains(const std::vector<SolutionTriple>& ts, const SolutionTriple& t) {
  return std::count(ts.begin(), ts.end(), t) == 1;
}

// 1. The classified solution sets match the worked instances exactly.
void criterion_solutions() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;

  auto c23 = classify(2, 3).description;
  ok = ok && c23.sporadic.size() == 2 && contains(c23.sporadic, SolutionTriple{1, 2, 5}) &&
       contains(c23.sporadic, SolutionTriple{0, 1, 2});

  auto c317 = classify(3, 17).description;
  ok = ok && c317.sporadic.size() == 1 && contains(c317.sporadic, SolutionTriple{1, 1, 9});

  auto c13 = classify(1, 3).description;
  ok = ok && contains(c13.sporadic, SolutionTriple{2, 2, 5});

  for (const auto* desc : {&c23, &c317, &c13}) {
    for (const auto& t : desc->sporadic) ok = ok && verify_triple(desc->instance, t);
  }
  ok = ok && Natural(16) + 9 == 25 && Natural(1) + 3 == 4 && Natural(64) + 17 == 81;

  const auto elapsed = std::chrono::steady_clock::now() - start;
  const bool fast = elapsed < std::chrono::seconds(1);
  report(1, ok && fast,
         "classified solution sets match the worked instances, substitution exact, under 1 s");
}

// 2. Classifier and oracle agree on every (n, p) pair of the headline grid.
void criterion_sweep() {
  std::vector<Natural> primes;
  for (unsigned long c = 3; c <= 257; c += 2) {
    if (ntheory::is_prime(c)) primes.push_back(c);
  }
  auto reports = sweep({1, 2, 3, 4}, primes, SearchBox{6, 12});
  std::size_t agreed = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Agree) ++agreed;
  }
  std::ostringstream what;
  what << "sweep n in {1..4}, odd p <= 257, box x <= 6, y <= 12: " << agreed << "/"
       << reports.size() << " pairs agree";
  report(2, agreed == reports.size() && reports.size() == 4 * primes.size(), what.str());
}

// 3. The generic 2^x + 5^y = z^2 box reproduces its known solution set.
void criterion_two_five() {
  auto found = enumerate(EquationInstance::generic(2, 5), SearchBox{10, 10});
  const bool ok = found.size() == 2 && found[0] == SolutionTriple{2, 1, 3} &&
                  found[1] == SolutionTriple{3, 0, 3};
  report(3, ok, "2^x + 5^y = z^2 has exactly (2,1,3) and (3,0,3) in the box");
}

// 4. The consecutive-power search finds only 3^2 - 2^3 = 1.
void criterion_consecutive_powers() {
  auto hits = catalan_box_search(CatalanBox{30, 30, 12, 12});
  const bool ok = hits.size() == 1 && hits[0] == CatalanWitness{3, 2, 2, 3};
  report(4, ok, "a^x - b^y = 1 with bases <= 30, exponents in [2,12]: only 3^2 - 2^3");
}

// 5. x^2 - 1 = p^e stays unsolvable for e >= 2 at every tested scale.
void criterion_square_minus_one() {
  bool ok = true;
  const Natural bound = Natural::pow(10, 12);
  for (unsigned long p = 3; p <= 97; p += 2) {
    if (!ntheory::is_prime(p)) continue;
    ok = ok && frenicle_box_search(p, bound).empty();
  }
  report(5, ok, "x^2 - 1 = p^e empty for every odd prime p <= 97 up to 10^12");
}

// 6. The family-prime structure: n = 2 kills every k >= 1, and across
// n <= 6 the prime candidates are exactly the five known ones.
void criterion_family_primes() {
  bool ok = true;
  for (const auto& row : family_prime_scan(2, 12)) {
    if (row.k >= 1) ok = ok && !row.is_prime;
  }
  const std::set<std::uint64_t> prime_exponents{1, 2, 4, 8, 16};
  for (std::uint64_t n = 1; n <= 6; ++n) {
    for (std::uint64_t k = 0; n * k + 1 <= 16; ++k) {
      const std::uint64_t m = n * k + 1;
      const bool expected = prime_exponents.count(m) != 0;
      ok = ok && ntheory::is_prime(family_prime_candidate(n, k)) == expected;
    }
  }
  report(6, ok, "1 + 2^(nk+1) prime exactly when nk+1 is in {1,2,4,8,16}; n = 2 all composite");
}

// 7. A family member beyond machine words still verifies exactly.
void criterion_large_member() {
  const auto t = instantiate_family(SolutionFamily{3, 65537}, 5);
  const bool ok = t == SolutionTriple{5, 1, 32769} &&
                  Natural::pow2(30) + 65537 == square(Natural(32769)) &&
                  verify_triple(EquationInstance::family_four_n(3, 65537), t);
  report(7, ok, "family member at n = 3, k = 5 is (5,1,32769) and 2^30 + 65537 = 32769^2");
}

// 8. Property suites: isqrt sandwich, worker-count determinism, resume.
void criterion_properties() {
  bool ok = true;

  std::mt19937_64 rng(0x5eed);
  for (int i = 0; i < 10000; ++i) {
    Natural m = rng();
    if (i % 3 == 0) m = m * Natural(rng());
    if (i % 5 == 0) m = square(m);
    const Natural r = ntheory::isqrt(m);
    ok = ok && square(r) <= m && m < square(r + 1);
    const auto root = ntheory::perfect_square_root(m);
    ok = ok && root.has_value() == (square(r) == m);
  }

  const auto inst = EquationInstance::family_four_n(1, 3);
  const SearchBox box{12, 12};
  std::string baseline;
  for (unsigned workers : {1u, 2u, 8u}) {
    SearchOptions opts;
    opts.workers = workers;
    std::string serialized;
    for (const auto& t : enumerate(inst, box, opts)) {
      serialized += records::triple_to_json(t).dump() + "\n";
    }
    if (baseline.empty()) baseline = serialized;
    ok = ok && serialized == baseline && !serialized.empty();
  }

  const auto full = enumerate(inst, box);
  for (int trial = 0; trial < 20; ++trial) {
    Checkpoint cp{inst, box, {}, {}};
    for (std::uint64_t x = 0; x <= box.x_max; ++x) {
      if (rng() % 2 == 0) continue;
      cp.completed_rows.insert(x);
      auto row = enumerate_row(inst, x, box.y_max);
      cp.found.insert(cp.found.end(), row.begin(), row.end());
    }
    ok = ok && resume(cp) == full;
  }

  report(8, ok,
         "10^4 isqrt sandwiches, byte-identical output for 1/2/8 workers, 20 resumes equal");
}

}  // namespace

int main() {
  criterion_solutions();
  criterion_sweep();
  criterion_two_five();
  criterion_consecutive_powers();
  criterion_square_minus_one();
  criterion_family_primes();
  criterion_large_member();
  criterion_properties();
  if (failures != 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
