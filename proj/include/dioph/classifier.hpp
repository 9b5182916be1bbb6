#pragma once

#include <cstdint>
#include <vector>

#include "dioph/model.hpp"

namespace dioph {

// Search box for a^x - b^y = 1 witnesses; the conjecture's hypotheses put
// every bound at 2 or above.
struct CatalanBox {
  Natural a_max = 2;
  Natural b_max = 2;
  std::uint64_t x_max = 2;
  std::uint64_t y_max = 2;
};

// A concrete a^x - b^y = 1 hit; only (3, 2, 2, 3) should ever appear.
struct CatalanWitness {
  Natural a;
  Natural b;
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  friend bool operator==(const CatalanWitness&, const CatalanWitness&) = default;
  friend std::strong_ordering operator<=>(const CatalanWitness&, const CatalanWitness&) = default;
};

// An x^2 - 1 = p^e hit with e >= 2; none should ever appear.
struct FrenicleHit {
  Natural x;
  std::uint64_t exponent = 0;

  friend bool operator==(const FrenicleHit&, const FrenicleHit&) = default;
};

struct ClassifyOptions {
  // Cap on the exponent m in p - 1 = 2^m. A prime beyond it (over a
  // million bits) leaves the family branch unevaluated rather than
  // materializing an absurdly large witness.
  std::uint64_t max_family_exponent = 1'000'000;
  ntheory::PrimalityConfig primality{};
};

struct ClassifyResult {
  SolutionSetDescription description;
  DerivationCertificate certificate;
};

/// The complete solution set of (4^n)^x + p^y = z^2 for odd prime p,
/// assembled from the closed-form case analysis:
///   (a) y >= 2 forces p = 3, y = 2, nx = 2, so (2/n, 2, 5) when n | 2;
///   (b) y = 1 forces p = 1 + 2^{nx+1}, so (k, 1, 2^{nk}+1) when
///       p - 1 = 2^m and k = (m-1)/n is integral;
///   (c) y = 0 never contributes;
///   (d) x = 0 with y >= 2 never contributes for odd p.
/// Rejects n = 0, even p, and composite p.
ClassifyResult classify(std::uint64_t n, const Natural& p, const ClassifyOptions& opts = {});

struct FamilyPrimeRow {
  std::uint64_t k = 0;
  Natural p;  // 1 + 2^{nk+1}
  bool is_prime = false;
  bool probabilistic = false;
};

/// Candidate family primes 1 + 2^{nk+1} for k in [0, k_max], each with its
/// primality verdict.
std::vector<FamilyPrimeRow> family_prime_scan(std::uint64_t n, std::uint64_t k_max,
                                              const ntheory::PrimalityConfig& cfg = {});

/// All a^x - b^y = 1 in the box (bases from 2, exponents from 2), sorted by
/// (a, b, x, y). Validates the box bounds.
std::vector<CatalanWitness> catalan_box_search(const CatalanBox& box);

/// All x^2 - 1 = p^e with e >= 2 and p^e <= max_value, for odd prime p.
/// Expected empty at every scale.
std::vector<FrenicleHit> frenicle_box_search(const Natural& p, const Natural& max_value);

}  // namespace dioph
