#pragma once

#include <cstdint>
#include <optional>

#include "dioph/natural.hpp"

namespace dioph::ntheory {

// m split as 2^valuation * odd_part.
struct TwoAdicSplit {
  std::uint64_t valuation = 0;
  Natural odd_part;
};

/// Floor square root: returns r with r^2 <= m < (r+1)^2.
/// Newton iteration on integers, descending from an over-estimate; the
/// iteration stops as soon as it fails to decrease.
Natural isqrt(const Natural& m);

/// Exact square detection: r with r^2 == m, or nullopt.
std::optional<Natural> perfect_square_root(const Natural& m);

/// Splits m >= 1 into 2-adic valuation and odd part. Throws on m == 0.
TwoAdicSplit two_adic_split(const Natural& m);

/// e with m == 2^e, or nullopt if m is not a power of two (m == 0 included).
std::optional<std::uint64_t> power_of_two_exponent(const Natural& m);

enum class Primality { Composite, Prime, ProbablePrime };

struct PrimalityConfig {
  // Rounds of random-base Miller-Rabin above the deterministic bound.
  // Error bound for a composite passing is 4^-rounds; 64 rounds give 2^-128.
  unsigned rounds = 64;
};

/// Below 2^64 the answer is exact (fixed Miller-Rabin witness set verified
/// for that range); above, composites are still exact but "prime" degrades
/// to ProbablePrime at the configured error bound.
Primality primality(const Natural& m, const PrimalityConfig& cfg = {});

inline bool is_prime(const Natural& m, const PrimalityConfig& cfg = {}) {
  return primality(m, cfg) != Primality::Composite;
}

/// Exclusive upper end of the deterministic range (2^64).
const Natural& deterministic_primality_bound();

}  // namespace dioph::ntheory
