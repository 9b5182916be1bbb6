#include "dioph/ntheory.hpp"

#include <array>

namespace dioph::ntheory {
namespace {

// Trial-division primes. Any composite that survives these and is below
// 101^2 must be prime.
constexpr std::array<unsigned long, 25> kSmallPrimes = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Witness set deterministic for all n < 3317044064679887385961981 (> 2^64),
// per the Sorenson-Webster bound; see also the Feitsma-Galway pseudoprime
// verification up to 2^64.
constexpr std::array<unsigned long, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};

// One Miller-Rabin round: true when a proves m composite.
// Requires m odd, m > 3, 1 < a < m - 1; d, s with m - 1 = 2^s * d, d odd.
bool witness_rejects(const mpz_class& m, const mpz_class& a, const mpz_class& d,
                     std::uint64_t s) {
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
  mpz_class m1 = m - 1;
  if (x == 1 || x == m1) return false;
  for (std::uint64_t r = 1; r < s; ++r) {
    x = (x * x) % m;
    if (x == m1) return false;
  }
  return true;
}

}  // namespace

Natural isqrt(const Natural& m) {
  if (m < 2) return m;
  const mpz_class& n = m.raw();
  // Initial guess 2^ceil(bits/2) is >= sqrt(n); Newton then descends
  // monotonically, and the first non-decreasing step is the answer.
  mpz_class x;
  mpz_ui_pow_ui(x.get_mpz_t(), 2, (mpz_sizeinbase(n.get_mpz_t(), 2) + 1) / 2);
  for (;;) {
    mpz_class y = (x + n / x) >> 1;
    if (y >= x) return Natural(x);
    x = std::move(y);
  }
}

std::optional<Natural> perfect_square_root(const Natural& m) {
  Natural r = isqrt(m);
  if (r * r == m) return r;
  return std::nullopt;
}

TwoAdicSplit two_adic_split(const Natural& m) {
  if (m.is_zero()) throw std::domain_error("two_adic_split: m must be >= 1");
  std::uint64_t v = mpz_scan1(m.raw().get_mpz_t(), 0);
  return TwoAdicSplit{v, m >> v};
}

std::optional<std::uint64_t> power_of_two_exponent(const Natural& m) {
  if (m.is_zero()) return std::nullopt;
  if (mpz_popcount(m.raw().get_mpz_t()) != 1) return std::nullopt;
  return mpz_scan1(m.raw().get_mpz_t(), 0);
}

const Natural& deterministic_primality_bound() {
  static const Natural bound = Natural::pow2(64);
  return bound;
}

Primality primality(const Natural& m, const PrimalityConfig& cfg) {
  const mpz_class& n = m.raw();
  if (n < 2) return Primality::Composite;

  for (unsigned long p : kSmallPrimes) {
    if (n == p) return Primality::Prime;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::Composite;
  }
  if (n < 101ul * 101ul) return Primality::Prime;

  // n - 1 = 2^s * d, d odd
  mpz_class d = n - 1;
  std::uint64_t s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;

  for (unsigned long w : kWitnesses) {
    if (witness_rejects(n, mpz_class(w), d, s)) return Primality::Composite;
  }
  if (m < deterministic_primality_bound()) return Primality::Prime;

  // Above the deterministic range: random bases from a fixed seed so the
  // answer is a pure function of (m, cfg).
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eed5eedul);
  mpz_class span = n - 3;  // bases in [2, n-2]
  for (unsigned i = 0; i < cfg.rounds; ++i) {
    mpz_class a = rng.get_z_range(span) + 2;
    if (witness_rejects(n, a, d, s)) return Primality::Composite;
  }
  return Primality::ProbablePrime;
}

}  // namespace dioph::ntheory
