#include "dioph/classifier.hpp"

#include <algorithm>
#include <map>

namespace dioph {

ClassifyResult classify(std::uint64_t n, const Natural& p, const ClassifyOptions& opts) {
  // Validates n >= 1 and p an odd prime.
  EquationInstance inst = EquationInstance::family_four_n(n, p, opts.primality);

  std::vector<SolutionTriple> sporadic;
  std::vector<std::string> notes;
  DerivationCertificate cert;
  Completeness completeness = Completeness::CompleteByTheorem;

  if (inst.prime_probabilistic()) {
    notes.push_back("primality of p is probabilistic (error bound 4^-" +
                    std::to_string(opts.primality.rounds) + ")");
  }

  // (a) y >= 2: with v = 0 the split gives p^y - 2^{nx+1} = 1, and the only
  // a^x - b^y = 1 with every exponent above 1 is 3^2 - 2^3. So p = 3, y = 2,
  // nx = 2, which has a solution only when n divides 2.
  cert.steps.push_back(
      {CatalanStep{3, 2, 2, 3},
       "y >= 2 branch: p^y - 2^(nx+1) = 1 forces p = 3, y = 2, nx = 2"});
  if (p == 3 && 2 % n == 0) {
    sporadic.push_back(SolutionTriple{2 / n, 2, 5});
    cert.steps.push_back(
        {FactorSplitStep{0},
         "v = 0: p odd cannot divide both z - 2^(nx) and z + 2^(nx), whose "
         "difference is 2^(nx+1); hence z - 2^(nx) = 1 and z + 2^(nx) = p^y"});
    notes.push_back("the y = 2 sporadic solution is indexed per n: (2,2,5) at "
                    "n = 1 and (1,2,5) at n = 2 are distinct instances");
  } else if (p == 3) {
    notes.push_back("y >= 2 branch empty: nx = 2 is unreachable for n >= 3");
  }

  // (b) y = 1: p = 1 + 2^{nx+1}, so p - 1 must be an exact power of two with
  // exponent m = nk + 1 for an integral k.
  Natural p_minus_1 = p - 1;
  if (auto m = ntheory::power_of_two_exponent(p_minus_1)) {
    if (*m > opts.max_family_exponent) {
      notes.push_back("family branch unevaluated: p - 1 = 2^" + std::to_string(*m) +
                      " exceeds the exponent cap " +
                      std::to_string(opts.max_family_exponent));
      completeness = Completeness::BoxOnly;
    } else {
      cert.steps.push_back(
          {PowerOfTwoMatchStep{*m}, "p - 1 = 2^" + std::to_string(*m)});
      if ((*m - 1) % n == 0) {
        std::uint64_t k = (*m - 1) / n;
        sporadic.push_back(family_member(n, k));
        cert.steps.push_back(
            {FactorSplitStep{0},
             "v = 0 as above; z - 2^(nk) = 1 and z + 2^(nk) = p"});
        if (k == 0) {
          notes.push_back("(0,1,2) is the k = 0 family member: it covers the "
                          "x = 0, y = 1 case (1 + 3 = 4)");
        }
      } else {
        notes.push_back("no admissible k: m - 1 = " + std::to_string(*m - 1) +
                        " is not divisible by n = " + std::to_string(n));
      }
    }
  } else {
    notes.push_back("no y = 1 solution: p - 1 = " + p_minus_1.str() +
                    " is not a power of two");
  }

  // (c) y = 0: z^2 - 2^{2nx} = 1 has no solution (consecutive powers with an
  // even exponent on 2).
  notes.push_back("y = 0 branch empty: z^2 - 2^(2nx) = 1 has no solution");

  // (d) x = 0, y >= 2: z^2 - 1 = p^y is impossible for odd prime p.
  cert.steps.push_back({FrenicleStep{p, 2},
                        "x = 0, y >= 2 branch empty: z^2 - 1 = p^y has no "
                        "integer solution for odd prime p and y >= 2"});

  auto description = make_description(std::move(inst), std::move(sporadic), {},
                                      completeness, std::move(notes));
  return ClassifyResult{std::move(description), std::move(cert)};
}

std::vector<FamilyPrimeRow> family_prime_scan(std::uint64_t n, std::uint64_t k_max,
                                              const ntheory::PrimalityConfig& cfg) {
  std::vector<FamilyPrimeRow> rows;
  rows.reserve(k_max + 1);
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    Natural candidate = family_prime_candidate(n, k);
    auto verdict = ntheory::primality(candidate, cfg);
    rows.push_back(FamilyPrimeRow{k, std::move(candidate),
                                  verdict != ntheory::Primality::Composite,
                                  verdict == ntheory::Primality::ProbablePrime});
  }
  return rows;
}

std::vector<CatalanWitness> catalan_box_search(const CatalanBox& box) {
  if (box.a_max < 2 || box.b_max < 2 || box.x_max < 2 || box.y_max < 2)
    throw std::invalid_argument("catalan box: all bounds must be >= 2");

  // Index b^y by value, then walk a^x looking for a^x - 1.
  std::map<Natural, std::vector<std::pair<Natural, std::uint64_t>>> by_value;
  for (Natural b = 2; b <= box.b_max; b += 1) {
    Natural power = b * b;
    for (std::uint64_t y = 2; y <= box.y_max; ++y) {
      by_value[power].emplace_back(b, y);
      power *= b;
    }
  }

  std::vector<CatalanWitness> witnesses;
  for (Natural a = 2; a <= box.a_max; a += 1) {
    Natural power = a * a;
    for (std::uint64_t x = 2; x <= box.x_max; ++x) {
      auto it = by_value.find(power - 1);
      if (it != by_value.end()) {
        for (const auto& [b, y] : it->second)
          witnesses.push_back(CatalanWitness{a, b, x, y});
      }
      power *= a;
    }
  }
  std::sort(witnesses.begin(), witnesses.end());
  return witnesses;
}

std::vector<FrenicleHit> frenicle_box_search(const Natural& p, const Natural& max_value) {
  if (!p.is_odd() || !ntheory::is_prime(p))
    throw std::invalid_argument("frenicle: p = " + p.str() + " is not an odd prime");

  std::vector<FrenicleHit> hits;
  Natural power = p * p;
  for (std::uint64_t e = 2; power <= max_value; ++e, power *= p) {
    if (auto root = ntheory::perfect_square_root(power + 1))
      hits.push_back(FrenicleHit{*root, e});
  }
  return hits;
}

}  // namespace dioph
