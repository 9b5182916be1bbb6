#include "dioph/model.hpp"

#include <algorithm>
#include <sstream>

namespace dioph {

EquationInstance EquationInstance::family_four_n(std::uint64_t n, Natural p,
                                                const ntheory::PrimalityConfig& cfg) {
  if (n == 0) throw std::invalid_argument("instance: n must be >= 1");
  if (!p.is_odd()) throw std::invalid_argument("instance: p = " + p.str() + " is even");
  auto verdict = ntheory::primality(p, cfg);
  if (verdict == ntheory::Primality::Composite)
    throw std::invalid_argument("instance: p = " + p.str() + " is not prime");
  EquationInstance inst;
  inst.kind_ = FamilyFourN{n, p};
  inst.base1_ = Natural::pow2(2 * n);  // 4^n
  inst.base2_ = std::move(p);
  inst.prime_probabilistic_ = (verdict == ntheory::Primality::ProbablePrime);
  return inst;
}

EquationInstance EquationInstance::generic(Natural a, Natural b) {
  if (a < 2 || b < 2) throw std::invalid_argument("instance: generic bases must be >= 2");
  EquationInstance inst;
  inst.kind_ = GenericEquation{a, b};
  inst.base1_ = std::move(a);
  inst.base2_ = std::move(b);
  return inst;
}

std::string EquationInstance::describe() const {
  std::ostringstream os;
  if (is_family()) {
    const auto& f = family();
    os << "(4^" << f.n << ")^x + " << f.p.str() << "^y = z^2";
  } else {
    const auto& g = generic_eq();
    os << g.a.str() << "^x + " << g.b.str() << "^y = z^2";
  }
  return os.str();
}

bool verify_triple(const EquationInstance& inst, const SolutionTriple& t) {
  return Natural::pow(inst.base1(), t.x) + Natural::pow(inst.base2(), t.y) == square(t.z);
}

SolutionTriple family_member(std::uint64_t n, std::uint64_t k) {
  return SolutionTriple{k, 1, Natural::pow2(n * k) + 1};
}

Natural family_prime_candidate(std::uint64_t n, std::uint64_t k) {
  return Natural::pow2(n * k + 1) + 1;
}

std::string SolutionFamily::z_of_k() const {
  return "2^(" + std::to_string(n) + "*" + parameter_name + ")+1";
}

std::string SolutionFamily::admissibility() const {
  return "p == 1 + 2^(" + std::to_string(n) + "*" + parameter_name + "+1)";
}

SolutionTriple instantiate_family(const SolutionFamily& f, std::uint64_t k) {
  if (!f.admits(k)) {
    throw std::invalid_argument("instantiate_family: k = " + std::to_string(k) +
                                " needs p = " + family_prime_candidate(f.n, k).str() +
                                " but the instance has p = " + f.p.str());
  }
  return family_member(f.n, k);
}

SolutionSetDescription make_description(EquationInstance instance,
                                        std::vector<SolutionTriple> sporadic,
                                        std::vector<SolutionFamily> families,
                                        Completeness completeness,
                                        std::vector<std::string> notes) {
  std::sort(sporadic.begin(), sporadic.end());
  if (std::adjacent_find(sporadic.begin(), sporadic.end()) != sporadic.end())
    throw std::logic_error("solution set: duplicate sporadic triple");
  for (const auto& t : sporadic) {
    if (!verify_triple(instance, t)) {
      throw std::logic_error("solution set: triple (" + std::to_string(t.x) + "," +
                             std::to_string(t.y) + "," + t.z.str() +
                             ") fails substitution for " + instance.describe());
    }
  }
  return SolutionSetDescription{std::move(instance), std::move(sporadic),
                                std::move(families), completeness, std::move(notes)};
}

bool replay_certificate(const DerivationCertificate& cert,
                        const SolutionSetDescription& description) {
  if (!description.instance.is_family()) return cert.steps.empty();
  const auto& fam = description.instance.family();

  std::size_t factor_splits = 0;
  for (const auto& step : cert.steps) {
    bool ok = std::visit(
        [&](const auto& claim) -> bool {
          using T = std::decay_t<decltype(claim)>;
          if constexpr (std::is_same_v<T, FactorSplitStep>) {
            ++factor_splits;
            return claim.v == 0;
          } else if constexpr (std::is_same_v<T, CatalanStep>) {
            return claim.a > 1 && claim.b > 1 && claim.x > 1 && claim.y > 1 &&
                   Natural::pow(claim.a, claim.x) ==
                       Natural::pow(claim.b, claim.y) + 1;
          } else if constexpr (std::is_same_v<T, FrenicleStep>) {
            return claim.p.is_odd() && claim.exponent >= 2 &&
                   ntheory::is_prime(claim.p);
          } else {
            static_assert(std::is_same_v<T, PowerOfTwoMatchStep>);
            return fam.p == Natural::pow2(claim.exponent) + 1;
          }
        },
        step.claim);
    if (!ok) return false;
  }

  // Each positive-y solution must be justified by a factor split, and the
  // split identity must hold: z - 2^{nx} = 1, (z - 2^{nx})(z + 2^{nx}) = p^y.
  std::size_t positive_y = 0;
  for (const auto& t : description.sporadic) {
    if (t.y == 0) continue;
    ++positive_y;
    Natural half = Natural::pow2(fam.n * t.x);
    if (t.z <= half) return false;
    Natural lo = t.z - half;
    if (lo != 1) return false;
    if (lo * (t.z + half) != Natural::pow(fam.p, t.y)) return false;
  }
  return factor_splits == positive_y;
}

}  // namespace dioph
