#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "dioph/natural.hpp"
#include "dioph/ntheory.hpp"

namespace dioph {

// One member of the (4^n)^x + p^y = z^2 family: fixed by (n, p).
struct FamilyFourN {
  std::uint64_t n = 1;
  Natural p;
  friend bool operator==(const FamilyFourN&, const FamilyFourN&) = default;
};

// a^x + b^y = z^2 with arbitrary bases; the oracle's generic form.
struct GenericEquation {
  Natural a;
  Natural b;
  friend bool operator==(const GenericEquation&, const GenericEquation&) = default;
};

/// An equation instance with validated hypotheses and precomputed bases.
/// family_four_n demands n >= 1 and p an odd prime; generic demands both
/// bases >= 2.
class EquationInstance {
 public:
  static EquationInstance family_four_n(std::uint64_t n, Natural p,
                                        const ntheory::PrimalityConfig& cfg = {});
  static EquationInstance generic(Natural a, Natural b);

  bool is_family() const { return std::holds_alternative<FamilyFourN>(kind_); }
  const FamilyFourN& family() const { return std::get<FamilyFourN>(kind_); }
  const GenericEquation& generic_eq() const { return std::get<GenericEquation>(kind_); }

  const Natural& base1() const { return base1_; }  // 4^n, or a
  const Natural& base2() const { return base2_; }  // p, or b

  // True when the family prime was only probabilistically certified.
  bool prime_probabilistic() const { return prime_probabilistic_; }

  std::string describe() const;

  friend bool operator==(const EquationInstance& l, const EquationInstance& r) {
    return l.kind_ == r.kind_;
  }

 private:
  EquationInstance() = default;
  std::variant<FamilyFourN, GenericEquation> kind_;
  Natural base1_;
  Natural base2_;
  bool prime_probabilistic_ = false;
};

struct SolutionTriple {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  Natural z;

  friend bool operator==(const SolutionTriple&, const SolutionTriple&) = default;
  // lexicographic (x, y, z)
  friend std::strong_ordering operator<=>(const SolutionTriple&, const SolutionTriple&) = default;
};

/// base1^x + base2^y == z^2, checked by exact substitution.
bool verify_triple(const EquationInstance& inst, const SolutionTriple& t);

// The algebraic member (k, 1, 2^{nk}+1); satisfies the equation for
// p = 1 + 2^{nk+1} whether or not that p is prime.
SolutionTriple family_member(std::uint64_t n, std::uint64_t k);

// The prime candidate 1 + 2^{nk+1} the member above requires.
Natural family_prime_candidate(std::uint64_t n, std::uint64_t k);

/// The one-parameter solution family k -> (k, 1, 2^{nk}+1), tied to an
/// owning instance through its prime. k is admissible exactly when the
/// instance's p equals 1 + 2^{nk+1}.
struct SolutionFamily {
  std::uint64_t n = 1;
  Natural p;
  std::string parameter_name = "k";

  std::string x_of_k() const { return parameter_name; }
  std::string y_of_k() const { return "1"; }
  std::string z_of_k() const;
  std::string admissibility() const;

  bool admits(std::uint64_t k) const { return p == family_prime_candidate(n, k); }

  friend bool operator==(const SolutionFamily&, const SolutionFamily&) = default;
};

/// Instantiates f at k. Throws if k is not admissible for f's prime.
SolutionTriple instantiate_family(const SolutionFamily& f, std::uint64_t k);

enum class Completeness { CompleteByTheorem, BoxOnly };

struct SolutionSetDescription {
  EquationInstance instance;
  std::vector<SolutionTriple> sporadic;  // sorted, no duplicates, all verified
  std::vector<SolutionFamily> families;
  Completeness completeness = Completeness::BoxOnly;
  std::vector<std::string> notes;
};

/// Sorts and validates: rejects duplicate sporadic triples and any triple
/// failing substitution.
SolutionSetDescription make_description(EquationInstance instance,
                                        std::vector<SolutionTriple> sporadic,
                                        std::vector<SolutionFamily> families,
                                        Completeness completeness,
                                        std::vector<std::string> notes = {});

// ---------------------------------------------------------------------------
// Derivation certificates: replayable records of the case analysis behind a
// classified solution set.

// The exponent v in z - 2^{nx} = p^v; odd p forces v = 0.
struct FactorSplitStep {
  std::uint64_t v = 0;
};

// Use of "the only a^x - b^y = 1 with all of a,b,x,y > 1 is 3^2 - 2^3".
struct CatalanStep {
  Natural a;
  Natural b;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
};

// Use of "x^2 - 1 = p^e has no integer solution for odd prime p, e >= 2".
struct FrenicleStep {
  Natural p;
  std::uint64_t exponent = 2;
};

// The match p - 1 = 2^m behind the y = 1 family branch.
struct PowerOfTwoMatchStep {
  std::uint64_t exponent = 0;
};

struct DerivationStep {
  std::variant<FactorSplitStep, CatalanStep, FrenicleStep, PowerOfTwoMatchStep> claim;
  std::string note;
};

struct DerivationCertificate {
  std::vector<DerivationStep> steps;
};

/// Replays a certificate against the solution set it justifies. Checks each
/// step's claimed identity by exact arithmetic:
///   - every FactorSplit carries v = 0, there is one per positive-y sporadic
///     solution, and z - 2^{nx} = 1 with (z - 2^{nx})(z + 2^{nx}) = p^y;
///   - every Catalan step satisfies a^x - b^y = 1 with a, b, x, y > 1;
///   - every Frenicle step has an odd prime p and exponent >= 2;
///   - every power-of-two match has p - 1 = 2^m for the instance's p.
bool replay_certificate(const DerivationCertificate& cert,
                        const SolutionSetDescription& description);

}  // namespace dioph
