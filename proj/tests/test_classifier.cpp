#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "dioph/classifier.hpp"
#include "dioph/search.hpp"

using namespace dioph;

namespace {

bool has_note_containing(const SolutionSetDescription& desc, const std::string& needle) {
  return std::any_of(desc.notes.begin(), desc.notes.end(), [&](const std::string& note) {
    return note.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("classify rejects bad hypotheses") {
  CHECK_THROWS_AS(classify(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(classify(2, 9), std::invalid_argument);
  CHECK_THROWS_AS(classify(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(classify(1, 15), std::invalid_argument);
}

TEST_CASE("classify n=2 p=3") {
  auto result = classify(2, 3);
  const auto& desc = result.description;
  REQUIRE(desc.sporadic.size() == 2);
  CHECK(desc.sporadic[0] == SolutionTriple{0, 1, 2});
  CHECK(desc.sporadic[1] == SolutionTriple{1, 2, 5});
  CHECK(desc.families.empty());
  CHECK(desc.completeness == Completeness::CompleteByTheorem);
  CHECK(replay_certificate(result.certificate, desc));
}

TEST_CASE("classify n=3 p=17") {
  auto result = classify(3, 17);
  REQUIRE(result.description.sporadic.size() == 1);
  CHECK(result.description.sporadic[0] == SolutionTriple{1, 1, 9});
  CHECK(result.description.completeness == Completeness::CompleteByTheorem);
  CHECK(replay_certificate(result.certificate, result.description));
}

TEST_CASE("classify n=2 p=5 is empty") {
  // 5 - 1 = 2^2, m = 2, but (m-1) = 1 is not divisible by n = 2
  auto result = classify(2, 5);
  CHECK(result.description.sporadic.empty());
  CHECK(result.description.families.empty());
  CHECK(result.description.completeness == Completeness::CompleteByTheorem);
  CHECK(replay_certificate(result.certificate, result.description));
}

TEST_CASE("classify n=1 p=3") {
  // golden derived from the oracle: x = 0..3, y = 0..12 exhausts to exactly
  // these two, and the closed form adds nothing beyond them
  auto result = classify(1, 3);
  REQUIRE(result.description.sporadic.size() == 2);
  CHECK(result.description.sporadic[0] == SolutionTriple{0, 1, 2});
  CHECK(result.description.sporadic[1] == SolutionTriple{2, 2, 5});
  CHECK(replay_certificate(result.certificate, result.description));

  auto oracle = enumerate(EquationInstance::family_four_n(1, 3), SearchBox{6, 12});
  CHECK(oracle == result.description.sporadic);
}

TEST_CASE("classify n=1 p=5") {
  auto result = classify(1, 5);
  REQUIRE(result.description.sporadic.size() == 1);
  CHECK(result.description.sporadic[0] == SolutionTriple{1, 1, 3});  // 4 + 5 = 9
}

TEST_CASE("every classified triple passes substitution") {
  for (std::uint64_t n = 1; n <= 4; ++n) {
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 257ul, 65537ul}) {
      auto result = classify(n, p);
      for (const auto& t : result.description.sporadic) {
        CAPTURE(n);
        CAPTURE(p);
        CHECK(verify_triple(result.description.instance, t));
      }
      CHECK(replay_certificate(result.certificate, result.description));
    }
  }
}

TEST_CASE("classify covers the x = 0 member through the family branch") {
  for (std::uint64_t n : {1ull, 2ull, 7ull}) {
    auto result = classify(n, 3);
    CHECK(std::count(result.description.sporadic.begin(), result.description.sporadic.end(),
                     SolutionTriple{0, 1, 2}) == 1);
    CHECK(has_note_containing(result.description, "k = 0"));
  }
}

TEST_CASE("the y = 2 sporadic solution exists only when n divides 2") {
  const auto d1 = classify(1, 3).description;
  CHECK(std::count(d1.sporadic.begin(), d1.sporadic.end(), SolutionTriple{2, 2, 5}) == 1);
  const auto d2 = classify(2, 3).description;
  CHECK(std::count(d2.sporadic.begin(), d2.sporadic.end(), SolutionTriple{1, 2, 5}) == 1);
  for (std::uint64_t n = 3; n <= 6; ++n) {
    for (const auto& t : classify(n, 3).description.sporadic) CHECK(t.y != 2);
  }
}

TEST_CASE("exponent cap downgrades completeness instead of guessing") {
  ClassifyOptions opts;
  opts.max_family_exponent = 3;
  auto result = classify(1, 17, opts);  // 17 - 1 = 2^4, beyond the cap
  CHECK(result.description.completeness == Completeness::BoxOnly);
  CHECK(result.description.sporadic.empty());
  CHECK(has_note_containing(result.description, "unevaluated"));

  // under the cap the same instance classifies fully
  auto full = classify(1, 17);
  REQUIRE(full.description.sporadic.size() == 1);
  CHECK(full.description.sporadic[0] == SolutionTriple{3, 1, 9});  // 64 + 17 = 81
  CHECK(full.description.completeness == Completeness::CompleteByTheorem);
}

TEST_CASE("a probabilistically certified prime is flagged") {
  const Natural m89 = Natural::pow2(89) - 1;
  auto result = classify(1, m89);
  CHECK(result.description.instance.prime_probabilistic());
  CHECK(has_note_containing(result.description, "probabilistic"));
  CHECK(result.description.sporadic.empty());  // m89 - 1 is not a power of two
}

TEST_CASE("scaling coherence between n and 2n") {
  // (x, y, z) solves the 4^{2n} instance iff (2x, y, z) solves the 4^n one
  for (std::uint64_t n : {1ull, 2ull}) {
    for (unsigned long p : {3ul, 5ul, 17ul}) {
      const auto inst_n = EquationInstance::family_four_n(n, p);
      const auto inst_2n = EquationInstance::family_four_n(2 * n, p);
      auto sols_2n = enumerate(inst_2n, SearchBox{4, 10});
      auto sols_n = enumerate(inst_n, SearchBox{8, 10});
      for (const auto& t : sols_2n) {
        CHECK(std::count(sols_n.begin(), sols_n.end(),
                         SolutionTriple{2 * t.x, t.y, t.z}) == 1);
      }
      for (const auto& t : sols_n) {
        if (t.x % 2 != 0) continue;
        CHECK(std::count(sols_2n.begin(), sols_2n.end(),
                         SolutionTriple{t.x / 2, t.y, t.z}) == 1);
      }
    }
  }
}

TEST_CASE("family prime scan examples") {
  auto n3 = family_prime_scan(3, 2);
  REQUIRE(n3.size() == 3);
  CHECK(n3[0].k == 0);
  CHECK(n3[0].p == 3);
  CHECK(n3[0].is_prime);
  CHECK(n3[1].p == 17);
  CHECK(n3[1].is_prime);
  CHECK(n3[2].p == 129);
  CHECK_FALSE(n3[2].is_prime);

  auto n2 = family_prime_scan(2, 3);
  REQUIRE(n2.size() == 4);
  CHECK(n2[0].p == 3);
  CHECK(n2[0].is_prime);
  CHECK(n2[1].p == 9);
  CHECK(n2[2].p == 33);
  CHECK(n2[3].p == 129);
  CHECK_FALSE(n2[1].is_prime);
  CHECK_FALSE(n2[2].is_prime);
  CHECK_FALSE(n2[3].is_prime);

  auto n1 = family_prime_scan(1, 1);
  REQUIRE(n1.size() == 2);
  CHECK(n1[0].p == 3);
  CHECK(n1[1].p == 5);
  CHECK(n1[0].is_prime);
  CHECK(n1[1].is_prime);
}

TEST_CASE("at n = 2 every candidate beyond k = 0 is composite") {
  // 1 + 2^{2k+1} = 1 + 2*4^k is 0 mod 3 for k >= 1 (4^k = 1 mod 3)
  for (const auto& row : family_prime_scan(2, 12)) {
    if (row.k == 0) {
      CHECK(row.is_prime);
    } else {
      CAPTURE(row.k);
      CHECK_FALSE(row.is_prime);
      CHECK(row.p.mod_u(3) == 0);
    }
  }
}

TEST_CASE("consecutive-power search finds only nine minus eight") {
  auto hits = catalan_box_search(CatalanBox{30, 30, 12, 12});
  REQUIRE(hits.size() == 1);
  CHECK(hits[0] == CatalanWitness{3, 2, 2, 3});

  CHECK(catalan_box_search(CatalanBox{2, 2, 5, 5}).empty());

  auto tiny = catalan_box_search(CatalanBox{3, 3, 3, 3});
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0] == CatalanWitness{3, 2, 2, 3});

  CHECK_THROWS_AS(catalan_box_search(CatalanBox{1, 30, 12, 12}), std::invalid_argument);
  CHECK_THROWS_AS(catalan_box_search(CatalanBox{30, 30, 1, 12}), std::invalid_argument);
}

TEST_CASE("square-minus-one search stays empty") {
  CHECK(frenicle_box_search(3, Natural::pow(10, 12)).empty());
  CHECK(frenicle_box_search(7, Natural::pow(10, 12)).empty());
  CHECK(frenicle_box_search(3, 8).empty());  // 3^2 > 8, nothing to try
  CHECK_THROWS_AS(frenicle_box_search(9, 100), std::invalid_argument);
  CHECK_THROWS_AS(frenicle_box_search(2, 100), std::invalid_argument);
}
