#include "doctest.h"
#include "oracles.hpp"
#include "profinito/bs.hpp"
#include "profinito/errors.hpp"
#include "profinito/toddcoxeter.hpp"

using namespace profinito;

namespace {

void check_invariants(CosetTable const& t, GroupPresentation const& pres) {
  CHECK(t.is_complete());
  CHECK(t.is_involution_consistent());
  CHECK(t.satisfies_relators(pres));
  CHECK(t.satisfies_subgroup());
  CHECK(t.standardized() == t);
}

std::vector<Word> words(GroupPresentation const& pres, std::vector<std::string> const& text) {
  std::vector<Word> out;
  for (auto const& s : text) out.push_back(parse_word(s, pres));
  return out;
}

}  // namespace

TEST_CASE("cyclic group of order 5") {
  auto const pres = parse_presentation("< a | a^5 >");
  auto const t = coset_enumerate(pres, {}, 100);
  CHECK(t.num_cosets() == 5);
  check_invariants(t, pres);
  auto const perms = permutation_action(t);
  REQUIRE(perms.size() == 1);
  // A single 5-cycle.
  CHECK(order_up_to(PermGroup(5, perms), 100) == 5U);
  for (std::uint32_t x = 0; x < 5; ++x) CHECK(perms[0][x] != x);
}

TEST_CASE("S3 presentation over the trivial subgroup") {
  auto const pres = parse_presentation("< a, b | a^2, b^3, a b a b >");
  // The oracle's brute-force closure of S3 has 6 elements, and S3 satisfies
  // these relators with a = (12), b = (123).
  auto const s3 = oracle::cayley_from_permutations(
      {Permutation({1, 0, 2}), Permutation({1, 2, 0})}, 3);
  REQUIRE(s3.n == 6);
  REQUIRE(oracle::has_epimorphism(pres, s3));
  auto const t = coset_enumerate(pres, {}, 100);
  CHECK(t.num_cosets() == 6);
  check_invariants(t, pres);
}

TEST_CASE("BS(1,2) over <a, t^2> has index 2") {
  auto const pres = bs_presentation(BSParams(1, 2));
  auto const sub = words(pres, {"a", "t^2"});
  auto const t = coset_enumerate(pres, sub, 1000);
  REQUIRE(t.num_cosets() == 2);
  check_invariants(t, pres);

  // Schreier generators u_c x u_{cx}^-1 of the stabilizer all have even
  // t-exponent, so the stabilizer lies in the kernel of t -> 1 in Z_2, and
  // equal indices force equality with that kernel.
  std::vector<Word> transversal(2);
  transversal[1] = Word({{1, 1}});
  REQUIRE(t.trace(0, transversal[1]) == 1U);
  for (std::size_t c = 0; c < 2; ++c) {
    for (std::size_t g = 0; g < 2; ++g) {
      for (int e : {1, -1}) {
        std::size_t const letter = 2 * g + (e < 0 ? 1 : 0);
        std::size_t const d = static_cast<std::size_t>(t(c, letter));
        std::vector<Syllable> s = transversal[c].syllables();
        s.push_back({g, e});
        Word const back = transversal[d].inverse();
        for (auto const& y : back.syllables()) s.push_back(y);
        Word const schreier = free_reduce(Word(s));
        CHECK(t.trace(0, schreier) == 0U);
        CHECK(schreier.exponent_sum(1) % 2 == 0);
      }
    }
  }

  auto const perms = permutation_action(t);
  CHECK(perms[0].is_identity());
  CHECK(perms[1] == Permutation({1, 0}));
}

TEST_CASE("whole group gives one coset") {
  auto const pres = bs_presentation(BSParams(2, 3));
  auto const t = coset_enumerate(pres, words(pres, {"a", "t"}), 100);
  CHECK(t.num_cosets() == 1);
  for (auto const& p : permutation_action(t)) CHECK(p.is_identity());
}

TEST_CASE("A5 and a point stabilizer") {
  auto const pres = parse_presentation("< a, b | a^2, b^3, a b a b a b a b a b >");
  auto const t = coset_enumerate(pres, {});
  CHECK(t.num_cosets() == 60);
  check_invariants(t, pres);
  auto const h = coset_enumerate(pres, words(pres, {"b"}));
  CHECK(h.num_cosets() == 20);
  check_invariants(h, pres);
}

TEST_CASE("larger enumeration with coincidences") {
  // < a, b | a^8, b^7, (ab)^2, (a^-1 b)^3 > has order 10752.
  auto const pres = parse_presentation("< a, b | a^8, b^7, a b a b, A b A b A b >");
  auto const t = coset_enumerate(pres, {});
  CHECK(t.num_cosets() == 10752);
  check_invariants(t, pres);
}

TEST_CASE("capacity exceeded is reported, not mistaken for an answer") {
  auto const free2 = parse_presentation("< a, t | >");
  try {
    (void)coset_enumerate(free2, {}, 100);
    FAIL("expected CapacityExceeded");
  } catch (CapacityExceeded const& e) {
    CHECK(e.cosets_used() == 101);
  }
  CHECK_THROWS_AS((void)coset_enumerate(bs_presentation(BSParams(1, 2)), {}, 500), CapacityExceeded);
  auto const s3 = parse_presentation("< a, b | a^2, b^3, a b a b >");
  CHECK_THROWS_AS((void)coset_enumerate(s3, {}, 3), CapacityExceeded);
  CHECK_THROWS_AS((void)coset_enumerate(s3, {}, 0), PreconditionError);
}

TEST_CASE("property: result stabilizes once capacity suffices") {
  auto const pres = parse_presentation("< a, b | a^2, b^3, a b a b a b a b a b >");
  auto const reference = coset_enumerate(pres, {});
  std::size_t successes = 0;
  for (std::size_t cap : {60U, 100U, 200U, 1000U, 100000U}) {
    try {
      auto const t = coset_enumerate(pres, {}, cap);
      CHECK(t == reference);
      ++successes;
    } catch (CapacityExceeded const&) {
      CHECK(cap < 1000);
    }
  }
  CHECK(successes >= 3);
}

TEST_CASE("determinism and dump format") {
  auto const pres = parse_presentation("< a | a^3 >");
  auto const t1 = coset_enumerate(pres, {});
  auto const t2 = coset_enumerate(pres, {});
  CHECK(t1 == t2);
  CHECK(dump(t1) == "2\t3\n3\t1\n1\t2\n");
}

TEST_CASE("permutation_action rejects incomplete tables") {
  CosetTable const partial(1, 2, {1, CosetTable::kUndefined, CosetTable::kUndefined, 0});
  CHECK_FALSE(partial.is_complete());
  CHECK_THROWS_AS((void)permutation_action(partial), PreconditionError);
  CHECK_THROWS_AS(CosetTable(1, 1, {5, 0}), PreconditionError);
}

TEST_CASE("table_from_action inverts permutation_action") {
  auto const pres = parse_presentation("< a, b | a^2, b^3, a b a b a b a b a b >");
  auto const t = coset_enumerate(pres, words(pres, {"b"}));
  CHECK(table_from_action(permutation_action(t)) == t);
}
