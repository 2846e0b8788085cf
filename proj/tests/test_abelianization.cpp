#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "profinito/abelianization.hpp"
#include "profinito/bs.hpp"

using namespace profinito;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::vector<long> v) {
  std::vector<BigInt> e(v.begin(), v.end());
  return IntMatrix(r, c, e);
}

std::vector<BigInt> big(std::vector<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("smith_normal_form examples") {
  // Expected (1, 6): determinantal divisors of diag(2,3) are gcd(2,3)=1 and 6.
  auto const diag = mat(2, 2, {2, 0, 0, 3});
  CHECK(oracle::determinantal_divisors(diag) == big({1, 6}));
  auto const s1 = smith_normal_form(diag);
  CHECK(s1.factors == big({1, 6}));
  CHECK(s1.free_rank == 0);

  auto const s2 = smith_normal_form(IntMatrix(1, 2));
  CHECK(s2.factors.empty());
  CHECK(s2.free_rank == 2);

  // [m - n, 0] for m = 2, n = -2.
  auto const s3 = smith_normal_form(mat(1, 2, {4, 0}));
  CHECK(s3.factors == big({4}));
  CHECK(s3.free_rank == 1);
}

TEST_CASE("smith_normal_form on empty and degenerate shapes") {
  CHECK(smith_normal_form(IntMatrix(0, 3)).free_rank == 3);
  CHECK(smith_normal_form(IntMatrix(2, 0)).free_rank == 0);
  auto const s = smith_normal_form(mat(3, 1, {6, -4, 10}));
  CHECK(s.factors == big({2}));
  CHECK(s.free_rank == 0);
}

TEST_CASE("abelianize examples") {
  CHECK(abelianize(bs_presentation(BSParams(2, 2))) == AbelianInvariants{2, {}});
  CHECK(abelianize(bs_presentation(BSParams(3, -3))) == AbelianInvariants{1, {6}});
  CHECK(abelianize(bs_presentation(BSParams(1, 2))) == AbelianInvariants{1, {}});
  CHECK(abelianize(parse_presentation("< a | a^6 >")) == AbelianInvariants{0, {6}});
  CHECK(abelianize(parse_presentation("< a, b | a^2, b^4 >")) == AbelianInvariants{0, {2, 4}});
  CHECK(abelianize(parse_presentation("< a, b | a^2, b^3 >")) == AbelianInvariants{0, {6}});
  CHECK(abelianize(parse_presentation("< a, b | a^2, b^3, a b a b >")) == AbelianInvariants{0, {2}});
}

TEST_CASE("to_string of invariants") {
  CHECK(to_string(AbelianInvariants{1, {4}}) == "Z x Z4");
  CHECK(to_string(AbelianInvariants{2, {}}) == "Z^2");
  CHECK(to_string(AbelianInvariants{0, {6}}) == "Z6");
  CHECK(to_string(AbelianInvariants{0, {}}) == "0");
}

TEST_CASE("arbitrary precision: entries beyond 64 bits") {
  BigInt const huge = BigInt(1) << 100;
  IntMatrix m(1, 1, {huge});
  auto const s = smith_normal_form(m);
  CHECK(s.factors == std::vector<BigInt>{huge});
  CHECK_THROWS_AS((void)to_invariants(s), OverflowError);
}

TEST_CASE("property: SNF matches determinantal divisors on random matrices") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> val(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t const r = static_cast<std::size_t>(dim(rng));
    std::size_t const c = static_cast<std::size_t>(dim(rng));
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = val(rng);

    auto const snf = smith_normal_form(a);
    auto const dd = oracle::determinantal_divisors(a);
    REQUIRE(snf.factors.size() == dd.size());
    CHECK(snf.free_rank == c - dd.size());
    BigInt prod = 1;
    for (std::size_t k = 0; k < dd.size(); ++k) {
      CHECK(snf.factors[k] >= 1);
      if (k > 0) CHECK(snf.factors[k] % snf.factors[k - 1] == 0);
      prod *= snf.factors[k];
      CHECK(prod == dd[k]);
    }

    // Invariance under transposition (same nonzero factors) and row swaps.
    auto const t = smith_normal_form(a.transposed());
    CHECK(t.factors == snf.factors);
    IntMatrix swapped = a;
    for (std::size_t j = 0; j < c; ++j) std::swap(swapped(0, j), swapped(r - 1, j));
    CHECK(smith_normal_form(swapped).factors == snf.factors);
  }
}
