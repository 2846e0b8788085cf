#include <array>
#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "profinito/errors.hpp"
#include "profinito/finitegroups.hpp"

using namespace profinito;

namespace {

Permutation perm(std::vector<std::uint32_t> one_based) {
  for (auto& x : one_based) --x;
  return Permutation(std::move(one_based));
}

PermGroup regular(oracle::Cayley const& c) { return oracle::regular_representation(c); }

oracle::Cayley cyclic(std::size_t n) {
  oracle::Cayley c{n, std::vector<int>(n * n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) c.mul[a * n + b] = static_cast<int>((a + b) % n);
  return c;
}

oracle::Cayley klein() {
  oracle::Cayley c{4, std::vector<int>(16)};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) c.mul[static_cast<std::size_t>(a * 4 + b)] = a ^ b;
  return c;
}

// Quaternion units 1,i,j,k with signs: element = 4*sign + unit.
oracle::Cayley quaternion() {
  // unit product table: (unit, sign)
  std::array<std::array<std::pair<int, int>, 4>, 4> const t{{
      {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
      {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
      {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
      {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
  }};
  oracle::Cayley c{8, std::vector<int>(64)};
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      auto const [u, s] = t[static_cast<std::size_t>(a % 4)][static_cast<std::size_t>(b % 4)];
      int const sign = (a / 4 + b / 4 + s) % 2;
      c.mul[static_cast<std::size_t>(a * 8 + b)] = 4 * sign + u;
    }
  }
  return c;
}

std::map<std::uint32_t, std::size_t> oracle_histogram(oracle::Cayley const& c) {
  std::map<std::uint32_t, std::size_t> h;
  for (int x = 0; x < static_cast<int>(c.n); ++x) ++h[static_cast<std::uint32_t>(c.order_of(x))];
  return h;
}

}  // namespace

TEST_CASE("Permutation basics") {
  auto const p = perm({2, 3, 1});
  CHECK(to_string(p) == "[2 3 1]");
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.pow(3).is_identity());
  CHECK(p.pow(-1) == p.inverse());
  CHECK(p.pow(4) == p);
  // Right action: (p*q)(x) = q(p(x)).
  auto const q = perm({2, 1, 3});
  CHECK((p * q)[0] == q[p[0]]);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(Permutation({0, 3}), PreconditionError);
}

TEST_CASE("elements examples") {
  CHECK(elements(PermGroup(5, {perm({2, 3, 4, 5, 1})})).size() == 5);
  auto const s3 = PermGroup(3, {perm({2, 1, 3}), perm({2, 3, 1})});
  auto const els = elements(s3);
  CHECK(els.size() == oracle::cayley_from_permutations(s3.gens(), 3).n);
  CHECK(els.size() == 6);
  CHECK(std::is_sorted(els.begin(), els.end()));
  CHECK(els.front().is_identity());
  CHECK(elements(PermGroup(4, {Permutation::identity(4)})).size() == 1);
  CHECK(elements(PermGroup(4, {})).size() == 1);
}

TEST_CASE("elements cap") {
  // S_9 has 362880 elements.
  auto const s9 = PermGroup(9, {perm({2, 1, 3, 4, 5, 6, 7, 8, 9}), perm({2, 3, 4, 5, 6, 7, 8, 9, 1})});
  CHECK_THROWS_AS((void)elements(s9, 1000), LimitExceeded);
  CHECK(order_up_to(s9, 1000) == std::nullopt);
  CHECK(order_up_to(PermGroup(3, {perm({2, 3, 1})}), 10) == 3U);
}

TEST_CASE("iso_key examples") {
  CHECK(iso_key(regular(cyclic(4))).element_order_histogram == std::map<std::uint32_t, std::size_t>{{1, 1}, {2, 1}, {4, 2}});
  CHECK(iso_key(regular(klein())).element_order_histogram == std::map<std::uint32_t, std::size_t>{{1, 1}, {2, 3}});

  auto const d4 = oracle::cayley_from_permutations({perm({2, 3, 4, 1}), perm({3, 2, 1, 4})}, 4);
  auto const q8 = quaternion();
  // Expected histograms, enumerated by the oracle.
  std::map<std::uint32_t, std::size_t> const d4_hist{{1, 1}, {2, 5}, {4, 2}};
  std::map<std::uint32_t, std::size_t> const q8_hist{{1, 1}, {2, 1}, {4, 6}};
  REQUIRE(oracle_histogram(d4) == d4_hist);
  REQUIRE(oracle_histogram(q8) == q8_hist);
  auto const kd = iso_key(regular(d4));
  auto const kq = iso_key(regular(q8));
  CHECK(kd.element_order_histogram == d4_hist);
  CHECK(kq.element_order_histogram == q8_hist);
  CHECK(kd != kq);
  // Every other field agrees for this pair.
  CHECK(kd.abelian_invariants == kq.abelian_invariants);
  CHECK(kd.abelian_invariants == AbelianInvariants{0, {2, 2}});
  CHECK(kd.center_order == 2);
  CHECK(kd.derived_order == 2);
  CHECK(kd.conj_class_sizes == std::vector<std::size_t>{1, 1, 2, 2, 2});
  // Dihedral sorts before quaternion.
  CHECK(kd < kq);
}

TEST_CASE("iso_key of S3 and abelian groups") {
  auto const s3 = iso_key(PermGroup(3, {perm({2, 1, 3}), perm({2, 3, 1})}));
  CHECK(s3.order == 6);
  CHECK(s3.center_order == 1);
  CHECK(s3.derived_order == 3);
  CHECK(s3.abelian_invariants == AbelianInvariants{0, {2}});
  CHECK(s3.conj_class_sizes == std::vector<std::size_t>{1, 2, 3});

  auto const z2z6 = iso_key(PermGroup(8, {perm({2, 1, 3, 4, 5, 6, 7, 8}), perm({1, 2, 4, 5, 6, 7, 8, 3})}));
  CHECK(z2z6.abelian_invariants == AbelianInvariants{0, {2, 6}});
  CHECK(z2z6.derived_order == 1);
  CHECK(z2z6.center_order == 12);

  auto const z8 = iso_key(regular(cyclic(8)));
  CHECK(z8.abelian_invariants == AbelianInvariants{0, {8}});
}

TEST_CASE("are_isomorphic examples") {
  CHECK_FALSE(are_isomorphic(regular(cyclic(4)), regular(klein())));

  // S3 regular representations from two different generating pairs.
  auto const a = oracle::cayley_from_permutations({perm({2, 1, 3}), perm({2, 3, 1})}, 3);
  auto const b = oracle::cayley_from_permutations({perm({2, 1, 3}), perm({1, 3, 2})}, 3);
  REQUIRE(oracle::isomorphic(a, b));
  auto const ra = PermGroup(6, {regular(a).gens()[1], regular(a).gens()[2]});
  auto const rb = PermGroup(6, {regular(b).gens()[1], regular(b).gens()[3]});
  CHECK(are_isomorphic(regular(a), regular(b)));
  CHECK(are_isomorphic(ra, rb));
  CHECK(are_isomorphic(ra, ra));

  auto const d4 = regular(oracle::cayley_from_permutations({perm({2, 3, 4, 1}), perm({3, 2, 1, 4})}, 4));
  auto const q8 = regular(quaternion());
  CHECK_FALSE(are_isomorphic(d4, q8));
  CHECK(are_isomorphic(d4, PermGroup(4, {perm({2, 3, 4, 1}), perm({3, 2, 1, 4})})));

  auto const found = find_isomorphism(CayleyTable(d4), CayleyTable(d4));
  REQUIRE(found.has_value());
  CHECK(found->size() == 8);
}

TEST_CASE("are_isomorphic cap") {
  auto const s7 = PermGroup(7, {perm({2, 1, 3, 4, 5, 6, 7}), perm({2, 3, 4, 5, 6, 7, 1})});
  CHECK_THROWS_AS((void)are_isomorphic(s7, s7), LimitExceeded);
}

TEST_CASE("property: partition of all labeled groups of order <= 8") {
  std::vector<std::size_t> const expected{1, 1, 1, 2, 1, 2, 1, 5};
  for (std::size_t n = 1; n <= 8; ++n) {
    auto const labeled = oracle::enumerate_labeled_groups(n);
    std::vector<CayleyTable> reps;
    std::vector<IsoClassKey> rep_keys;
    for (auto const& g : labeled) {
      CayleyTable const t(regular(g));
      IsoClassKey const k = iso_key(t);
      bool matched = false;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        bool const iso = are_isomorphic(t, reps[i]);
        if (iso) CHECK(k == rep_keys[i]);  // key equality is implied by isomorphism
        matched = matched || iso;
      }
      if (!matched) {
        reps.push_back(t);
        rep_keys.push_back(k);
      }
    }
    INFO("order " << n);
    CHECK(reps.size() == expected[n - 1]);
    // Symmetry on the representatives.
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j) CHECK(are_isomorphic(reps[i], reps[j]) == (i == j));
  }
}

TEST_CASE("property: element count divides degree factorial") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t const d = 2 + static_cast<std::size_t>(trial % 5);
    std::vector<std::uint32_t> a(d);
    std::vector<std::uint32_t> b(d);
    std::iota(a.begin(), a.end(), 0U);
    std::iota(b.begin(), b.end(), 0U);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    auto const n = elements(PermGroup(d, {Permutation(a), Permutation(b)})).size();
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= d; ++i) fact *= i;
    CHECK(fact % n == 0);
  }
}
