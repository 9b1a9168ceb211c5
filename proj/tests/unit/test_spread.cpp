#include "doctest.h"

#include "kfam/constructions.hpp"
#include "kfam/errors.hpp"
#include "kfam/spread.hpp"
#include "support.hpp"

using namespace kfam;

namespace {

// |F(X)| <= r^{-|X|} |F| checked over every X ⊆ [n] by brute force.
bool spread_oracle(const Family& f, const BigRatio& r) {
  const int n = f.ground_size();
  const auto ms = oracle::masks(f);
  for (oracle::Mask x = 1; x < (oracle::Mask{1} << n); ++x) {
    std::size_t cnt = 0;
    for (auto m : ms) cnt += (m & x) == x;
    BigRatio bound(static_cast<long long>(ms.size()));
    for (int i = 0; i < oracle::popcount(x); ++i) bound /= r;
    if (BigRatio(static_cast<long long>(cnt)) > bound) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("spread") {

TEST_CASE("r-spread examples") {
  const auto star = is_r_spread(full_star(7, 3, 4), BigRatio(3, 2));
  CHECK_FALSE(star.spread);
  REQUIRE(star.violator);
  CHECK(*star.violator == ElementSet{4});
  CHECK(is_r_spread(Family::from_lists(6, {{1, 2, 3}}), BigRatio(1)).spread);
  CHECK(is_r_spread(complete_family(6, 2), BigRatio(2)).spread);
  CHECK_THROWS_AS(is_r_spread(complete_family(6, 2), BigRatio(1, 2)), DomainError);
}

TEST_CASE("r-spread agrees with the oracle and is monotone in r") {
  std::mt19937_64 rng(61);
  const std::vector<BigRatio> rs{BigRatio(1), BigRatio(5, 4), BigRatio(3, 2), BigRatio(2), BigRatio(3)};
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const Family f = testgen::random_family(rng, n, 10);
    bool prev = true;
    for (const auto& r : rs) {
      const bool got = is_r_spread(f, r).spread;
      CHECK(got == spread_oracle(f, r));
      if (!prev) CHECK_FALSE(got);
      prev = got;
    }
  }
}

TEST_CASE("spread restriction") {
  const Family star = full_star(9, 3, 2);  // 28 > 2^3
  const auto res = find_spread_restriction(star, BigRatio(2));
  CHECK(res.x.contains(2));
  CHECK(res.x.size() < 3);
  CHECK(is_r_spread(res.restricted, BigRatio(2)).spread);
  CHECK_THROWS_AS(find_spread_restriction(Family::from_lists(5, {{1, 2}}), BigRatio(2)), RefusalError);
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = k + 3 + static_cast<int>(rng() % 4);
    const Family g = testgen::random_intersecting(rng, n, k, 40);
    const BigRatio r(3, 2);
    BigRatio rk(1);
    for (int i = 0; i < k; ++i) rk *= r;
    if (BigRatio(static_cast<long long>(g.size())) <= rk) continue;
    const auto s = find_spread_restriction(g, r);
    CHECK(s.x.size() < k);
    CHECK(spread_oracle(s.restricted, r));
  }
}

TEST_CASE("maximal reduction") {
  CHECK(maximal_reduction(full_star(7, 3, 5)) == Family::from_lists(7, {{5}}));
  const Family tri = Family::from_lists(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(maximal_reduction(tri) == tri);
  CHECK_THROWS_AS(maximal_reduction(Family::from_lists(4, {{1, 2}, {3, 4}})), DomainError);
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 6);
    const int k = 2 + static_cast<int>(rng() % 3);
    const Family f = testgen::random_intersecting(rng, n, k, 1 + rng() % 20);
    const std::optional<std::uint64_t> seed = trial % 2 ? std::optional<std::uint64_t>(rng()) : std::nullopt;
    const Family g = maximal_reduction(f, seed);
    CHECK(is_intersecting(g));
    CHECK(is_maximal_intersecting(g));
    // Antichain, coverage, and no member replaceable by a proper subset.
    for (const auto& a : g)
      for (const auto& b : g)
        if (!(a == b)) CHECK_FALSE(a.is_subset_of(b));
    for (const auto& s : f)
      CHECK(std::any_of(g.begin(), g.end(), [&](const ElementSet& m) { return m.is_subset_of(s); }));
    for (const auto& m : g)
      for_each_subset(m, [&](const ElementSet& sub) {
        if (sub == m) return;
        const bool ok = std::all_of(g.begin(), g.end(), [&](const ElementSet& o) { return o == m || o.intersects(sub); }) &&
                        !sub.empty();
        CHECK_FALSE(ok);
      });
  }
}

TEST_CASE("peeling a star") {
  const PeelTrace t = peel(full_star(8, 4, 3));
  for (const auto& [i, w] : t.layers) CHECK(w.empty());
  CHECK(t.residues.at(1) == Family::from_lists(8, {{3}}));
  CHECK(t.coverage_holds);
  CHECK(t.layer_bounds_hold);
}

TEST_CASE("peeling invariants on random families") {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 150; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const int n = std::min(12, 2 * k + 1 + static_cast<int>(rng() % 4));
    const Family f = testgen::random_intersecting(rng, n, k, 1 + rng() % 60);
    const PeelTrace t = peel(f, trial % 3 ? std::optional<std::uint64_t>(rng()) : std::nullopt);
    CHECK(t.coverage_holds);
    CHECK(t.layer_bounds_hold);
    for (int i = 1; i <= k; ++i) {
      CHECK(peel_coverage(f, t, i) == f);
      for (const auto& s : t.residues.at(i)) CHECK(s.size() <= i);
    }
    for (const auto& [i, w] : t.layers) {
      long long bound = 1;
      for (int q = 0; q < i; ++q) bound *= i;
      CHECK(static_cast<long long>(w.size()) <= bound);
      for (const auto& s : w) CHECK(s.size() == i);
    }
    for (const auto& [i, r] : t.reduced) CHECK(is_maximal_intersecting(r));
  }
}

TEST_CASE("second spread lemma check") {
  // X inside every member: the construction stays intersecting.
  const Family g = Family::from_lists(6, {{1, 2, 3}, {1, 4, 5}, {1, 2, 6}});
  const auto c = lemma_spread2_check(g, ElementSet{1}, g, BigRatio(4), 3);
  CHECK(c.result);

  std::mt19937_64 rng(65);
  int valid = 0;
  bool violated_false = false;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 3);
    const int m = 2 + static_cast<int>(rng() % 2);
    const Family gg = testgen::random_intersecting(rng, n, m, 2 + rng() % 12);
    ElementSet x;
    for (int e = 1; e <= n; ++e)
      if (rng() % 4 == 0) x.insert(e);
    const BigRatio alpha(static_cast<long long>(1 + rng() % 6), 1 + static_cast<long long>(rng() % 2));
    const auto r = lemma_spread2_check(gg, x, gg, alpha, m);
    if (r.preconditions()) {
      ++valid;
      CHECK(r.result);
    } else if (!r.alpha_above_m && !r.result) {
      violated_false = true;
    }
  }
  CHECK(valid > 0);
  CHECK(violated_false);
}

}  // TEST_SUITE
