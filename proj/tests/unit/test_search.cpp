#include "doctest.h"

#include <set>

#include "kfam/constructions.hpp"
#include "kfam/cover.hpp"
#include "kfam/errors.hpp"
#include "kfam/formula.hpp"
#include "kfam/search.hpp"
#include "kfam/transforms.hpp"
#include "support.hpp"

using namespace kfam;

namespace {

// c(n,k,t) and its optimal isomorphism classes by scanning every subfamily
// of k-subsets. Only feasible for C(n,k) <= 20.
struct OracleResult {
  std::size_t best = 0;
  std::set<std::vector<oracle::Mask>> classes;
};

OracleResult cnkt_oracle(int n, int k, int t) {
  std::vector<oracle::Mask> sets;
  for (oracle::Mask x = 0; x < (oracle::Mask{1} << n); ++x)
    if (oracle::popcount(x) == k) sets.push_back(x);
  const int v = static_cast<int>(sets.size());
  OracleResult out;
  for (std::uint32_t pick = 0; pick < (1U << v); ++pick) {
    std::vector<oracle::Mask> f;
    for (int i = 0; i < v; ++i)
      if (pick >> i & 1U) f.push_back(sets[i]);
    if (f.size() < out.best || !oracle::intersecting(f) || oracle::tau(f, n) < t) continue;
    if (f.size() > out.best) {
      out.best = f.size();
      out.classes.clear();
    }
    out.classes.insert(oracle::canonical(f, n));
  }
  return out;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("c(n,k,t) agrees with exhaustive subfamily search") {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {6, 3}}) {
    for (int t = 1; t <= k; ++t) {
      CAPTURE(n);
      CAPTURE(t);
      const OracleResult want = cnkt_oracle(n, k, t);
      CHECK(max_intersecting_tau(n, k, t).optimum == want.best);
      std::set<std::vector<oracle::Mask>> got;
      for (const auto& w : max_intersecting_tau(n, k, t, true).witnesses) got.insert(oracle::canonical(oracle::masks(w), n));
      CHECK(got == want.classes);
    }
  }
}

TEST_CASE("known values of c(n,3,t)") {
  const std::map<std::pair<int, int>, std::size_t> expect{
      {{7, 1}, 15}, {{7, 2}, 13}, {{7, 3}, 10}, {{8, 1}, 21}, {{8, 2}, 16}, {{8, 3}, 10}, {{9, 3}, 10}};
  for (const auto& [key, value] : expect) {
    const SearchResult r = max_intersecting_tau(key.first, 3, key.second);
    CHECK(r.optimum == value);
    REQUIRE_FALSE(r.witnesses.empty());
    for (const auto& w : r.witnesses) {
      CHECK(w.size() == value);
      CHECK(is_intersecting(w));
      CHECK(covering_number(w).tau >= static_cast<std::size_t>(key.second));
    }
  }
  CHECK(max_intersecting_tau(8, 4, 3).optimum == 35);
}

TEST_CASE("all optima and schedule independence") {
  const SearchResult all = max_intersecting_tau(7, 3, 3, true);
  CHECK(all.optimum == 10);
  CHECK(all.witnesses.size() == 7);
  for (const auto& w : all.witnesses) CHECK(canonical_form(w) == w);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CHECK(max_intersecting_tau(7, 3, 3, false, seed).optimum == 10);
    const SearchResult again = max_intersecting_tau(7, 3, 3, true, seed);
    CHECK(again.witnesses == all.witnesses);
  }
}

TEST_CASE("c(n,k,t) is non-increasing in t") {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{7, 3}, {8, 3}, {9, 3}, {8, 4}}) {
    std::size_t prev = SIZE_MAX;
    for (int t = 1; t <= k; ++t) {
      const std::size_t v = max_intersecting_tau(n, k, t).optimum;
      CHECK(v <= prev);
      prev = v;
    }
  }
}

TEST_CASE("search refusals") {
  CHECK_THROWS_AS(max_intersecting_tau(12, 3, 2), RefusalError);
  CHECK_THROWS_AS(max_intersecting_tau(7, 3, 4), RefusalError);
}

TEST_CASE("greedy saturation never lowers tau") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 3;
    const int n = 7 + static_cast<int>(rng() % 3);
    Family f = testgen::random_intersecting(rng, n, k, 1 + rng() % 8);
    const std::size_t before = covering_number(f).tau;
    auto pool = testgen::all_k_sets(n, k);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<ElementSet> ms = f.members();
    for (const auto& s : pool)
      if (std::all_of(ms.begin(), ms.end(), [&](const ElementSet& m) { return m.intersects(s); })) ms.push_back(s);
    const Family sat(n, ms);
    CHECK(is_intersecting(sat));
    CHECK(covering_number(sat).tau >= before);
    for (const auto& s : pool)
      if (!sat.contains(s))
        CHECK_FALSE(std::all_of(ms.begin(), ms.end(), [&](const ElementSet& m) { return m.intersects(s); }));
  }
}

TEST_CASE("lemmin oracle") {
  // Non-intersecting classes: T2'(s) wins uniquely and the value is f(2)+2.
  for (int s = 3; s <= 4; ++s)
    for (int k = 4; k <= 5; ++k) {
      const int m = k + s;
      const LemminResult r = lemmin_oracle(m, s, k, false);
      REQUIRE(r.argmax.size() == 1);
      CHECK(r.argmax[0] == canonical_form(t2prime(s, m)));
      CHECK(r.best == f_of_z(m, s, k, 2) + 2);
      CHECK(r.best > r.runner_up);
    }
  const LemminResult r = lemmin_oracle(8, 4, 4, true);
  REQUIRE(r.argmax.size() == 1);
  CHECK(r.argmax[0] == canonical_form(t2(4, 8)));
  CHECK(r.best == f_of_z(8, 4, 4, 3) + 3);
  CHECK(r.best > r.runner_up);
  for (const auto& c : r.classes) CHECK(c.value == c.closure_size + BigCount(c.h.size()));
  CHECK_THROWS_AS(lemmin_oracle(13, 4, 4, true), RefusalError);
  CHECK_THROWS_AS(lemmin_oracle(7, 4, 4, true), RefusalError);
}

TEST_CASE("a shift can lower tau") {
  const auto w = find_tau_dropping_shift(7, 3);
  REQUIRE(w);
  CHECK(is_intersecting(w->family));
  CHECK(covering_number(w->family).tau == w->tau_before);
  CHECK(covering_number(shift_family(w->family, w->i, w->j)).tau == w->tau_after);
  CHECK(w->tau_after < w->tau_before);
  // A full star has τ = 1 and no shift can go lower.
  const Family star = full_star(7, 3, 1);
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) CHECK(covering_number(shift_family(star, i, j)).tau == 1);
}

}  // TEST_SUITE
