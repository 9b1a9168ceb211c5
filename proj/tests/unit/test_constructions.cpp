#include "doctest.h"

#include "kfam/constructions.hpp"
#include "kfam/cover.hpp"
#include "kfam/errors.hpp"
#include "kfam/formula.hpp"
#include "support.hpp"

using namespace kfam;

TEST_SUITE("constructions") {

TEST_CASE("full star") {
  CHECK(full_star(5, 2, 1).size() == 4);
  CHECK(full_star(6, 3, 2).size() == 10);
  CHECK(covering_number(full_star(6, 3, 2)).tau == 1);
}

TEST_CASE("Hilton-Milner family") {
  const Family hm = hilton_milner(7, 3);
  CHECK(hm.size() == 13);
  CHECK(covering_number(hm).tau == 2);
  CHECK(is_intersecting(hm));
  for (int k = 3; k <= 5; ++k)
    for (int n = 2 * k; n <= 2 * k + 8 && binom(n, k) < 20000; ++n) {
      const Family f = hilton_milner(n, k);
      CHECK(f.size() == oracle::choose(n - 1, k - 1) - oracle::choose(n - k - 1, k - 1) + 1);
      if (n > 2 * k) CHECK(BigCount(f.size()) == hm_size(n, k));
    }
}

TEST_CASE("T2 and T2'") {
  CHECK(t2(4, 7) == Family::from_lists(7, {{1, 2, 3, 4}, {1, 5, 6, 7}, {2, 5, 6, 7}}));
  for (int k = 3; k <= 6; ++k) {
    CHECK(t2(k, 2 * k - 1).size() == 3);
    CHECK(t2prime(k, 2 * k).size() == 2);
    CHECK(covering_number(t2prime(k, 2 * k + 3)).tau == 2);
  }
  CHECK_THROWS_AS(t2(4, 6), DomainError);
  CHECK_THROWS_AS(t2prime(4, 7), DomainError);
}

TEST_CASE("cross closure") {
  CHECK(cross_closure(Family(6), 3) == complete_family(6, 3));
  CHECK(cross_closure(Family(6, {ElementSet::range(1, 6)}), 3) == complete_family(6, 3));
  // Maximality: every r-set outside the closure misses some member.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 5);
    const Family h = testgen::random_family(rng, n, 4);
    const int r = 1 + static_cast<int>(rng() % 4);
    const Family c = cross_closure(h, r);
    CHECK(c.size() == oracle::closure_count(oracle::masks(h), n, r));
    CHECK((c.empty() || are_cross_intersecting(c, h)));
    for (const auto& s : complete_family(n, r))
      if (!c.contains(s)) CHECK_FALSE(are_cross_intersecting(Family(n, {s}), h));
  }
}

TEST_CASE("C3 family") {
  CHECK(c3(10, 4).size() == 61);
  CHECK(c3_core(10, 4) == Family::from_lists(10, {{2, 3, 4, 5}, {2, 6, 7, 8}, {3, 6, 7, 8}}));
  for (int k = 3; k <= 5; ++k)
    for (int n = 2 * k + 1; n <= 12; ++n) {
      const Family f = c3(n, k);
      CHECK(is_intersecting(f));
      CHECK(covering_number(f).tau == 3);
      CHECK(canonical_form(restrict_avoid(f, {1})) == canonical_form(t2(k, n)));
      // Add-one maximality: no absent k-set keeps the family intersecting.
      for (const auto& s : complete_family(n, k)) {
        if (f.contains(s)) continue;
        const bool meets_all = std::all_of(f.begin(), f.end(), [&](const ElementSet& m) { return m.intersects(s); });
        CHECK_FALSE(meets_all);
      }
    }
  CHECK_THROWS_AS(c3(8, 4), DomainError);
}

}  // TEST_SUITE
