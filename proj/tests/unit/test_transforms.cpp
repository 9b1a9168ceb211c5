#include "doctest.h"

#include "kfam/constructions.hpp"
#include "kfam/cover.hpp"
#include "kfam/errors.hpp"
#include "kfam/transforms.hpp"
#include "support.hpp"

using namespace kfam;

TEST_SUITE("transforms") {

TEST_CASE("shift examples") {
  CHECK(shift_set({2, 3}, 1, 2) == ElementSet{1, 3});
  CHECK(shift_set({1, 3}, 1, 2) == ElementSet{1, 3});
  CHECK(shift_set({3, 4}, 1, 2) == ElementSet{3, 4});
  const Family f = Family::from_lists(3, {{1, 3}, {2, 3}});
  CHECK(shift_family(f, 1, 2) == f);
  CHECK(shift_family(Family::from_lists(3, {{2, 3}}), 1, 2) == Family::from_lists(3, {{1, 3}}));
  CHECK_THROWS_AS(shift_family(f, 2, 2), DomainError);
  CHECK_THROWS_AS(shift_family(f, 2, 1), DomainError);
  CHECK_THROWS_AS(shift_family(f, 1, 4), DomainError);
}

TEST_CASE("shift against the definition on random families") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Family f = testgen::random_family(rng, n, 10);
    const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    const int j = i + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - i));
    std::vector<ElementSet> expect;
    for (const auto& a : f) {
      ElementSet s = a;
      if (a.contains(j) && !a.contains(i)) {
        s.erase(j);
        s.insert(i);
      }
      expect.push_back(f.contains(s) ? a : s);
    }
    CHECK(shift_family(f, i, j) == Family(n, expect));
    CHECK(shift_family(f, i, j).size() == f.size());
  }
}

TEST_CASE("switching leaves C3 unchanged") {
  for (int n = 9; n <= 12; ++n) {
    const Family f = c3(n, 4);
    const SwitchResult r = switch_pipeline(f);
    CAPTURE(r.diagnostic);
    CHECK(r.completed);
    CHECK(r.family == f);
    CHECK(r.pivot == 1);
    CHECK(r.minimal == c3_core(n, 4));
  }
}

TEST_CASE("switching refuses inadmissible input") {
  CHECK_THROWS_AS(switch_pipeline(t2(4, 9)), RefusalError);               // τ = 2
  CHECK_THROWS_AS(switch_pipeline(c3(7, 3)), RefusalError);               // diversity 3 > C(2,0)
  CHECK_THROWS_AS(switch_pipeline(Family::from_lists(9, {{1, 2}, {3, 4}})), RefusalError);
}

TEST_CASE("G_i exchange on a family with a stray set") {
  // C3(10,4) with its core set {3,6,7,8} traded for a stray set avoiding 1.
  const int n = 10;
  const Family base = c3(n, 4);
  const ElementSet stray{3, 5, 6, 9};
  std::vector<ElementSet> ms;
  for (const auto& s : base)
    if (!s.contains(1) || s.intersects(stray)) ms.push_back(s);
  ms.push_back(stray);
  const Family f(n, ms);
  REQUIRE(is_intersecting(f));
  const auto reps = minimal_tau2_subfamily(restrict_avoid(f, {1}));
  REQUIRE(reps);
  SwitchContext ctx{1, *reps, SwitchStage::PerElement};
  const Family& mm = reps->subfamily;
  for (std::size_t l = 0; l < mm.size(); ++l) {
    const int i = reps->reps[l];
    for (std::size_t h = 0; h < mm.size(); ++h) {
      if (mm[h].contains(i)) continue;
      try {
        const ExchangeOutcome out = exchange_Gi(f, ctx, i, ElementSet{}, mm[h]);
        CHECK(out.family.size() >= f.size());
        CHECK(is_intersecting(out.family));
        for (const auto& s : restrict_avoid(out.family, {1}))
          if (!s.contains(i)) CHECK(s == mm[h]);
      } catch (const RefusalError&) {
        // A refused exchange leaves nothing to check.
      }
    }
  }
}

TEST_CASE("switching on random admissible families with k=4") {
  std::mt19937_64 rng(52);
  std::vector<Family> cores;
  for (const auto& h : enumerate_minimal_tau2(8, 4, true)) cores.push_back(h);
  REQUIRE(!cores.empty());
  int runs = 0, completed = 0;
  for (int attempt = 0; attempt < 4000 && runs < 40; ++attempt) {
    const int n = 9 + static_cast<int>(rng() % 4);
    const Family& core = cores[rng() % cores.size()];
    const auto f = testgen::random_admissible(rng, n, 4, core, static_cast<int>(rng() % 3));
    if (!f) continue;
    ++runs;
    const SwitchResult r = switch_pipeline(*f);
    CHECK(r.family.size() >= f->size());
    CHECK(is_intersecting(r.family));
    if (r.completed) {
      ++completed;
      CHECK(covering_number(r.family).tau == 3);
      CHECK(restrict_avoid(r.family, {r.pivot}) == r.minimal);
      CHECK(is_minimal_tau2(r.minimal));
    } else {
      CHECK_FALSE(r.diagnostic.empty());
    }
    for (const auto& st : r.trace) CHECK(st.size_after >= st.size_before);
  }
  CHECK(runs == 40);
  MESSAGE("completed " << completed << " of " << runs);
}

}  // TEST_SUITE
