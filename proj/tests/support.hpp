#pragma once

// Brute-force oracles and random generators shared by the test suites. The
// oracles work on plain 64-bit masks and never call the library algorithms
// they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "kfam/cover.hpp"
#include "kfam/family.hpp"
#include "kfam/formula.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline std::vector<Mask> masks(const kfam::Family& f) {
  std::vector<Mask> out;
  for (const auto& m : f) out.push_back(m.word(0));
  return out;
}

inline int popcount(Mask m) { return __builtin_popcountll(m); }

inline std::uint64_t choose(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline bool hits_all(const std::vector<Mask>& f, Mask c) {
  return std::all_of(f.begin(), f.end(), [&](Mask m) { return (m & c) != 0; });
}

/// Smallest t such that some t-subset of [n] meets every member, by scanning
/// all 2^n subsets.
inline int tau(const std::vector<Mask>& f, int n) {
  int best = n + 1;
  for (Mask c = 0; c < (Mask{1} << n); ++c)
    if (popcount(c) < best && hits_all(f, c)) best = popcount(c);
  return best;
}

inline std::uint64_t hitcount(const std::vector<Mask>& f, int n, int t) {
  std::uint64_t count = 0;
  for (Mask c = 0; c < (Mask{1} << n); ++c)
    if (popcount(c) == t && hits_all(f, c)) ++count;
  return count;
}

/// Number of r-subsets of [n] meeting every member.
inline std::uint64_t closure_count(const std::vector<Mask>& h, int n, int r) { return hitcount(h, n, r); }

inline bool intersecting(const std::vector<Mask>& f) {
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = a + 1; b < f.size(); ++b)
      if ((f[a] & f[b]) == 0) return false;
  return true;
}

inline Mask permute(Mask m, const std::vector<int>& perm) {
  Mask out = 0;
  for (int e = 0; e < static_cast<int>(perm.size()); ++e)
    if (m >> e & 1U) out |= Mask{1} << perm[e];
  return out;
}

/// Least sorted mask list over all n! relabelings.
inline std::vector<Mask> canonical(const std::vector<Mask>& f, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best;
  bool first = true;
  do {
    std::vector<Mask> img;
    for (Mask m : f) img.push_back(permute(m, perm));
    std::sort(img.begin(), img.end());
    if (first || img < best) best = img;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace oracle

namespace testgen {

inline std::vector<kfam::ElementSet> all_k_sets(int n, int k) {
  std::vector<kfam::ElementSet> out;
  kfam::for_each_subset_of_size(kfam::ElementSet::range(1, n), k, [&](const kfam::ElementSet& s) { out.push_back(s); });
  return out;
}

/// Greedy intersecting k-uniform family: candidates in random order, each
/// kept when it meets everything kept so far, up to `target` members.
inline kfam::Family random_intersecting(std::mt19937_64& rng, int n, int k, std::size_t target) {
  auto pool = all_k_sets(n, k);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<kfam::ElementSet> chosen;
  for (const auto& s : pool) {
    if (chosen.size() >= target) break;
    if (std::all_of(chosen.begin(), chosen.end(), [&](const kfam::ElementSet& c) { return c.intersects(s); }))
      chosen.push_back(s);
  }
  return kfam::Family(n, chosen);
}

inline kfam::Family random_family(std::mt19937_64& rng, int n, int max_members) {
  std::vector<kfam::ElementSet> ms;
  const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_members));
  for (int i = 0; i < count; ++i) {
    kfam::ElementSet s;
    for (int e = 1; e <= n; ++e)
      if (rng() % 3 == 0) s.insert(e);
    if (s.empty()) s.insert(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
    ms.push_back(s);
  }
  return kfam::Family(n, ms);
}

inline std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  p.insert(p.begin(), 0);
  return p;
}

/// A candidate input for the switching pipeline over [n]: a minimal τ = 2
/// intersecting family `core` of k-sets (labels in [1, core.n]) relabeled into
/// [2,n], up to `extra` further sets avoiding 1, and a random share of the
/// k-sets through 1 meeting all of them. Returns a family only when it is
/// admissible: intersecting, τ = 3, diversity <= C(n-5,k-3) and element 1 of
/// maximum degree.
inline std::optional<kfam::Family> random_admissible(std::mt19937_64& rng, int n, int k, const kfam::Family& core,
                                                     int extra) {
  using kfam::ElementSet;
  std::vector<int> labels(n - 1);
  std::iota(labels.begin(), labels.end(), 2);
  std::shuffle(labels.begin(), labels.end(), rng);
  std::vector<ElementSet> avoid;
  for (const auto& m : core) {
    ElementSet img;
    m.for_each([&](int e) { img.insert(labels[e - 1]); });
    avoid.push_back(img);
  }
  auto pool = all_k_sets(n, k);
  std::shuffle(pool.begin(), pool.end(), rng);
  for (const auto& s : pool) {
    if (extra <= 0) break;
    if (s.contains(1)) continue;
    if (std::all_of(avoid.begin(), avoid.end(), [&](const ElementSet& a) { return a.intersects(s); })) {
      avoid.push_back(s);
      --extra;
    }
  }
  std::vector<ElementSet> members = avoid;
  const double keep = 0.5 + 0.5 * std::uniform_real_distribution<double>(0, 1)(rng);
  for (const auto& s : pool) {
    if (!s.contains(1)) continue;
    if (!std::all_of(avoid.begin(), avoid.end(), [&](const ElementSet& a) { return a.intersects(s); })) continue;
    if (std::uniform_real_distribution<double>(0, 1)(rng) < keep) members.push_back(s);
  }
  const kfam::Family f(n, members);
  if (!kfam::is_intersecting(f)) return std::nullopt;
  if (kfam::BigCount(kfam::diversity(f)) > kfam::binom(n - 5, k - 3)) return std::nullopt;
  if (kfam::degree(f, 1) != kfam::max_degree(f)) return std::nullopt;
  if (oracle::tau(oracle::masks(f), n) != 3) return std::nullopt;
  return f;
}

}  // namespace testgen
