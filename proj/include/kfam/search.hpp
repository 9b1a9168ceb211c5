#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kfam/bigint.hpp"
#include "kfam/family.hpp"

namespace kfam {

struct SearchResult {
  std::size_t optimum = 0;
  std::vector<Family> witnesses;  // canonical forms; all classes in all-optima mode
  std::uint64_t nodes_explored = 0;
  std::uint64_t pruned = 0;
};

/// c(n,k,t): the largest intersecting family of k-subsets of [n] with τ >= t.
/// Branch and bound over maximal cliques of the intersection graph on
/// C([n],k) with the first member fixed to [k]; subtrees are cut when a
/// colouring bound cannot beat the incumbent or when t-1 elements already
/// cover every remaining candidate. `order_seed` permutes the exploration
/// order. Refuses when C(n,k) > 200 or t > k.
SearchResult max_intersecting_tau(int n, int k, int t, bool all_optima = false,
                                  std::optional<std::uint64_t> order_seed = std::nullopt);

struct LemminClass {
  Family h;
  BigCount closure_size;  // |F| for F = all (k-1)-subsets of [m] meeting every member of h
  BigCount value;         // |F| + |H|
};

struct LemminResult {
  BigCount best;
  BigCount runner_up;  // best value over non-maximizing classes; 0 if none
  std::vector<Family> argmax;
  std::vector<LemminClass> classes;
};

/// Maximizes |F| + |H| over the minimal τ = 2 classes H of s-subsets of [m].
/// Refuses unless m <= 12, s <= 5, k <= 6 and m >= k+s.
LemminResult lemmin_oracle(int m, int s, int k, bool intersecting_only);

struct ShiftWitness {
  Family family;
  int i = 0, j = 0;
  std::size_t tau_before = 0, tau_after = 0;
};

/// Searches intersecting families of k-subsets of [n] for an (i,j)-shift that
/// lowers τ: first the families with at most three members, then random
/// greedy families. The returned witness is re-verified.
std::optional<ShiftWitness> find_tau_dropping_shift(int n, int k, std::uint64_t seed = 1, int random_tries = 2000);

}  // namespace kfam
