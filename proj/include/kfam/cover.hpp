#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "kfam/bigint.hpp"
#include "kfam/family.hpp"

namespace kfam {

/// τ of a family that contains the empty set: no cover exists.
inline constexpr std::size_t kNoCover = std::numeric_limits<std::size_t>::max();

struct CoverResult {
  std::size_t tau = 0;  ///< kNoCover when F contains ∅
  ElementSet witness_cover;
  std::uint64_t explored_nodes = 0;
};

/// Exact covering number by branch and bound. τ(∅-family) = 0.
CoverResult covering_number(const Family& f);

/// Does `cover` meet every member of f?
bool is_cover(const Family& f, const ElementSet& cover);

/// Number of t-subsets of [n] meeting every member (all covers, not only
/// minimal ones).
BigCount count_hitting_sets(const Family& f, int t);

/// A minimal τ = 2 family M = {M_1..M_z} with its representative elements:
/// reps[l] lies in every M_j except M_l.
struct Representatives {
  Family subfamily;
  std::vector<int> reps;  ///< reps[l] pairs with subfamily[l]
};

/// Elements lying in all members of m except m[l]; one set per member.
std::vector<ElementSet> representative_choices(const Family& m);

/// Greedy deletion in family order down to an inclusion-minimal subfamily with
/// τ = 2, with the smallest valid representative per member. Empty when
/// τ(F) <= 1.
std::optional<Representatives> minimal_tau2_subfamily(const Family& f);

/// τ(M) = 2 and removing any single member leaves τ <= 1.
bool is_minimal_tau2(const Family& m);

/// All isomorphism classes (canonical forms) of s-uniform families over [m]
/// with τ = 2 that are minimal for that property, optionally only the
/// intersecting ones. Refuses beyond m = 12 or s = 5.
std::vector<Family> enumerate_minimal_tau2(int m, int s, bool intersecting_only);

}  // namespace kfam
