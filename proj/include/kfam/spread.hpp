#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kfam/bigint.hpp"
#include "kfam/family.hpp"

namespace kfam {

struct SpreadCheck {
  bool spread = true;
  std::optional<ElementSet> violator;  // first in size-then-lex order
};

/// |F(X)| <= r^{-|X|} |F| for every X, in exact arithmetic. Only subsets of
/// members need checking. Throws DomainError for r < 1.
SpreadCheck is_r_spread(const Family& f, const BigRatio& r);

struct SpreadRestriction {
  ElementSet x;
  Family restricted;  // G(X)
};

/// For k-uniform G with |G| > r^k: the largest violating X (lexicographically
/// first among ties; ∅ when nothing else violates), so G(X) is r-spread and
/// |X| < k. Throws RefusalError when |G| <= r^k or G is not uniform.
SpreadRestriction find_spread_restriction(const Family& g, const BigRatio& r);

using ReductionLog = std::vector<std::pair<ElementSet, ElementSet>>;

/// Shrinks members of an intersecting family one element at a time while the
/// family stays intersecting, then drops supersets. Default schedule: members
/// largest first, largest label removed first, repeated to a fixed point. A
/// seed shuffles both orders. Throws DomainError if F is not intersecting.
Family maximal_reduction(const Family& f, std::optional<std::uint64_t> seed = std::nullopt,
                         ReductionLog* log = nullptr);

/// No member has a proper subset that keeps the family intersecting, and no
/// member contains another.
bool is_maximal_intersecting(const Family& g);

struct PeelTrace {
  int k = 0;
  std::map<int, Family> residues;  // T_i for i = k..1
  std::map<int, Family> reduced;   // T'_i for i = k..2
  std::map<int, Family> layers;    // W_i for i = k..2
  ReductionLog reduction_log;
  bool layer_bounds_hold = true;      // |W_i| <= i^i
  bool coverage_holds = true;         // F = F[T_i] ∪ ⋃_{j>i} F[W_j]
  bool t4_singleton = false;          // T_4 is a single set (k >= 4)
};

/// The peeling procedure down to i = 2. Requires F intersecting and
/// k-uniform; throws DomainError otherwise.
PeelTrace peel(const Family& f, std::optional<std::uint64_t> seed = std::nullopt);

/// F[T_i] ∪ ⋃_{j>i} F[W_j] for a trace of F.
Family peel_coverage(const Family& f, const PeelTrace& trace, int i);

struct Spread2Check {
  bool sizes_at_most_m = false;
  bool g_intersecting = false;
  bool gp_subset = false;
  bool gp_x_nonempty = false;  // the spreadness argument needs some set in G'(X)
  bool gp_x_spread = false;
  bool alpha_above_m = false;
  bool x_smaller_than_m = false;
  bool result = false;  // (G \ G[X]) ∪ {X} is intersecting
  Family constructed;

  bool preconditions() const {
    return sizes_at_most_m && g_intersecting && gp_subset && gp_x_nonempty && gp_x_spread && alpha_above_m &&
           x_smaller_than_m;
  }
};

/// Builds (G \ G[X]) ∪ {X}, tests it, and reports every precondition
/// separately. Under the preconditions the result is always true.
Spread2Check lemma_spread2_check(const Family& g, const ElementSet& x, const Family& gp, const BigRatio& alpha,
                                 int m);

}  // namespace kfam
