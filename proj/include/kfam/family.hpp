#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kfam/element_set.hpp"

namespace kfam {

/// A duplicate-free collection of subsets of [n], kept sorted by numeric mask
/// order. Immutable after construction.
class Family {
 public:
  /// Empty family over [1].
  Family() : Family(1) {}
  /// Throws DomainError if n is outside [1,128] or a member is not a subset
  /// of [n]. Members are sorted and deduplicated.
  explicit Family(int n, std::vector<ElementSet> members = {});

  static Family from_lists(int n, const std::vector<std::vector<int>>& lists);

  int ground_size() const { return n_; }
  ElementSet ground_set() const { return ElementSet::range(1, n_); }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<ElementSet>& members() const { return members_; }
  const ElementSet& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Common member size, if all members have the same size. Empty families
  /// have none.
  std::optional<int> uniform_k() const { return uniform_k_; }

  bool contains(const ElementSet& s) const;

  /// Same ground set, different members.
  Family with_members(std::vector<ElementSet> members) const { return Family(n_, std::move(members)); }

  std::vector<std::vector<int>> to_lists() const;

  friend bool operator==(const Family& a, const Family& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  int n_;
  std::vector<ElementSet> members_;
  std::optional<int> uniform_k_;
};

/// Every two members share an element. Empty and one-member families are
/// intersecting (a lone empty member is too).
bool is_intersecting(const Family& f);

/// Number of members containing i. Throws DomainError for i outside [n].
std::size_t degree(const Family& f, int i);
/// Δ(F): largest degree over [n].
std::size_t max_degree(const Family& f);
/// Smallest element attaining Δ(F); 1 for an empty family.
int max_degree_element(const Family& f);
/// γ(F) = |F| - Δ(F).
std::size_t diversity(const Family& f);

/// A(Y) = { F \ Y : Y ⊆ F ∈ A }.
Family restrict_contains_strip(const Family& f, const ElementSet& y);
/// A[Y] = { F : Y ⊆ F ∈ A }.
Family restrict_contains_keep(const Family& f, const ElementSet& y);
/// A(Ȳ) = { F : F ∩ Y = ∅, F ∈ A }.
Family restrict_avoid(const Family& f, const ElementSet& y);
/// A[G] = ⋃_{G ∈ G} A[G].
Family restrict_contains_any(const Family& f, const Family& g);

/// Every member of a meets every member of b. Throws DomainError when the
/// ground sets differ.
bool are_cross_intersecting(const Family& a, const Family& b);

/// Family with element e renamed to perm[e] (perm indexed 1..n, perm[0] unused).
Family relabel(const Family& f, std::span<const int> perm);

/// A labeling π of [n] (perm[e] = π(e), index 0 unused) whose image π(F) has
/// the lexicographically least sorted member list over all permutations of
/// [n]. Exact for every n; cost grows with the automorphism group of F.
std::vector<int> canonical_labeling(const Family& f);

/// π(F) for the labeling above. Two families over the same ground set are
/// isomorphic iff their canonical forms are equal.
Family canonical_form(const Family& f);

bool is_isomorphic(const Family& a, const Family& b);

}  // namespace kfam
