#pragma once

#include "kfam/family.hpp"

namespace kfam {

/// All k-subsets of [n] containing x.
Family full_star(int n, int k, int x);

/// {[2,k+1]} ∪ {k-sets containing 1 that meet [2,k+1]}; requires n >= 2k.
Family hilton_milner(int n, int k);

/// T₂(k) = {[k], {1}∪[k+1,2k-1], {2}∪[k+1,2k-1]} inside [ground_n].
Family t2(int k, int ground_n);

/// T₂'(s) = {[s], [s+1,2s]} inside [ground_n].
Family t2prime(int s, int ground_n);

/// All r-subsets of the ground set meeting every member of h.
Family cross_closure(const Family& h, int r);

/// The three sets of C₃(n,k) avoiding 1: [2,k+1], {2}∪[k+2,2k], {3}∪[k+2,2k].
Family c3_core(int n, int k);

/// C₃(n,k): the core above plus every k-set containing 1 that meets all three
/// core sets. Requires n > 2k.
Family c3(int n, int k);

/// Every k-subset of [n].
Family complete_family(int n, int k);

}  // namespace kfam
