#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kfam/cover.hpp"
#include "kfam/family.hpp"

namespace kfam {

/// S_ij(A): replace j by i when j ∈ A and i ∉ A.
ElementSet shift_set(const ElementSet& a, int i, int j);

/// S_ij(F) = {S_ij(A)} ∪ {A : A, S_ij(A) ∈ F}. Requires 1 <= i < j <= n.
Family shift_family(const Family& f, int i, int j);

enum class SwitchStage { PerElement, Transversal, ExtendedTransversal, Shift };

const char* to_string(SwitchStage s);

/// Bookkeeping for the switching pipeline. The members of `m.subfamily` avoid
/// `pivot` and lie in the current family.
struct SwitchContext {
  int pivot = 0;
  Representatives m;
  SwitchStage stage = SwitchStage::PerElement;
};

/// One exchange: the A-part (sets through the pivot) and B-part (sets avoiding
/// it) before and after.
struct ExchangeStep {
  SwitchStage stage = SwitchStage::PerElement;
  ElementSet index_set;  // {i} for PerElement, I for transversal stages, {i,j} for Shift
  ElementSet fixed;      // prefix [2,i-1] or I' / I''
  std::size_t size_before = 0, size_after = 0;
  std::size_t a_before = 0, a_after = 0, b_before = 0, b_after = 0;
};

struct ExchangeOutcome {
  Family family;
  ExchangeStep step;
};

/// The G_i exchange with relabel-free bookkeeping: `prefix` plays the role of
/// [2,i-1] and `i` is the next representative. A = sets through the pivot whose
/// trace on prefix ∪ {i} is {i}; B = sets avoiding the pivot whose trace is the
/// prefix. A becomes {pivot, i} ∪ every (k-2)-set outside pivot ∪ prefix ∪ {i}
/// meeting `m`; B becomes {m}.
/// Throws RefusalError when the cross-intersecting hypothesis on |B| fails or
/// when the result would be smaller or not intersecting.
ExchangeOutcome exchange_Gi(const Family& f, const SwitchContext& ctx, int i, const ElementSet& prefix,
                            const ElementSet& m);

/// The G(t,I) exchange: `fixed` is I' (or I'' for the extended stage).
/// A = sets through the pivot containing I and avoiding `fixed`; B = sets
/// avoiding the pivot containing `fixed` and avoiding I. A becomes every
/// such k-set, B becomes empty. Requires |fixed| >= |I| + 1.
ExchangeOutcome exchange_transversal(const Family& f, const SwitchContext& ctx, const ElementSet& i_set,
                                     const ElementSet& fixed);

struct SwitchResult {
  Family family;
  bool completed = false;  // F''(p̄) equals the minimal subfamily and τ = 3
  std::string diagnostic;  // set whenever completed is false
  int pivot = 0;
  Family minimal;  // final M
  std::vector<ExchangeStep> trace;
  std::uint64_t passes = 0;
};

/// Transforms F (intersecting, k-uniform, τ = 3, diversity <= C(n-5,k-3)) into
/// a family whose sets avoiding the pivot form a minimal τ = 2 family, never
/// decreasing the size. Throws RefusalError if the preconditions fail; a
/// failure during the run is reported through `diagnostic`.
SwitchResult switch_pipeline(const Family& f);

}  // namespace kfam
