#include "kfam/transforms.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "kfam/errors.hpp"
#include "kfam/formula.hpp"

namespace kfam {

ElementSet shift_set(const ElementSet& a, int i, int j) {
  if (!a.contains(j) || a.contains(i)) return a;
  ElementSet out = a;
  out.erase(j);
  out.insert(i);
  return out;
}

Family shift_family(const Family& f, int i, int j) {
  const int n = f.ground_size();
  if (i < 1 || j > n || i >= j)
    throw DomainError("shift needs 1 <= i < j <= n, got i=" + std::to_string(i) + ", j=" + std::to_string(j));
  std::vector<ElementSet> out;
  out.reserve(f.size());
  for (const auto& a : f) {
    const ElementSet s = shift_set(a, i, j);
    out.push_back(s != a && f.contains(s) ? a : s);
  }
  return f.with_members(std::move(out));
}

const char* to_string(SwitchStage s) {
  switch (s) {
    case SwitchStage::PerElement: return "G_i";
    case SwitchStage::Transversal: return "G(t,I)";
    case SwitchStage::ExtendedTransversal: return "G(t+1,I)";
    case SwitchStage::Shift: return "shift";
  }
  return "?";
}

namespace {

std::string diag_sets(const ElementSet& a, const ElementSet& b) { return a.to_string() + " / " + b.to_string(); }

int uniform_or_refuse(const Family& f) {
  if (!f.uniform_k()) throw RefusalError("switching needs a nonempty uniform family");
  return *f.uniform_k();
}

// Replaces the parts `a` and `b` of f by `a_new` and `b_new`, then checks that
// the size did not drop and the family stayed intersecting.
ExchangeOutcome apply_exchange(const Family& f, const std::vector<ElementSet>& a, const std::vector<ElementSet>& b,
                               std::vector<ElementSet> a_new, std::vector<ElementSet> b_new, ExchangeStep step) {
  std::vector<ElementSet> out;
  out.reserve(f.size() + a_new.size());
  std::unordered_set<ElementSet, ElementSetHash> drop(a.begin(), a.end());
  drop.insert(b.begin(), b.end());
  for (const auto& s : f)
    if (!drop.contains(s)) out.push_back(s);
  out.insert(out.end(), a_new.begin(), a_new.end());
  out.insert(out.end(), b_new.begin(), b_new.end());
  Family g = f.with_members(std::move(out));

  step.size_before = f.size();
  step.size_after = g.size();
  step.a_before = a.size();
  step.b_before = b.size();
  step.a_after = a_new.size();
  step.b_after = b_new.size();
  if (g.size() < f.size())
    throw RefusalError(std::string(to_string(step.stage)) + " exchange at " + diag_sets(step.index_set, step.fixed) +
                       " would shrink the family from " + std::to_string(f.size()) + " to " + std::to_string(g.size()));
  if (!is_intersecting(g))
    throw RefusalError(std::string(to_string(step.stage)) + " exchange at " + diag_sets(step.index_set, step.fixed) +
                       " broke the intersecting property");
  return {std::move(g), step};
}

// The cross-intersecting size hypothesis |B| <= C(ny - t, a - 1), t = b+1-a.
void check_kz_hypothesis(std::size_t b_size, long long ny, long long a, long long b, const ExchangeStep& step) {
  if (b_size == 0) return;
  // b = 0: the only possible B-set is the fixed part itself, and A-sets
  // avoid it, so |A| + |B| <= 1 holds with no hypothesis.
  if (b == 0 && b_size == 1) return;
  const bool applicable = a > 0 && b > 0 && ny > a + b;
  if (!applicable || BigCount(b_size) > kz_hypothesis_cap(ny, a, b))
    throw RefusalError(std::string(to_string(step.stage)) + " exchange at " + diag_sets(step.index_set, step.fixed) +
                       ": |B| = " + std::to_string(b_size) + " violates the cross-intersecting hypothesis (a=" +
                       std::to_string(a) + ", b=" + std::to_string(b) + ", ground=" + std::to_string(ny) + ")");
}

}  // namespace

ExchangeOutcome exchange_Gi(const Family& f, const SwitchContext& ctx, int i, const ElementSet& prefix,
                            const ElementSet& m) {
  const int k = uniform_or_refuse(f);
  const int n = f.ground_size();
  const int p = ctx.pivot;
  if (!ctx.m.subfamily.contains(m)) throw RefusalError("G_i exchange: " + m.to_string() + " is not in M");
  if (m.contains(i) || !prefix.is_subset_of(m)) throw RefusalError("G_i exchange: M must contain the prefix and avoid i");
  if (BigCount(restrict_avoid(f, ElementSet{p}).size()) > binom(n - 5, k - 3))
    throw RefusalError("G_i exchange: |F(p̄)| exceeds C(n-5,k-3)");

  ElementSet window = prefix;
  window.insert(i);
  const ElementSet just_i{i};

  std::vector<ElementSet> a, b;
  for (const auto& s : f) {
    if (s.contains(p)) {
      if (((s - ElementSet{p}) & window) == just_i) a.push_back(s);
    } else if ((s & window) == prefix) {
      b.push_back(s);
    }
  }
  ExchangeStep step{SwitchStage::PerElement, just_i, prefix};
  const long long q = window.size();
  check_kz_hypothesis(b.size(), n - 1 - q, k - 2, k - q + 1, step);

  std::vector<ElementSet> a_new;
  ElementSet rest = f.ground_set() - window;
  rest.erase(p);
  for_each_subset_of_size(rest, k - 2, [&](ElementSet t) {
    if (!t.intersects(m)) return;
    t.insert(p);
    t.insert(i);
    a_new.push_back(t);
  });
  return apply_exchange(f, a, b, std::move(a_new), {m}, step);
}

ExchangeOutcome exchange_transversal(const Family& f, const SwitchContext& ctx, const ElementSet& i_set,
                                     const ElementSet& fixed) {
  const int k = uniform_or_refuse(f);
  const int p = ctx.pivot;
  if (fixed.size() < i_set.size() + 1)
    throw RefusalError("transversal exchange needs |fixed| >= |I| + 1, got |fixed| = " + std::to_string(fixed.size()) +
                       ", |I| = " + std::to_string(i_set.size()));
  if (i_set.intersects(fixed) || i_set.contains(p) || fixed.contains(p))
    throw RefusalError("transversal exchange needs I, the fixed set and the pivot pairwise disjoint");
  for (const auto& mm : ctx.m.subfamily)
    if (!mm.intersects(i_set)) throw RefusalError("transversal exchange: I does not hit " + mm.to_string());

  std::vector<ElementSet> a, b;
  for (const auto& s : f) {
    if (s.contains(p)) {
      if (i_set.is_subset_of(s) && !s.intersects(fixed)) a.push_back(s);
    } else if (fixed.is_subset_of(s) && !s.intersects(i_set)) {
      b.push_back(s);
    }
  }
  ExchangeStep step{ctx.stage, i_set, fixed};
  const long long a_dim = k - 1 - i_set.size();
  const long long b_dim = k - fixed.size();
  ElementSet y = f.ground_set() - fixed - i_set;
  y.erase(p);
  check_kz_hypothesis(b.size(), y.size(), a_dim, b_dim, step);

  std::vector<ElementSet> a_new;
  if (a_dim >= 0) {
    for_each_subset_of_size(y, static_cast<int>(a_dim), [&](ElementSet t) {
      t |= i_set;
      t.insert(p);
      a_new.push_back(t);
    });
  } else if (!a.empty() || !b.empty()) {
    throw RefusalError("transversal exchange: |I| exceeds k-1 with nonempty parts");
  }
  return apply_exchange(f, a, b, std::move(a_new), {}, step);
}

namespace {

class Switcher {
 public:
  explicit Switcher(const Family& f) : f_(f) {}

  SwitchResult run() {
    const int n = f_.ground_size();
    if (!f_.uniform_k()) throw RefusalError("switching needs a nonempty uniform family");
    k_ = *f_.uniform_k();
    if (n <= 2 * k_) throw RefusalError("switching needs n > 2k");
    if (!is_intersecting(f_)) throw RefusalError("switching needs an intersecting family");
    if (covering_number(f_).tau != 3) throw RefusalError("switching needs τ(F) = 3");
    if (BigCount(diversity(f_)) > binom(n - 5, k_ - 3))
      throw RefusalError("switching needs diversity <= C(n-5,k-3) = " + to_string(binom(n - 5, k_ - 3)));

    res_.pivot = max_degree_element(f_);
    ctx_.pivot = res_.pivot;
    auto m = minimal_tau2_subfamily(restrict_avoid(f_, ElementSet{ctx_.pivot}));
    if (!m) throw RefusalError("no τ = 2 subfamily avoids the pivot");
    ctx_.m = std::move(*m);

    const std::size_t z = ctx_.m.subfamily.size();
    const BigCount cap = binom(n, static_cast<long long>(z)) * z;
    try {
      while (true) {
        if (BigCount(res_.passes) >= cap) {
          fail("pass cap " + to_string(cap) + " reached without reaching the target form");
          break;
        }
        ++res_.passes;
        if (pass()) break;
      }
    } catch (const RefusalError& e) {
      fail(e.what());
    }
    res_.family = f_;
    res_.minimal = ctx_.m.subfamily;
    if (res_.completed) {
      const auto tau = covering_number(f_).tau;
      if (tau != 3) {
        res_.completed = false;
        res_.diagnostic = "final family has τ = " + std::to_string(tau);
      }
    }
    return res_;
  }

 private:
  void fail(std::string why) {
    res_.completed = false;
    res_.diagnostic = std::move(why);
  }

  void record(ExchangeOutcome out) {
    res_.trace.push_back(out.step);
    changed_ = changed_ || !(out.family == f_);
    f_ = std::move(out.family);
  }

  Family outside() const { return restrict_avoid(f_, ElementSet{ctx_.pivot}); }

  std::vector<ElementSet> extra_sets() const {
    std::vector<ElementSet> u;
    for (const auto& s : outside())
      if (!ctx_.m.subfamily.contains(s)) u.push_back(s);
    return u;
  }

  // Returns true when done.
  bool pass() {
    changed_ = false;
    per_element_stage();

    auto u = extra_sets();
    if (u.empty()) return finish();

    const auto choices = representative_choices(ctx_.m.subfamily);
    ElementSet i1;
    for (const auto& c : choices) i1 |= c;
    for (const auto& s : u)
      if (!i1.is_subset_of(s))
        throw RefusalError("after the G_i stage the set " + s.to_string() + " misses I' = " + i1.to_string());
    if (i1.size() >= k_ + 1) throw RefusalError("sets outside M contain |I'| >= k+1 elements");

    std::vector<ElementSet> m1;
    for (const auto& mm : ctx_.m.subfamily) m1.push_back(mm - i1);
    const int i_prime = element_in_two(m1);
    if (i_prime == 0) {
      shift_fallback(m1);
      return false;
    }

    const int z = static_cast<int>(ctx_.m.subfamily.size());
    ctx_.stage = SwitchStage::Transversal;
    for (const auto& hit : hitting_sets(m1, z - 1, i_prime)) record(exchange_transversal(f_, ctx_, hit, i1));
    u = extra_sets();
    if (u.empty()) return finish();
    for (const auto& s : u)
      if (!s.contains(i_prime))
        throw RefusalError("after the G(t,I) stage the set " + s.to_string() + " misses i' = " + std::to_string(i_prime));

    ElementSet i2 = i1;
    i2.insert(i_prime);
    std::vector<ElementSet> m2;
    for (const auto& mm : ctx_.m.subfamily) m2.push_back(mm - i2);
    ctx_.stage = SwitchStage::ExtendedTransversal;
    for (const auto& hit : hitting_sets(m2, z, 0)) record(exchange_transversal(f_, ctx_, hit, i2));
    ctx_.stage = SwitchStage::PerElement;

    if (extra_sets().empty()) return finish();
    if (!changed_) throw RefusalError("a full pass made no progress; sets outside M remain");
    return false;
  }

  bool finish() {
    res_.completed = true;
    return true;
  }

  // G_i exchanges for every tuple of representatives, in lexicographic order.
  void per_element_stage() {
    ctx_.stage = SwitchStage::PerElement;
    const auto choices = representative_choices(ctx_.m.subfamily);
    std::vector<std::vector<int>> lists;
    for (const auto& c : choices) lists.push_back(c.elements());
    const std::size_t z = lists.size();
    std::vector<std::size_t> idx(z, 0);
    while (true) {
      std::vector<std::pair<int, std::size_t>> order;
      for (std::size_t l = 0; l < z; ++l) order.emplace_back(lists[l][idx[l]], l);
      std::sort(order.begin(), order.end());
      ElementSet prefix;
      for (const auto& [e, l] : order) {
        record(exchange_Gi(f_, ctx_, e, prefix, ctx_.m.subfamily[l]));
        prefix.insert(e);
      }
      std::size_t pos = z;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < lists[pos].size()) break;
        idx[pos] = 0;
        if (pos == 0) return;
      }
      if (z == 0) return;
    }
  }

  static int element_in_two(const std::vector<ElementSet>& sets) {
    for (int e = 1; e <= ElementSet::kMaxElement; ++e) {
      int c = 0;
      for (const auto& s : sets) c += s.contains(e);
      if (c >= 2) return e;
    }
    return 0;
  }

  // Hitting sets of `sets` inside their union, of size at most `limit`,
  // containing `must` when nonzero; by size, then lexicographically.
  static std::vector<ElementSet> hitting_sets(const std::vector<ElementSet>& sets, int limit, int must) {
    std::vector<ElementSet> out;
    if (std::any_of(sets.begin(), sets.end(), [](const ElementSet& s) { return s.empty(); })) return out;
    ElementSet pool;
    for (const auto& s : sets) pool |= s;
    ElementSet base;
    if (must != 0) {
      base.insert(must);
      pool.erase(must);
    }
    for (int r = 0; r + base.size() <= limit; ++r) {
      for_each_subset_of_size(pool, r, [&](const ElementSet& extra) {
        const ElementSet h = base | extra;
        if (std::all_of(sets.begin(), sets.end(), [&](const ElementSet& s) { return s.intersects(h); }))
          out.push_back(h);
      });
    }
    return out;
  }

  // No element outside I' lies in two sets of M': shift a pair from two
  // different sets and re-derive M.
  void shift_fallback(const std::vector<ElementSet>& m1) {
    int best_i = 0, best_j = 0;
    for (std::size_t x = 0; x < m1.size(); ++x)
      for (std::size_t y = 0; y < m1.size(); ++y) {
        if (x == y) continue;
        m1[x].for_each([&](int i) {
          m1[y].for_each([&](int j) {
            if (i < j && (best_i == 0 || std::pair(i, j) < std::pair(best_i, best_j))) best_i = i, best_j = j;
          });
        });
      }
    if (best_i == 0) throw RefusalError("shift fallback found no pair in distinct sets of M'");
    Family shifted = shift_family(f_, best_i, best_j);
    Family m_shifted = shift_family(ctx_.m.subfamily, best_i, best_j);
    ExchangeStep step{SwitchStage::Shift, ElementSet{best_i, best_j}, ElementSet{}};
    step.size_before = f_.size();
    step.size_after = shifted.size();
    res_.trace.push_back(step);
    if (!is_intersecting(shifted)) throw RefusalError("shift fallback broke the intersecting property");
    auto m = minimal_tau2_subfamily(m_shifted);
    if (!m) throw RefusalError("shift fallback collapsed τ(M) below 2");
    for (const auto& mm : m->subfamily)
      if (!shifted.contains(mm)) throw RefusalError("shifted M left the family");
    f_ = std::move(shifted);
    ctx_.m = std::move(*m);
  }

  Family f_;
  int k_ = 0;
  SwitchContext ctx_;
  SwitchResult res_;
  bool changed_ = false;
};

}  // namespace

SwitchResult switch_pipeline(const Family& f) { return Switcher(f).run(); }

}  // namespace kfam
