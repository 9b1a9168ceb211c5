#include "kfam/cover.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "kfam/errors.hpp"

namespace kfam {

bool is_cover(const Family& f, const ElementSet& cover) {
  return std::all_of(f.begin(), f.end(), [&](const ElementSet& m) { return m.intersects(cover); });
}

namespace {

class CoverSolver {
 public:
  explicit CoverSolver(const Family& f) : ms_(f.members()) {}

  CoverResult solve() {
    best_cover_ = greedy();
    best_ = best_cover_.size();
    dfs(ElementSet{}, ElementSet{});
    return {static_cast<std::size_t>(best_), best_cover_, nodes_};
  }

 private:
  ElementSet greedy() const {
    ElementSet cover;
    std::vector<const ElementSet*> open;
    for (const auto& m : ms_) open.push_back(&m);
    while (!open.empty()) {
      int best_e = 0;
      std::size_t best_deg = 0;
      std::vector<std::size_t> deg(ElementSet::kMaxElement + 1, 0);
      for (const auto* m : open) m->for_each([&](int e) { ++deg[e]; });
      for (int e = 1; e <= ElementSet::kMaxElement; ++e)
        if (deg[e] > best_deg) best_deg = deg[e], best_e = e;
      cover.insert(best_e);
      std::erase_if(open, [&](const ElementSet* m) { return m->contains(best_e); });
    }
    return cover;
  }

  // `excluded` holds elements ruled out by earlier sibling branches. The bound
  // is a greedy packing of pairwise disjoint open members.
  void dfs(const ElementSet& cover, const ElementSet& excluded) {
    ++nodes_;
    std::vector<ElementSet> open;
    for (const auto& m : ms_)
      if (!m.intersects(cover)) open.push_back(m - excluded);
    if (open.empty()) {
      if (cover.size() < best_) {
        best_ = cover.size();
        best_cover_ = cover;
      }
      return;
    }
    std::sort(open.begin(), open.end(), [](const ElementSet& a, const ElementSet& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    if (open.front().empty()) return;

    int packing = 0;
    ElementSet used;
    for (const auto& m : open)
      if (!m.intersects(used)) {
        used |= m;
        ++packing;
      }
    if (cover.size() + packing >= best_) return;

    // Branch on the open member with fewest available elements; the i-th
    // branch excludes the elements taken by the earlier ones.
    ElementSet skip = excluded;
    open.front().for_each([&](int e) {
      ElementSet next = cover;
      next.insert(e);
      dfs(next, skip);
      skip.insert(e);
    });
  }

  const std::vector<ElementSet>& ms_;
  int best_ = 0;
  ElementSet best_cover_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CoverResult covering_number(const Family& f) {
  if (f.empty()) return {};
  if (f[0].empty()) return {kNoCover, ElementSet{}, 0};  // ∅ sorts first
  CoverResult r = CoverSolver(f).solve();
  return r;
}

namespace {

void count_rec(const std::vector<ElementSet>& open, int next, int chosen, int t, int n, BigCount& acc) {
  if (open.empty()) {
    acc += binom(n - next + 1, t - chosen);
    return;
  }
  if (chosen == t || n - next + 1 < t - chosen) return;
  for (const auto& m : open)
    if (m.max_element() < next) return;
  std::vector<ElementSet> rest;
  rest.reserve(open.size());
  for (const auto& m : open)
    if (!m.contains(next)) rest.push_back(m);
  count_rec(rest, next + 1, chosen + 1, t, n, acc);
  count_rec(open, next + 1, chosen, t, n, acc);
}

}  // namespace

BigCount count_hitting_sets(const Family& f, int t) {
  const int n = f.ground_size();
  if (t < 0 || t > n) throw DomainError("hitting-set size " + std::to_string(t) + " outside [0," + std::to_string(n) + "]");
  BigCount acc = 0;
  count_rec(f.members(), 1, 0, t, n, acc);
  return acc;
}

std::vector<ElementSet> representative_choices(const Family& m) {
  std::vector<ElementSet> out;
  out.reserve(m.size());
  for (std::size_t l = 0; l < m.size(); ++l) {
    ElementSet inter = m.ground_set();
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != l) inter &= m[j];
    out.push_back(inter - m[l]);
  }
  return out;
}

namespace {

ElementSet intersection_of(const std::vector<ElementSet>& ms, const ElementSet& ground) {
  ElementSet inter = ground;
  for (const auto& m : ms) inter &= m;
  return inter;
}

}  // namespace

bool is_minimal_tau2(const Family& m) {
  if (m.size() < 2 || m[0].empty()) return false;
  if (!intersection_of(m.members(), m.ground_set()).empty()) return false;
  const auto reps = representative_choices(m);
  return std::none_of(reps.begin(), reps.end(), [](const ElementSet& r) { return r.empty(); });
}

std::optional<Representatives> minimal_tau2_subfamily(const Family& f) {
  std::vector<ElementSet> cur;
  for (const auto& m : f)
    if (!m.empty()) cur.push_back(m);
  const ElementSet ground = f.ground_set();
  if (cur.empty() || !intersection_of(cur, ground).empty()) return std::nullopt;

  // One pass suffices: a member kept because its removal gave τ <= 1 stays
  // necessary as the family shrinks.
  for (std::size_t i = 0; i < cur.size();) {
    std::vector<ElementSet> trial = cur;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!trial.empty() && intersection_of(trial, ground).empty())
      cur = std::move(trial);
    else
      ++i;
  }

  Representatives out{f.with_members(cur), {}};
  for (const auto& r : representative_choices(out.subfamily)) out.reps.push_back(r.min_element());
  return out;
}

std::vector<Family> enumerate_minimal_tau2(int m, int s, bool intersecting_only) {
  if (m > 12 || s > 5) throw RefusalError("enumerate_minimal_tau2 is limited to m <= 12, s <= 5");
  if (s < 1 || m < s) throw DomainError("need 1 <= s <= m");

  using Key = std::vector<ElementSet>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::size_t h = k.size();
      for (const auto& x : k) h = h * 1000003u ^ x.hash();
      return h;
    }
  };

  std::vector<ElementSet> all_sets;
  for_each_subset_of_size(ElementSet::range(1, m), s, [&](const ElementSet& x) { all_sets.push_back(x); });

  std::unordered_set<Key, KeyHash> found;
  std::vector<Family> result;
  std::vector<Family> frontier{Family(m, {ElementSet::range(1, s)})};
  const ElementSet ground = ElementSet::range(1, m);

  // Every proper subfamily of a minimal τ=2 family has a nonempty intersection
  // and, for each of its members H, an element common to the others that H
  // misses. Prefixes violating this are never extended.
  while (!frontier.empty()) {
    std::unordered_set<Key, KeyHash> seen;
    std::vector<Family> next;
    for (const Family& prefix : frontier) {
      const auto& ps = prefix.members();
      const ElementSet inter = intersection_of(ps, ground);
      std::vector<ElementSet> others(ps.size());
      for (std::size_t l = 0; l < ps.size(); ++l) {
        others[l] = ground;
        for (std::size_t j = 0; j < ps.size(); ++j)
          if (j != l) others[l] &= ps[j];
      }
      for (const auto& x : all_sets) {
        if (prefix.contains(x) || inter.is_subset_of(x)) continue;
        if (intersecting_only && std::any_of(ps.begin(), ps.end(), [&](const ElementSet& p) { return !p.intersects(x); }))
          continue;
        bool ok = true;
        for (std::size_t l = 0; l < ps.size() && ok; ++l) ok = !((others[l] & x) - ps[l]).empty();
        if (!ok) continue;

        std::vector<ElementSet> grown = ps;
        grown.push_back(x);
        Family q = canonical_form(Family(m, std::move(grown)));
        if ((inter & x).empty()) {
          if (is_minimal_tau2(q) && found.insert(q.members()).second) result.push_back(std::move(q));
        } else if (seen.insert(q.members()).second) {
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end(), [](const Family& a, const Family& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.members() < b.members();
  });
  return result;
}

}  // namespace kfam
