#include "kfam/family.hpp"

#include <algorithm>
#include <string>

#include "kfam/errors.hpp"

namespace kfam {

Family::Family(int n, std::vector<ElementSet> members) : n_(n), members_(std::move(members)) {
  if (n < 1 || n > ElementSet::kMaxElement)
    throw DomainError("ground size " + std::to_string(n) + " outside [1,128]");
  const ElementSet ground = ElementSet::range(1, n);
  for (const auto& m : members_)
    if (!m.is_subset_of(ground))
      throw DomainError("member " + m.to_string() + " is not a subset of [" + std::to_string(n) + "]");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty()) {
    const int k = members_.front().size();
    if (std::all_of(members_.begin(), members_.end(), [k](const ElementSet& m) { return m.size() == k; }))
      uniform_k_ = k;
  }
}

Family Family::from_lists(int n, const std::vector<std::vector<int>>& lists) {
  std::vector<ElementSet> members;
  members.reserve(lists.size());
  for (const auto& l : lists) {
    for (int e : l)
      if (e < 1 || e > n)
        throw DomainError("element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
    members.push_back(ElementSet::from(l));
  }
  return Family(n, std::move(members));
}

bool Family::contains(const ElementSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::vector<std::vector<int>> Family::to_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.elements());
  return out;
}

bool is_intersecting(const Family& f) {
  const auto& ms = f.members();
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = a + 1; b < ms.size(); ++b)
      if (!ms[a].intersects(ms[b])) return false;
  return true;
}

std::size_t degree(const Family& f, int i) {
  if (i < 1 || i > f.ground_size())
    throw DomainError("element " + std::to_string(i) + " outside [1," + std::to_string(f.ground_size()) + "]");
  return static_cast<std::size_t>(
      std::count_if(f.begin(), f.end(), [i](const ElementSet& m) { return m.contains(i); }));
}

namespace {

std::vector<std::size_t> degree_table(const Family& f) {
  std::vector<std::size_t> deg(f.ground_size() + 1, 0);
  for (const auto& m : f) m.for_each([&](int e) { ++deg[e]; });
  return deg;
}

}  // namespace

std::size_t max_degree(const Family& f) {
  const auto deg = degree_table(f);
  return *std::max_element(deg.begin() + 1, deg.end());
}

int max_degree_element(const Family& f) {
  const auto deg = degree_table(f);
  return static_cast<int>(std::max_element(deg.begin() + 1, deg.end()) - deg.begin());
}

std::size_t diversity(const Family& f) { return f.size() - max_degree(f); }

Family restrict_contains_strip(const Family& f, const ElementSet& y) {
  std::vector<ElementSet> out;
  for (const auto& m : f)
    if (y.is_subset_of(m)) out.push_back(m - y);
  return f.with_members(std::move(out));
}

Family restrict_contains_keep(const Family& f, const ElementSet& y) {
  std::vector<ElementSet> out;
  for (const auto& m : f)
    if (y.is_subset_of(m)) out.push_back(m);
  return f.with_members(std::move(out));
}

Family restrict_avoid(const Family& f, const ElementSet& y) {
  std::vector<ElementSet> out;
  for (const auto& m : f)
    if (!m.intersects(y)) out.push_back(m);
  return f.with_members(std::move(out));
}

Family restrict_contains_any(const Family& f, const Family& g) {
  std::vector<ElementSet> out;
  for (const auto& m : f)
    if (std::any_of(g.begin(), g.end(), [&](const ElementSet& s) { return s.is_subset_of(m); }))
      out.push_back(m);
  return f.with_members(std::move(out));
}

bool are_cross_intersecting(const Family& a, const Family& b) {
  if (a.ground_size() != b.ground_size())
    throw DomainError("cross-intersection over different ground sets");
  for (const auto& x : a)
    for (const auto& y : b)
      if (!x.intersects(y)) return false;
  return true;
}

Family relabel(const Family& f, std::span<const int> perm) {
  std::vector<ElementSet> out;
  out.reserve(f.size());
  for (const auto& m : f) {
    ElementSet r;
    m.for_each([&](int e) { r.insert(perm[e]); });
    out.push_back(r);
  }
  return f.with_members(std::move(out));
}

Family canonical_form(const Family& f) { return relabel(f, canonical_labeling(f)); }

bool is_isomorphic(const Family& a, const Family& b) {
  if (a.ground_size() != b.ground_size() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace kfam
