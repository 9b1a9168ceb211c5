#include "kfam/constructions.hpp"

#include <string>

#include "kfam/errors.hpp"

namespace kfam {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

std::string nk(int n, int k) { return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"; }

}  // namespace

Family complete_family(int n, int k) {
  require(k >= 0 && k <= n, "need 0 <= k <= n " + nk(n, k));
  std::vector<ElementSet> out;
  for_each_subset_of_size(ElementSet::range(1, n), k, [&](const ElementSet& s) { out.push_back(s); });
  return Family(n, std::move(out));
}

Family full_star(int n, int k, int x) {
  require(x >= 1 && x <= n, "star centre outside [n]");
  require(k >= 1 && k <= n, "need 1 <= k <= n " + nk(n, k));
  std::vector<ElementSet> out;
  ElementSet rest = ElementSet::range(1, n);
  rest.erase(x);
  for_each_subset_of_size(rest, k - 1, [&](ElementSet s) {
    s.insert(x);
    out.push_back(s);
  });
  return Family(n, std::move(out));
}

Family hilton_milner(int n, int k) {
  require(k >= 1 && n >= 2 * k, "Hilton-Milner family needs n >= 2k " + nk(n, k));
  const ElementSet special = ElementSet::range(2, k + 1);
  std::vector<ElementSet> out{special};
  for_each_subset_of_size(ElementSet::range(2, n), k - 1, [&](ElementSet s) {
    if (!s.intersects(special)) return;
    s.insert(1);
    out.push_back(s);
  });
  return Family(n, std::move(out));
}

Family t2(int k, int ground_n) {
  require(k >= 2 && ground_n >= 2 * k - 1, "T2(k) needs k >= 2 and ground >= 2k-1");
  const ElementSet tail = ElementSet::range(k + 1, 2 * k - 1);
  return Family(ground_n, {ElementSet::range(1, k), tail | ElementSet{1}, tail | ElementSet{2}});
}

Family t2prime(int s, int ground_n) {
  require(s >= 1 && ground_n >= 2 * s, "T2'(s) needs ground >= 2s");
  return Family(ground_n, {ElementSet::range(1, s), ElementSet::range(s + 1, 2 * s)});
}

Family cross_closure(const Family& h, int r) {
  const int n = h.ground_size();
  require(r >= 0 && r <= n, "closure size outside [0,n]");
  std::vector<ElementSet> out;
  for_each_subset_of_size(ElementSet::range(1, n), r, [&](const ElementSet& s) {
    for (const auto& m : h)
      if (!m.intersects(s)) return;
    out.push_back(s);
  });
  return Family(n, std::move(out));
}

Family c3_core(int n, int k) {
  require(k >= 2 && n > 2 * k, "C3(n,k) needs n > 2k " + nk(n, k));
  const ElementSet tail = ElementSet::range(k + 2, 2 * k);
  return Family(n, {ElementSet::range(2, k + 1), tail | ElementSet{2}, tail | ElementSet{3}});
}

Family c3(int n, int k) {
  const Family core = c3_core(n, k);
  std::vector<ElementSet> out(core.begin(), core.end());
  for_each_subset_of_size(ElementSet::range(2, n), k - 1, [&](ElementSet s) {
    for (const auto& a : core)
      if (!a.intersects(s)) return;
    s.insert(1);
    out.push_back(s);
  });
  return Family(n, std::move(out));
}

}  // namespace kfam
