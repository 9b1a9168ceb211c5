// Canonical labeling of a set family.
//
// The canonical form is the relabeling whose sorted member list is
// lexicographically least. The search fixes that list one member at a time:
// the labels are tracked as an ordered partition of [n] into cells, each cell
// owning a contiguous block of labels whose internal order is still open. The
// smallest mask a member can receive packs its elements at the low end of
// every block, so the next list entry is the least such mask over the unplaced
// members; each member attaining it is a branch, and placing it splits every
// cell into (inside, outside). Elements left sharing a cell once every member
// is placed are twins, so any order inside a cell gives the same list.
//
// Branches that are images of an already explored branch under a known
// automorphism fixing every current cell are skipped. Automorphisms are
// collected whenever two leaves produce the best list.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "kfam/family.hpp"

namespace kfam {
namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Family& f) : f_(f), n_(f.ground_size()), ms_(f.members()) {
    for (std::size_t i = 0; i < ms_.size(); ++i) index_.emplace(ms_[i], static_cast<int>(i));
  }

  std::vector<int> run() {
    std::vector<ElementSet> cells;
    ElementSet all = ElementSet::range(1, n_);
    // Elements outside every member can only ever take the top labels; peel
    // them off so the partition starts finer.
    ElementSet used;
    for (const auto& m : ms_) used |= m;
    if (!(all - used).empty()) {
      if (!used.empty()) cells.push_back(used);
      cells.push_back(all - used);
    } else {
      cells.push_back(all);
    }
    std::vector<char> placed(ms_.size(), 0);
    std::vector<ElementSet> prefix;
    search(cells, placed, prefix);
    return best_perm_;
  }

 private:
  static bool is_discrete(const std::vector<ElementSet>& cells) {
    return std::all_of(cells.begin(), cells.end(), [](const ElementSet& c) { return c.size() == 1; });
  }

  std::vector<int> labeling(const std::vector<ElementSet>& cells) const {
    std::vector<int> perm(n_ + 1, 0);
    int next = 1;
    for (const auto& c : cells) c.for_each([&](int e) { perm[e] = next++; });
    return perm;
  }

  ElementSet image(const ElementSet& m, const std::vector<int>& perm) const {
    ElementSet r;
    m.for_each([&](int e) { r.insert(perm[e]); });
    return r;
  }

  ElementSet packed_mask(const ElementSet& m, const std::vector<ElementSet>& cells) const {
    ElementSet mask;
    int start = 1;
    for (const auto& c : cells) {
      const int cnt = (m & c).size();
      if (cnt) mask |= ElementSet::range(start, start + cnt - 1);
      start += c.size();
    }
    return mask;
  }

  // -1, 0, 1 comparing prefix with the same-length prefix of the best list.
  int compare_prefix(const std::vector<ElementSet>& prefix) const {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] < best_list_[i]) return -1;
      if (best_list_[i] < prefix[i]) return 1;
    }
    return 0;
  }

  void leaf(const std::vector<ElementSet>& cells, const std::vector<char>& placed,
            const std::vector<ElementSet>& prefix) {
    std::vector<int> perm = labeling(cells);
    std::vector<ElementSet> list = prefix;
    std::vector<ElementSet> rest;
    for (std::size_t i = 0; i < ms_.size(); ++i)
      if (!placed[i]) rest.push_back(image(ms_[i], perm));
    std::sort(rest.begin(), rest.end());
    list.insert(list.end(), rest.begin(), rest.end());

    if (!has_best_ || list < best_list_) {
      best_list_ = std::move(list);
      best_perm_ = std::move(perm);
      has_best_ = true;
      best_inverse_.assign(n_ + 1, 0);
      for (int e = 1; e <= n_; ++e) best_inverse_[best_perm_[e]] = e;
      return;
    }
    if (list == best_list_ && generators_.size() < kMaxGenerators) {
      std::vector<int> gamma(n_ + 1, 0);
      bool identity = true;
      for (int e = 1; e <= n_; ++e) {
        gamma[e] = best_inverse_[perm[e]];
        identity = identity && gamma[e] == e;
      }
      if (!identity) generators_.push_back(std::move(gamma));
    }
  }

  // Member indices reachable from `start` under the generators that fix
  // every cell setwise.
  std::vector<int> orbit(int start, const std::vector<const std::vector<int>*>& gens) const {
    std::vector<int> out{start};
    std::vector<char> seen(ms_.size(), 0);
    seen[start] = 1;
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (const auto* g : gens) {
        const auto it = index_.find(image(ms_[out[head]], *g));
        if (it != index_.end() && !seen[it->second]) {
          seen[it->second] = 1;
          out.push_back(it->second);
        }
      }
    }
    return out;
  }

  std::vector<const std::vector<int>*> stabilizing_generators(const std::vector<ElementSet>& cells) const {
    std::vector<int> cell_of(n_ + 1, -1);
    for (std::size_t c = 0; c < cells.size(); ++c) cells[c].for_each([&](int e) { cell_of[e] = static_cast<int>(c); });
    std::vector<const std::vector<int>*> out;
    for (const auto& g : generators_) {
      bool ok = true;
      for (int e = 1; e <= n_ && ok; ++e) ok = cell_of[g[e]] == cell_of[e];
      if (ok) out.push_back(&g);
    }
    return out;
  }

  void search(const std::vector<ElementSet>& cells, std::vector<char>& placed, std::vector<ElementSet>& prefix) {
    if (has_best_ && compare_prefix(prefix) > 0) return;
    if (prefix.size() == ms_.size() || is_discrete(cells)) {
      leaf(cells, placed, prefix);
      return;
    }

    ElementSet least;
    std::vector<int> candidates;
    for (std::size_t i = 0; i < ms_.size(); ++i) {
      if (placed[i]) continue;
      const ElementSet mask = packed_mask(ms_[i], cells);
      if (candidates.empty() || mask < least) {
        least = mask;
        candidates.assign(1, static_cast<int>(i));
      } else if (mask == least) {
        candidates.push_back(static_cast<int>(i));
      }
    }
    if (has_best_ && compare_prefix(prefix) == 0 && best_list_[prefix.size()] < least) return;

    std::vector<char> explored(ms_.size(), 0);
    bool any_explored = false;
    for (int c : candidates) {
      if (any_explored) {
        const auto gens = stabilizing_generators(cells);
        if (!gens.empty()) {
          const auto orb = orbit(c, gens);
          if (std::any_of(orb.begin(), orb.end(), [&](int m) { return explored[m] != 0; })) continue;
        }
      }
      std::vector<ElementSet> refined;
      refined.reserve(cells.size() + 4);
      for (const auto& cell : cells) {
        const ElementSet in = cell & ms_[c];
        const ElementSet out = cell - ms_[c];
        if (!in.empty()) refined.push_back(in);
        if (!out.empty()) refined.push_back(out);
      }
      placed[c] = 1;
      prefix.push_back(least);
      search(refined, placed, prefix);
      prefix.pop_back();
      placed[c] = 0;
      explored[c] = 1;
      any_explored = true;
    }
  }

  static constexpr std::size_t kMaxGenerators = 256;

  const Family& f_;
  int n_;
  const std::vector<ElementSet>& ms_;
  std::unordered_map<ElementSet, int, ElementSetHash> index_;

  bool has_best_ = false;
  std::vector<ElementSet> best_list_;
  std::vector<int> best_perm_;
  std::vector<int> best_inverse_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

std::vector<int> canonical_labeling(const Family& f) {
  if (f.empty()) {
    std::vector<int> id(f.ground_size() + 1);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }
  return CanonicalSearch(f).run();
}

}  // namespace kfam
