#include "kfam/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "kfam/constructions.hpp"
#include "kfam/cover.hpp"
#include "kfam/errors.hpp"
#include "kfam/transforms.hpp"

namespace kfam {

namespace {

constexpr int kMaxVertices = 256;

// A set of vertex indices below kMaxVertices.
struct VSet {
  std::array<std::uint64_t, 4> w{};

  void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }
  bool none() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
  int count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) + std::popcount(w[3]);
  }
  int first() const {
    for (int i = 0; i < 4; ++i)
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return -1;
  }
  bool subset_of(const VSet& o) const {
    for (int i = 0; i < 4; ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  VSet operator&(const VSet& o) const {
    VSet r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  VSet operator|(const VSet& o) const {
    VSet r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
};

class CliqueSearch {
 public:
  CliqueSearch(int n, int k, int t, bool all, std::optional<std::uint64_t> seed) : n_(n), k_(k), t_(t), all_(all) {
    for_each_subset_of_size(ElementSet::range(1, n), k, [&](const ElementSet& s) { sets_.push_back(s); });
    // Vertex 0 is [k]; the rest follow in lexicographic or permuted order.
    if (seed) {
      std::mt19937_64 rng(*seed);
      std::shuffle(sets_.begin() + 1, sets_.end(), rng);
    }
    const int nv = static_cast<int>(sets_.size());
    adj_.resize(nv);
    for (int a = 0; a < nv; ++a)
      for (int b = 0; b < nv; ++b)
        if (a != b && sets_[a].intersects(sets_[b])) adj_[a].set(b);
    // Vertices hit by each (t-1)-subset of [n].
    if (t_ >= 2) {
      for_each_subset_of_size(ElementSet::range(1, n), t_ - 1, [&](const ElementSet& c) {
        VSet hit;
        for (int v = 0; v < nv; ++v)
          if (sets_[v].intersects(c)) hit.set(v);
        covers_.push_back(hit);
      });
    }
  }

  SearchResult run() {
    std::vector<int> r{0};
    VSet rmask;
    rmask.set(0);
    expand(r, rmask, adj_[0], refine({ElementSet::range(1, n_)}, sets_[0]));
    SearchResult out;
    out.optimum = best_;
    out.nodes_explored = nodes_;
    out.pruned = pruned_;
    for (const auto& f : witnesses_) out.witnesses.push_back(f);
    return out;
  }

 private:
  bool small_cover(const VSet& live) const {
    return std::any_of(covers_.begin(), covers_.end(), [&](const VSet& c) { return live.subset_of(c); });
  }

  Family family_of(const std::vector<int>& r) const {
    std::vector<ElementSet> ms;
    for (int v : r) ms.push_back(sets_[v]);
    return Family(n_, std::move(ms));
  }

  void leaf(const std::vector<int>& r) {
    const std::size_t size = r.size();
    if (size < best_ || (size == best_ && !all_ && !witnesses_.empty())) return;
    const Family f = family_of(r);
    if (t_ >= 2 && covering_number(f).tau < static_cast<std::size_t>(t_)) return;
    if (size > best_ || witnesses_.empty()) {
      best_ = size;
      witnesses_.clear();
    }
    witnesses_.insert(canonical_form(f));
  }

  bool cannot_win(std::size_t bound) const {
    // In all-optima mode ties must still be explored.
    return all_ ? bound < best_ : bound <= best_ && !witnesses_.empty();
  }

  // Venn regions of the clique members within [n].
  static std::vector<ElementSet> refine(const std::vector<ElementSet>& atoms, const ElementSet& s) {
    std::vector<ElementSet> out;
    for (const auto& a : atoms) {
      if (a.intersects(s)) out.push_back(a & s);
      if (!(a - s).empty()) out.push_back(a - s);
    }
    return out;
  }

  // Permuting elements inside each region fixes every clique member, so two
  // candidates meeting each region equally often root isomorphic subtrees.
  static std::vector<std::uint8_t> orbit_key(const std::vector<ElementSet>& atoms, const ElementSet& s) {
    std::vector<std::uint8_t> key;
    key.reserve(atoms.size());
    for (const auto& a : atoms) key.push_back(static_cast<std::uint8_t>((a & s).size()));
    return key;
  }

  void expand(std::vector<int>& r, const VSet& rmask, VSet p, const std::vector<ElementSet>& atoms) {
    ++nodes_;
    if (p.none()) {
      leaf(r);
      return;
    }
    if (cannot_win(r.size() + p.count())) {
      ++pruned_;
      return;
    }
    if (t_ >= 2 && small_cover(rmask | p)) {
      ++pruned_;
      return;
    }

    // Greedy colouring into pairwise disjoint classes; a clique takes at most
    // one vertex per class.
    std::vector<int> order, colour;
    VSet uncoloured = p;
    int c = 0;
    while (!uncoloured.none()) {
      ++c;
      VSet avail = uncoloured;
      while (!avail.none()) {
        const int v = avail.first();
        avail.reset(v);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(c);
        avail = avail & complement(adj_[v]);
      }
    }
    std::set<std::vector<std::uint8_t>> explored;
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (cannot_win(r.size() + colour[idx])) {
        ++pruned_;
        return;
      }
      const int v = order[idx];
      if (explored.insert(orbit_key(atoms, sets_[v])).second) {
        r.push_back(v);
        VSet rm = rmask;
        rm.set(v);
        expand(r, rm, p & adj_[v], refine(atoms, sets_[v]));
        r.pop_back();
      } else {
        ++pruned_;
      }
      p.reset(v);
      if (t_ >= 2 && small_cover(rmask | p)) {
        ++pruned_;
        return;
      }
    }
  }

  VSet complement(const VSet& s) const {
    VSet r;
    for (int i = 0; i < 4; ++i) r.w[i] = ~s.w[i];
    return r;
  }

  int n_, k_, t_;
  bool all_;
  std::vector<ElementSet> sets_;
  std::vector<VSet> adj_;
  std::vector<VSet> covers_;
  std::size_t best_ = 0;
  std::set<Family, bool (*)(const Family&, const Family&)> witnesses_{
      [](const Family& a, const Family& b) { return a.members() < b.members(); }};
  std::uint64_t nodes_ = 0, pruned_ = 0;
};

}  // namespace

SearchResult max_intersecting_tau(int n, int k, int t, bool all_optima, std::optional<std::uint64_t> order_seed) {
  if (k < 1 || n < k) throw DomainError("need 1 <= k <= n");
  if (binom(n, k) > 200) throw RefusalError("max_intersecting_tau is limited to C(n,k) <= 200");
  if (t > k) throw RefusalError("need t <= k");
  return CliqueSearch(n, k, t, all_optima, order_seed).run();
}

LemminResult lemmin_oracle(int m, int s, int k, bool intersecting_only) {
  if (m > 12 || s > 5 || k > 6) throw RefusalError("lemmin_oracle is limited to m <= 12, s <= 5, k <= 6");
  if (m < k + s) throw RefusalError("lemmin_oracle needs m >= k+s");
  if (k < 2) throw DomainError("lemmin_oracle needs k >= 2");
  LemminResult out;
  for (auto& h : enumerate_minimal_tau2(m, s, intersecting_only)) {
    LemminClass c{h, count_hitting_sets(h, k - 1), 0};
    c.value = c.closure_size + h.size();
    out.classes.push_back(std::move(c));
  }
  for (const auto& c : out.classes) out.best = std::max(out.best, c.value);
  for (const auto& c : out.classes) {
    if (c.value == out.best)
      out.argmax.push_back(c.h);
    else
      out.runner_up = std::max(out.runner_up, c.value);
  }
  return out;
}

namespace {

std::optional<ShiftWitness> try_all_shifts(const Family& f) {
  const std::size_t tau = covering_number(f).tau;
  if (tau <= 1) return std::nullopt;
  const int n = f.ground_size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Family g = shift_family(f, i, j);
      const std::size_t after = covering_number(g).tau;
      if (after < tau) return ShiftWitness{f, i, j, tau, after};
    }
  return std::nullopt;
}

bool verify(const ShiftWitness& w) {
  return is_intersecting(w.family) && covering_number(w.family).tau == w.tau_before &&
         covering_number(shift_family(w.family, w.i, w.j)).tau == w.tau_after && w.tau_after < w.tau_before;
}

}  // namespace

std::optional<ShiftWitness> find_tau_dropping_shift(int n, int k, std::uint64_t seed, int random_tries) {
  const Family all = complete_family(n, k);
  const auto& v = all.members();

  // Systematic pass over intersecting families of two or three members.
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (!v[a].intersects(v[b])) continue;
      if (auto w = try_all_shifts(Family(n, {v[a], v[b]})); w && verify(*w)) return w;
      for (std::size_t c = b + 1; c < v.size(); ++c) {
        if (!v[c].intersects(v[a]) || !v[c].intersects(v[b])) continue;
        if (auto w = try_all_shifts(Family(n, {v[a], v[b], v[c]})); w && verify(*w)) return w;
      }
    }

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < random_tries; ++attempt) {
    std::vector<ElementSet> pool = v;
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t target = 2 + rng() % pool.size();
    std::vector<ElementSet> chosen;
    for (const auto& s : pool) {
      if (chosen.size() >= target) break;
      if (std::all_of(chosen.begin(), chosen.end(), [&](const ElementSet& c) { return c.intersects(s); }))
        chosen.push_back(s);
    }
    if (auto w = try_all_shifts(Family(n, chosen)); w && verify(*w)) return w;
  }
  return std::nullopt;
}

}  // namespace kfam
