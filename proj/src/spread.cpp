#include "kfam/spread.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "kfam/errors.hpp"

namespace kfam {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

BigCount ipow(const BigCount& b, int e) {
  BigCount r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Number of members containing X, for every X contained in some member.
std::unordered_map<ElementSet, std::size_t, ElementSetHash> superset_counts(const Family& f) {
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> counts;
  for (const auto& m : f) for_each_subset(m, [&](const ElementSet& x) { ++counts[x]; });
  return counts;
}

bool size_lex_less(const ElementSet& a, const ElementSet& b) {
  return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
}

// |F(X)| p^|X| > q^|X| |F| with r = p/q.
bool violates(std::size_t count, int x_size, std::size_t total, const BigRatio& r) {
  return BigCount(count) * ipow(numerator(r), x_size) > ipow(denominator(r), x_size) * BigCount(total);
}

}  // namespace

SpreadCheck is_r_spread(const Family& f, const BigRatio& r) {
  if (r < 1) throw DomainError("spreadness needs r >= 1, got " + to_string(r));
  SpreadCheck out;
  for (const auto& [x, c] : superset_counts(f)) {
    if (!violates(c, x.size(), f.size(), r)) continue;
    if (!out.violator || size_lex_less(x, *out.violator)) out.violator = x;
  }
  out.spread = !out.violator.has_value();
  return out;
}

SpreadRestriction find_spread_restriction(const Family& g, const BigRatio& r) {
  if (!g.uniform_k()) throw RefusalError("spread restriction needs a nonempty uniform family");
  if (r < 1) throw DomainError("spreadness needs r >= 1, got " + to_string(r));
  const int k = *g.uniform_k();
  if (BigCount(g.size()) * ipow(denominator(r), k) <= ipow(numerator(r), k))
    throw RefusalError("spread restriction needs |G| > r^k");

  ElementSet best;
  for (const auto& [x, c] : superset_counts(g)) {
    if (x.empty() || !violates(c, x.size(), g.size(), r)) continue;
    if (x.size() > best.size() || (x.size() == best.size() && lex_less(x, best))) best = x;
  }
  SpreadRestriction out{best, restrict_contains_strip(g, best)};
  if (out.x.size() >= k || !is_r_spread(out.restricted, r).spread)
    throw std::logic_error("spread restriction self-check failed at X = " + out.x.to_string());
  return out;
}

namespace {

bool meets_all_except(const ElementSet& cand, const std::vector<ElementSet>& g, std::size_t skip) {
  if (cand.empty()) return false;
  for (std::size_t j = 0; j < g.size(); ++j)
    if (j != skip && !cand.intersects(g[j])) return false;
  return true;
}

}  // namespace

Family maximal_reduction(const Family& f, std::optional<std::uint64_t> seed, ReductionLog* log) {
  if (!is_intersecting(f)) throw DomainError("maximal reduction needs an intersecting family");
  std::vector<ElementSet> g(f.begin(), f.end());
  std::mt19937_64 rng(seed.value_or(0));

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    if (seed) {
      std::shuffle(order.begin(), order.end(), rng);
    } else {
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g[a].size() > g[b].size(); });
    }
    for (std::size_t idx : order) {
      bool shrunk = true;
      while (shrunk) {
        shrunk = false;
        std::vector<int> elems = g[idx].elements();
        if (seed)
          std::shuffle(elems.begin(), elems.end(), rng);
        else
          std::reverse(elems.begin(), elems.end());
        for (int e : elems) {
          ElementSet cand = g[idx];
          cand.erase(e);
          if (!meets_all_except(cand, g, idx)) continue;
          if (log) log->emplace_back(g[idx], cand);
          g[idx] = cand;
          shrunk = changed = true;
          break;
        }
      }
    }
  }

  std::vector<ElementSet> out;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool superset = false;
    for (std::size_t b = 0; b < g.size() && !superset; ++b)
      superset = g[b] != g[a] && g[b].is_subset_of(g[a]);
    if (!superset) out.push_back(g[a]);
  }
  return f.with_members(std::move(out));
}

bool is_maximal_intersecting(const Family& g) {
  if (!is_intersecting(g)) return false;
  const auto& ms = g.members();
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (std::size_t b = 0; b < ms.size(); ++b)
      if (a != b && ms[b].is_subset_of(ms[a])) return false;
    bool replaceable = false;
    ms[a].for_each([&](int e) {
      ElementSet cand = ms[a];
      cand.erase(e);
      replaceable = replaceable || meets_all_except(cand, ms, a);
    });
    if (replaceable) return false;
  }
  return true;
}

Family peel_coverage(const Family& f, const PeelTrace& trace, int i) {
  std::vector<ElementSet> out;
  const auto add = [&](const Family& part) {
    const Family hit = restrict_contains_any(f, part);
    out.insert(out.end(), hit.begin(), hit.end());
  };
  add(trace.residues.at(i));
  for (const auto& [j, w] : trace.layers)
    if (j > i) add(w);
  return f.with_members(std::move(out));
}

PeelTrace peel(const Family& f, std::optional<std::uint64_t> seed) {
  if (!f.uniform_k()) throw DomainError("peeling needs a nonempty uniform family");
  if (!is_intersecting(f)) throw DomainError("peeling needs an intersecting family");
  PeelTrace t;
  t.k = *f.uniform_k();
  t.residues.emplace(t.k, f);
  for (int i = t.k; i >= 2; --i) {
    std::optional<std::uint64_t> s;
    if (seed) s = *seed + static_cast<std::uint64_t>(i);
    Family red = maximal_reduction(t.residues.at(i), s, &t.reduction_log);
    std::vector<ElementSet> top, rest;
    for (const auto& m : red) (m.size() == i ? top : rest).push_back(m);
    t.reduced.emplace(i, red);
    t.layers.emplace(i, f.with_members(std::move(top)));
    t.residues.emplace(i - 1, f.with_members(std::move(rest)));
    if (BigCount(t.layers.at(i).size()) > ipow(i, i)) t.layer_bounds_hold = false;
  }
  for (int i = t.k; i >= 1; --i)
    if (!(peel_coverage(f, t, i) == f)) t.coverage_holds = false;
  if (t.k >= 4) t.t4_singleton = t.residues.at(4).size() == 1;
  return t;
}

Spread2Check lemma_spread2_check(const Family& g, const ElementSet& x, const Family& gp, const BigRatio& alpha,
                                 int m) {
  Spread2Check c;
  c.sizes_at_most_m = std::all_of(g.begin(), g.end(), [&](const ElementSet& s) { return s.size() <= m; });
  c.g_intersecting = is_intersecting(g);
  c.gp_subset = std::all_of(gp.begin(), gp.end(), [&](const ElementSet& s) { return g.contains(s); });
  const Family gpx = restrict_contains_strip(gp, x);
  c.gp_x_nonempty = !gpx.empty();
  c.gp_x_spread = alpha >= 1 && is_r_spread(gpx, alpha).spread;
  c.alpha_above_m = alpha > m;
  c.x_smaller_than_m = x.size() < m;

  std::vector<ElementSet> out;
  for (const auto& s : g)
    if (!x.is_subset_of(s)) out.push_back(s);
  out.push_back(x);
  c.constructed = g.with_members(std::move(out));
  c.result = is_intersecting(c.constructed);
  return c;
}

}  // namespace kfam
