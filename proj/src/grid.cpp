#include "kfam/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <thread>

#include "kfam/bigint.hpp"
#include "kfam/formula.hpp"

namespace kfam {

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, const std::map<std::string, long long>& vars) : s_(text), vars_(vars) {}

  long long parse() {
    const long long v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("expression '" + s_ + "': " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long long expr() {
    long long v = term();
    while (true) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  long long term() {
    long long v = power();
    while (true) {
      if (eat('*')) {
        v *= power();
      } else if (eat('/')) {
        const long long d = power();
        if (d == 0 || v % d != 0) fail("inexact division");
        v /= d;
      } else {
        return v;
      }
    }
  }

  long long power() {
    const long long base = unary();
    if (!eat('^')) return base;
    const long long e = power();
    if (e < 0) fail("negative exponent");
    long long v = 1;
    for (long long i = 0; i < e; ++i) v *= base;
    return v;
  }

  long long unary() {
    if (eat('-')) return -unary();
    return primary();
  }

  long long primary() {
    skip_ws();
    if (eat('(')) {
      const long long v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      long long v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
      return v;
    }
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      std::string name;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name += s_[pos_++];
      const auto it = vars_.find(name);
      if (it == vars_.end()) fail("unknown variable '" + name + "'");
      return it->second;
    }
    fail("expected a value");
  }

  const std::string& s_;
  const std::map<std::string, long long>& vars_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string::npos ? std::string::npos : at - start));
    if (at == std::string::npos) return out;
    start = at + 1;
  }
}

std::vector<long long> expand_body(const std::string& body, const std::map<std::string, long long>& vars) {
  std::vector<long long> out;
  for (const auto& raw : split(body, ',')) {
    const std::string item = trim(raw);
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(eval_int_expr(item, vars));
      continue;
    }
    const long long lo = eval_int_expr(item.substr(0, dots), vars);
    const long long hi = eval_int_expr(item.substr(dots + 2), vars);
    for (long long v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

}  // namespace

long long eval_int_expr(const std::string& expr, const std::map<std::string, long long>& vars) {
  return ExprParser(expr, vars).parse();
}

GridSpec GridSpec::parse(const std::string& text) {
  GridSpec g;
  for (const auto& raw : split(text, ';')) {
    const std::string part = trim(raw);
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("range '" + part + "' lacks '='");
    const std::string name = trim(part.substr(0, eq));
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
      throw std::invalid_argument("bad variable name in '" + part + "'");
    if (std::find(g.names_.begin(), g.names_.end(), name) != g.names_.end())
      throw std::invalid_argument("variable '" + name + "' declared twice");
    g.names_.push_back(name);
    g.bodies_.push_back(part.substr(eq + 1));
  }
  if (g.names_.empty()) throw std::invalid_argument("empty range specification");
  // Surface syntax errors before any evaluation.
  (void)g.tuples();
  return g;
}

std::vector<std::vector<long long>> GridSpec::tuples() const {
  std::vector<std::vector<long long>> out;
  std::map<std::string, long long> cur;
  std::vector<long long> vals;
  std::function<void(std::size_t)> rec = [&](std::size_t d) {
    if (d == names_.size()) {
      out.push_back(vals);
      return;
    }
    for (long long v : expand_body(bodies_[d], cur)) {
      cur[names_[d]] = v;
      vals.push_back(v);
      rec(d + 1);
      vals.pop_back();
    }
    cur.erase(names_[d]);
  };
  rec(0);
  return out;
}

std::vector<std::map<std::string, long long>> GridSpec::points() const {
  std::vector<std::map<std::string, long long>> out;
  for (const auto& t : tuples()) {
    std::map<std::string, long long> p;
    for (std::size_t i = 0; i < t.size(); ++i) p[names_[i]] = t[i];
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

using Point = std::map<std::string, long long>;

GridCheck cmp(std::string name, const BigRatio& lhs, const std::string& op, const BigRatio& rhs) {
  bool ok = false;
  if (op == "<") ok = lhs < rhs;
  if (op == "<=") ok = lhs <= rhs;
  if (op == ">") ok = lhs > rhs;
  if (op == ">=") ok = lhs >= rhs;
  if (op == "=") ok = lhs == rhs;
  return {std::move(name), ok, to_string(lhs), to_string(rhs)};
}

BigRatio q(const BigCount& v) { return BigRatio(v); }

struct Inequality {
  std::string ranges;
  std::vector<std::string> vars;
  // Returns a skip reason, or "" after filling checks.
  std::function<std::string(const Point&, std::vector<GridCheck>&)> eval;
};

long long v(const Point& p, const char* name) { return p.at(name); }

std::string f_monotone(const Point& p, std::vector<GridCheck>& out) {
  const long long k = v(p, "k"), s = v(p, "s"), m = v(p, "m"), z = v(p, "z");
  if (k < 4) return "needs k >= 4";
  if (s < 2 || s > k) return "needs 2 <= s <= k";
  if (m < k + s) return "needs m >= k+s";
  if (z < 3 || z > s + 1) return "needs 3 <= z <= s+1";
  const BigCount drop = f_of_z(m, s, k, z - 1) - f_of_z(m, s, k, z);
  const BigCount step = binom(m - s - 1, k - 2) - binom(m - s - 2, k - 2);
  out.push_back(cmp("f(z-1)-f(z) >= C(m-s-1,k-2)-C(m-s-2,k-2)", q(drop), ">=", q(step)));
  out.push_back(cmp("C(m-s-1,k-2)-C(m-s-2,k-2) = C(m-s-2,k-3)", q(step), "=", q(binom(m - s - 2, k - 3))));
  out.push_back(cmp("C(m-s-2,k-3) > 1", q(binom(m - s - 2, k - 3)), ">", 1));
  return "";
}

std::string fprime3_gap(const Point& p, std::vector<GridCheck>& out) {
  const long long k = v(p, "k"), s = v(p, "s"), m = v(p, "m");
  if (k < 4) return "needs k >= 4";
  if (s < 4) return "f'(3) needs s >= 4";
  if (s > k) return "needs s <= k";
  if (m < k + s) return "needs m >= k+s";
  const BigCount gap = f_of_z(m, s, k, 3) - fprime3(m, s, k);
  out.push_back(cmp("f(3)-f'(3) = C(m-s-2,k-2)-C(m-s-3,k-2)", q(gap), "=",
                    q(binom(m - s - 2, k - 2) - binom(m - s - 3, k - 2))));
  out.push_back(cmp("f(3)-f'(3) = C(m-s-3,k-3)", q(gap), "=", q(binom(m - s - 3, k - 3))));
  out.push_back(cmp("C(m-s-3,k-3) >= 1", q(binom(m - s - 3, k - 3)), ">=", 1));
  return "";
}

std::string large_n_regime(long long k, long long n) {
  if (k < 100) return "needs k >= 100";
  if (n <= 2 * (k - 1) * (k - 1)) return "needs n > 2(k-1)^2";
  return "";
}

std::string g_ratio(const Point& p, std::vector<GridCheck>& out) {
  const long long k = v(p, "k"), n = v(p, "n"), i = v(p, "i");
  if (auto r = large_n_regime(k, n); !r.empty()) return r;
  if (i < 6 || i > k) return "needs 6 <= i <= k";
  const BigRatio ratio(g_layer(n, k, i), g_layer(n, k, i - 1));
  out.push_back(cmp("g(i)/g(i-1) < 1/2", ratio, "<", BigRatio(1, 2)));
  const BigRatio tail = e_enclosure().hi * k * k / (4 * (n - k));
  out.push_back(cmp("e k^2/(4(n-k)) < 1/2", tail, "<", BigRatio(1, 2)));
  return "";
}

std::string two_g5(const Point& p, std::vector<GridCheck>& out) {
  const long long k = v(p, "k"), n = v(p, "n");
  if (auto r = large_n_regime(k, n); !r.empty()) return r;
  out.push_back(cmp("2g(5) < C(n-5,k-3)", q(2 * g_layer(n, k, 5)), "<", q(binom(n - 5, k - 3))));
  out.push_back(cmp("2*5^5/(4(k-1)^2) < 1", BigRatio(2 * 3125, 4 * (k - 1) * (k - 1)), "<", 1));
  return "";
}

std::string c3_large(const Point& p, std::vector<GridCheck>& out) {
  const long long k = v(p, "k"), n = v(p, "n");
  if (k < 4) return "needs k >= 4";
  if (n < 2 * (k - 1) * (k - 1) || n <= 2 * k) return "needs n >= 2(k-1)^2 and n > 2k";
  const BigCount c3 = size_c3(n, k);
  const BigCount w = k * k - k + 1;
  const BigRatio root_e = sqrt_e_enclosure().lo;
  out.push_back(cmp("|C3| >= 3 + (k^2-k+1)C(n-k-2,k-3)", q(c3), ">=", q(3 + w * binom(n - k - 2, k - 3))));
  out.push_back(cmp("C(n-3,k-3) <= e^0.5 C(n-k-2,k-3)", q(binom(n - 3, k - 3)), "<=",
                    root_e * q(binom(n - k - 2, k - 3))));
  out.push_back(cmp("|C3| e^0.5 >= (k^2-k+1)C(n-3,k-3)", root_e * q(c3), ">=", q(w * binom(n - 3, k - 3))));
  return "";
}

std::string bound_f(const Point& p, std::vector<GridCheck>& out) {
  const long long k = v(p, "k"), n = v(p, "n");
  if (k < 4) return "needs k >= 4";
  if (n <= 50 * (k - 1)) return "needs n > 50(k-1)";
  const BigCount top = binom(n - 1, k - 1);
  const BigCount first = top - binom(n - 5, k - 1) + binom(n - 5, k - 4);
  const BigCount mid = 5 * binom(n - 2, k - 2);
  out.push_back(cmp("C(n-1,k-1)-C(n-5,k-1)+C(n-5,k-4) <= 5C(n-2,k-2)", q(first), "<=", q(mid)));
  out.push_back(cmp("5C(n-2,k-2) <= C(n-1,k-1)/10", q(mid), "<=", BigRatio(top, 10)));
  out.push_back(cmp("C(n-1,k-1)/10 < |C3|", BigRatio(top, 10), "<", q(size_c3(n, k))));
  return "";
}

std::string bound_c2(const Point& p, std::vector<GridCheck>& out) {
  const long long k = v(p, "k"), n = v(p, "n");
  if (k < 100) return "needs k >= 100";
  if (n <= 2 * k || n > 50 * (k - 1)) return "needs 2k < n <= 50(k-1)";
  const BigCount c3 = size_c3(n, k);
  const BigCount top = binom(n - 1, k - 1);
  const BigCount tail = binom(n - k, k - 1);
  // e^{(k-1)/C} with C = n/(k-1); the upper end makes e^{-x} smallest.
  const BigRatio exp_hi = exp_enclosure(BigRatio((k - 1) * (k - 1), n)).hi;
  out.push_back(cmp("|C3| > C(n-1,k-1)-C(n-k-1,k-1)-C(n-k,k-1)", q(c3), ">",
                    q(top - binom(n - k - 1, k - 1) - tail)));
  out.push_back(cmp("C(n-k,k-1) e^{(k-1)^2/n} <= C(n-1,k-1)", q(tail) * exp_hi, "<=", q(top)));
  out.push_back(cmp("|C3| >= (1-2e^{-(k-1)/C})C(n-1,k-1)", q(c3), ">=", (1 - BigRatio(2) / exp_hi) * q(top)));
  return "";
}

const std::map<std::string, Inequality>& registry() {
  static const std::map<std::string, Inequality> r{
      {"f-monotone", {"k=4..40;s=2..k;m=k+s..k+s+40;z=3..s+1", {"k", "s", "m", "z"}, f_monotone}},
      {"fprime3-gap", {"k=4..40;s=4..k;m=k+s..k+s+40", {"k", "s", "m"}, fprime3_gap}},
      {"g-ratio", {"k=100,120;n=2*(k-1)^2+1,3*(k-1)^2;i=6..k", {"k", "n", "i"}, g_ratio}},
      {"2g5", {"k=100,120;n=2*(k-1)^2+1,3*(k-1)^2", {"k", "n"}, two_g5}},
      {"c3-large", {"k=100,120;n=2*(k-1)^2+1,3*(k-1)^2", {"k", "n"}, c3_large}},
      {"boundf", {"k=100,120;n=50*(k-1)+1,2*(k-1)^2", {"k", "n"}, bound_f}},
      {"boundc2", {"k=100,120;n=2*k+1,7*k,50*(k-1)", {"k", "n"}, bound_c2}},
  };
  return r;
}

const Inequality& lookup(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown inequality '" + name + "'");
  return it->second;
}

}  // namespace

std::vector<std::string> grid_inequalities() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

std::string default_grid_ranges(const std::string& name) { return lookup(name).ranges; }

GridReport certify_grid(const std::string& name, const std::string& ranges, int jobs, bool keep_passing) {
  const Inequality& ineq = lookup(name);
  const GridSpec spec = GridSpec::parse(ranges);
  for (const auto& var : ineq.vars)
    if (std::find(spec.variables().begin(), spec.variables().end(), var) == spec.variables().end())
      throw std::invalid_argument("inequality '" + name + "' needs variable '" + var + "'");

  const auto pts = spec.tuples();
  const auto& names = spec.variables();
  std::vector<GridPointResult> results(pts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx; (idx = next.fetch_add(1)) < pts.size();) {
      GridPointResult& r = results[idx];
      Point p;
      for (std::size_t i = 0; i < names.size(); ++i) p[names[i]] = pts[idx][i];
      r.skip_reason = ineq.eval(p, r.checks);
      r.skipped = !r.skip_reason.empty();
      r.pass = !r.skipped && std::all_of(r.checks.begin(), r.checks.end(), [](const GridCheck& c) { return c.pass; });
      if (r.pass && !keep_passing)
        r.checks.clear();
      else
        r.point = std::move(p);
    }
  };
  const int threads = std::clamp(jobs, 1, 64);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  GridReport rep{name, ranges, {}, 0, 0, 0};
  for (auto& r : results) {
    if (r.skipped)
      ++rep.skipped;
    else if (r.pass)
      ++rep.passed;
    else
      ++rep.failed;
    if (keep_passing || !r.pass) rep.points.push_back(std::move(r));
  }
  return rep;
}

}  // namespace kfam
