#pragma once

#include <map>
#include <string>
#include <vector>

namespace kfam {

/// Ordered parameter ranges such as "k=4..40;s=2..k;m=k+s..k+s+40". Each
/// variable takes a comma-separated list of values or `lo..hi` spans whose
/// bounds are integer expressions (+ - * / ^ and parentheses) over the
/// variables declared before it.
class GridSpec {
 public:
  /// Throws std::invalid_argument on malformed text.
  static GridSpec parse(const std::string& text);

  /// Every point in declaration order, the last variable varying fastest.
  std::vector<std::map<std::string, long long>> points() const;
  /// The same points as value tuples in variable order.
  std::vector<std::vector<long long>> tuples() const;

  const std::vector<std::string>& variables() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::string> bodies_;
};

/// Evaluates an integer expression over `vars`. Division must be exact.
long long eval_int_expr(const std::string& expr, const std::map<std::string, long long>& vars);

struct GridCheck {
  std::string name;
  bool pass = false;
  std::string lhs, rhs;
};

struct GridPointResult {
  std::map<std::string, long long> point;
  bool skipped = false;
  std::string skip_reason;
  bool pass = false;
  std::vector<GridCheck> checks;
};

struct GridReport {
  std::string name;
  std::string ranges;
  std::vector<GridPointResult> points;
  std::size_t passed = 0, failed = 0, skipped = 0;
  bool all_pass() const { return failed == 0 && passed > 0; }
};

/// Inequality ids accepted by certify_grid.
std::vector<std::string> grid_inequalities();

/// The default grid for an inequality id.
std::string default_grid_ranges(const std::string& name);

/// Evaluates the named inequality chain at every grid point in exact
/// arithmetic. Points outside the hypothesis are skipped with a reason. Points
/// are spread over `jobs` threads; the report order is the grid order.
/// With `keep_passing` false only failed and skipped points are stored.
/// Throws std::invalid_argument for an unknown id or malformed ranges.
GridReport certify_grid(const std::string& name, const std::string& ranges, int jobs = 1, bool keep_passing = true);

}  // namespace kfam
