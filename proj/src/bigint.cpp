#include "kfam/bigint.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace kfam {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<long long, long long>& p) const noexcept {
    return std::hash<long long>()(p.first) * 1000003u ^ std::hash<long long>()(p.second);
  }
};

}  // namespace

BigCount binom(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Grid certification evaluates the same coefficients many times over.
  static std::mutex mu;
  static std::unordered_map<std::pair<long long, long long>, BigCount, PairHash> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({n, k}); it != cache.end()) return it->second;
  }
  BigCount r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  std::lock_guard lock(mu);
  if (cache.size() > 200000) cache.clear();
  cache.emplace(std::make_pair(n, k), r);
  return r;
}

BigRatio parse_ratio(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed ratio '" + text + "'");
    return BigCount(s);
  };
  if (slash == std::string::npos) return BigRatio(parse_int(text));
  const BigCount p = parse_int(text.substr(0, slash));
  const BigCount q = parse_int(text.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return BigRatio(p, q);
}

std::string to_string(const BigCount& v) { return v.str(); }

std::string to_string(const BigRatio& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace kfam
