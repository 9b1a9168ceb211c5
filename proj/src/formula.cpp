#include "kfam/formula.hpp"

#include <string>

#include "kfam/errors.hpp"

namespace kfam {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw RefusalError(what);
}

BigCount ipow(long long base, long long exp) {
  BigCount r = 1;
  for (long long i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

BigCount ekr_bound(long long n, long long k) {
  require(k > 0 && n > 2 * k, "ekr_bound needs n > 2k > 0");
  return binom(n - 1, k - 1);
}

BigCount hm_size(long long n, long long k) {
  require(k > 0 && n > 2 * k, "hm_size needs n > 2k > 0");
  return binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1;
}

BigCount thm1_bound(long long n, long long k, long long u) {
  require(k > 0 && n > 2 * k, "thm1_bound needs n > 2k > 0");
  require(u >= 3 && u <= k, "thm1_bound needs 3 <= u <= k");
  return binom(n - 1, k - 1) + binom(n - u - 1, n - k - 1) - binom(n - u - 1, k - 1);
}

BigCount size_c3(long long n, long long k) {
  require(k >= 2 && n > 2 * k, "size_c3 needs n > 2k, k >= 2");
  // Line i counts the k-sets whose least element after 1 is i+1.
  BigCount total = 3;
  for (long long i = 1; i <= k; ++i) {
    total += binom(n - 1 - i, k - 2);
    total -= binom(i == 1 ? n - k - 2 : n - k - i, k - 2);
  }
  return total;
}

BigCount size_f2prime(long long m, long long s, long long k) {
  require(s >= 1 && k >= 2 && m >= 2 * s, "size_f2prime needs m >= 2s, s >= 1, k >= 2");
  BigCount total = 0;
  for (long long l = 1; l <= s; ++l) total += binom(m - l, k - 2) - binom(m - s - l, k - 2);
  return total;
}

BigCount f_of_z(long long m, long long s, long long k, long long z) {
  require(z >= 2 && z <= s + 1, "f_of_z needs 2 <= z <= s+1");
  require(k >= 2 && m >= 1, "f_of_z needs k >= 2");
  BigCount total = 0;
  // Lines for the representatives i_2..i_z.
  for (long long l = 2; l <= z; ++l) total += binom(m - l + 1, k - 2) - binom(m - s - 1, k - 2);
  // Lines for the remaining elements j_1..j_{s+1-z} of the first set.
  for (long long l = 1; l <= s + 1 - z; ++l) total += binom(m - z - l + 1, k - 2) - binom(m - s - l - 1, k - 2);
  return total;
}

BigCount fprime3(long long m, long long s, long long k) {
  require(s >= 4, "fprime3 needs s >= 4");
  return f_of_z(m, s, k, 3) + binom(m - s - 3, k - 2) - binom(m - s - 2, k - 2);
}

BigCount kz_bound(long long n, long long a, long long b, std::optional<long long> j) {
  require(a > 0 && b > 0 && n > a + b, "kz_bound needs a, b > 0 and n > a+b");
  if (!j) return binom(n, a);
  const long long t = b + 1 - a;
  require(*j >= t && *j <= b, "kz_bound needs j in [b+1-a, b]");
  return binom(n, a) - binom(n - *j, a) + binom(n - *j, b - *j);
}

BigCount kz_hypothesis_cap(long long n, long long a, long long b) {
  const long long t = b + 1 - a;
  return binom(n - t, a - 1);
}

BigCount g_layer(long long n, long long k, long long i) { return ipow(i, i) * binom(n - i, k - i); }

const Enclosure& e_enclosure() {
  static const Enclosure e{BigRatio(2718281828, 1000000000), BigRatio(2718281829, 1000000000)};
  return e;
}

const Enclosure& sqrt_e_enclosure() {
  static const Enclosure e{BigRatio(1648721270, 1000000000), BigRatio(1648721272, 1000000000)};
  return e;
}

Enclosure exp_enclosure(const BigRatio& x) {
  if (x < 0) throw DomainError("exp_enclosure needs x >= 0");
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const BigCount whole = numerator(x) / denominator(x);
  const BigRatio frac = x - BigRatio(whole);
  const auto& e = e_enclosure();

  // exp(frac) = sum_{j<=N} frac^j/j! + R with 0 <= R <= e * frac^{N+1}/(N+1)!.
  constexpr int kTerms = 24;
  BigRatio sum = 0, term = 1;
  for (int j = 0; j <= kTerms; ++j) {
    sum += term;
    term = term * frac / (j + 1);
  }
  Enclosure out{sum, sum + e.hi * term};
  const long long w = static_cast<long long>(whole);
  for (long long i = 0; i < w; ++i) {
    out.lo *= e.lo;
    out.hi *= e.hi;
  }
  return out;
}

}  // namespace kfam
