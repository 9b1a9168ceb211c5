#pragma once

#include <optional>

#include "kfam/bigint.hpp"

namespace kfam {

/// C(n-1, k-1), the size of a full star. Requires n > 2k > 0.
BigCount ekr_bound(long long n, long long k);

/// C(n-1,k-1) - C(n-k-1,k-1) + 1. Requires n > 2k > 0.
BigCount hm_size(long long n, long long k);

/// C(n-1,k-1) + C(n-u-1,n-k-1) - C(n-u-1,k-1): the size bound for intersecting
/// families of diversity at least C(n-u-1,n-k-1). Requires n > 2k > 0 and
/// 3 <= u <= k.
BigCount thm1_bound(long long n, long long k, long long u);

/// |C₃(n,k)| as a sum of k binomial lines plus the three core sets.
/// Requires n > 2k, k >= 2.
BigCount size_c3(long long n, long long k);

/// |F₂'(s)| over [m]: (k-1)-sets meeting both [s] and [s+1,2s].
/// Requires m >= 2s, s >= 1, k >= 2.
BigCount size_f2prime(long long m, long long s, long long k);

/// f(z): the line-by-line upper bound on a (k-1)-uniform family over [m]
/// cross-intersecting a minimal τ = 2 family of z s-sets.
/// Requires 2 <= z <= s+1, k >= 2, m >= 1.
BigCount f_of_z(long long m, long long s, long long k, long long z);

/// f'(3): f(3) with the fourth line subtracting C(m-s-2,k-2) instead of
/// C(m-s-3,k-2). Requires s >= 4.
BigCount fprime3(long long m, long long s, long long k);

/// Right-hand side for a cross-intersecting pair A ⊂ C([n],a), B ⊂ C([n],b):
/// C(n,a) without j, else C(n,a) - C(n-j,a) + C(n-j,b-j) for j in [b+1-a, b].
/// Requires a, b > 0 and n > a+b.
BigCount kz_bound(long long n, long long a, long long b, std::optional<long long> j = std::nullopt);

/// The hypothesis cap on |B|: C(n-t, a-1) with t = b+1-a.
BigCount kz_hypothesis_cap(long long n, long long a, long long b);

/// g(i) = i^i C(n-i, k-i).
BigCount g_layer(long long n, long long k, long long i);

/// Certified rational enclosures of transcendental constants.
struct Enclosure {
  BigRatio lo, hi;
};
const Enclosure& e_enclosure();
const Enclosure& sqrt_e_enclosure();

/// Rational enclosure of exp(x) for rational x >= 0 built from the certified
/// enclosure of e and a Taylor series with a bounded remainder.
Enclosure exp_enclosure(const BigRatio& x);

}  // namespace kfam
