#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kfam {

using BigCount = boost::multiprecision::cpp_int;
using BigRatio = boost::multiprecision::cpp_rational;

/// C(n, k); 0 when k < 0 or k > n (and for negative n).
BigCount binom(long long n, long long k);

/// "p/q" or "p"; throws std::invalid_argument on malformed input or q = 0.
BigRatio parse_ratio(const std::string& text);

std::string to_string(const BigCount& v);
std::string to_string(const BigRatio& v);

}  // namespace kfam
