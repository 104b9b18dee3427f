#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace signrmt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// binom(n, r); zero whenever r < 0 or r > n, so closed forms stay total.
BigInt binomial(std::int64_t n, std::int64_t r);

/// n!! for n >= -1, with (-1)!! = 0!! = 1.
BigInt double_factorial(std::int64_t n);

/// C_k = binom(2k, k) / (k + 1).
BigInt catalan(std::int64_t k);

/// Number of perfect matchings of x points: 0 for odd x, 1 for x = 0,
/// (x-1)!! otherwise.
BigInt matching_count(std::int64_t x);

/// (2p - 1)^e for a rational sign parameter.
Rational signed_weight(const Rational& p, int e);

/// "num/den" (or just "num" when den == 1).
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

double to_double(const Rational& r);
double to_double(const BigInt& v);

/// Exact value of a binary double: 0.75 -> 3/4, but 0.6 is not 3/5.
Rational exact_rational(double x);

/// Pairwise (cascade) summation; result does not depend on how the values
/// were produced, only on their order.
double pairwise_sum(std::span<const double> values);

}  // namespace signrmt
