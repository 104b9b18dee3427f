#include "signrmt/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "signrmt/errors.hpp"

namespace signrmt {

BigInt binomial(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

BigInt double_factorial(std::int64_t n) {
  if (n < -1) throw InvalidArgument("double_factorial: n must be >= -1");
  BigInt result = 1;
  for (std::int64_t i = n; i > 1; i -= 2) result *= i;
  return result;
}

BigInt catalan(std::int64_t k) {
  if (k < 0) throw InvalidArgument("catalan: k must be nonnegative");
  return binomial(2 * k, k) / (k + 1);
}

BigInt matching_count(std::int64_t x) {
  if (x < 0) throw InvalidArgument("matching_count: x must be nonnegative");
  if (x % 2 != 0) return 0;
  if (x == 0) return 1;
  return double_factorial(x - 1);
}

Rational signed_weight(const Rational& p, int e) {
  Rational base = 2 * p - 1;
  Rational result = 1;
  for (int i = 0; i < e; ++i) result *= base;
  return result;
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& v) { return v.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

double to_double(const BigInt& v) { return v.convert_to<double>(); }

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("exact_rational: non-finite value");
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // mantissa * 2^53 is an exact integer for any finite double.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  Rational result{BigInt(scaled)};
  const int shift = exponent - 53;
  BigInt two_pow = 1;
  two_pow <<= std::abs(shift);
  if (shift >= 0) {
    result *= Rational(two_pow);
  } else {
    result /= Rational(two_pow);
  }
  return result;
}

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kBlock = 32;
  if (values.size() <= kBlock) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace signrmt
