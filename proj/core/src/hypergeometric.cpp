#include "signrmt/hypergeometric.hpp"

#include <cmath>

#include "signrmt/errors.hpp"

namespace signrmt {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

constexpr int kMaxTerms = 100000;
constexpr double kRelTol = 1e-15;

}  // namespace

double hyp2f1_series(double a, double b, double c, double z) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z)) {
    throw InvalidArgument("hyp2f1_series: non-finite parameter");
  }
  if (is_nonpositive_integer(c)) throw PoleError("hyp2f1_series: c is a nonpositive integer");
  const bool terminates = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  if (!terminates && std::abs(z) >= 1.0) {
    throw InvalidArgument("hyp2f1_series: |z| must be < 1 for a non-terminating series");
  }
  double sum = 1.0;
  double term = 1.0;
  for (int m = 0; m < kMaxTerms; ++m) {
    term *= (a + m) * (b + m) / ((c + m) * (m + 1.0)) * z;
    if (term == 0.0) return sum;
    sum += term;
    if (!terminates && std::abs(term) < kRelTol * std::abs(sum)) return sum;
  }
  throw InvalidArgument("hyp2f1_series: no convergence");
}

double hyp2f1_at_minus_one(double a, double b, double c, PfaffRoute route) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw InvalidArgument("hyp2f1_at_minus_one: non-finite parameter");
  }
  if (is_nonpositive_integer(c)) throw PoleError("hyp2f1_at_minus_one: c is a nonpositive integer");

  auto scale_a = [&] { return std::exp2(-a) * hyp2f1_series(a, c - b, c, 0.5); };
  auto scale_b = [&] { return std::exp2(-b) * hyp2f1_series(c - a, b, c, 0.5); };
  switch (route) {
    case PfaffRoute::ScaleA: return scale_a();
    case PfaffRoute::ScaleB: return scale_b();
    case PfaffRoute::Auto: break;
  }
  if (is_nonpositive_integer(a) || is_nonpositive_integer(c - b)) return scale_a();
  return scale_b();
}

}  // namespace signrmt
