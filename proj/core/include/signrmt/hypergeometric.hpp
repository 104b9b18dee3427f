#pragma once

namespace signrmt {

/// Which Pfaff image of 2F1(a, b; c; -1) to sum at z = 1/2.
enum class PfaffRoute {
  Auto,    // a terminating image if one exists, else ScaleB
  ScaleA,  // 2^{-a} 2F1(a, c-b; c; 1/2)
  ScaleB,  // 2^{-b} 2F1(c-a, b; c; 1/2)
};

/// Gauss 2F1(a, b; c; -1), defined by analytic continuation.
///
/// The series at z = -1 diverges for the parameter families used by the
/// crossing-mean formula, so the value comes from a Pfaff transformation to
/// z = 1/2. An image whose upper parameter is a nonpositive integer is a
/// finite polynomial; any other image is summed until a term drops below
/// 1e-15 of the partial sum (term ratio tends to 1/2).
///
/// For the two families in the mean formula, (1, 3/2, 5/2-k) and
/// (1, 1/2+k, 3/2), the ScaleA image terminates after k terms.
///
/// Throws PoleError when c is a nonpositive integer and InvalidArgument for
/// non-finite parameters.
double hyp2f1_at_minus_one(double a, double b, double c, PfaffRoute route = PfaffRoute::Auto);

/// Power series of 2F1(a, b; c; z); |z| < 1 unless the series terminates.
double hyp2f1_series(double a, double b, double c, double z);

}  // namespace signrmt
