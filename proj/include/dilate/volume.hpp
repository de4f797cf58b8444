#pragma once

#include "dilate/treebuilder.hpp"

namespace dilate {

/// Lobachevsky function -int_0^theta log|2 sin u| du by tanh-sinh
/// quadrature on the raw integrand.
double lobachevsky(double theta);
/// Same function by Gauss-Kronrod after subtracting the log singularity
/// at 0 analytically. Independent of lobachevsky().
double lobachevsky_kronrod(double theta);

/// Volume of the regular ideal tetrahedron, 3 * lobachevsky(pi/3).
double v3();

/// (k - 1) v3 / 2; throws std::invalid_argument for k < 1.
double volume_lower_bound(long k);

/// k + 1 twist regions for the closure of the braid of m.
std::size_t twist_number(const MTuple& m);

struct BoundReport {
  long k = 0;
  int m = 0;
  double lambda_achieved = 0;
  double volume_bound = 0;
  double target_lambda = 0;
  double target_volume = 0;
};

/// Smallest k with volume_lower_bound(k) > target_volume, then the smallest
/// m with lambda((m, ..., m)) < target_lambda (k+1 entries), found by
/// doubling and bisection. Any tuple dominating (m, ..., m) coordinatewise
/// also meets the dilatation target.
BoundReport find_parameters(double target_lambda, double target_volume);

/// Dilatation of the diagonal tuple (m, ..., m) with `entries` entries.
double diagonal_dilatation(std::size_t entries, int m);

}  // namespace dilate
