#include "dilate/volume.hpp"

#include "dilate/dilatation.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dilate {

namespace {

constexpr int kSearchCap = 1'000'000;

}  // namespace

double lobachevsky(double theta) {
  if (theta == 0) return 0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto integrand = [](double u) { return -std::log(std::fabs(2 * std::sin(u))); };
  return integrator.integrate(integrand, 0.0, theta);
}

double lobachevsky_kronrod(double theta) {
  if (theta == 0) return 0;
  // -log(2 sin u) = -log(2u) - log(sin(u)/u); the first part integrates
  // in closed form, the second is smooth on [0, theta].
  const double singular = -theta * (std::log(2 * std::fabs(theta)) - 1);
  auto smooth = [](double u) {
    const double ratio = u == 0 ? 1.0 : std::sin(u) / u;
    return -std::log(std::fabs(ratio));
  };
  const double rest =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(smooth, 0.0, theta, 15, 1e-15);
  return singular + rest;
}

double v3() {
  static const double value = 3 * lobachevsky(std::numbers::pi / 3);
  return value;
}

double volume_lower_bound(long k) {
  if (k < 1) throw std::invalid_argument("volume_lower_bound: k must be >= 1");
  return 0.5 * static_cast<double>(k - 1) * v3();
}

std::size_t twist_number(const MTuple& m) { return m.k() + 1; }

double diagonal_dilatation(std::size_t entries, int m) {
  return dilatation(MTuple(std::vector<int>(entries, m)), Method::kFormula).lambda_formula;
}

BoundReport find_parameters(double target_lambda, double target_volume) {
  if (!(target_lambda > 1)) throw std::invalid_argument("find_parameters: target lambda must be > 1");
  if (!(target_volume > 0)) throw std::invalid_argument("find_parameters: target volume must be > 0");

  BoundReport report;
  report.target_lambda = target_lambda;
  report.target_volume = target_volume;

  long k = 1 + static_cast<long>(std::floor(2 * target_volume / v3()));
  while (k > 1 && volume_lower_bound(k - 1) > target_volume) --k;
  while (volume_lower_bound(k) <= target_volume) ++k;
  report.k = k;
  report.volume_bound = volume_lower_bound(k);

  const auto entries = static_cast<std::size_t>(k + 1);
  auto meets = [&](int m) { return diagonal_dilatation(entries, m) < target_lambda; };

  int failing = 0;  // largest m known to miss the target
  int hit = 1;
  while (!meets(hit)) {
    failing = hit;
    if (hit > kSearchCap / 2) {
      std::ostringstream msg;
      msg << "find_parameters: no m <= " << kSearchCap << " reaches lambda < " << target_lambda;
      throw std::runtime_error(msg.str());
    }
    hit *= 2;
  }
  while (hit - failing > 1) {
    const int mid = failing + (hit - failing) / 2;
    if (meets(mid)) {
      hit = mid;
    } else {
      failing = mid;
    }
  }
  report.m = hit;
  report.lambda_achieved = diagonal_dilatation(entries, hit);

  // Off-diagonal spot check: raising one coordinate never raises lambda.
  std::vector<int> bumped(entries, hit);
  bumped.front() += 1;
  const double off = dilatation(MTuple(bumped), Method::kFormula).lambda_formula;
  if (!(off < target_lambda))
    throw std::logic_error("find_parameters: off-diagonal tuple violates the dilatation target");
  return report;
}

}  // namespace dilate
