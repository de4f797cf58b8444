#pragma once

#include "dilate/intpoly.hpp"
#include "dilate/nnmatrix.hpp"
#include "dilate/treebuilder.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dilate {

/// R_(m1), R_(m1,m2), ..., R_(m1..mk):
///   R_(m1)      = t^(m1+1) (t - 1) - 2t
///   R_(m1..mi)  = t^mi (t - 1) R_(m1..m(i-1)) + (-1)^i 2t R_(m1..m(i-1))*
/// with reciprocals taken at the actual degree.
std::vector<IntPoly> r_chain(const Prefix& prefix);

/// Last element of r_chain(prefix).
IntPoly dominant_polynomial(const Prefix& prefix);

/// t^(m_{k+1}) R + (-1)^(k+1) R*, R = R_(m1..mk).
IntPoly braid_char_poly(const MTuple& m);

/// Fast certified probes of R_(prefix) and of braid_char_poly(m) for the
/// root finder, evaluated through the chain recursion rather than the
/// expanded coefficients.
NewtonSampler chain_sampler(const Prefix& prefix);
NewtonSampler braid_sampler(const MTuple& m);

enum class Method { kFormula, kMatrix, kBoth };

Method parse_method(std::string_view text);
std::string_view to_string(Method method);

struct DilatationReport {
  MTuple tuple;
  IntPoly polynomial;
  double lambda_formula = 0;
  std::optional<double> lambda_matrix;
  std::optional<double> agreement;
  std::optional<PFCertificate> certificate;

  /// lambda_formula when computed; otherwise the matrix value.
  double lambda() const;
};

/// The formula route always runs; the matrix route (PF eigenvalue of the
/// transition matrix) runs for kMatrix and kBoth.
DilatationReport dilatation(const MTuple& m, Method method = Method::kFormula,
                            double tol = kDefaultTol);

/// lim of lambda(prefix ++ (m)) as m grows: the maximal root modulus of the
/// dominant polynomial. Throws std::logic_error if the largest real root
/// and the maximal modulus disagree by more than 1e-9.
double limit_dilatation(const Prefix& prefix, double tol = kDefaultTol);

struct MonotonicityResult {
  double lambda_before = 0;
  double lambda_after = 0;
  bool strictly_decreasing = false;
};

/// Compares lambda(m) with lambda(m with m_i + 1), 1 <= i <= k+1.
MonotonicityResult monotonicity_check(const MTuple& m, std::size_t i, double tol = kDefaultTol);

struct ScanRow {
  MTuple tuple;
  double lambda = 0;
  double gap_to_limit = 0;
  long poly_degree = 0;
};

/// Rows for prefix ++ (m_last), m_last = first..last.
std::vector<ScanRow> convergence_table(const Prefix& prefix, int first, int last,
                                       double tol = kDefaultTol);

/// "tuple;lambda;gap_to_limit;poly_degree" with a header line.
std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace dilate
