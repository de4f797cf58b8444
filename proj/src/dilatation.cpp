#include "dilate/dilatation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dilate {

std::vector<IntPoly> r_chain(const Prefix& prefix) {
  const IntPoly t_minus_one{-1, 1};
  std::vector<IntPoly> chain;
  chain.reserve(prefix.length());
  chain.push_back(t_minus_one.shifted(static_cast<std::size_t>(prefix[0]) + 1) - IntPoly{0, 2});
  for (std::size_t i = 2; i <= prefix.length(); ++i) {
    const IntPoly& r = chain.back();
    const IntPoly twisted = (t_minus_one * r).shifted(static_cast<std::size_t>(prefix[i - 1]));
    const IntPoly feedback = r.reciprocal(r.degree()).shifted(1).scaled(i % 2 == 0 ? 2 : -2);
    chain.push_back(twisted + feedback);
  }
  return chain;
}

IntPoly dominant_polynomial(const Prefix& prefix) { return r_chain(prefix).back(); }

namespace {

// Value and derivative with respect to x.
struct Dual {
  long double v;
  long double d;
};

Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
Dual operator*(long double c, Dual a) { return {c * a.v, c * a.d}; }

Dual power(long double x, int n) {
  return {std::pow(x, n), n == 0 ? 0.0L : n * std::pow(x, n - 1)};
}

// R(x) and R*(x) of a prefix through the pair recursion
//   R_i  = x^mi (x - 1) R_{i-1} + s 2x R*_{i-1}
//   R*_i = (1 - x) R*_{i-1} + s 2 x^mi R_{i-1},   s = (-1)^i,
// which avoids the cancellation of the expanded coefficients. `err_r` and
// `err_rs` are running bounds on the rounding error of the two values. All
// six quantities share a power-of-two factor that keeps them in range.
struct ChainValue {
  Dual r, rs;
  long double err_r, err_rs;
  bool finite;
};

// Relative error allowed per level for each rounded term; covers pow(),
// two products and the sum with room to spare.
constexpr long double kTermError = 8 * std::numeric_limits<long double>::epsilon();

ChainValue evaluate_chain(const Prefix& prefix, long double x) {
  const Dual X{x, 1};
  const Dual one{1, 0};
  const long double ax = std::fabs(x);
  const long double am1 = std::fabs(x - 1);
  const int m1 = prefix[0];
  ChainValue c;
  const Dual p1 = power(x, m1 + 1);
  c.r = p1 * (X + -1 * one) + -2 * X;
  c.rs = one + -1 * X + -2 * p1;
  c.err_r = kTermError * (std::fabs(p1.v) * am1 + 2 * ax);
  c.err_rs = kTermError * (1 + ax + 2 * std::fabs(p1.v));
  for (std::size_t i = 2; i <= prefix.length(); ++i) {
    const long double s = i % 2 == 0 ? 2 : -2;
    const int mi = prefix[i - 1];
    const Dual pw = power(x, mi);
    const long double apw = std::fabs(pw.v);
    const Dual r = pw * (X + -1 * one) * c.r + s * (X * c.rs);
    const Dual rs = (one + -1 * X) * c.rs + s * (pw * c.r);
    const long double err_r = apw * am1 * c.err_r + 2 * ax * c.err_rs +
                              kTermError * (apw * am1 * std::fabs(c.r.v) + 2 * ax * std::fabs(c.rs.v));
    const long double err_rs = am1 * c.err_rs + 2 * apw * c.err_r +
                               kTermError * (am1 * std::fabs(c.rs.v) + 2 * apw * std::fabs(c.r.v));
    int e = 0;
    std::frexp(std::max({std::fabs(r.v), std::fabs(rs.v), err_r, err_rs}), &e);
    c.r = {std::ldexp(r.v, -e), std::ldexp(r.d, -e)};
    c.rs = {std::ldexp(rs.v, -e), std::ldexp(rs.d, -e)};
    c.err_r = std::ldexp(err_r, -e);
    c.err_rs = std::ldexp(err_rs, -e);
  }
  c.finite = std::isfinite(c.err_r) && std::isfinite(c.err_rs) && std::isfinite(c.r.d) &&
             std::isfinite(c.rs.d);
  return c;
}

NewtonSample certify(Dual value, long double error) {
  NewtonSample s;
  if (!std::isfinite(value.v) || !std::isfinite(error) || !(std::fabs(value.v) > 1.01L * error)) return s;
  s.sign = value.v > 0 ? 1 : -1;
  s.step = value.v / value.d;
  s.certain = std::isfinite(s.step);
  return s;
}

}  // namespace

NewtonSampler chain_sampler(const Prefix& prefix) {
  return [prefix](double x) {
    if (!(x > 0)) return NewtonSample{};
    const ChainValue c = evaluate_chain(prefix, x);
    if (!c.finite) return NewtonSample{};
    return certify(c.r, c.err_r);
  };
}

NewtonSampler braid_sampler(const MTuple& m) {
  return [m](double x) {
    if (!(x > 0)) return NewtonSample{};
    const ChainValue c = evaluate_chain(m.prefix(), x);
    if (!c.finite) return NewtonSample{};
    const Dual pw = power(x, m.last());
    const Dual value = pw * c.r + static_cast<long double>(m.sign()) * c.rs;
    const long double apw = std::fabs(pw.v);
    const long double error = apw * c.err_r + c.err_rs +
                              kTermError * (apw * std::fabs(c.r.v) + std::fabs(c.rs.v));
    return certify(value, error);
  };
}

IntPoly braid_char_poly(const MTuple& m) {
  const IntPoly r = dominant_polynomial(m.prefix());
  return r.shifted(static_cast<std::size_t>(m.last())) + r.reciprocal(r.degree()).scaled(m.sign());
}

Method parse_method(std::string_view text) {
  if (text == "formula") return Method::kFormula;
  if (text == "matrix") return Method::kMatrix;
  if (text == "both") return Method::kBoth;
  throw std::invalid_argument("unknown method '" + std::string(text) + "' (formula, matrix, both)");
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kFormula: return "formula";
    case Method::kMatrix: return "matrix";
    case Method::kBoth: return "both";
  }
  return "formula";
}

double DilatationReport::lambda() const {
  if (lambda_formula > 0) return lambda_formula;
  return lambda_matrix.value_or(0.0);
}

DilatationReport dilatation(const MTuple& m, Method method, double tol) {
  DilatationReport report{m, braid_char_poly(m), 0.0, std::nullopt, std::nullopt, std::nullopt};
  report.lambda_formula = largest_real_root(report.polynomial, braid_sampler(m), 1.0, tol);
  if (method != Method::kFormula) {
    PFCertificate cert = spectral_radius(transition_matrix(m), tol);
    report.lambda_matrix = cert.eigenvalue;
    report.agreement = std::fabs(cert.eigenvalue - report.lambda_formula);
    report.certificate = std::move(cert);
  }
  return report;
}

double limit_dilatation(const Prefix& prefix, double tol) {
  const IntPoly r = dominant_polynomial(prefix);
  const double largest = largest_real_root(r, chain_sampler(prefix), 1.0, tol);
  const double modulus = max_root_modulus(r);
  if (std::fabs(largest - modulus) > 1e-9) {
    std::ostringstream msg;
    msg << "limit_dilatation(" << prefix.to_string() << "): largest real root " << largest
        << " differs from maximal root modulus " << modulus;
    throw std::logic_error(msg.str());
  }
  return largest;
}

MonotonicityResult monotonicity_check(const MTuple& m, std::size_t i, double tol) {
  MonotonicityResult r;
  r.lambda_before = dilatation(m, Method::kFormula, tol).lambda_formula;
  r.lambda_after = dilatation(m.incremented(i), Method::kFormula, tol).lambda_formula;
  r.strictly_decreasing = r.lambda_before - r.lambda_after > 10 * tol;
  return r;
}

std::vector<ScanRow> convergence_table(const Prefix& prefix, int first, int last, double tol) {
  if (first < 1 || last < first) throw std::invalid_argument("convergence_table: empty or invalid range");
  const double limit = limit_dilatation(prefix, tol);
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(last - first + 1));
  for (int m = first; m <= last; ++m) {
    const MTuple tuple = prefix.append(m);
    const DilatationReport rep = dilatation(tuple, Method::kFormula, tol);
    rows.push_back({tuple, rep.lambda_formula, rep.lambda_formula - limit, rep.polynomial.degree()});
  }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "tuple;lambda;gap_to_limit;poly_degree\n";
  char buf[64];
  for (const auto& row : rows) {
    os << row.tuple.to_string() << ';';
    std::snprintf(buf, sizeof buf, "%.12f", row.lambda);
    os << buf << ';';
    std::snprintf(buf, sizeof buf, "%.6e", row.gap_to_limit);
    os << buf << ';' << row.poly_degree << '\n';
  }
  return os.str();
}

}  // namespace dilate
