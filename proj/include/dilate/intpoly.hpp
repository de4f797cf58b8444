#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dilate {

using BigInt = boost::multiprecision::cpp_int;

/// Default numerical tolerance shared by root finding and spectral routines.
inline constexpr double kDefaultTol = 1e-10;

class PolyError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Polynomial in one indeterminate t with arbitrary-precision integer
/// coefficients. coeffs()[i] is the coefficient of t^i. The stored sequence
/// never ends in a zero; the zero polynomial has no coefficients.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t power);
  /// The indeterminate t.
  static IntPoly t();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  /// Number of factors t dividing the polynomial (0 for the zero polynomial).
  std::size_t low_order() const noexcept;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  /// Multiply by t^n.
  IntPoly shifted(std::size_t n) const;
  /// Multiply every coefficient by c.
  IntPoly scaled(const BigInt& c) const;
  IntPoly derivative() const;
  /// Divide by t^low_order().
  IntPoly without_zero_roots() const;

  /// t^d f(1/t). Throws PolyError when d < degree().
  IntPoly reciprocal(long nominal_degree) const;

  BigInt evaluate(const BigInt& x) const;
  long double evaluate(long double x) const;
  std::complex<long double> evaluate(std::complex<long double> z) const;

  /// Horner evaluation together with a running rounding-error bound.
  struct Evaluation {
    long double value;
    long double error_bound;
  };
  Evaluation evaluate_with_bound(long double x) const;

  /// 2^(shift * degree) * f(num / 2^shift), exactly.
  BigInt scaled_value_at_dyadic(const BigInt& num, unsigned shift) const;
  /// Exact sign of f(num / 2^shift).
  int sign_at_dyadic(const BigInt& num, unsigned shift) const;
  /// Sign of f(x) for a finite double x, exact when rounding could matter.
  int sign_at(double x) const;

  /// Sum of absolute values of the coefficients.
  BigInt l1_norm() const;
  /// 1 + max |a_i| / |a_lead|.
  double cauchy_bound() const;
  /// 2 * max |a_{n-i} / a_n|^(1/i); a usually tighter bound on root moduli.
  double fujiwara_bound() const;

  /// "t^6 - t^5 - 2*t"; the zero polynomial renders as "0".
  std::string to_string() const;
  /// Inverse of to_string(); also accepts optional spaces, '+' and '*'.
  static IntPoly parse(std::string_view text);

private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// One Newton probe at a real point: the sign of f(x) / leading coefficient
/// and the step f(x) / f'(x). `certain` is false when rounding could have
/// flipped the sign.
struct NewtonSample {
  int sign = 0;
  long double step = 0;
  bool certain = false;
};

/// Fast problem-specific evaluation of the same polynomial. Uncertain
/// samples are recomputed on the exact coefficients.
using NewtonSampler = std::function<NewtonSample(double)>;

/// Probe of f at x: long double Horner with a rounding bound, exact
/// arithmetic when the bound cannot decide. Always certain.
NewtonSample newton_sample(const IntPoly& f, double x);

/// Largest real root above `lower`, accurate to tol. Throws PolyError if
/// no real root exceeds `lower`.
double largest_real_root(const IntPoly& f, double lower = 1.0, double tol = kDefaultTol);
/// Same, probing f through `sampler` first.
double largest_real_root(const IntPoly& f, const NewtonSampler& sampler, double lower, double tol);

/// All complex roots of f with modulus > 1 + tol, counted with multiplicity,
/// in descending order of modulus.
std::vector<std::complex<double>> roots_outside_unit_disk(const IntPoly& f,
                                                          double tol = kDefaultTol);

/// Every complex root of f (zero roots included), via simultaneous iteration.
std::vector<std::complex<double>> all_roots(const IntPoly& f);

/// Maximal modulus of the roots of f; 0 when f has only zero roots.
double max_root_modulus(const IntPoly& f);

}  // namespace dilate
