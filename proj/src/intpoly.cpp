#include "dilate/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace dilate {

namespace {

long double to_long_double(const BigInt& v) {
  return v.convert_to<long double>();
}

BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t power) {
  std::vector<BigInt> v(power + 1);
  v[power] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::t() { return monomial(1, 1); }

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw PolyError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

std::size_t IntPoly::low_order() const noexcept {
  std::size_t i = 0;
  while (i < coeffs_.size() && coeffs_[i] == 0) ++i;
  return i == coeffs_.size() ? 0 : i;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) { return *this = *this * other; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(std::size_t n) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(n);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::scaled(const BigInt& c) const {
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  r.normalize();
  return r;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * i;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::without_zero_roots() const {
  const std::size_t z = low_order();
  if (z == 0) return *this;
  return IntPoly(std::vector<BigInt>(coeffs_.begin() + static_cast<long>(z), coeffs_.end()));
}

IntPoly IntPoly::reciprocal(long nominal_degree) const {
  if (nominal_degree < degree()) {
    std::ostringstream msg;
    msg << "nominal degree too small: " << nominal_degree << " < degree " << degree();
    throw PolyError(msg.str());
  }
  if (is_zero()) return {};
  const auto d = static_cast<std::size_t>(nominal_degree);
  std::vector<BigInt> out(d + 1);
  for (std::size_t i = 0; i <= d; ++i) out[i] = coeff(d - i);
  return IntPoly(std::move(out));
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double IntPoly::evaluate(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_long_double(*it);
  return acc;
}

std::complex<long double> IntPoly::evaluate(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + to_long_double(*it);
  return acc;
}

IntPoly::Evaluation IntPoly::evaluate_with_bound(long double x) const {
  long double acc = 0;
  long double magnitude = 0;
  const long double ax = std::fabs(x);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const long double c = to_long_double(*it);
    acc = acc * x + c;
    magnitude = magnitude * ax + std::fabs(c);
  }
  constexpr long double unit = std::numeric_limits<long double>::epsilon() / 2;
  const auto steps = static_cast<long double>(2 * coeffs_.size() + 2);
  return {acc, 1.01L * steps * unit * magnitude};
}

BigInt IntPoly::scaled_value_at_dyadic(const BigInt& num, unsigned shift) const {
  if (is_zero()) return 0;
  const std::size_t d = coeffs_.size() - 1;
  BigInt acc = coeffs_[d];
  for (std::size_t i = d; i-- > 0;) {
    acc *= num;
    if (coeffs_[i] != 0) acc += BigInt(coeffs_[i]) << (shift * (d - i));
  }
  return acc;
}

int IntPoly::sign_at_dyadic(const BigInt& num, unsigned shift) const {
  return scaled_value_at_dyadic(num, shift).sign();
}

int IntPoly::sign_at(double x) const {
  const auto e = evaluate_with_bound(static_cast<long double>(x));
  if (std::isfinite(e.value) && std::fabs(e.value) > e.error_bound) return e.value > 0 ? 1 : -1;
  if (x == 0.0) return coeff(0).sign();
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  BigInt num = static_cast<long long>(std::ldexp(mantissa, 53));
  const int shift = 53 - exponent;
  if (shift >= 0) return sign_at_dyadic(num, static_cast<unsigned>(shift));
  return sign_at_dyadic(num << static_cast<unsigned>(-shift), 0);
}

BigInt IntPoly::l1_norm() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += big_abs(c);
  return s;
}

double IntPoly::cauchy_bound() const {
  const long double lead = std::fabs(to_long_double(leading()));
  long double mx = 0;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
    mx = std::max(mx, std::fabs(to_long_double(coeffs_[i])));
  return static_cast<double>(1.0L + mx / lead);
}

double IntPoly::fujiwara_bound() const {
  const long double lead = std::fabs(to_long_double(leading()));
  const std::size_t n = coeffs_.size() - 1;
  long double mx = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const long double c = std::fabs(to_long_double(coeffs_[n - i])) / lead;
    if (c == 0) continue;
    // The constant term enters halved in Fujiwara's bound.
    const long double term = std::pow(i == n ? c / 2 : c, 1.0L / static_cast<long double>(i));
    mx = std::max(mx, term);
  }
  return static_cast<double>(2 * mx);
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const BigInt mag = big_abs(c);
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

IntPoly IntPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw PolyError("empty polynomial text");

  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> PolyError {
    std::ostringstream msg;
    msg << "cannot parse polynomial '" << text << "': " << why << " at offset " << pos;
    return PolyError(msg.str());
  };
  auto read_digits = [&](std::string& out) {
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) out.push_back(s[pos++]);
  };

  std::vector<BigInt> coeffs;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;

    std::string digits;
    read_digits(digits);
    BigInt c = digits.empty() ? BigInt(1) : BigInt(digits);
    std::size_t power = 0;
    if (!digits.empty() && pos < s.size() && s[pos] == '*') {
      ++pos;
      if (pos >= s.size() || s[pos] != 't') throw fail("expected 't' after '*'");
    }
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string exp;
        read_digits(exp);
        if (exp.empty()) throw fail("expected exponent");
        power = std::stoul(exp);
      }
    } else if (digits.empty()) {
      throw fail("expected a term");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += sign * c;
  }
  return IntPoly(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

}  // namespace dilate
