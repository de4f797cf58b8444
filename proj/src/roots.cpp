// Numerical root extraction for IntPoly: Newton from above with certified
// signs for the largest real root, Aberth iteration for the full spectrum.

#include "dilate/intpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

namespace dilate {

namespace {

using Complex = std::complex<long double>;

constexpr int kScanSteps = 4096;
constexpr double kBisectionWidth = 1e-12;
constexpr int kAberthMaxIterations = 10000;
constexpr long double kAberthStop = 1e-13L;

double root_modulus_bound(const IntPoly& f) {
  return std::min(f.cauchy_bound(), f.fujiwara_bound());
}

// Newton polish that never leaves [lo, hi].
long double polish_in_bracket(const IntPoly& f, const IntPoly& df, long double x, long double lo,
                              long double hi) {
  for (int it = 0; it < 8; ++it) {
    const long double fx = f.evaluate(x);
    const long double dfx = df.evaluate(x);
    if (dfx == 0 || !std::isfinite(fx) || !std::isfinite(dfx)) break;
    const long double next = x - fx / dfx;
    if (!(next >= lo && next <= hi)) break;
    if (std::fabs(next - x) <= std::numeric_limits<long double>::epsilon() * std::fabs(x)) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

// 2^e * v as long double, where v is reduced to at most 64 significant bits.
long double reduced(const BigInt& v, long& e) {
  const BigInt a = abs(v);
  e = 0;
  if (a == 0) return 0;
  const long bits = static_cast<long>(boost::multiprecision::msb(a)) + 1;
  long double top;
  if (bits > 64) {
    e = bits - 64;
    top = static_cast<long double>(static_cast<BigInt>(a >> static_cast<unsigned>(e)));
  } else {
    top = a.convert_to<long double>();
  }
  return v.sign() < 0 ? -top : top;
}

// x = num / 2^shift exactly, with shift >= 0.
void dyadic(double x, BigInt& num, unsigned& shift) {
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  num = static_cast<long long>(std::ldexp(mantissa, 53));
  const int s = 53 - exponent;
  if (s >= 0) {
    shift = static_cast<unsigned>(s);
  } else {
    num <<= static_cast<unsigned>(-s);
    shift = 0;
  }
}

// Real-axis probe with cached long double coefficients. A running rounding
// bound certifies the sign; otherwise f and f' are evaluated exactly. For
// |x| > 1 the reversed polynomial is used so that high degrees never
// overflow.
class RealEvaluator {
public:
  explicit RealEvaluator(const IntPoly& f)
      : f_(f), df_(f.derivative()), lead_sign_(f.leading().sign()) {
    for (const auto& c : f.coeffs()) coeffs_.push_back(c.convert_to<long double>());
  }

  NewtonSample sample(double x) const {
    constexpr long double unit = std::numeric_limits<long double>::epsilon() / 2;
    const std::size_t n = coeffs_.size() - 1;
    const long double lx = x;
    long double v = 0, dv = 0, magnitude = 0;
    long double step = 0;
    int raw_sign = 0;
    if (std::fabs(lx) <= 1) {
      for (std::size_t i = n + 1; i-- > 0;) {
        dv = dv * lx + v;
        v = v * lx + coeffs_[i];
        magnitude = magnitude * std::fabs(lx) + std::fabs(coeffs_[i]);
      }
      step = v / dv;
      raw_sign = v > 0 ? 1 : (v < 0 ? -1 : 0);
    } else {
      // f(x) = x^n q(1/x) and f/f' = x / (n - w q'(w) / q(w)).
      const long double w = 1 / lx;
      for (std::size_t i = 0; i <= n; ++i) {
        dv = dv * w + v;
        v = v * w + coeffs_[i];
        magnitude = magnitude * std::fabs(w) + std::fabs(coeffs_[i]);
      }
      step = lx / (static_cast<long double>(n) - w * dv / v);
      raw_sign = v > 0 ? 1 : (v < 0 ? -1 : 0);
      if (lx < 0 && n % 2 == 1) raw_sign = -raw_sign;
    }
    const long double bound = 1.01L * static_cast<long double>(2 * n + 4) * unit * magnitude;
    if (std::isfinite(v) && std::fabs(v) > bound && std::isfinite(step))
      return {raw_sign * lead_sign_, step, true};
    return exact(x);
  }

  int sign(double x) const { return sample(x).sign; }

private:
  NewtonSample exact(double x) const {
    if (x == 0.0) {
      const BigInt c0 = f_.coeff(0), c1 = f_.coeff(1);
      long e0 = 0, e1 = 0;
      const long double r = c1 == 0 ? 0 : std::ldexp(reduced(c0, e0) / reduced(c1, e1), static_cast<int>(e0 - e1));
      return {c0.sign() * lead_sign_, r, true};
    }
    BigInt num;
    unsigned shift = 0;
    dyadic(x, num, shift);
    // P = 2^(s n) f(x), D = 2^(s (n-1)) f'(x), so f/f' = P / (D 2^s).
    const BigInt p = f_.scaled_value_at_dyadic(num, shift);
    const BigInt d = df_.scaled_value_at_dyadic(num, shift);
    long double step = 0;
    if (d != 0) {
      long ep = 0, ed = 0;
      const long double ratio = reduced(p, ep) / reduced(d, ed);
      step = std::ldexp(ratio, static_cast<int>(ep - ed - static_cast<long>(shift)));
    }
    return {p.sign() * lead_sign_, step, true};
  }

  const IntPoly& f_;
  IntPoly df_;
  int lead_sign_;
  std::vector<long double> coeffs_;
};

// Tries the caller's fast sampler first.
class Prober {
public:
  Prober(const IntPoly& f, const NewtonSampler* fast) : ev_(f), fast_(fast) {}

  NewtonSample sample(double x) const {
    if (fast_ != nullptr && *fast_) {
      const NewtonSample s = (*fast_)(x);
      if (s.certain) return s;
    }
    return ev_.sample(x);
  }

  int sign(double x) const { return sample(x).sign; }

private:
  RealEvaluator ev_;
  const NewtonSampler* fast_;
};

struct CoeffsLD {
  std::vector<long double> up;  // up[i] = coefficient of t^i
  std::size_t degree() const { return up.size() - 1; }
};

// p(z) / p'(z), evaluated on the reversed polynomial when |z| > 1 so that
// high degrees never overflow.
Complex newton_ratio(const CoeffsLD& p, Complex z) {
  const std::size_t n = p.degree();
  if (std::abs(z) <= 1.0L) {
    Complex v = p.up[n];
    Complex dv = 0;
    for (std::size_t i = n; i-- > 0;) {
      dv = dv * z + v;
      v = v * z + p.up[i];
    }
    return v / dv;
  }
  const Complex w = 1.0L / z;
  Complex q = p.up[0];
  Complex dq = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    dq = dq * w + q;
    q = q * w + p.up[i];
  }
  return z / (static_cast<long double>(n) - w * dq / q);
}

struct Bracket {
  double lo;
  double hi;
};

// Descending grid scan from hi to lower for the first sign change.
std::optional<Bracket> scan_for_sign_change(const Prober& ev, double lower, double hi,
                                            std::optional<double>& exact_root) {
  const double step = (hi - lower) / kScanSteps;
  double upper = hi;
  while (upper > lower) {
    const double lo = std::max(lower, upper - step);
    const int s = ev.sign(lo);
    if (s == 0) {
      if (lo > lower) exact_root = lo;
      return std::nullopt;
    }
    if (s < 0) return Bracket{lo, upper};
    upper = lo;
  }
  return std::nullopt;
}

// Newton from above the largest root. When every root has real part below
// the iterate (e.g. the largest root has maximal modulus) each step lands
// in [x - (x - r), x - (x - r)/n] and never passes the largest root r.
// Signs are re-checked after every step, so a crossing yields a bracket.
std::optional<Bracket> newton_from_above(const Prober& ev, double lower, double hi,
                                         std::size_t degree, double tol,
                                         std::optional<double>& exact_root) {
  constexpr long kMaxSteps = 2'000'000;
  double x = hi;
  double prev = hi;
  for (long it = 0; it < kMaxSteps; ++it) {
    const auto s = ev.sample(x);
    if (s.sign == 0) {
      if (x > lower) exact_root = x;
      return std::nullopt;
    }
    if (s.sign < 0) return Bracket{x, prev};
    if (!(s.step > 0) || !std::isfinite(static_cast<double>(s.step))) return std::nullopt;

    const double step = static_cast<double>(s.step);
    const double floor_step = 4 * (std::nextafter(x, HUGE_VAL) - x);
    if (step <= std::max(tol * 1e-2, floor_step)) {
      // Within n * step of the root: widen the offset until the sign flips.
      const double window = static_cast<double>(degree) * std::max(step, floor_step) * 2;
      double positive = x;
      for (double delta = std::max(step, floor_step); delta <= 2 * window; delta *= 2) {
        const double cand = std::max(lower, x - delta);
        const int sc = ev.sign(cand);
        if (sc == 0) {
          if (cand > lower) exact_root = cand;
          return std::nullopt;
        }
        if (sc < 0) return Bracket{cand, positive};
        if (cand == lower) return std::nullopt;
        positive = cand;
      }
      return std::nullopt;
    }
    prev = x;
    x -= step;
    if (x <= lower) {
      const int sl = ev.sign(lower);
      if (sl < 0) return Bracket{lower, prev};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

double find_largest_root(const IntPoly& f, const NewtonSampler* fast, double lower, double tol) {
  if (f.degree() < 1) throw PolyError("largest_real_root: polynomial must be nonconstant");
  if (!(tol > 0)) throw PolyError("largest_real_root: tolerance must be positive");

  auto no_root = [&] {
    std::ostringstream msg;
    msg << "no real root above lower=" << lower << " for " << f.to_string();
    return PolyError(msg.str());
  };

  const double bound = root_modulus_bound(f);
  const double hi = std::nextafter(bound, HUGE_VAL) * (1 + 1e-12) + 1e-300;
  if (hi <= lower) throw no_root();
  const Prober ev(f, fast);

  std::optional<double> exact_root;
  auto bracket = newton_from_above(ev, lower, hi, static_cast<std::size_t>(f.degree()), tol, exact_root);
  if (exact_root) return *exact_root;
  if (!bracket) bracket = scan_for_sign_change(ev, lower, hi, exact_root);
  if (exact_root) return *exact_root;
  if (!bracket) throw no_root();

  double lo = bracket->lo;
  double upper = bracket->hi;
  const double width = std::min(tol, kBisectionWidth);
  while (upper - lo > width) {
    const double mid = lo + (upper - lo) / 2;
    if (mid <= lo || mid >= upper) break;
    const int s = ev.sign(mid);
    if (s == 0) return mid;
    if (s < 0) {
      lo = mid;
    } else {
      upper = mid;
    }
  }
  const long double start = static_cast<long double>(lo) + (upper - lo) / 2.0L;
  return static_cast<double>(polish_in_bracket(f, f.derivative(), start, lo, upper));
}

}  // namespace

NewtonSample newton_sample(const IntPoly& f, double x) {
  if (f.degree() < 1) throw PolyError("newton_sample: polynomial must be nonconstant");
  return RealEvaluator(f).sample(x);
}

double largest_real_root(const IntPoly& f, double lower, double tol) {
  return find_largest_root(f, nullptr, lower, tol);
}

double largest_real_root(const IntPoly& f, const NewtonSampler& sampler, double lower, double tol) {
  return find_largest_root(f, &sampler, lower, tol);
}


std::vector<std::complex<double>> all_roots(const IntPoly& f) {
  if (f.is_zero()) throw PolyError("all_roots: zero polynomial");
  const std::size_t zeros = f.low_order();
  const IntPoly g = f.without_zero_roots();
  std::vector<std::complex<double>> out(zeros, {0.0, 0.0});
  if (g.degree() < 1) return out;

  CoeffsLD p;
  p.up.reserve(g.coeffs().size());
  for (const auto& c : g.coeffs()) p.up.push_back(c.convert_to<long double>());
  const std::size_t n = p.degree();

  if (n == 1) {
    out.emplace_back(static_cast<double>(-p.up[0] / p.up[1]), 0.0);
    return out;
  }

  // Fixed seed: identical inputs give identical root orderings.
  std::mt19937_64 rng(0x5eedULL + n);
  std::uniform_real_distribution<long double> jitter(-0.1L, 0.1L);
  const long double radius = root_modulus_bound(g);
  std::vector<Complex> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long double angle =
        2 * std::numbers::pi_v<long double> * (static_cast<long double>(i) + 0.25L + jitter(rng)) /
        static_cast<long double>(n);
    z[i] = std::polar(radius * (1 + jitter(rng) / 10), angle);
  }

  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  for (int it = 0; it < kAberthMaxIterations && remaining > 0; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Complex ratio = newton_ratio(p, z[i]);
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      const Complex w = ratio / (1.0L - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        done[i] = true;
        --remaining;
        continue;
      }
      z[i] -= w;
      if (std::abs(w) < kAberthStop * std::max(1.0L, std::abs(z[i]))) {
        done[i] = true;
        --remaining;
      }
    }
  }

  for (auto& root : z) {
    for (int it = 0; it < 3; ++it) {
      const Complex ratio = newton_ratio(p, root);
      if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) break;
      const Complex next = root - ratio;
      if (std::abs(next - root) > 1e-6L * std::max(1.0L, std::abs(root))) break;
      root = next;
    }
    long double im = root.imag();
    if (std::fabs(im) <= 1e-14L * std::max(1.0L, std::abs(root))) im = 0;
    out.emplace_back(static_cast<double>(root.real()), static_cast<double>(im));
  }
  return out;
}

std::vector<std::complex<double>> roots_outside_unit_disk(const IntPoly& f, double tol) {
  std::vector<std::complex<double>> out;
  for (const auto& r : all_roots(f))
    if (std::abs(r) > 1 + tol) out.push_back(r);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return out;
}

double max_root_modulus(const IntPoly& f) {
  double mx = 0;
  for (const auto& r : all_roots(f)) mx = std::max(mx, std::abs(r));
  return mx;
}

}  // namespace dilate
