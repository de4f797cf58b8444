#include "dilate/verify.hpp"

#include "dilate/dilatation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dilate {

namespace {

constexpr std::size_t kMaxRecordedFailures = 20;
constexpr double kAgreementTol = 1e-9;
constexpr double kMonotoneGap = 1e-6;

// Calls fn(values) for every vector of the given length over 1..max_m, in
// lexicographic order.
template <typename Fn>
void for_each_vector(std::size_t length, int max_m, Fn&& fn) {
  std::vector<int> v(length, 1);
  while (true) {
    fn(v);
    std::size_t pos = length;
    while (pos > 0 && v[pos - 1] == max_m) v[--pos] = 1;
    if (pos == 0) return;
    ++v[pos - 1];
  }
}

class Recorder {
public:
  explicit Recorder(GridSummary& s) : s_(s) {}

  void record(const std::string& check, bool ok, const std::string& subject) {
    auto& tally = s_.checks[check];
    ++tally.total;
    if (ok) {
      ++tally.passed;
    } else if (s_.failures.size() < kMaxRecordedFailures) {
      s_.failures.push_back(check + " failed for (" + subject + ")");
    }
  }

private:
  GridSummary& s_;
};

}  // namespace

GridSummary verify_grid(int max_k, int max_m) {
  if (max_k < 1 || max_m < 1) throw std::invalid_argument("verify_grid: max_k and max_m must be >= 1");
  GridSummary summary;
  summary.max_k = max_k;
  summary.max_m = max_m;
  Recorder rec(summary);

  for (std::size_t len = 1; len <= static_cast<std::size_t>(max_k); ++len) {
    for_each_vector(len, max_m, [&](const std::vector<int>& v) {
      const Prefix prefix(v);
      const std::string name = prefix.to_string();
      ++summary.prefixes;
      const IntPoly r = dominant_polynomial(prefix);
      const NNMatrix dom = dominant_matrix(prefix);
      rec.record("dominant char poly = R", char_poly(dom) == r, name);
      rec.record("dominant matrix primitive", is_primitive(dom), name);
      const IntPoly s1 = recessive_S(prefix, 1);
      const IntPoly u1 = recessive_U(prefix, 1);
      rec.record("S = sign * R_*", s1 == r.reciprocal(r.degree()).scaled(prefix.sign()), name);
      rec.record("U = sign * R", u1 == r.scaled(prefix.sign()), name);
      rec.record("S, U independent of appended value",
                 recessive_S(prefix, 2) == s1 && recessive_U(prefix, 2) == u1, name);
    });
  }

  for (std::size_t len = 2; len <= static_cast<std::size_t>(max_k) + 1; ++len) {
    for_each_vector(len, max_m, [&](const std::vector<int>& v) {
      const MTuple m(v);
      const std::string name = m.to_string();
      ++summary.tuples;
      const NNMatrix b = transition_matrix(m);
      const IntPoly p = braid_char_poly(m);
      rec.record("formula = char poly", p == char_poly(b), name);
      rec.record("anti-reciprocity",
                 p == p.reciprocal(static_cast<long>(m.size())).scaled(m.sign()), name);
      rec.record("structure", validate_structure(b, m).ok(), name);
      rec.record("transition matrix irreducible", is_irreducible(b), name);
      const bool primitive = is_primitive(b);
      rec.record("transition matrix primitive", primitive, name);
      if (!primitive) return;

      const DilatationReport rep = dilatation(m, Method::kBoth);
      rec.record("spectral radius = largest root", *rep.agreement <= kAgreementTol, name);
      for (std::size_t i = 1; i <= m.length(); ++i) {
        const double after = dilatation(m.incremented(i), Method::kFormula).lambda_formula;
        rec.record("monotone in each coordinate", rep.lambda_formula - after > kMonotoneGap, name);
      }
    });
  }
  return summary;
}

std::string GridSummary::to_text() const {
  std::ostringstream os;
  os << "grid: k+1 in 2.." << max_k + 1 << ", m_i in 1.." << max_m << " (" << tuples << " tuples, "
     << prefixes << " prefixes)\n";
  for (const auto& [name, tally] : checks)
    os << (tally.passed == tally.total ? "PASS " : "FAIL ") << name << ": " << tally.passed << '/'
       << tally.total << '\n';
  for (const auto& f : failures) os << "  " << f << '\n';
  os << (all_passed() ? "all checks passed" : "some checks failed") << '\n';
  return os.str();
}

}  // namespace dilate
