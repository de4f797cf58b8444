#include "dilate/dilatation.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

using namespace dilate;

namespace {

IntPoly P(const char* text) { return IntPoly::parse(text); }

MTuple diagonal(std::size_t entries, int m) { return MTuple(std::vector<int>(entries, m)); }

}  // namespace

TEST(RChain, Examples) {
  EXPECT_EQ(dominant_polynomial(Prefix({1})), P("t^3 - t^2 - 2t"));
  EXPECT_EQ(dominant_polynomial(Prefix({4})), P("t^6 - t^5 - 2t"));
  EXPECT_EQ(dominant_polynomial(Prefix({1, 1})), P("t^5 - 2t^4 - 5t^3 + 2t"));
  EXPECT_EQ(dominant_polynomial(Prefix({1, 1})), char_poly(dominant_matrix(Prefix({1, 1}))));
  const auto chain = r_chain(Prefix({4, 2, 1}));
  ASSERT_EQ(chain.size(), 3u);
  EXPECT_EQ(chain[0], P("t^6 - t^5 - 2t"));
  EXPECT_EQ(chain[1], dominant_polynomial(Prefix({4, 2})));
}

TEST(BraidPolynomial, Examples) {
  EXPECT_EQ(braid_char_poly(MTuple({4, 2})), P("t^8 - t^7 - 2t^5 - 2t^3 - t + 1"));
  EXPECT_EQ(braid_char_poly(MTuple({1, 1})), P("t^4 - t^3 - 4t^2 - t + 1"));
  const IntPoly r = P("t^6 - t^5 - 2t");
  const IntPoly s = P("-2t^5 - t + 1");
  for (int m = 1; m <= 12; ++m)
    EXPECT_EQ(braid_char_poly(MTuple({4, m})), r.shifted(static_cast<std::size_t>(m)) + s) << m;
}

TEST(BraidPolynomialProperty, DegreeMonicAndUnitConstant) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> v(2 + rng() % 4);
    for (auto& x : v) x = 1 + static_cast<int>(rng() % 7);
    const MTuple m(v);
    const IntPoly p = braid_char_poly(m);
    EXPECT_EQ(p.degree(), static_cast<long>(m.size()));
    EXPECT_TRUE(p.is_monic());
    EXPECT_EQ(abs(p.coeff(0)), 1);
    EXPECT_EQ(p, char_poly(transition_matrix(m))) << m.to_string();
  }
}

TEST(Dilatation, FourTwo) {
  const DilatationReport rep = dilatation(MTuple({4, 2}), Method::kBoth);
  EXPECT_GT(rep.lambda_formula, 1.80);
  EXPECT_LT(rep.lambda_formula, 1.85);
  EXPECT_NEAR(rep.lambda_formula, oracle::bisect(rep.polynomial, 1.80, 1.85), 1e-10);
  ASSERT_TRUE(rep.lambda_matrix && rep.agreement && rep.certificate);
  EXPECT_LE(*rep.agreement, 1e-9);
  EXPECT_TRUE(rep.certificate->primitive);
  EXPECT_DOUBLE_EQ(rep.lambda(), rep.lambda_formula);
}

TEST(Dilatation, OneOne) {
  const double lambda = dilatation(MTuple({1, 1})).lambda_formula;
  EXPECT_GT(lambda, 2.60);
  EXPECT_LT(lambda, 2.65);
}

TEST(Dilatation, MethodSelection) {
  EXPECT_FALSE(dilatation(MTuple({2, 3}), Method::kFormula).lambda_matrix);
  EXPECT_TRUE(dilatation(MTuple({2, 3}), Method::kMatrix).lambda_matrix);
  EXPECT_EQ(parse_method("both"), Method::kBoth);
  EXPECT_EQ(to_string(Method::kMatrix), "matrix");
  EXPECT_THROW((void)parse_method("eigen"), std::invalid_argument);
}

TEST(Dilatation, HighDegreeRootIsCertifiedByExactSigns) {
  // Degree 882 with coefficients far beyond double range; the expanded form
  // cancels catastrophically near the root.
  const MTuple m = diagonal(42, 20);
  const DilatationReport rep = dilatation(m);
  EXPECT_EQ(rep.polynomial.degree(), 882);
  EXPECT_EQ(rep.polynomial.sign_at(rep.lambda_formula + 1e-9), 1);
  EXPECT_EQ(rep.polynomial.sign_at(rep.lambda_formula - 1e-9), -1);
  EXPECT_NEAR(rep.lambda_formula, 1.309422923, 1e-8);
}

TEST(Dilatation, HighDegreeAgreesWithMatrixRoute) {
  const DilatationReport rep = dilatation(diagonal(12, 15), Method::kBoth);
  EXPECT_LE(*rep.agreement, 1e-9);
}

TEST(BraidSampler, SignsAgreeWithExactEvaluation) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> x(1.0, 3.0);
  for (const MTuple& m : {MTuple({4, 2}), diagonal(10, 7), diagonal(30, 12), MTuple({1, 9, 2, 6, 3})}) {
    const IntPoly p = braid_char_poly(m);
    const NewtonSampler fast = braid_sampler(m);
    for (int i = 0; i < 40; ++i) {
      const double v = x(rng);
      const NewtonSample s = fast(v);
      if (s.certain) EXPECT_EQ(s.sign, p.sign_at(v)) << m.to_string() << " at " << v;
    }
  }
}

TEST(LimitDilatation, Examples) {
  EXPECT_NEAR(limit_dilatation(Prefix({4})), 1.45109, 5e-5);
  EXPECT_NEAR(limit_dilatation(Prefix({1})), 2.0, 1e-10);
  const IntPoly r = dominant_polynomial(Prefix({1, 1}));
  EXPECT_NEAR(limit_dilatation(Prefix({1, 1})), oracle::bisect(r, 3.0, 5.0), 1e-10);
}

TEST(LimitDilatationProperty, LowerBoundForEveryLastValue) {
  for (const Prefix& p : {Prefix({4}), Prefix({2, 3}), Prefix({1, 1, 2})}) {
    const double limit = limit_dilatation(p);
    for (int m = 1; m <= 25; m += 3) EXPECT_LT(limit, dilatation(p.append(m)).lambda_formula);
  }
}

TEST(LimitDilatationProperty, SingleEntryPrefixesDecreaseToOne) {
  double previous = limit_dilatation(Prefix({1}));
  for (int m = 2; m <= 320; m = m < 20 ? m + 1 : m * 2) {
    const double current = limit_dilatation(Prefix({m}));
    EXPECT_LT(current, previous) << m;
    EXPECT_GT(current, 1.0);
    previous = current;
  }
  EXPECT_LT(previous, 1.02);
}

TEST(Monotonicity, Examples) {
  EXPECT_TRUE(monotonicity_check(MTuple({1, 1}), 1).strictly_decreasing);
  EXPECT_TRUE(monotonicity_check(MTuple({4, 2}), 2).strictly_decreasing);
  for (int m = 1; m < 10; ++m)
    EXPECT_GT(dilatation(diagonal(2, m)).lambda_formula, dilatation(diagonal(2, m + 1)).lambda_formula);
}

TEST(MonotonicityProperty, DominatingTuplesHaveSmallerDilatation) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> a(2 + rng() % 3), b;
    for (auto& x : a) x = 1 + static_cast<int>(rng() % 6);
    b = a;
    for (auto& x : b) x += static_cast<int>(rng() % 3);
    if (a == b) b.back() += 1;
    EXPECT_GT(dilatation(MTuple(a)).lambda_formula, dilatation(MTuple(b)).lambda_formula);
  }
}

TEST(MonotonicityProperty, DiagonalFamilyIsMonotoneAtHighDegree) {
  double previous = 10;
  for (int m : {1, 2, 5, 10, 20, 40}) {
    const double lambda = dilatation(diagonal(42, m)).lambda_formula;
    EXPECT_LT(lambda, previous) << m;
    previous = lambda;
  }
}

TEST(ConvergenceTable, PrefixFour) {
  const auto rows = convergence_table(Prefix({4}), 1, 30);
  ASSERT_EQ(rows.size(), 30u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(rows[i].lambda, rows[i - 1].lambda);
    EXPECT_LT(rows[i].gap_to_limit, rows[i - 1].gap_to_limit);
  }
  EXPECT_GT(rows.back().gap_to_limit, 0);
  EXPECT_LT(rows.back().gap_to_limit, 1e-4);
  EXPECT_EQ(rows.front().poly_degree, 7);
  EXPECT_THROW((void)convergence_table(Prefix({4}), 5, 4), std::invalid_argument);
}

TEST(ConvergenceTable, CsvLayout) {
  const std::string csv = scan_csv(convergence_table(Prefix({4}), 2, 3));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "tuple;lambda;gap_to_limit;poly_degree");
  EXPECT_NE(csv.find("\n4,2;1.8"), std::string::npos) << csv;
  EXPECT_NE(csv.find(";8\n"), std::string::npos);
  EXPECT_EQ(csv, scan_csv(convergence_table(Prefix({4}), 2, 3)));
}

TEST(SalemBoyd, OutsideRootConvergesToDominantRoot) {
  const IntPoly r = P("t^2 - t - 1");
  const IntPoly rs = r.reciprocal(2);
  for (std::size_t n : {60, 80, 120}) {
    const auto outside = roots_outside_unit_disk(r.shifted(n) + rs);
    ASSERT_EQ(outside.size(), 1u) << n;
    EXPECT_NEAR(outside[0].real(), std::numbers::phi, 1e-6);
  }
}

TEST(Dilatation, EightyEighty) {
  // Reference root from a 50-digit computation on the expanded polynomial.
  const DilatationReport rep = dilatation(MTuple({80, 80}), Method::kBoth);
  EXPECT_NEAR(rep.lambda_formula, 1.0550386635271215, 1e-10);
  EXPECT_LE(*rep.agreement, 1e-9);
  EXPECT_GT(rep.lambda_formula, limit_dilatation(Prefix({80})));
}
