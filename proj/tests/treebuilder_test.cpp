#include "dilate/treebuilder.hpp"

#include "dilate/dilatation.hpp"
#include "golden.hpp"

#include <gtest/gtest.h>

#include <chrono>

using namespace dilate;

namespace {

NNMatrix dense(std::vector<std::vector<NNMatrix::Entry>> rows) { return NNMatrix::from_dense(rows); }

}  // namespace

TEST(Tuples, ConstructionAndIndices) {
  const MTuple m({4, 2});
  EXPECT_EQ(m.k(), 1u);
  EXPECT_EQ(m.n(1), 5u);
  EXPECT_EQ(m.size(), 8u);
  EXPECT_EQ(m.sign(), 1);
  EXPECT_EQ(MTuple({2, 2, 3}).sign(), -1);
  EXPECT_EQ(MTuple({2, 2, 3}).size(), 10u);
  EXPECT_EQ(m.prefix(), Prefix({4}));
  EXPECT_EQ(m.incremented(2), MTuple({4, 3}));
  EXPECT_EQ(Prefix({4}).append(2), m);
  EXPECT_EQ(Prefix({1, 2}).sign(), -1);
  const std::vector<int> v{1, 2, 3};
  EXPECT_EQ(edge_index(v, 2), 5u);
}

TEST(Tuples, ParseAndPrint) {
  EXPECT_EQ(MTuple::parse("4,2"), MTuple({4, 2}));
  EXPECT_EQ(MTuple({2, 2, 3}).to_string(), "2,2,3");
  EXPECT_EQ(parse_prefix("4"), Prefix({4}));
  for (const char* bad : {"", "4", "4,", ",4", "4,0", "4,-1", "a,b", "4;2", "4,2x"})
    EXPECT_THROW((void)MTuple::parse(bad), TupleError) << bad;
  EXPECT_THROW((void)parse_prefix("0"), TupleError);
}

TEST(Tuples, SingleEntryTupleIsUndefined) {
  try {
    MTuple({3});
    FAIL() << "expected TupleError";
  } catch (const TupleError& e) {
    EXPECT_NE(std::string(e.what()).find("at least two entries"), std::string::npos);
  }
  EXPECT_THROW(Prefix({}), TupleError);
}

TEST(TransitionMatrix, GoldenFourTwo) {
  const auto start = std::chrono::steady_clock::now();
  const NNMatrix b = transition_matrix(MTuple({4, 2}));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(b, golden_matrix_4_2());
  EXPECT_LT(seconds, 1.0);
}

TEST(TransitionMatrix, OneOne) {
  EXPECT_EQ(transition_matrix(MTuple({1, 1})),
            dense({{0, 1, 1, 0}, {1, 0, 1, 0}, {1, 0, 1, 1}, {1, 0, 2, 0}}));
  EXPECT_EQ(char_poly(transition_matrix(MTuple({1, 1}))), IntPoly::parse("t^4 - t^3 - 4t^2 - t + 1"));
}

TEST(TransitionMatrix, LastRowOfLengthTwoTuples) {
  for (int m1 = 1; m1 <= 6; ++m1) {
    for (int m2 = 1; m2 <= 6; ++m2) {
      const MTuple m({m1, m2});
      const NNMatrix b = transition_matrix(m);
      const std::size_t n1 = m.n(1);
      const std::size_t n2 = m.size();
      for (std::size_t col = 1; col <= n2; ++col) {
        const NNMatrix::Entry expected = col == 1 ? 1 : (col == n1 + 1 ? 2 : 0);
        EXPECT_EQ(b.at(n2, col), expected) << m.to_string() << " col " << col;
      }
    }
  }
}

TEST(TransitionMatrix, RejectsShortTuples) {
  EXPECT_THROW((void)transition_matrix(MTuple::parse("1")), TupleError);
}

TEST(DominantMatrix, Examples) {
  EXPECT_EQ(dominant_matrix(Prefix({4})), golden_matrix_4_2().upper_left(6));
  EXPECT_EQ(dominant_matrix(Prefix({1})), dense({{0, 1, 1}, {1, 0, 1}, {1, 0, 1}}));
  EXPECT_EQ(char_poly(dominant_matrix(Prefix({1}))), IntPoly::parse("t^3 - t^2 - 2t"));
  EXPECT_EQ(char_poly(dominant_matrix(Prefix({4}))), IntPoly::parse("t^6 - t^5 - 2t"));
}

TEST(DominantMatrix, IndependentOfAppendedValue) {
  for (const Prefix& p : {Prefix({4}), Prefix({1, 3}), Prefix({2, 1, 2})}) {
    const std::size_t n = p.last_edge() + 1;
    EXPECT_EQ(dominant_matrix(p), transition_matrix(p.append(2)).upper_left(n));
    EXPECT_EQ(dominant_matrix(p), transition_matrix(p.append(5)).upper_left(n));
  }
}

TEST(RecessivePolynomials, Examples) {
  EXPECT_EQ(recessive_S(Prefix({4})), IntPoly::parse("-2t^5 - t + 1"));
  EXPECT_EQ(recessive_S(Prefix({1})), IntPoly::parse("-2t^2 - t + 1"));
  EXPECT_EQ(recessive_U(Prefix({4})), IntPoly::parse("t^6 - t^5 - 2t"));
  EXPECT_EQ(recessive_U(Prefix({1})), IntPoly::parse("t^3 - t^2 - 2t"));
}

TEST(RecessivePolynomials, SignedReciprocalOfDominant) {
  for (const Prefix& p : {Prefix({2, 3}), Prefix({1, 1, 1}), Prefix({3, 1, 2, 1})}) {
    const IntPoly r = dominant_polynomial(p);
    EXPECT_EQ(recessive_S(p), r.reciprocal(r.degree()).scaled(p.sign())) << p.to_string();
    EXPECT_EQ(recessive_U(p), r.scaled(p.sign())) << p.to_string();
    EXPECT_EQ(recessive_S(p, 3), recessive_S(p, 1));
    EXPECT_EQ(recessive_U(p, 3), recessive_U(p, 1));
  }
}

TEST(ValidateStructure, PassesOnConstructedMatrices) {
  for (const char* text : {"4,2", "1,1", "2,2,3", "1,5,1,2"}) {
    const StructureReport rep = validate_structure(MTuple::parse(text));
    EXPECT_TRUE(rep.ok()) << text << ": " << rep.failures();
    EXPECT_FALSE(rep.checks.empty());
  }
}

TEST(ValidateStructure, ReportsTamperedEntries) {
  const MTuple m({4, 2});
  auto rows = golden_matrix_4_2().dense();
  rows[7][5] = 1;  // entry (8, 6) must exceed 1
  const StructureReport rep = validate_structure(NNMatrix::from_dense(rows), m);
  EXPECT_FALSE(rep.ok());
  EXPECT_NE(rep.failures().find("(8, 6)"), std::string::npos) << rep.failures();

  rows = golden_matrix_4_2().dense();
  rows[6][7] = 0;  // break the superdiagonal run
  EXPECT_FALSE(validate_structure(NNMatrix::from_dense(rows), m).ok());

  EXPECT_FALSE(validate_structure(golden_matrix_4_2().upper_left(6), m).ok());
}

TEST(TreeMapSpec, CountsRoundTrip) {
  const NNMatrix b = transition_matrix(MTuple({2, 2, 3}));
  const TreeMapSpec spec = TreeMapSpec::from_matrix(b);
  EXPECT_EQ(spec.edge_count, b.size());
  EXPECT_EQ(spec.transition_counts(), b);

  TreeMapSpec reversed;
  reversed.edge_count = 2;
  reversed.images[1] = {2, -2, 1};
  reversed.images[2] = {-1};
  EXPECT_EQ(reversed.transition_counts(), dense({{1, 1}, {2, 0}}));
}
