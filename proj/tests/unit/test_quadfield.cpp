#include <gtest/gtest.h>

#include "m2z/equation.hpp"
#include "m2z/error.hpp"
#include "m2z/quadfield.hpp"
#include "support/reference.hpp"

using m2z::CommutantFrame;
using m2z::Int;
using m2z::Mat2;
using m2z::QuadElem;

namespace {

std::vector<CommutantFrame> small_frames() {
  std::vector<CommutantFrame> out;
  for (int e = -3; e <= 3; ++e)
    for (int f = -3; f <= 3; ++f)
      for (int g = -3; g <= 3; ++g) {
        if (f * g == 0 || m2z::gcd(m2z::gcd(e, f), g) != 1) continue;
        if (CommutantFrame::has_square_discriminant(e, f, g)) continue;
        out.emplace_back(e, f, g);
      }
  return out;
}

// Commutant members with entries in [-6, 6]: alpha I + beta A.
std::vector<Mat2> commutant_members(const CommutantFrame& frame) {
  std::vector<Mat2> out;
  const Mat2 A = frame.matrix();
  for (int beta = -6; beta <= 6; ++beta)
    for (int alpha = -12; alpha <= 12; ++alpha) {
      const Mat2 B = ref::lincomb(alpha, Mat2::identity(), beta, A);
      if (abs(B.e11) <= 6 && abs(B.e12) <= 6 && abs(B.e21) <= 6 && abs(B.e22) <= 6)
        out.push_back(B);
    }
  return out;
}

}  // namespace

TEST(QuadArith, Examples) {
  const QuadElem phi{1, 1, 5};
  EXPECT_EQ(phi * phi, (QuadElem{3, 1, 5}));
  EXPECT_EQ(m2z::conj(QuadElem{6, 4, 3}), (QuadElem{6, -4, 3}));
  for (int D : {-7, -1, 2, 3, 5, 13}) EXPECT_EQ(m2z::norm(QuadElem{2, 0, D}), 1);
  EXPECT_EQ(m2z::norm(phi), -1);
  EXPECT_EQ(phi + phi, (QuadElem{2, 2, 5}));
  EXPECT_EQ(phi - phi, (QuadElem{0, 0, 5}));
}

TEST(QuadArith, MixedFieldsAreRejected) {
  EXPECT_THROW(QuadElem({1, 1, 5}) + QuadElem({2, 0, 3}), m2z::FieldMismatchError);
  EXPECT_THROW(QuadElem({1, 1, 5}) * QuadElem({2, 0, 3}), m2z::FieldMismatchError);
}

TEST(QuadArith, PowMatchesRepeatedProduct) {
  for (int D : {-3, -1, 2, 5}) {
    const int st = (D == -3 || D == 5) ? 1 : 2;  // (1 + sqrt D)/2 or 1 + sqrt D
    const QuadElem x{st, st, D};
    ASSERT_TRUE(x.is_integral());
    QuadElem p = QuadElem::from_int(1, D);
    for (unsigned long n = 0; n <= 10; ++n) {
      EXPECT_EQ(m2z::pow(x, n), p);
      p = p * x;
    }
  }
}

TEST(QuadArith, NormIsMultiplicative) {
  for (int s1 = -4; s1 <= 4; ++s1)
    for (int t1 = -3; t1 <= 3; ++t1)
      for (int s2 = -4; s2 <= 4; s2 += 2)
        for (int t2 = -2; t2 <= 2; t2 += 2) {
          const QuadElem x{2 * s1, 2 * t1, -7};
          const QuadElem y{s2, t2, -7};
          EXPECT_EQ(m2z::norm(x * y), m2z::norm(x) * m2z::norm(y));
        }
}

TEST(CommutantCheck, Examples) {
  const CommutantFrame frame(1, 1, 1);
  EXPECT_TRUE(m2z::commutant_check(Mat2::identity(), frame));
  EXPECT_TRUE(m2z::commutant_check(frame.matrix(), frame));
  EXPECT_FALSE(m2z::commutant_check(Mat2{0, 1, -1, 0}, frame));
}

TEST(Frame, RejectsInvalidData) {
  EXPECT_THROW(CommutantFrame(0, 1, 1), m2z::SquareDiscriminantError);
  EXPECT_THROW(CommutantFrame(1, 0, 1), m2z::PreconditionError);
  EXPECT_THROW(CommutantFrame(2, 2, 4), m2z::PreconditionError);
  try {
    CommutantFrame(0, 1, 1);
  } catch (const m2z::SquareDiscriminantError& e) {
    EXPECT_STREQ(e.what(), "square discriminant");
  }
}

TEST(Frame, DerivedData) {
  const CommutantFrame frame(2, 1, 2);
  EXPECT_EQ(frame.disc(), 12);
  EXPECT_EQ(frame.D(), 3);
  EXPECT_EQ(frame.k(), 2);
}

TEST(Embed, Examples) {
  const CommutantFrame frame(1, 1, 1);
  EXPECT_EQ(m2z::embed(Mat2::scalar(7), frame), (QuadElem{14, 0, 5}));
  EXPECT_EQ(m2z::embed(frame.matrix(), frame), (QuadElem{1, 1, 5}));
  EXPECT_THROW(m2z::embed(Mat2{0, 1, -1, 0}, frame), m2z::NotRepresentableError);
}

TEST(Lift, Examples) {
  const CommutantFrame frame(1, 1, 1);
  EXPECT_EQ(m2z::lift(QuadElem{-6, 0, 5}, frame), Mat2::scalar(-3));
  EXPECT_EQ(m2z::lift(QuadElem{1, 1, 5}, frame), (Mat2{1, 1, 1, 0}));
  EXPECT_THROW(m2z::lift(QuadElem{0, 1, 5}, frame), m2z::NotRepresentableError);
  EXPECT_THROW(m2z::lift(QuadElem{2, 0, 3}, frame), m2z::FieldMismatchError);
  const CommutantFrame wide(2, 1, 2);  // k = 2
  EXPECT_THROW(m2z::lift(QuadElem{2, 1, 3}, wide), m2z::NotRepresentableError);
}

TEST(Embed, RoundTripAndHomomorphismOnSmallFrames) {
  for (const CommutantFrame& frame : small_frames()) {
    const auto members = commutant_members(frame);
    for (const Mat2& B : members) {
      ASSERT_TRUE(m2z::commutant_check(B, frame));
      const QuadElem x = m2z::embed(B, frame);
      ASSERT_TRUE(m2z::divides(frame.k(), x.t));
      ASSERT_EQ(m2z::lift(x, frame), B);
      ASSERT_EQ(m2z::embed(m2z::lift(x, frame), frame), x);
    }
    for (std::size_t i = 0; i < members.size(); i += 3)
      for (std::size_t j = 0; j < members.size(); j += 5) {
        const Mat2& B1 = members[i];
        const Mat2& B2 = members[j];
        ASSERT_EQ(m2z::embed(ref::mul(B1, B2), frame),
                  m2z::embed(B1, frame) * m2z::embed(B2, frame));
        ASSERT_EQ(m2z::embed(B1 + B2, frame), m2z::embed(B1, frame) + m2z::embed(B2, frame));
      }
  }
}

TEST(CommutantSearch, EveryHitSolvesTheMatrixEquation) {
  const m2z::EquationSpec spec{1, -3, -1, 2, 2};
  for (const auto& [e, f, g] : std::vector<std::array<int, 3>>{{-2, 1, 1}, {1, 1, -1}, {2, 1, 2}}) {
    const CommutantFrame frame(e, f, g);
    for (const auto& hit : m2z::commutant_search(spec, frame, 8)) {
      ASSERT_TRUE(ref::solves(hit.X, hit.Y, 1, -3, -1, 2, 2));
      ASSERT_TRUE(ref::same(ref::mul(hit.X, hit.Y), ref::mul(hit.Y, hit.X)));
      ASSERT_EQ(m2z::embed(hit.X, frame), hit.x);
      ASSERT_EQ(hit.nontrivial, hit.X.det() * hit.Y.det() != 0);
    }
  }
}

TEST(CommutantSearch, MinusThreeExampleLivesInARealQuadraticCommutant) {
  // X = [[1,2],[2,5]] commutes with A = [[-2,1],[1,0]] (disc 8, D = 2).
  const m2z::EquationSpec spec{1, -3, -1, 2, 2};
  const CommutantFrame frame(-2, 1, 1);
  EXPECT_EQ(frame.D(), 2);
  const auto hits = m2z::commutant_search(spec, frame, 12);
  bool found = false;
  for (const auto& hit : hits)
    found |= hit.X == Mat2{1, 2, 2, 5} && hit.Y == Mat2{1, 1, 1, 3};
  EXPECT_TRUE(found);
}

TEST(CommutantSearch, NoSolutionOverSqrtThree) {
  // x^2 - 3y^2 = -1 has no solution modulo 3, so nothing lifts either.
  const m2z::EquationSpec spec{1, -3, -1, 2, 2};
  EXPECT_TRUE(m2z::commutant_search(spec, CommutantFrame(2, 1, 2), 20).empty());
}

TEST(CommutantSearch, SixthPowersHaveOnlyTrivialHits) {
  for (int lambda : {1, 2}) {
    const auto spec = m2z::EquationSpec::fermat(lambda, 6);
    for (const auto& [e, f, g] : std::vector<std::array<int, 3>>{{1, 1, -1}, {1, 1, 1}, {0, 1, -1}}) {
      for (const auto& hit : m2z::commutant_search(spec, CommutantFrame(e, f, g), 6)) {
        EXPECT_FALSE(hit.nontrivial) << m2z::to_string(hit.X) << " " << m2z::to_string(hit.Y);
      }
    }
  }
}

TEST(CommutantSearch, BoundZeroIsEmpty) {
  const m2z::EquationSpec spec{1, -3, -1, 2, 2};
  EXPECT_TRUE(m2z::commutant_search(spec, CommutantFrame(-2, 1, 1), 0).empty());
}

TEST(CommutantSearch, OrderedByElementCoordinates) {
  const m2z::EquationSpec spec{1, 1, 2, 2, 2};
  const auto hits = m2z::commutant_search(spec, CommutantFrame(1, 1, -1), 6);
  ASSERT_FALSE(hits.empty());
  for (std::size_t i = 1; i < hits.size(); ++i) {
    const auto& p = hits[i - 1];
    const auto& q = hits[i];
    ASSERT_LE(std::tie(p.x.s, p.x.t, p.y.s, p.y.t), std::tie(q.x.s, q.x.t, q.y.s, q.y.t));
  }
}
