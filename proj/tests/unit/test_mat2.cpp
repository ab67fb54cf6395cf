#include <gtest/gtest.h>

#include <random>

#include "m2z/error.hpp"
#include "m2z/mat2.hpp"
#include "support/reference.hpp"

using m2z::Int;
using m2z::Mat2;
using m2z::MatOp;

namespace {

const Mat2 kI = Mat2::identity();

// y_n as the closed binomial sum sum_j (-1)^j C(n-j, j) T^(n-2j) D^j.
Int binomial_sequence(const Int& trace, const Int& det, unsigned long n) {
  Int total = 0;
  for (unsigned long j = 0; 2 * j <= n; ++j) {
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), n - j, j);
    Int term = binom * m2z::pow(trace, n - 2 * j) * m2z::pow(det, j);
    total += (j % 2 == 0) ? term : Int(-term);
  }
  return total;
}

}  // namespace

TEST(MatArith, Examples) {
  const Mat2 A{3, 1, 2, 5};
  EXPECT_EQ(m2z::mat_arith(kI, A, MatOp::mul), A);
  EXPECT_EQ(m2z::mat_arith(Mat2{1, 1, 1, 0}, Mat2{1, 1, 1, 0}, MatOp::mul), (Mat2{2, 1, 1, 1}));
  EXPECT_EQ(m2z::mat_arith(A, A, MatOp::sub), Mat2::zero());
  EXPECT_EQ(m2z::mat_arith(A, A, MatOp::add), (Mat2{6, 2, 4, 10}));
  EXPECT_EQ(m2z::mat_arith(A, Mat2::zero(), MatOp::scalar_mul, -2), (Mat2{-6, -2, -4, -10}));
}

TEST(MatArith, TraceAndDeterminant) {
  const Mat2 A{3, 1, 2, 5};
  EXPECT_EQ(A.trace(), 8);
  EXPECT_EQ(A.det(), 13);
}

TEST(PowClosed, Examples) {
  const Mat2 A{3, 1, 2, 5};
  EXPECT_EQ(m2z::pow_closed(A, 1), A);
  EXPECT_EQ(m2z::pow_closed(Mat2{1, 1, 1, 0}, 10), (Mat2{89, 55, 55, 34}));
  EXPECT_EQ(m2z::pow_closed(Mat2{0, 1, -1, 0}, 2), (Mat2{-1, 0, 0, -1}));
  EXPECT_THROW(m2z::pow_closed(A, 0), m2z::PreconditionError);
}

TEST(PowClosed, MatchesRepeatedMultiplicationOnBox) {
  for (const Mat2& A : ref::box(2)) {
    for (unsigned long n = 1; n <= 9; ++n) {
      ASSERT_EQ(m2z::pow_closed(A, n), ref::pow(A, n)) << m2z::to_string(A) << "^" << n;
    }
  }
}

TEST(PowClosed, MatchesRepeatedMultiplicationOnRandomMatrices) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<unsigned long> exponent(1, 15);
  for (int i = 0; i < 300; ++i) {
    const Mat2 A{entry(rng), entry(rng), entry(rng), entry(rng)};
    const unsigned long n = exponent(rng);
    ASSERT_EQ(m2z::pow_closed(A, n), ref::pow(A, n));
  }
}

TEST(PowClosed, LargeExponentStaysExact) {
  // Fibonacci numbers past 64 bits: [[1,1],[1,0]]^n = [[F(n+1), F(n)], [F(n), F(n-1)]].
  const Mat2 P = m2z::pow_closed(Mat2{1, 1, 1, 0}, 200);
  Int f;
  mpz_fib_ui(f.get_mpz_t(), 200);
  EXPECT_EQ(P.e12, f);
  EXPECT_EQ(P.e11, P.e12 + P.e22);
}

TEST(PowerSequence, RecurrenceMatchesBinomialSum) {
  for (int t = -4; t <= 4; ++t)
    for (int d = -4; d <= 4; ++d)
      for (unsigned long n = 0; n <= 12; ++n)
        ASSERT_EQ(m2z::power_sequence(t, d, n), binomial_sequence(t, d, n))
            << "T=" << t << " D=" << d << " n=" << n;
}

TEST(Commutes, Examples) {
  EXPECT_TRUE(m2z::commutes(kI, Mat2{1, 2, 3, 4}));
  EXPECT_TRUE(m2z::commutes(Mat2{2, 2, 3, 1}, Mat2{3, 4, 6, 1}));
  EXPECT_FALSE(m2z::commutes(Mat2{0, 1, -1, 0}, Mat2{0, 1, -2, 0}));
}

TEST(Commutes, CommVectorIsDifferenceAndOffDiagonal) {
  const auto v = m2z::comm_vector(Mat2{2, 2, 3, 1});
  EXPECT_EQ(v.v1, 1);
  EXPECT_EQ(v.v2, 2);
  EXPECT_EQ(v.v3, 3);
}

TEST(Commutes, AgreesWithProductComparison) {
  const auto all = ref::box(2);
  const auto subset = ref::box(1);
  for (const Mat2& A : all)
    for (const Mat2& B : subset)
      ASSERT_EQ(m2z::commutes(A, B), ref::same(ref::mul(A, B), ref::mul(B, A)));
}

TEST(ScalarOrder, Examples) {
  using m2z::ScalarOrder;
  EXPECT_EQ(m2z::scalar_order_classify(Mat2{3, 0, 0, 3}), (ScalarOrder{1, 3}));
  EXPECT_EQ(m2z::scalar_order_classify(Mat2{1, 1, -1, 0}), (ScalarOrder{3, -1}));
  EXPECT_EQ(m2z::scalar_order_classify(Mat2{1, 1, -1, 1}), (ScalarOrder{4, -4}));
  EXPECT_EQ(m2z::scalar_order_classify(Mat2{2, 1, -1, 1}), (ScalarOrder{6, -27}));
  EXPECT_EQ(m2z::scalar_order_classify(Mat2::zero()), (ScalarOrder{1, 0}));
  EXPECT_EQ(m2z::scalar_order_classify(Mat2{0, 1, 0, 0}), (ScalarOrder{2, 0}));
  EXPECT_EQ(m2z::scalar_order_classify(Mat2{1, 1, 1, 0}), std::nullopt);
  EXPECT_EQ(m2z::scalar_order_classify(Mat2{1, 0, 0, 0}), std::nullopt);
}

TEST(ScalarOrder, AgreesWithDefinitionOnBox) {
  for (const Mat2& A : ref::box(3)) {
    const auto got = m2z::scalar_order_classify(A);
    const auto want = ref::scalar_order(A);
    ASSERT_EQ(got.has_value(), want.has_value()) << m2z::to_string(A);
    if (got) {
      EXPECT_EQ(got->k, want->first) << m2z::to_string(A);
      EXPECT_EQ(got->value, want->second) << m2z::to_string(A);
      EXPECT_EQ(m2z::pow_closed(A, got->k), Mat2::scalar(got->value));
    }
  }
}

TEST(ScalarOrder, QuarticValueHasBothForms) {
  // X^4 = -(det)^2 I and, writing det = 2w^2, X^4 = -4 w^4 I.
  for (int w = -3; w <= 3; ++w) {
    if (w == 0) continue;
    const Mat2 X{0, 1, -2 * w * w, 2 * w};  // trace 2w, det 2w^2
    const auto order = m2z::scalar_order_classify(X);
    ASSERT_TRUE(order);
    EXPECT_EQ(order->k, 4);
    EXPECT_EQ(order->value, -(X.det() * X.det()));
    EXPECT_EQ(order->value, -4 * m2z::pow(w, 4));
  }
}

TEST(IsScalarPower, Examples) {
  EXPECT_EQ(m2z::is_scalar_power(Mat2{0, 1, -1, 0}, 6), Int(-1));
  EXPECT_EQ(m2z::is_scalar_power(Mat2{1, 1, -1, 0}, 4), std::nullopt);
  EXPECT_EQ(m2z::is_scalar_power(Mat2::scalar(5), 7), m2z::pow(5, 7));
}

TEST(IsScalarPower, AgreesWithPowClosed) {
  for (const Mat2& A : ref::box(2)) {
    for (unsigned long m = 1; m <= 12; ++m) {
      const Mat2 P = ref::pow(A, m);
      const auto got = m2z::is_scalar_power(A, m);
      ASSERT_EQ(got.has_value(), ref::scalar(P)) << m2z::to_string(A) << "^" << m;
      if (got) EXPECT_EQ(*got, P.e11);
    }
  }
}

TEST(ParseMat2, AcceptsWhitespaceAndSigns) {
  EXPECT_EQ(m2z::parse_mat2("[[1,2],[3,4]]"), (Mat2{1, 2, 3, 4}));
  EXPECT_EQ(m2z::parse_mat2(" [ [ -1 , 2 ] , [3,-4] ] "), (Mat2{-1, 2, 3, -4}));
  EXPECT_EQ(m2z::to_string(Mat2{-1, 2, 3, -4}), "[[-1,2],[3,-4]]");
}

TEST(ParseMat2, RejectsMalformedText) {
  for (const char* bad : {"", "[[1,2],[3]]", "[[1,2],[3,4]", "[[1,2],[3,4]]x", "[[a,2],[3,4]]",
                          "[1,2,3,4]"}) {
    EXPECT_THROW(m2z::parse_mat2(bad), m2z::ParseError) << bad;
  }
}

TEST(ParseMat2, RoundTripsThroughText) {
  for (const Mat2& A : ref::box(1)) EXPECT_EQ(m2z::parse_mat2(m2z::to_string(A)), A);
}
