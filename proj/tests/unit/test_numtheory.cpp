#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "m2z/error.hpp"
#include "m2z/numtheory.hpp"
#include "support/reference.hpp"

using m2z::Int;
using m2z::IntPair;

namespace {

std::set<IntPair> as_set(const std::vector<IntPair>& v) { return {v.begin(), v.end()}; }

bool contains(const std::vector<IntPair>& v, const IntPair& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

}  // namespace

TEST(PerfectSquare, Examples) {
  EXPECT_TRUE(m2z::is_perfect_square(0));
  EXPECT_TRUE(m2z::is_perfect_square(49));
  EXPECT_FALSE(m2z::is_perfect_square(48));
  EXPECT_FALSE(m2z::is_perfect_square(-4));
}

TEST(Legendre, Examples) {
  for (int p : {3, 5, 7, 11, 13}) EXPECT_EQ(m2z::legendre(1, p), 1);
  EXPECT_EQ(m2z::legendre(-1, 3), -1);
  EXPECT_EQ(m2z::legendre(-2, 5), -1);
  EXPECT_EQ(m2z::legendre(10, 5), 0);
}

TEST(Legendre, MatchesSquaresModP) {
  for (int p : {3, 5, 7, 11, 13, 17, 19, 23, 29}) {
    std::set<int> squares;
    for (int x = 1; x < p; ++x) squares.insert(x * x % p);
    for (int a = -40; a <= 40; ++a) {
      const int r = ((a % p) + p) % p;
      const int want = r == 0 ? 0 : (squares.count(r) ? 1 : -1);
      ASSERT_EQ(m2z::legendre(a, p), want) << a << "/" << p;
    }
  }
}

TEST(Legendre, RejectsBadModulus) {
  EXPECT_THROW(m2z::legendre(1, 2), m2z::PreconditionError);
  EXPECT_THROW(m2z::legendre(1, 9), m2z::PreconditionError);
  EXPECT_THROW(m2z::legendre(1, -3), m2z::PreconditionError);
}

TEST(Squarefree, Examples) {
  auto d = m2z::squarefree_decompose(12);
  EXPECT_EQ(d.D, 3);
  EXPECT_EQ(d.k, 2);
  d = m2z::squarefree_decompose(5);
  EXPECT_EQ(d.D, 5);
  EXPECT_EQ(d.k, 1);
  d = m2z::squarefree_decompose(-8);
  EXPECT_EQ(d.D, -2);
  EXPECT_EQ(d.k, 2);
  EXPECT_THROW(m2z::squarefree_decompose(0), m2z::PreconditionError);
}

TEST(Squarefree, DecomposesEveryNonzeroInRange) {
  for (int n = -500; n <= 500; ++n) {
    if (n == 0) continue;
    const auto d = m2z::squarefree_decompose(n);
    ASSERT_EQ(d.k * d.k * d.D, n);
    ASSERT_GT(d.k, 0);
    for (int p = 2; p * p <= 500; ++p) ASSERT_FALSE(m2z::divides(p * p, d.D)) << n;
  }
}

TEST(Pell, Examples) {
  auto s = m2z::pell_fundamental(3);
  EXPECT_EQ(s.u, 2);
  EXPECT_EQ(s.v, 1);
  s = m2z::pell_fundamental(5);
  EXPECT_EQ(s.u, 9);
  EXPECT_EQ(s.v, 4);
  s = m2z::pell_fundamental(2);
  EXPECT_EQ(s.u, 3);
  EXPECT_EQ(s.v, 2);
  EXPECT_EQ(s.N, 1);
}

TEST(Pell, MatchesBruteForceUpTo50) {
  for (int D = 2; D <= 50; ++D) {
    if (m2z::is_perfect_square(D)) continue;
    const auto s = m2z::pell_fundamental(D);
    const auto [u, v] = ref::pell(D);
    ASSERT_EQ(s.u, u) << D;
    ASSERT_EQ(s.v, v) << D;
    ASSERT_EQ(s.u * s.u - D * s.v * s.v, 1);
  }
}

TEST(Pell, LargeFundamentalSolution) {
  const auto s = m2z::pell_fundamental(61);
  EXPECT_EQ(s.u, Int("1766319049"));
  EXPECT_EQ(s.v, Int("226153980"));
}

TEST(Pell, RejectsSquareOrNonpositive) {
  EXPECT_THROW(m2z::pell_fundamental(4), m2z::PreconditionError);
  EXPECT_THROW(m2z::pell_fundamental(0), m2z::PreconditionError);
  EXPECT_THROW(m2z::pell_fundamental(-3), m2z::PreconditionError);
}

TEST(UvSolutions, PrimeThreeModFourHasOnlyTrivialPoints) {
  for (int p : {3, 7, 11, 19}) {
    const auto got = m2z::uv_solutions(1, 1, p, 100);
    EXPECT_EQ(as_set(got), (std::set<IntPair>{{-p, 0}, {p, 0}, {0, -p}, {0, p}})) << p;
  }
}

TEST(UvSolutions, StreamForMinusThree) {
  const auto got = m2z::uv_solutions(1, -3, -1, 12);
  ASSERT_GE(got.size(), 10U);
  EXPECT_EQ(got[0], (IntPair{-1, 0}));
  EXPECT_EQ(got[1], (IntPair{1, 0}));
  EXPECT_TRUE(contains(got, {2, 1}));
  EXPECT_TRUE(contains(got, {-2, -1}));
  EXPECT_TRUE(contains(got, {7, 4}));
  EXPECT_TRUE(contains(got, {-7, 4}));
}

TEST(UvSolutions, StreamForMinusFive) {
  const auto got = m2z::uv_solutions(1, -5, 2, 40);
  for (const IntPair& p : {IntPair{3, 1}, IntPair{-3, -1}, IntPair{18, 8}, IntPair{-18, 8}}) {
    EXPECT_TRUE(contains(got, p)) << p.first << "," << p.second;
  }
}

TEST(UvSolutions, OrderedByMagnitudeThenSign) {
  const auto got = m2z::uv_solutions(1, -5, -2, 60);
  for (std::size_t i = 1; i < got.size(); ++i) {
    const auto key = [](const IntPair& p) {
      return std::make_tuple(Int(abs(p.first)), Int(abs(p.second)), sgn(p.first), sgn(p.second));
    };
    ASSERT_LT(key(got[i - 1]), key(got[i]));
  }
}

TEST(UvSolutions, DefiniteCaseMatchesExhaustiveSearch) {
  for (int a = 1; a <= 20; a += 3)
    for (int b = 1; b <= 20; b += 2)
      for (int c = -20; c <= 20; c += 3) {
        if (c == 0 || m2z::gcd(m2z::gcd(a, b), c) != 1) continue;
        const auto got = m2z::uv_solutions(a, b, c, 1);
        ASSERT_EQ(as_set(got), ref::uv_box(a, b, c, Int(std::abs(c))))
            << a << " " << b << " " << c;
        for (const auto& [u, v] : got) ASSERT_EQ(u * u + a * b * v * v, c * c);
      }
}

TEST(UvSolutions, IndefiniteCaseMatchesExhaustiveSearch) {
  const Int U = 10000;
  for (const auto& [a, b, c] : std::vector<std::array<int, 3>>{
           {1, -3, -1}, {1, -5, 2}, {1, -5, -2}, {1, -2, 7}, {2, -3, 5}, {1, -6, 5}, {3, -1, 2}}) {
    const auto got = m2z::uv_solutions_upto(a, b, c, U);
    ASSERT_EQ(as_set(got), ref::uv_box(a, b, c, U)) << a << " " << b << " " << c;
  }
}

TEST(UvSolutions, LimitTruncatesIndefiniteStream) {
  const auto got = m2z::uv_solutions(1, -3, -1, 5);
  EXPECT_EQ(got.size(), 5U);
  const auto longer = m2z::uv_solutions(1, -3, -1, 9);
  EXPECT_TRUE(std::equal(got.begin(), got.end(), longer.begin()));
}

TEST(UvSolutions, RejectsSquareMinusAb) {
  EXPECT_THROW(m2z::uv_solutions(1, -1, 1, 5), m2z::PreconditionError);
  EXPECT_THROW(m2z::uv_solutions(2, -8, 1, 5), m2z::PreconditionError);
}

TEST(Represent, Examples) {
  EXPECT_EQ(as_set(m2z::represent(1, 1, 2, 5)),
            (std::set<IntPair>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
  EXPECT_TRUE(m2z::represent(1, 1, 3, 5).empty());
  const auto got = m2z::represent(1, -3, -2, 10);
  EXPECT_TRUE(contains(got, {1, 1}));
  EXPECT_TRUE(contains(got, {5, 3}));
}

TEST(Represent, MatchesExhaustiveSearch) {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -6; c <= 6; ++c) {
        std::set<IntPair> want;
        for (int x = -6; x <= 6; ++x)
          for (int y = -6; y <= 6; ++y)
            if (a * x * x + b * y * y == c) want.insert({x, y});
        ASSERT_EQ(as_set(m2z::represent(a, b, c, 6)), want) << a << " " << b << " " << c;
      }
}
