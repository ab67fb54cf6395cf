#pragma once

/**
 * @file mat2.hpp
 * @brief Exact 2x2 integer matrices.
 *
 * Powers use the trace/determinant recurrence
 *
 *   y_j = T*y_{j-1} - D*y_{j-2},   y_0 = 1, y_{-1} = 0
 *
 * so that for A = [[e, f], [g, h]] and n >= 1
 *
 *   A^n = [[y_n - h*y_{n-1}, f*y_{n-1}], [g*y_{n-1}, y_n - e*y_{n-1}]].
 *
 * Matrices whose powers become scalar are classified by the minimal such
 * exponent k, which is always one of 1, 2, 3, 4, 6.
 */

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "m2z/integer.hpp"

namespace m2z {

/// [[e11, e12], [e21, e22]]
struct Mat2 {
  Int e11{0}, e12{0}, e21{0}, e22{0};

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 scalar(const Int& lambda) { return {lambda, 0, 0, lambda}; }
  static Mat2 zero() { return {}; }

  Int trace() const { return e11 + e22; }
  Int det() const { return e11 * e22 - e12 * e21; }
  bool is_scalar() const { return e12 == 0 && e21 == 0 && e11 == e22; }
  bool is_zero() const { return e11 == 0 && e12 == 0 && e21 == 0 && e22 == 0; }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.e11 == y.e11 && x.e12 == y.e12 && x.e21 == y.e21 && x.e22 == y.e22;
  }
  /// Lexicographic on (e11, e12, e21, e22).
  friend std::strong_ordering operator<=>(const Mat2& x, const Mat2& y);

  Mat2& operator+=(const Mat2& o);
  Mat2& operator-=(const Mat2& o);
  friend Mat2 operator+(Mat2 x, const Mat2& y) { return x += y; }
  friend Mat2 operator-(Mat2 x, const Mat2& y) { return x -= y; }
  friend Mat2 operator-(const Mat2& x) { return {-x.e11, -x.e12, -x.e21, -x.e22}; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Mat2 operator*(const Int& lambda, const Mat2& x) {
    return {lambda * x.e11, lambda * x.e12, lambda * x.e21, lambda * x.e22};
  }
};

enum class MatOp { add, sub, mul, scalar_mul };

/// Ring arithmetic in M2(Z). `lambda` is only read for MatOp::scalar_mul,
/// which returns lambda * a and ignores b.
Mat2 mat_arith(const Mat2& a, const Mat2& b, MatOp op, const Int& lambda = Int(1));

/// A^n via the trace/determinant recurrence. Requires n >= 1.
Mat2 pow_closed(const Mat2& a, unsigned long n);

/// The sequence value y_n of the recurrence above (y_0 = 1, y_{-1} = 0).
Int power_sequence(const Int& trace, const Int& det, unsigned long n);

/// (t1 - t4, t2, t3) of [[t1, t2], [t3, t4]].
struct CommVector {
  Int v1, v2, v3;
  bool is_zero() const { return v1 == 0 && v2 == 0 && v3 == 0; }
};

CommVector comm_vector(const Mat2& a);

/// Cross product of the commutation vectors; zero iff AB == BA.
CommVector comm_cross(const Mat2& a, const Mat2& b);

bool commutes(const Mat2& a, const Mat2& b);

/// Minimal k with A^k scalar, and the scalar value of A^k.
struct ScalarOrder {
  int k;
  Int value;
  friend bool operator==(const ScalarOrder&, const ScalarOrder&) = default;
};

/// std::nullopt means no positive power of the matrix is scalar.
using ScalarPowerClass = std::optional<ScalarOrder>;

ScalarPowerClass scalar_order_classify(const Mat2& a);

/// The scalar lambda with A^m = lambda*I, if A^m is scalar. Requires m >= 1.
std::optional<Int> is_scalar_power(const Mat2& a, unsigned long m);

/// Parses `[[e11,e12],[e21,e22]]` with optional whitespace.
Mat2 parse_mat2(std::string_view text);

/// Canonical text form `[[e11,e12],[e21,e22]]`.
std::string to_string(const Mat2& a);

struct Mat2Hash {
  std::size_t operator()(const Mat2& a) const;
};

}  // namespace m2z
