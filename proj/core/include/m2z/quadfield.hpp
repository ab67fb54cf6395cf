#pragma once

/**
 * @file quadfield.hpp
 * @brief Half-integer lattice (s + t*sqrt(D))/2 of a quadratic field, and the
 *        correspondence between the commutant of A = [[e, f], [g, 0]] and
 *        quadratic integers.
 *
 * For fg != 0, gcd(e, f, g) = 1 and nonsquare disc = e^2 + 4fg = k^2 D, every
 * integer matrix B commuting with A is B = alpha*I + beta*A with integers
 * alpha, beta. Sending A to its eigenvalue (e + k*sqrt(D))/2 gives the ring
 * embedding
 *
 *   B  ->  (trace(B) + beta*k*sqrt(D)) / 2,
 *
 * whose image is exactly the elements (s + t*sqrt(D))/2 with k | t and
 * (s - (t/k)*e) even.
 */

#include <compare>
#include <vector>

#include "m2z/integer.hpp"
#include "m2z/mat2.hpp"
#include "m2z/numtheory.hpp"

namespace m2z {

struct EquationSpec;

/// (s + t*sqrt(D)) / 2 with D square-free, D != 0, 1.
struct QuadElem {
  Int s, t, D;

  /// Rational integer n as an element of Q(sqrt(D)).
  static QuadElem from_int(const Int& n, const Int& D) { return {2 * n, 0, D}; }

  /// True when the element lies in the ring of integers of Q(sqrt(D)).
  bool is_integral() const;

  bool is_rational() const { return t == 0; }

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.s == y.s && x.t == y.t && x.D == y.D;
  }
};

/// Same complex number, allowing different D when both are rational.
bool same_value(const QuadElem& x, const QuadElem& y);

QuadElem operator+(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x, const QuadElem& y);
/// Throws NotRepresentableError if the product leaves the half-integer
/// lattice (only possible for non-integral operands).
QuadElem operator*(const QuadElem& x, const QuadElem& y);
QuadElem operator*(const Int& n, const QuadElem& x);

QuadElem conj(const QuadElem& x);

/// (s^2 - t^2 D) / 4; throws NotRepresentableError when not an integer.
Int norm(const QuadElem& x);

QuadElem pow(const QuadElem& x, unsigned long n);

/// A = [[e, f], [g, 0]] with fg != 0, gcd(e, f, g) = 1, and its
/// discriminant e^2 + 4fg = k^2 D.
class CommutantFrame {
 public:
  /// Throws PreconditionError when fg == 0 or gcd(e, f, g) != 1, and
  /// SquareDiscriminantError when the discriminant is a square.
  CommutantFrame(Int e, Int f, Int g);

  /// True when e^2 + 4fg is a perfect square (such frames are rejected by
  /// the constructor; this lets callers test before constructing).
  static bool has_square_discriminant(const Int& e, const Int& f, const Int& g);

  const Int& e() const { return e_; }
  const Int& f() const { return f_; }
  const Int& g() const { return g_; }
  const Int& disc() const { return disc_; }
  const Int& D() const { return decomp_.D; }
  const Int& k() const { return decomp_.k; }
  Mat2 matrix() const { return {e_, f_, g_, 0}; }

 private:
  Int e_, f_, g_, disc_;
  SquarefreeDecomp decomp_;
};

bool commutant_check(const Mat2& b, const CommutantFrame& frame);

/// Throws NotRepresentableError when B is outside C(A).
QuadElem embed(const Mat2& b, const CommutantFrame& frame);

/// Inverse of embed. Throws FieldMismatchError for a different D and
/// NotRepresentableError when k does not divide t or entries are not
/// integral.
Mat2 lift(const QuadElem& x, const CommutantFrame& frame);

/// One solution of a*x^m + b*y^n = c in the image of C(A).
struct CommutantHit {
  QuadElem x, y;
  Mat2 X, Y;
  bool nontrivial;  // det(XY) != 0
};

/// Every (x, y) with |s|, |t| <= bound, both liftable into C(A), and
/// a*x^m + b*y^n = c, ordered by (x.s, x.t, y.s, y.t). Trivial hits are
/// included and flagged.
std::vector<CommutantHit> commutant_search(const EquationSpec& spec, const CommutantFrame& frame,
                                           const Int& bound);

}  // namespace m2z
