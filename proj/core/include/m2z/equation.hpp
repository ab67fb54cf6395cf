#pragma once

#include <optional>
#include <string>

#include "m2z/integer.hpp"

namespace m2z {

/// a*X^m + b*Y^n = c*I.
///
/// `lambda`, when present, marks the Fermat shape a = b = 1, m = n,
/// c = lambda^n.
struct EquationSpec {
  Int a, b, c;
  unsigned long m = 2, n = 2;
  std::optional<Int> lambda{};

  /// X^n + Y^n = lambda^n I.
  static EquationSpec fermat(const Int& lambda, unsigned long n);

  /// Throws PreconditionError unless a, b, c are nonzero, gcd(a, b, c) = 1,
  /// m, n >= 1 and lambda (if given) satisfies c = lambda^n.
  void validate() const;

  bool is_quadratic() const { return m == 2 && n == 2; }
  bool is_fermat_shape() const { return lambda.has_value() && a == 1 && b == 1 && m == n; }

  std::string describe() const;
};

}  // namespace m2z
