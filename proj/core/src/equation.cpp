#include "m2z/equation.hpp"

#include <string>
#include <string_view>

#include "m2z/error.hpp"

namespace m2z {

EquationSpec EquationSpec::fermat(const Int& lambda, unsigned long n) {
  return {1, 1, pow(lambda, n), n, n, lambda};
}

void EquationSpec::validate() const {
  if (a == 0 || b == 0 || c == 0) throw PreconditionError("a, b, c must be nonzero");
  if (gcd(gcd(a, b), c) != 1) throw PreconditionError("gcd(a, b, c) must be 1");
  if (m == 0 || n == 0) throw PreconditionError("exponents m, n must be positive");
  if (lambda) {
    if (*lambda == 0) throw PreconditionError("lambda must be nonzero");
    if (pow(*lambda, n) != c) throw PreconditionError("c must equal lambda^n");
  }
}

namespace {

// "X^2", "3*X^2", "-X^2"; `leading` omits the "+" of a positive term.
std::string term(const Int& coeff, std::string_view power, bool leading) {
  std::string out;
  if (coeff < 0) {
    out = leading ? "-" : " - ";
  } else if (!leading) {
    out = " + ";
  }
  const Int mag = abs(coeff);
  if (mag != 1) out += to_string(mag) + "*";
  return out + std::string(power);
}

}  // namespace

std::string EquationSpec::describe() const {
  return term(a, "X^" + std::to_string(m), true) + term(b, "Y^" + std::to_string(n), false) +
         " = " + term(c, "I", true);
}

}  // namespace m2z
