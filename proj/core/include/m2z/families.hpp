#pragma once

/**
 * @file families.hpp
 * @brief Constructive solution families of a X^m + b Y^n = c I.
 *
 * Quadratic case (m = n = 2), -ab not a square, gcd(a, b, c) = 1:
 *
 *  - non-commuting pairs are exactly traceless X = [[t1,t2],[t3,-t1]],
 *    Y = [[s1,s2],[s3,-s1]] with a(t1^2+t2t3) + b(s1^2+s2s3) = c and
 *    (t1,t2,t3), (s1,s2,s3) independent;
 *  - commuting pairs are one of
 *      ScalarPair            X = t1 I, Y = t2 I, a t1^2 + b t2^2 = c
 *      ScalarTracelessRight  X = t1 I, Y traceless
 *      ScalarTracelessLeft   X traceless, Y = t4 I
 *      PellParametrized      indexed by u^2 + ab v^2 = c^2, u != c,
 *                            g = gcd(va, u - c):
 *        X = [[t1, (u-c)/g t2], [(u-c)/g t3, (u t1 + v b t4)/c]]
 *        Y = [[t4, va/g t2],    [va/g t3,    (v a t1 - u t4)/c]]
 *        with a t1^2 + b t4^2 + 2ac t2 t3 (c-u)/g^2 = c
 *        and c | (u t1 + v b t4), c | (v a t1 - u t4).
 *
 * ScalarTracelessLeft coincides with the u = -c member of PellParametrized.
 */

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "m2z/equation.hpp"
#include "m2z/integer.hpp"
#include "m2z/mat2.hpp"
#include "m2z/numtheory.hpp"

namespace m2z {

enum class FamilyTag {
  ScalarPair,
  ScalarTracelessRight,
  ScalarTracelessLeft,
  PellParametrized,
  NonCommTraceless,
  NonCommQuartic,
  DiagonalRHS,
};

std::string_view tag_name(FamilyTag tag);

/// Equation constants for the tags that need nothing else.
struct QuadraticConstants {
  Int a, b, c;
};

struct PellParams {
  Int u, v, g, a, b, c;
};

/// X^4 + Y^4 = c^4 I.
struct QuarticParams {
  Int c;
};

/// a X^m + b Y^n = diag(c1, c2).
struct DiagonalParams {
  Int a, b;
  unsigned long m, n;
  Int c1, c2;
};

using FamilyParams = std::variant<QuadraticConstants, PellParams, QuarticParams, DiagonalParams>;

struct FamilyDescriptor {
  FamilyTag tag;
  FamilyParams params;

  static FamilyDescriptor quadratic(FamilyTag tag, const Int& a, const Int& b, const Int& c);
  /// Computes g = gcd(va, u - c). Throws PreconditionError unless
  /// u^2 + ab v^2 = c^2 and u != c.
  static FamilyDescriptor pell(const Int& u, const Int& v, const Int& a, const Int& b,
                               const Int& c);
  static FamilyDescriptor quartic(const Int& c);
  static FamilyDescriptor diagonal(const Int& a, const Int& b, unsigned long m, unsigned long n,
                                   const Int& c1, const Int& c2);

  const PellParams& pell_params() const { return std::get<PellParams>(params); }
};

bool operator==(const FamilyDescriptor& x, const FamilyDescriptor& y);

std::string describe(const FamilyDescriptor& family);

struct SolutionPair {
  Mat2 X, Y;
  std::optional<FamilyDescriptor> family;  // nullopt = unclassified
  bool satisfied = false;
  bool commuting = false;
  bool nontrivial = false;  // det(XY) != 0
};

/// Fills satisfied/commuting/nontrivial from direct arithmetic.
SolutionPair make_pair_report(const Mat2& X, const Mat2& Y, const EquationSpec& spec,
                              std::optional<FamilyDescriptor> family = std::nullopt);

using Triple = std::array<Int, 3>;

/// Traceless X, Y from (t1,t2,t3), (s1,s2,s3) with
/// a(t1^2+t2t3) + b(s1^2+s2s3) = c; the triples must be independent.
SolutionPair p2_quadratic(const Int& a, const Int& b, const Int& c, const Triple& t,
                          const Triple& s);

/// Traceless X, Y with X^4 + Y^4 = c^4 I.
SolutionPair p2_quartic(const Int& c, const Triple& t, const Triple& s);

/// Diagonal X, Y with a X^m + b Y^n = diag(c1, c2), c1 != c2.
SolutionPair diag_rhs(const Int& a, const Int& b, unsigned long m, unsigned long n, const Int& c1,
                      const Int& c2, const IntPair& x, const IntPair& y);

/// Families covering every commuting solution of a X^2 + b Y^2 = c I, plus
/// one PellParametrized descriptor per (u, v) with u != c. For ab < 0 the
/// (u, v) set is infinite and is cut after `uv_limit` distinct magnitudes
/// (|u|, |v|), each with all of its sign variants.
std::vector<FamilyDescriptor> co1_families(const Int& a, const Int& b, const Int& c,
                                           std::size_t uv_limit);

/// Instantiates a PellParametrized family at (t1, t2, t3, t4) and verifies
/// the result. Throws PreconditionError naming the violated condition.
SolutionPair co1_instantiate(const FamilyDescriptor& family, const Int& t1, const Int& t2,
                             const Int& t3, const Int& t4);

/// Rational linear form c1*t1 + c2*t2 + c3*t3 + c4*t4.
struct LinearForm {
  std::array<Rational, 4> coeff;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Renders e.g. "-7*t1+12*t4"; the zero form is "0".
std::string to_string(const LinearForm& form);

/// Entry-wise linear forms of X and Y for a PellParametrized family,
/// row-major (e11, e12, e21, e22).
struct FamilyShape {
  std::array<LinearForm, 4> X, Y;
};

FamilyShape co1_shape(const FamilyDescriptor& family);

/// u = a det X - b det Y, v = x1 y4 + x4 y1 - x2 y3 - x3 y2.
IntPair recover_uv(const Mat2& X, const Mat2& Y, const Int& a, const Int& b);

/// True iff (X, Y) belongs to the family, with every side condition
/// re-checked.
bool is_member(const FamilyDescriptor& family, const Mat2& X, const Mat2& Y);

/// Verifies a X^2 + b Y^2 = c I and assigns exactly one family tag.
/// Requires spec.m == spec.n == 2.
SolutionPair classify_pair(const Mat2& X, const Mat2& Y, const EquationSpec& spec);

/// Every member of the family whose free parameters lie in
/// [-param_bound, param_bound], sorted by (X, Y).
std::vector<SolutionPair> family_instances(const FamilyDescriptor& family, const Int& param_bound);

}  // namespace m2z
