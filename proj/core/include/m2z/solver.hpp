#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "m2z/equation.hpp"
#include "m2z/families.hpp"
#include "m2z/integer.hpp"
#include "m2z/mat2.hpp"

namespace m2z {

enum class Verdict { Parametrized, NoneByTheorem, NoncommFamilies, ReducedOpen, Undetermined };

std::string_view verdict_name(Verdict verdict);

/// Which solutions a report speaks about.
enum class Side { All, NonCommuting, Commuting };

std::string_view side_name(Side side);

/// One solution of a alpha^(m/k) + b beta^(n/l) = c with X^k = alpha I,
/// Y^l = beta I, and a non-commuting witness pair realising it.
struct NoncommHit {
  unsigned k = 0, l = 0;
  Int alpha, beta;
  Mat2 X, Y;
  bool nontrivial = false;
};

/// A discriminant frame A = [[e,f],[g,0]] with disc = k^2 D, naming the
/// quadratic field the commuting side reduces to.
struct ReductionFrame {
  Int e, f, g, disc, D, k;
};

struct SolvabilityReport {
  Verdict verdict = Verdict::Undetermined;
  Side side = Side::All;
  std::string citation;  // empty when no result applies
  std::vector<FamilyDescriptor> families;
  std::vector<NoncommHit> scalar_solutions;
  std::vector<ReductionFrame> frames;
  std::vector<SolvabilityReport> parts;
  /// True when the families list every solution (up to the stated
  /// truncation of infinite parameter sets).
  bool complete = false;
  /// Human-readable statement of any truncation applied to the payload.
  std::string truncation;
};

struct ClassifyOptions {
  std::size_t uv_limit = 8;
  /// Bound on |alpha|, |s|, |w| in the non-commuting scalar-power search.
  Int noncomm_bound = 3;
};

/// Routes an equation to a parametrization, a nonexistence certificate, the
/// non-commuting scalar-power search, or the open quadratic-field problem.
/// Throws PreconditionError on invalid specs.
SolvabilityReport classify(const EquationSpec& spec, const ClassifyOptions& options = {});

/// Non-commuting solutions: X^m and Y^n must both be scalar, so X and Y
/// have scalar-power orders k | m, l | n in {2, 3, 4, 6}. Nilpotent X
/// (X^2 = 0) is also admitted for odd m >= 3. Ordered by (k, l, alpha, beta).
std::vector<NoncommHit> noncomm_solve(const EquationSpec& spec, const Int& bound);

/// The eigenvalue condition: the multisets {c - a x_i^m} and {b y_j^n}
/// agree, where x_i, y_j are the exact eigenvalues of X and Y. Necessary
/// for (X, Y) to be a solution.
bool eigen_condition_check(const Mat2& X, const Mat2& Y, const EquationSpec& spec);

/// Direct verification with a family tag where one applies.
SolutionPair verify(const Mat2& X, const Mat2& Y, const EquationSpec& spec);

/// Sample frames with distinct D, used as reduction data.
std::vector<ReductionFrame> sample_frames(std::size_t count);

}  // namespace m2z
