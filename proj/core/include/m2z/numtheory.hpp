#pragma once

// Integer number theory used by the solution-family parametrizations:
// squares, Legendre symbols, square-free parts, and the Pell-type
// equations u^2 - D v^2 = N for N in {1, c^2}.

#include <cstddef>
#include <utility>
#include <vector>

#include "m2z/integer.hpp"

namespace m2z {

/// u^2 - D*v^2 = N.
struct PellSolution {
  Int u, v, D, N;
};

/// input = k^2 * D with D square-free and k > 0.
struct SquarefreeDecomp {
  Int input;
  Int D;
  Int k;
};

/// An integer pair, e.g. (u, v) or (t1, t2).
using IntPair = std::pair<Int, Int>;

/// False for negative n.
bool is_perfect_square(const Int& n);

/// Trial-division primality; adequate for the small moduli used here.
bool is_prime(const Int& n);

/// Legendre symbol (a/p) by Euler's criterion. p must be an odd prime.
int legendre(const Int& a, const Int& p);

/// Rejects n == 0.
SquarefreeDecomp squarefree_decompose(const Int& n);

/// Minimal positive solution of u^2 - D v^2 = 1 from the continued
/// fraction of sqrt(D). D must be >= 2 and not a square.
PellSolution pell_fundamental(const Int& D);

/// Integer solutions of u^2 + ab*v^2 = c^2, ordered by
/// (|u|, |v|, sign u, sign v).
///
/// ab > 0: the finite solution set, in full (`limit` is ignored).
/// ab < 0: the first `limit` solutions of the infinite set.
/// Throws PreconditionError when -ab is a perfect square or a, b, c is 0.
std::vector<IntPair> uv_solutions(const Int& a, const Int& b, const Int& c, std::size_t limit);

/// Every solution of u^2 + ab*v^2 = c^2 with |u| <= max_u, same order and
/// preconditions as uv_solutions.
std::vector<IntPair> uv_solutions_upto(const Int& a, const Int& b, const Int& c, const Int& max_u);

/// All (t1, t2) with a*t1^2 + b*t2^2 = c and |t1|, |t2| <= bound, sorted
/// lexicographically. When a, b > 0 the natural bound sqrt(c / min(a, b))
/// replaces `bound` and the result is complete.
std::vector<IntPair> represent(const Int& a, const Int& b, const Int& c, const Int& bound);

}  // namespace m2z
