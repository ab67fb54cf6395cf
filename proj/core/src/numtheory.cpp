#include "m2z/numtheory.hpp"

#include <algorithm>
#include <set>

#include "m2z/error.hpp"

namespace m2z {

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

int legendre(const Int& a, const Int& p) {
  if (p == 2 || !is_prime(p)) {
    throw PreconditionError("legendre requires an odd prime modulus, got " + to_string(p));
  }
  Int residue = a % p;
  if (residue < 0) residue += p;
  if (residue == 0) return 0;
  Int r;
  const Int e = (p - 1) / 2;
  mpz_powm(r.get_mpz_t(), residue.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return r == 1 ? 1 : -1;
}

SquarefreeDecomp squarefree_decompose(const Int& n) {
  if (n == 0) throw PreconditionError("squarefree_decompose of 0");
  Int rest = abs(n);
  Int D = 1;
  Int k = 1;
  for (Int d = 2; d * d <= rest; ++d) {
    unsigned exponent = 0;
    while (divides(d, rest)) {
      rest = exact_div(rest, d);
      ++exponent;
    }
    if (exponent == 0) continue;
    k *= pow(d, exponent / 2);
    if (exponent % 2 == 1) D *= d;
  }
  D *= rest;  // leftover prime factor (or 1)
  if (n < 0) D = -D;
  return {n, D, k};
}

PellSolution pell_fundamental(const Int& D) {
  if (D < 2 || is_perfect_square(D)) {
    throw PreconditionError("pell_fundamental requires a nonsquare D >= 2, got " + to_string(D));
  }
  const Int a0 = isqrt(D);
  Int m = 0, d = 1, a = a0;
  Int h1 = 1, h2 = 0;  // convergent numerators h_{i-1}, h_{i-2}
  Int k1 = 0, k2 = 1;
  while (true) {
    Int h = a * h1 + h2;
    Int k = a * k1 + k2;
    if (h * h - D * k * k == 1) return {h, k, D, 1};
    h2 = std::move(h1);
    h1 = std::move(h);
    k2 = std::move(k1);
    k1 = std::move(k);
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
  }
}

namespace {

bool uv_less(const IntPair& x, const IntPair& y) {
  if (int c = cmp(abs(x.first), abs(y.first)); c != 0) return c < 0;
  if (int c = cmp(abs(x.second), abs(y.second)); c != 0) return c < 0;
  if (int c = sign(x.first) - sign(y.first); c != 0) return c < 0;
  return sign(x.second) < sign(y.second);
}

struct AbsPairLess {
  bool operator()(const IntPair& x, const IntPair& y) const {
    if (int c = cmp(x.first, y.first); c != 0) return c < 0;
    return cmp(x.second, y.second) < 0;
  }
};

// Expands nonnegative representatives to every sign combination, sorted.
std::vector<IntPair> expand_signs(const std::set<IntPair, AbsPairLess>& magnitudes) {
  std::vector<IntPair> out;
  for (const auto& [u, v] : magnitudes) {
    for (int su : {-1, 1}) {
      if (u == 0 && su < 0) continue;
      for (int sv : {-1, 1}) {
        if (v == 0 && sv < 0) continue;
        out.emplace_back(su * u, sv * v);
      }
    }
  }
  std::sort(out.begin(), out.end(), uv_less);
  return out;
}

void check_uv_preconditions(const Int& a, const Int& b, const Int& c) {
  if (a == 0 || b == 0 || c == 0) throw PreconditionError("uv_solutions requires nonzero a, b, c");
  if (is_perfect_square(-(a * b))) {
    throw PreconditionError("uv_solutions requires -ab not a perfect square");
  }
}

// |u|, |v| of the finite solution set for ab > 0.
std::set<IntPair, AbsPairLess> uv_definite(const Int& p, const Int& c) {
  std::set<IntPair, AbsPairLess> found;
  const Int c2 = c * c;
  for (Int v = 0; p * v * v <= c2; ++v) {
    const Int rest = c2 - p * v * v;
    if (is_perfect_square(rest)) found.emplace(isqrt(rest), v);
  }
  return found;
}

// |u|, |v| of every solution of u^2 - D v^2 = c^2 with |u| <= max_u.
//
// Every solution is +-(u0 + v0 sqrt D) * eps^j with eps the fundamental unit
// and (u0, v0) a class representative with
//   0 <= v0 <= y1 * |c| / sqrt(2 (x1 + 1)).
// Orbits of (u0, v0) and (u0, -v0) under j >= 0 cover the j < 0 half by
// conjugation. Along an orbit u_j is convex in j, so once it exceeds max_u
// while increasing it never comes back.
std::set<IntPair, AbsPairLess> uv_indefinite(const Int& D, const Int& c, const Int& max_u) {
  const PellSolution unit = pell_fundamental(D);
  const Int c2 = c * c;
  const Int lhs_scale = 2 * (unit.u + 1);
  const Int rhs = unit.v * unit.v * c2;
  std::set<IntPair, AbsPairLess> found;
  for (Int v0 = 0; v0 * v0 * lhs_scale <= rhs; ++v0) {
    const Int u0sq = c2 + D * v0 * v0;
    if (!is_perfect_square(u0sq)) continue;
    const Int u0 = isqrt(u0sq);
    for (int sv : {1, -1}) {
      Int u = u0;
      Int v = sv * v0;
      Int prev_u = u + 1;  // sentinel: forces at least one step
      while (true) {
        if (u <= max_u) found.emplace(u, abs(v));
        if (u > max_u && u > prev_u) break;
        Int nu = u * unit.u + D * v * unit.v;
        Int nv = u * unit.v + v * unit.u;
        prev_u = std::move(u);
        u = std::move(nu);
        v = std::move(nv);
      }
    }
  }
  return found;
}

}  // namespace

std::vector<IntPair> uv_solutions_upto(const Int& a, const Int& b, const Int& c, const Int& max_u) {
  check_uv_preconditions(a, b, c);
  const Int p = a * b;
  std::set<IntPair, AbsPairLess> mags;
  if (p > 0) {
    for (const auto& uv : uv_definite(p, c)) {
      if (uv.first <= max_u) mags.insert(uv);
    }
  } else {
    mags = uv_indefinite(-p, c, max_u);
  }
  auto out = expand_signs(mags);
  for (const auto& [u, v] : out) {
    if (u * u + p * v * v != c * c) throw Error("internal: uv solution failed verification");
  }
  return out;
}

std::vector<IntPair> uv_solutions(const Int& a, const Int& b, const Int& c, std::size_t limit) {
  check_uv_preconditions(a, b, c);
  const Int p = a * b;
  if (p > 0) return uv_solutions_upto(a, b, c, abs(c));
  if (limit == 0) return {};
  const Int growth = pell_fundamental(-p).u;
  Int max_u = abs(c) * growth;
  while (true) {
    auto sols = uv_solutions_upto(a, b, c, max_u);
    if (sols.size() >= limit) {
      sols.resize(limit);
      return sols;
    }
    max_u *= growth;
  }
}

std::vector<IntPair> represent(const Int& a, const Int& b, const Int& c, const Int& bound) {
  Int limit = bound;
  if (a > 0 && b > 0) {
    if (c < 0) return {};
    limit = isqrt(c / (a < b ? a : b));
  }
  std::vector<IntPair> out;
  for (Int t1 = -limit; t1 <= limit; ++t1) {
    const Int rest = c - a * t1 * t1;
    if (b == 0) {
      if (rest != 0) continue;
      for (Int t2 = -limit; t2 <= limit; ++t2) out.emplace_back(t1, t2);
      continue;
    }
    if (!divides(b, rest)) continue;
    const Int q = exact_div(rest, b);
    if (!is_perfect_square(q)) continue;
    const Int r = isqrt(q);
    if (r > limit) continue;
    if (r != 0) out.emplace_back(t1, -r);
    out.emplace_back(t1, r);
  }
  return out;
}

}  // namespace m2z
