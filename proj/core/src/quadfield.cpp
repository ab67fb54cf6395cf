#include "m2z/quadfield.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "m2z/equation.hpp"
#include "m2z/error.hpp"

namespace m2z {

namespace {

void require_same_field(const QuadElem& x, const QuadElem& y) {
  if (x.D != y.D) {
    throw FieldMismatchError("quadratic elements over different fields: D = " + to_string(x.D) +
                             " and D = " + to_string(y.D));
  }
}

Int halve(const Int& value) {
  if (!divides(2, value)) throw NotRepresentableError("result leaves the half-integer lattice");
  return exact_div(value, 2);
}

}  // namespace

bool QuadElem::is_integral() const {
  Int r = D % 4;
  if (r < 0) r += 4;
  if (r == 1) return divides(2, s - t);
  return divides(2, s) && divides(2, t);
}

bool same_value(const QuadElem& x, const QuadElem& y) {
  if (x.is_rational() && y.is_rational()) return x.s == y.s;
  return x == y;
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  return {x.s + y.s, x.t + y.t, x.D};
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  return {x.s - y.s, x.t - y.t, x.D};
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  // (s1 + t1 r)(s2 + t2 r) / 4 = ((s1 s2 + t1 t2 D) + (s1 t2 + s2 t1) r) / 4
  return {halve(x.s * y.s + x.t * y.t * x.D), halve(x.s * y.t + y.s * x.t), x.D};
}

QuadElem operator*(const Int& n, const QuadElem& x) { return {n * x.s, n * x.t, x.D}; }

QuadElem conj(const QuadElem& x) { return {x.s, -x.t, x.D}; }

Int norm(const QuadElem& x) {
  const Int four_norm = x.s * x.s - x.t * x.t * x.D;
  if (!divides(4, four_norm)) throw NotRepresentableError("norm is not a rational integer");
  return exact_div(four_norm, 4);
}

QuadElem pow(const QuadElem& x, unsigned long n) {
  QuadElem result = QuadElem::from_int(1, x.D);
  QuadElem base = x;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool CommutantFrame::has_square_discriminant(const Int& e, const Int& f, const Int& g) {
  return is_perfect_square(e * e + 4 * f * g);
}

CommutantFrame::CommutantFrame(Int e, Int f, Int g)
    : e_(std::move(e)), f_(std::move(f)), g_(std::move(g)) {
  if (f_ * g_ == 0) throw PreconditionError("frame requires fg != 0");
  if (gcd(gcd(e_, f_), g_) != 1) throw PreconditionError("frame requires gcd(e, f, g) = 1");
  disc_ = e_ * e_ + 4 * f_ * g_;
  if (is_perfect_square(disc_)) throw SquareDiscriminantError();
  decomp_ = squarefree_decompose(disc_);
}

bool commutant_check(const Mat2& b, const CommutantFrame& frame) {
  return commutes(b, frame.matrix());
}

QuadElem embed(const Mat2& b, const CommutantFrame& frame) {
  if (!commutant_check(b, frame)) throw NotRepresentableError("matrix is outside C(A)");
  // B = alpha I + beta A; f != 0 fixes beta, and beta is an integer because
  // (b11 - b22, b12, b21) = beta (e, f, g) with gcd(e, f, g) = 1.
  const Int beta = exact_div(b.e12, frame.f());
  return {b.trace(), beta * frame.k(), frame.D()};
}

Mat2 lift(const QuadElem& x, const CommutantFrame& frame) {
  if (x.D != frame.D()) {
    throw FieldMismatchError("element over D = " + to_string(x.D) + " but frame has D = " +
                             to_string(frame.D()));
  }
  if (!divides(frame.k(), x.t)) {
    throw NotRepresentableError("not representable in C(A): k = " + to_string(frame.k()) +
                                " does not divide t = " + to_string(x.t));
  }
  const Int beta = exact_div(x.t, frame.k());
  const Int twice_alpha = x.s - beta * frame.e();
  if (!divides(2, twice_alpha)) {
    throw NotRepresentableError("not representable in C(A): non-integral entries");
  }
  const Int alpha = exact_div(twice_alpha, 2);
  return {alpha + beta * frame.e(), beta * frame.f(), beta * frame.g(), alpha};
}

std::vector<CommutantHit> commutant_search(const EquationSpec& spec, const CommutantFrame& frame,
                                           const Int& bound) {
  struct Candidate {
    QuadElem x;
    Mat2 X;
  };
  std::vector<Candidate> candidates;
  for (Int s = -bound; s <= bound; ++s) {
    for (Int t = -bound; t <= bound; ++t) {
      if (!divides(frame.k(), t)) continue;
      const Int beta = exact_div(t, frame.k());
      if (!divides(2, s - beta * frame.e())) continue;
      QuadElem x{s, t, frame.D()};
      Mat2 X = lift(x, frame);
      candidates.push_back({std::move(x), std::move(X)});
    }
  }

  // b*y^n keyed by (s, t) -> candidate indices
  std::map<std::pair<Int, Int>, std::vector<std::size_t>> by_rhs;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const QuadElem v = spec.b * pow(candidates[i].x, spec.n);
    by_rhs[{v.s, v.t}].push_back(i);
  }

  const QuadElem c = QuadElem::from_int(spec.c, frame.D());
  std::vector<CommutantHit> hits;
  for (const Candidate& cx : candidates) {
    const QuadElem need = c - spec.a * pow(cx.x, spec.m);
    auto it = by_rhs.find({need.s, need.t});
    if (it == by_rhs.end()) continue;
    for (std::size_t j : it->second) {
      const Candidate& cy = candidates[j];
      const bool nontrivial = cx.X.det() != 0 && cy.X.det() != 0;
      hits.push_back({cx.x, cy.x, cx.X, cy.X, nontrivial});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const CommutantHit& l, const CommutantHit& r) {
    return std::tie(l.x.s, l.x.t, l.y.s, l.y.t) < std::tie(r.x.s, r.x.t, r.y.s, r.y.t);
  });
  return hits;
}

}  // namespace m2z
