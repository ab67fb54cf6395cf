#include "m2z/solver.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

#include "m2z/error.hpp"
#include "m2z/numtheory.hpp"
#include "m2z/quadfield.hpp"

namespace m2z {

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Parametrized:
      return "Parametrized";
    case Verdict::NoneByTheorem:
      return "NoneByTheorem";
    case Verdict::NoncommFamilies:
      return "NoncommFamilies";
    case Verdict::ReducedOpen:
      return "ReducedOpen";
    case Verdict::Undetermined:
      return "Undetermined";
  }
  return "?";
}

std::string_view side_name(Side side) {
  switch (side) {
    case Side::All:
      return "all";
    case Side::NonCommuting:
      return "noncommuting";
    case Side::Commuting:
      return "commuting";
  }
  return "?";
}

namespace {

// Stable identifiers of the results a report may rest on.
namespace cite {
constexpr const char* kNoncommScalar = "thm-2.2";
constexpr const char* kNoncommFamilies = "prop-2.7";
constexpr const char* kCommutantReduction = "thm-2.9";
constexpr const char* kNoncommFermat = "thm-3.2";
constexpr const char* kFermatCommutant = "thm-3.4";
constexpr const char* kSixNine = "prop-3.6";
constexpr const char* kSixNineGcd = "cor-3.6";
constexpr const char* kQuadratic = "thm-4.1";
}  // namespace cite

// Trace and determinant realising each scalar-power order, parametrised by
// the search variable, together with the scalar alpha = X^k / I.
struct OrderPoint {
  Int trace, det, alpha;
};

std::vector<OrderPoint> order_points(unsigned k, const Int& bound, bool nilpotent_only) {
  std::vector<OrderPoint> out;
  if (nilpotent_only) {
    out.push_back({0, 0, 0});
    return out;
  }
  switch (k) {
    case 2:
      for (Int alpha = -bound; alpha <= bound; ++alpha) out.push_back({0, -alpha, alpha});
      break;
    case 3:
      for (Int s = -bound; s <= bound; ++s)
        if (s != 0) out.push_back({s, s * s, -pow(s, 3)});
      break;
    case 4:
      for (Int w = -bound; w <= bound; ++w)
        if (w != 0) out.push_back({2 * w, 2 * w * w, -4 * pow(w, 4)});
      break;
    case 6:
      for (Int w = -bound; w <= bound; ++w)
        if (w != 0) out.push_back({3 * w, 3 * w * w, -27 * pow(w, 6)});
      break;
    default:
      break;
  }
  // w and -w give the same alpha for k = 4, 6; keep the smaller trace.
  std::sort(out.begin(), out.end(), [](const OrderPoint& x, const OrderPoint& y) {
    return std::tie(x.alpha, x.trace) < std::tie(y.alpha, y.trace);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const OrderPoint& x, const OrderPoint& y) { return x.alpha == y.alpha; }),
            out.end());
  return out;
}

struct Cell {
  unsigned order;
  bool nilpotent_only;
};

std::vector<Cell> cells_for(unsigned long exponent) {
  std::vector<Cell> out;
  for (unsigned k : {2U, 3U, 4U, 6U}) {
    if (exponent % k == 0) {
      out.push_back({k, false});
    } else if (k == 2 && exponent >= 2) {
      out.push_back({2, true});
    }
  }
  return out;
}

std::array<Mat2, 3> witnesses(const Int& trace, const Int& det) {
  return {Mat2{0, 1, -det, trace}, Mat2{0, -det, 1, trace},
          Mat2{1, 1, trace - 1 - det, trace - 1}};
}

SolvabilityReport noncomm_report(const EquationSpec& spec, const Int& bound) {
  SolvabilityReport r;
  r.side = Side::NonCommuting;
  if (cells_for(spec.m).empty() || cells_for(spec.n).empty()) {
    r.verdict = Verdict::NoneByTheorem;
    r.citation = cite::kNoncommScalar;
    r.complete = true;
    return r;
  }
  r.scalar_solutions = noncomm_solve(spec, bound);
  r.citation = cite::kNoncommScalar;
  r.truncation = "scalar-power search limited to |alpha|, |s|, |w| <= " + to_string(bound);
  r.verdict = r.scalar_solutions.empty() ? Verdict::Undetermined : Verdict::NoncommFamilies;
  return r;
}

SolvabilityReport commuting_open(const char* citation) {
  SolvabilityReport r;
  r.verdict = Verdict::ReducedOpen;
  r.side = Side::Commuting;
  r.citation = citation;
  r.frames = sample_frames(4);
  r.truncation = "frames are a sample; the commuting side ranges over every frame";
  return r;
}

SolvabilityReport classify_fermat(const EquationSpec& spec) {
  const unsigned long n = spec.n;
  SolvabilityReport r;
  if (n == 6 || n == 9) {
    r.verdict = Verdict::NoneByTheorem;
    r.citation = cite::kSixNine;
    r.complete = true;
    return r;
  }
  if (n % 6 == 0 || n % 9 == 0) {
    r.verdict = Verdict::NoneByTheorem;
    r.citation = cite::kSixNineGcd;
    r.complete = true;
    return r;
  }
  SolvabilityReport commuting = commuting_open(cite::kFermatCommutant);
  SolvabilityReport noncomm;
  noncomm.side = Side::NonCommuting;
  if (n == 4) {
    noncomm.verdict = Verdict::NoncommFamilies;
    noncomm.citation = cite::kNoncommFamilies;
    noncomm.families.push_back(FamilyDescriptor::quartic(*spec.lambda));
    noncomm.complete = true;
    r.verdict = Verdict::NoncommFamilies;
    r.citation = cite::kNoncommFamilies;
    r.families = noncomm.families;
  } else {
    noncomm.verdict = Verdict::NoneByTheorem;
    noncomm.citation = cite::kNoncommFermat;
    noncomm.complete = true;
    r.verdict = Verdict::ReducedOpen;
    r.citation = cite::kFermatCommutant;
  }
  r.frames = commuting.frames;
  r.parts = {std::move(noncomm), std::move(commuting)};
  return r;
}

}  // namespace

std::vector<ReductionFrame> sample_frames(std::size_t count) {
  std::map<Int, ReductionFrame> by_d;
  for (int g = 1; g <= 12 && by_d.size() < count; ++g) {
    for (int e = 0; e <= 1 && by_d.size() < count; ++e) {
      if (CommutantFrame::has_square_discriminant(e, 1, g)) continue;
      const CommutantFrame frame(e, 1, g);
      by_d.try_emplace(frame.D(), ReductionFrame{frame.e(), frame.f(), frame.g(), frame.disc(),
                                                 frame.D(), frame.k()});
    }
    for (int e = 0; e <= 1 && by_d.size() < count; ++e) {
      if (CommutantFrame::has_square_discriminant(e, 1, -g)) continue;
      const CommutantFrame frame(e, 1, -g);
      by_d.try_emplace(frame.D(), ReductionFrame{frame.e(), frame.f(), frame.g(), frame.disc(),
                                                 frame.D(), frame.k()});
    }
  }
  std::vector<ReductionFrame> out;
  for (auto& [d, frame] : by_d) out.push_back(std::move(frame));
  return out;
}

std::vector<NoncommHit> noncomm_solve(const EquationSpec& spec, const Int& bound) {
  std::vector<NoncommHit> hits;
  if (bound <= 0) return hits;
  for (const Cell& cx : cells_for(spec.m)) {
    const auto xs = order_points(cx.order, bound, cx.nilpotent_only);
    const unsigned long mx = cx.nilpotent_only ? 1 : spec.m / cx.order;
    for (const Cell& cy : cells_for(spec.n)) {
      const auto ys = order_points(cy.order, bound, cy.nilpotent_only);
      const unsigned long ny = cy.nilpotent_only ? 1 : spec.n / cy.order;
      for (const OrderPoint& px : xs) {
        const Int lhs = spec.a * pow(px.alpha, mx);
        for (const OrderPoint& py : ys) {
          if (lhs + spec.b * pow(py.alpha, ny) != spec.c) continue;
          const Mat2 X = witnesses(px.trace, px.det)[0];
          for (const Mat2& Y : witnesses(py.trace, py.det)) {
            if (commutes(X, Y)) continue;
            const Mat2 lhs_m = spec.a * pow_closed(X, spec.m) + spec.b * pow_closed(Y, spec.n);
            if (lhs_m != Mat2::scalar(spec.c)) {
              throw Error("internal: scalar-power witness fails the equation");
            }
            hits.push_back({cx.order, cy.order, px.alpha, py.alpha, X, Y,
                            X.det() != 0 && Y.det() != 0});
            break;
          }
        }
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const NoncommHit& x, const NoncommHit& y) {
    return std::tie(x.k, x.l, x.alpha, x.beta) < std::tie(y.k, y.l, y.alpha, y.beta);
  });
  return hits;
}

SolvabilityReport classify(const EquationSpec& spec, const ClassifyOptions& options) {
  spec.validate();

  if (spec.is_quadratic() && !is_perfect_square(-(spec.a * spec.b))) {
    SolvabilityReport r;
    r.verdict = Verdict::Parametrized;
    r.citation = cite::kQuadratic;
    r.families = co1_families(spec.a, spec.b, spec.c, options.uv_limit);
    r.families.push_back(
        FamilyDescriptor::quadratic(FamilyTag::NonCommTraceless, spec.a, spec.b, spec.c));
    r.complete = true;
    if (spec.a * spec.b < 0) {
      r.truncation = "PellParametrized families cut after " + std::to_string(options.uv_limit) +
                     " (|u|, |v|) magnitudes; u^2 + ab v^2 = c^2 has infinitely many";
    }
    return r;
  }

  if (spec.is_fermat_shape() && spec.n >= 3) return classify_fermat(spec);

  SolvabilityReport noncomm = noncomm_report(spec, options.noncomm_bound);
  SolvabilityReport commuting = commuting_open(cite::kCommutantReduction);
  SolvabilityReport r;
  if (noncomm.verdict == Verdict::NoncommFamilies) {
    r.verdict = Verdict::NoncommFamilies;
    r.citation = cite::kNoncommScalar;
    r.scalar_solutions = noncomm.scalar_solutions;
  } else {
    r.verdict = Verdict::ReducedOpen;
    r.citation = cite::kCommutantReduction;
  }
  r.frames = commuting.frames;
  r.truncation = noncomm.truncation;
  r.parts = {std::move(noncomm), std::move(commuting)};
  return r;
}

namespace {

struct EigenPair {
  std::array<QuadElem, 2> values;
};

// Exact eigenvalues (T +- sqrt(T^2 - 4 det)) / 2 in Q(sqrt(D)); integer
// eigenvalues are placed in `fallback_d`.
EigenPair eigenvalues(const Mat2& x, const Int& fallback_d) {
  const Int T = x.trace();
  const Int disc = T * T - 4 * x.det();
  if (is_perfect_square(disc)) {
    const Int r = isqrt(disc);
    return {{QuadElem{T - r, 0, fallback_d}, QuadElem{T + r, 0, fallback_d}}};
  }
  const SquarefreeDecomp sf = squarefree_decompose(disc);
  return {{QuadElem{T, -sf.k, sf.D}, QuadElem{T, sf.k, sf.D}}};
}

std::optional<Int> field_of(const Mat2& x) {
  const Int T = x.trace();
  const Int disc = T * T - 4 * x.det();
  if (is_perfect_square(disc)) return std::nullopt;
  return squarefree_decompose(disc).D;
}

}  // namespace

bool eigen_condition_check(const Mat2& X, const Mat2& Y, const EquationSpec& spec) {
  const auto dx = field_of(X);
  const auto dy = field_of(Y);
  const Int fallback = dx ? *dx : (dy ? *dy : Int(-1));
  const EigenPair ex = eigenvalues(X, dx ? *dx : fallback);
  const EigenPair ey = eigenvalues(Y, dy ? *dy : fallback);
  std::array<QuadElem, 2> need, have;
  for (int i = 0; i < 2; ++i) {
    const Int& d = ex.values[i].D;
    need[i] = QuadElem::from_int(spec.c, d) - spec.a * pow(ex.values[i], spec.m);
    have[i] = spec.b * pow(ey.values[i], spec.n);
  }
  return (same_value(need[0], have[0]) && same_value(need[1], have[1])) ||
         (same_value(need[0], have[1]) && same_value(need[1], have[0]));
}

SolutionPair verify(const Mat2& X, const Mat2& Y, const EquationSpec& spec) {
  if (spec.is_quadratic()) return classify_pair(X, Y, spec);
  SolutionPair out = make_pair_report(X, Y, spec);
  if (!out.satisfied) return out;
  if (spec.a == 1 && spec.b == 1 && spec.m == 4 && spec.n == 4 && spec.c > 0) {
    const Int lambda = isqrt(isqrt(spec.c));
    if (pow(lambda, 4) == spec.c) {
      FamilyDescriptor quartic = FamilyDescriptor::quartic(lambda);
      if (is_member(quartic, X, Y)) out.family = std::move(quartic);
    }
  }
  return out;
}

}  // namespace m2z
