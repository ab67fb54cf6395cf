#include "m2z/families.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "m2z/error.hpp"

namespace m2z {

std::string_view tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::ScalarPair:
      return "ScalarPair";
    case FamilyTag::ScalarTracelessRight:
      return "ScalarTracelessRight";
    case FamilyTag::ScalarTracelessLeft:
      return "ScalarTracelessLeft";
    case FamilyTag::PellParametrized:
      return "PellParametrized";
    case FamilyTag::NonCommTraceless:
      return "NonCommTraceless";
    case FamilyTag::NonCommQuartic:
      return "NonCommQuartic";
    case FamilyTag::DiagonalRHS:
      return "DiagonalRHS";
  }
  return "?";
}

FamilyDescriptor FamilyDescriptor::quadratic(FamilyTag tag, const Int& a, const Int& b,
                                             const Int& c) {
  switch (tag) {
    case FamilyTag::ScalarPair:
    case FamilyTag::ScalarTracelessRight:
    case FamilyTag::ScalarTracelessLeft:
    case FamilyTag::NonCommTraceless:
      return {tag, QuadraticConstants{a, b, c}};
    default:
      throw PreconditionError(std::string(tag_name(tag)) + " does not take (a, b, c) parameters");
  }
}

FamilyDescriptor FamilyDescriptor::pell(const Int& u, const Int& v, const Int& a, const Int& b,
                                        const Int& c) {
  if (u == c) throw PreconditionError("PellParametrized requires u != c");
  if (u * u + a * b * v * v != c * c) {
    throw PreconditionError("PellParametrized requires u^2 + ab v^2 = c^2");
  }
  return {FamilyTag::PellParametrized, PellParams{u, v, gcd(v * a, u - c), a, b, c}};
}

FamilyDescriptor FamilyDescriptor::quartic(const Int& c) {
  return {FamilyTag::NonCommQuartic, QuarticParams{c}};
}

FamilyDescriptor FamilyDescriptor::diagonal(const Int& a, const Int& b, unsigned long m,
                                            unsigned long n, const Int& c1, const Int& c2) {
  return {FamilyTag::DiagonalRHS, DiagonalParams{a, b, m, n, c1, c2}};
}

bool operator==(const FamilyDescriptor& x, const FamilyDescriptor& y) {
  if (x.tag != y.tag || x.params.index() != y.params.index()) return false;
  return std::visit(
      [&](const auto& px) -> bool {
        using P = std::decay_t<decltype(px)>;
        const P& py = std::get<P>(y.params);
        if constexpr (std::is_same_v<P, QuadraticConstants>) {
          return px.a == py.a && px.b == py.b && px.c == py.c;
        } else if constexpr (std::is_same_v<P, PellParams>) {
          return px.u == py.u && px.v == py.v && px.g == py.g && px.a == py.a && px.b == py.b &&
                 px.c == py.c;
        } else if constexpr (std::is_same_v<P, QuarticParams>) {
          return px.c == py.c;
        } else {
          return px.a == py.a && px.b == py.b && px.m == py.m && px.n == py.n &&
                 px.c1 == py.c1 && px.c2 == py.c2;
        }
      },
      x.params);
}

std::string describe(const FamilyDescriptor& family) {
  std::string out(tag_name(family.tag));
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, QuadraticConstants>) {
          out += "(a=" + to_string(p.a) + ", b=" + to_string(p.b) + ", c=" + to_string(p.c) + ")";
        } else if constexpr (std::is_same_v<P, PellParams>) {
          out += "(u=" + to_string(p.u) + ", v=" + to_string(p.v) + ", g=" + to_string(p.g) +
                 "; a=" + to_string(p.a) + ", b=" + to_string(p.b) + ", c=" + to_string(p.c) + ")";
        } else if constexpr (std::is_same_v<P, QuarticParams>) {
          out += "(c=" + to_string(p.c) + ")";
        } else {
          out += "(a=" + to_string(p.a) + ", b=" + to_string(p.b) + ", m=" + std::to_string(p.m) +
                 ", n=" + std::to_string(p.n) + ", c1=" + to_string(p.c1) +
                 ", c2=" + to_string(p.c2) + ")";
        }
      },
      family.params);
  return out;
}

SolutionPair make_pair_report(const Mat2& X, const Mat2& Y, const EquationSpec& spec,
                              std::optional<FamilyDescriptor> family) {
  SolutionPair out{X, Y, std::move(family)};
  const Mat2 lhs = spec.a * pow_closed(X, spec.m) + spec.b * pow_closed(Y, spec.n);
  out.satisfied = lhs == Mat2::scalar(spec.c);
  out.commuting = commutes(X, Y);
  out.nontrivial = X.det() != 0 && Y.det() != 0;
  return out;
}

namespace {

Int traceless_square(const Triple& t) { return t[0] * t[0] + t[1] * t[2]; }

Mat2 traceless(const Triple& t) { return {t[0], t[1], t[2], -t[0]}; }

bool independent(const Triple& t, const Triple& s) {
  return t[1] * s[2] - t[2] * s[1] != 0 || t[2] * s[0] - t[0] * s[2] != 0 ||
         t[0] * s[1] - t[1] * s[0] != 0;
}

Triple traceless_params(const Mat2& x) { return {x.e11, x.e12, x.e21}; }

bool is_traceless(const Mat2& x) { return x.trace() == 0; }

[[noreturn]] void defect(const std::string& what) {
  throw Error("internal: constructed pair fails " + what);
}

}  // namespace

SolutionPair p2_quadratic(const Int& a, const Int& b, const Int& c, const Triple& t,
                          const Triple& s) {
  if (a * traceless_square(t) + b * traceless_square(s) != c) {
    throw PreconditionError("constraint a(t1^2+t2t3) + b(s1^2+s2s3) = c violated");
  }
  if (!independent(t, s)) throw PreconditionError("t and s are linearly dependent");
  SolutionPair out = make_pair_report(traceless(t), traceless(s), EquationSpec{a, b, c, 2, 2},
                                      FamilyDescriptor::quadratic(FamilyTag::NonCommTraceless, a,
                                                                  b, c));
  if (!out.satisfied || out.commuting) defect("aX^2 + bY^2 = cI with XY != YX");
  return out;
}

SolutionPair p2_quartic(const Int& c, const Triple& t, const Triple& s) {
  const Int qt = traceless_square(t);
  const Int qs = traceless_square(s);
  if (qt * qt + qs * qs != pow(c, 4)) {
    throw PreconditionError("constraint (t1^2+t2t3)^2 + (s1^2+s2s3)^2 = c^4 violated");
  }
  if (!independent(t, s)) throw PreconditionError("t and s are linearly dependent");
  SolutionPair out = make_pair_report(traceless(t), traceless(s),
                                      EquationSpec{1, 1, pow(c, 4), 4, 4},
                                      FamilyDescriptor::quartic(c));
  if (!out.satisfied || out.commuting) defect("X^4 + Y^4 = c^4 I with XY != YX");
  return out;
}

SolutionPair diag_rhs(const Int& a, const Int& b, unsigned long m, unsigned long n, const Int& c1,
                      const Int& c2, const IntPair& x, const IntPair& y) {
  if (c1 == c2) throw PreconditionError("diagonal right-hand side requires c1 != c2");
  if (a * pow(x.first, m) + b * pow(y.first, n) != c1) {
    throw PreconditionError("constraint a x1^m + b y1^n = c1 violated");
  }
  if (a * pow(x.second, m) + b * pow(y.second, n) != c2) {
    throw PreconditionError("constraint a x2^m + b y2^n = c2 violated");
  }
  const Mat2 X{x.first, 0, 0, x.second};
  const Mat2 Y{y.first, 0, 0, y.second};
  SolutionPair out{X, Y, FamilyDescriptor::diagonal(a, b, m, n, c1, c2)};
  const Mat2 lhs = a * pow_closed(X, m) + b * pow_closed(Y, n);
  out.satisfied = lhs == Mat2{c1, 0, 0, c2};
  out.commuting = commutes(X, Y);
  out.nontrivial = X.det() != 0 && Y.det() != 0;
  if (!out.satisfied || !out.commuting) defect("a X^m + b Y^n = diag(c1, c2)");
  return out;
}

std::vector<FamilyDescriptor> co1_families(const Int& a, const Int& b, const Int& c,
                                           std::size_t uv_limit) {
  if (a == 0 || b == 0 || c == 0) throw PreconditionError("a, b, c must be nonzero");
  if (gcd(gcd(a, b), c) != 1) throw PreconditionError("gcd(a, b, c) must be 1");
  if (is_perfect_square(-(a * b))) throw PreconditionError("-ab must not be a perfect square");

  std::vector<FamilyDescriptor> out{
      FamilyDescriptor::quadratic(FamilyTag::ScalarPair, a, b, c),
      FamilyDescriptor::quadratic(FamilyTag::ScalarTracelessRight, a, b, c),
      FamilyDescriptor::quadratic(FamilyTag::ScalarTracelessLeft, a, b, c),
  };
  // Each magnitude (|u|, |v|) has at most four sign variants and the stream
  // is ordered by magnitude, so 4 * uv_limit entries hold the first
  // uv_limit magnitudes in full.
  const auto stream = uv_solutions(a, b, c, 4 * uv_limit);
  std::set<IntPair> magnitudes;
  for (const auto& [u, v] : stream) {
    IntPair mag{abs(u), abs(v)};
    if (!magnitudes.contains(mag)) {
      if (magnitudes.size() == uv_limit) break;
      magnitudes.insert(mag);
    }
    if (u == c) continue;
    out.push_back(FamilyDescriptor::pell(u, v, a, b, c));
  }
  return out;
}

namespace {

// Empty when every precondition of co1_instantiate holds.
std::string co1_violation(const PellParams& p, const Int& t1, const Int& t2, const Int& t3,
                          const Int& t4) {
  if (p.u == p.c) return "u != c";
  if (p.u * p.u + p.a * p.b * p.v * p.v != p.c * p.c) return "u^2 + ab v^2 = c^2";
  if (p.g != gcd(p.v * p.a, p.u - p.c)) return "g = gcd(va, u - c)";
  const Int g2 = p.g * p.g;
  if ((p.a * t1 * t1 + p.b * t4 * t4) * g2 + 2 * p.a * p.c * t2 * t3 * (p.c - p.u) != p.c * g2) {
    return "a t1^2 + b t4^2 + 2ac t2 t3 (c - u)/g^2 = c";
  }
  if (!divides(p.c, p.u * t1 + p.v * p.b * t4)) return "c | (u t1 + v b t4)";
  if (!divides(p.c, p.v * p.a * t1 - p.u * t4)) return "c | (v a t1 - u t4)";
  return {};
}

SolutionPair co1_build(const FamilyDescriptor& family, const Int& t1, const Int& t2, const Int& t3,
                       const Int& t4) {
  const PellParams& p = family.pell_params();
  const Int r = exact_div(p.u - p.c, p.g);
  const Int w = exact_div(p.v * p.a, p.g);
  const Mat2 X{t1, r * t2, r * t3, exact_div(p.u * t1 + p.v * p.b * t4, p.c)};
  const Mat2 Y{t4, w * t2, w * t3, exact_div(p.v * p.a * t1 - p.u * t4, p.c)};
  SolutionPair out = make_pair_report(X, Y, EquationSpec{p.a, p.b, p.c, 2, 2}, family);
  if (!out.satisfied || !out.commuting) defect("the PellParametrized identity");
  return out;
}

}  // namespace

SolutionPair co1_instantiate(const FamilyDescriptor& family, const Int& t1, const Int& t2,
                             const Int& t3, const Int& t4) {
  if (family.tag != FamilyTag::PellParametrized) {
    throw PreconditionError("co1_instantiate requires a PellParametrized family");
  }
  if (auto why = co1_violation(family.pell_params(), t1, t2, t3, t4); !why.empty()) {
    throw PreconditionError("violated: " + why);
  }
  return co1_build(family, t1, t2, t3, t4);
}

std::string to_string(const LinearForm& form) {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    const Rational& q = form.coeff[i];
    if (q == 0) continue;
    const std::string var = "t" + std::to_string(i + 1);
    std::string term;
    if (q == 1) {
      term = var;
    } else if (q == -1) {
      term = "-" + var;
    } else {
      term = q.get_str() + "*" + var;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

FamilyShape co1_shape(const FamilyDescriptor& family) {
  if (family.tag != FamilyTag::PellParametrized) {
    throw PreconditionError("co1_shape requires a PellParametrized family");
  }
  const PellParams& p = family.pell_params();
  auto form = [](Rational c1, Rational c2, Rational c3, Rational c4) {
    LinearForm f{{c1, c2, c3, c4}};
    for (auto& q : f.coeff) q.canonicalize();
    return f;
  };
  const Rational r(p.u - p.c, p.g);
  const Rational w(p.v * p.a, p.g);
  FamilyShape shape;
  shape.X = {form(1, 0, 0, 0), form(0, r, 0, 0), form(0, 0, r, 0),
             form(Rational(p.u, p.c), 0, 0, Rational(p.v * p.b, p.c))};
  shape.Y = {form(0, 0, 0, 1), form(0, w, 0, 0), form(0, 0, w, 0),
             form(Rational(p.v * p.a, p.c), 0, 0, Rational(-p.u, p.c))};
  return shape;
}

IntPair recover_uv(const Mat2& X, const Mat2& Y, const Int& a, const Int& b) {
  return {a * X.det() - b * Y.det(), X.e11 * Y.e22 + X.e22 * Y.e11 - X.e12 * Y.e21 - X.e21 * Y.e12};
}

namespace {

bool pell_member(const FamilyDescriptor& family, const Mat2& X, const Mat2& Y) {
  const PellParams& p = family.pell_params();
  if (p.u == p.c || p.g == 0 || !divides(p.g, p.u - p.c)) return false;
  const Int r = exact_div(p.u - p.c, p.g);
  if (!divides(r, X.e12) || !divides(r, X.e21)) return false;
  const Int t1 = X.e11;
  const Int t2 = exact_div(X.e12, r);
  const Int t3 = exact_div(X.e21, r);
  const Int t4 = Y.e11;
  if (!co1_violation(p, t1, t2, t3, t4).empty()) return false;
  const SolutionPair built = co1_build(family, t1, t2, t3, t4);
  return built.X == X && built.Y == Y;
}

}  // namespace

bool is_member(const FamilyDescriptor& family, const Mat2& X, const Mat2& Y) {
  switch (family.tag) {
    case FamilyTag::ScalarPair: {
      const auto& p = std::get<QuadraticConstants>(family.params);
      return X.is_scalar() && Y.is_scalar() && p.a * X.e11 * X.e11 + p.b * Y.e11 * Y.e11 == p.c;
    }
    case FamilyTag::ScalarTracelessRight: {
      const auto& p = std::get<QuadraticConstants>(family.params);
      return X.is_scalar() && is_traceless(Y) &&
             p.a * X.e11 * X.e11 + p.b * traceless_square(traceless_params(Y)) == p.c;
    }
    case FamilyTag::ScalarTracelessLeft: {
      const auto& p = std::get<QuadraticConstants>(family.params);
      return is_traceless(X) && Y.is_scalar() &&
             p.a * traceless_square(traceless_params(X)) + p.b * Y.e11 * Y.e11 == p.c;
    }
    case FamilyTag::PellParametrized:
      return pell_member(family, X, Y);
    case FamilyTag::NonCommTraceless: {
      const auto& p = std::get<QuadraticConstants>(family.params);
      if (!is_traceless(X) || !is_traceless(Y)) return false;
      const Triple t = traceless_params(X);
      const Triple s = traceless_params(Y);
      return independent(t, s) && p.a * traceless_square(t) + p.b * traceless_square(s) == p.c;
    }
    case FamilyTag::NonCommQuartic: {
      const auto& p = std::get<QuarticParams>(family.params);
      if (!is_traceless(X) || !is_traceless(Y)) return false;
      const Triple t = traceless_params(X);
      const Triple s = traceless_params(Y);
      const Int qt = traceless_square(t);
      const Int qs = traceless_square(s);
      return independent(t, s) && qt * qt + qs * qs == pow(p.c, 4);
    }
    case FamilyTag::DiagonalRHS: {
      const auto& p = std::get<DiagonalParams>(family.params);
      if (X.e12 != 0 || X.e21 != 0 || Y.e12 != 0 || Y.e21 != 0) return false;
      return p.c1 != p.c2 && p.a * pow(X.e11, p.m) + p.b * pow(Y.e11, p.n) == p.c1 &&
             p.a * pow(X.e22, p.m) + p.b * pow(Y.e22, p.n) == p.c2;
    }
  }
  return false;
}

SolutionPair classify_pair(const Mat2& X, const Mat2& Y, const EquationSpec& spec) {
  if (!spec.is_quadratic()) throw PreconditionError("classify_pair requires m = n = 2");
  SolutionPair out = make_pair_report(X, Y, spec);
  if (!out.satisfied) return out;

  const auto q = [&](FamilyTag tag) {
    return FamilyDescriptor::quadratic(tag, spec.a, spec.b, spec.c);
  };
  std::optional<FamilyDescriptor> candidate;
  if (!out.commuting) {
    candidate = q(FamilyTag::NonCommTraceless);
  } else if (X.is_scalar() && Y.is_scalar()) {
    candidate = q(FamilyTag::ScalarPair);
  } else if (X.is_scalar()) {
    candidate = q(FamilyTag::ScalarTracelessRight);
  } else if (Y.is_scalar()) {
    candidate = q(FamilyTag::ScalarTracelessLeft);
  } else {
    const auto [u, v] = recover_uv(X, Y, spec.a, spec.b);
    if (u != spec.c && u * u + spec.a * spec.b * v * v == spec.c * spec.c) {
      candidate = FamilyDescriptor::pell(u, v, spec.a, spec.b, spec.c);
    }
  }
  if (candidate && is_member(*candidate, X, Y)) out.family = std::move(candidate);
  return out;
}

namespace {

std::vector<Int> range(const Int& bound) {
  std::vector<Int> out;
  for (Int x = -bound; x <= bound; ++x) out.push_back(x);
  return out;
}

std::vector<Triple> triples(const Int& bound) {
  std::vector<Triple> out;
  const auto r = range(bound);
  for (const Int& x : r)
    for (const Int& y : r)
      for (const Int& z : r) out.push_back({x, y, z});
  return out;
}

// Pairs of independent traceless triples with weight(q(t), q(s)) true.
template <typename Accept>
std::vector<std::pair<Triple, Triple>> traceless_pairs(const Int& bound, Accept accept) {
  const auto all = triples(bound);
  std::map<Int, std::vector<std::size_t>> by_square;
  for (std::size_t i = 0; i < all.size(); ++i) by_square[traceless_square(all[i])].push_back(i);
  std::vector<std::pair<Triple, Triple>> out;
  for (const auto& [qt, ts] : by_square) {
    for (const auto& [qs, ss] : by_square) {
      if (!accept(qt, qs)) continue;
      for (std::size_t i : ts)
        for (std::size_t j : ss)
          if (independent(all[i], all[j])) out.emplace_back(all[i], all[j]);
    }
  }
  return out;
}

}  // namespace

std::vector<SolutionPair> family_instances(const FamilyDescriptor& family, const Int& param_bound) {
  std::vector<SolutionPair> out;
  const auto r = range(param_bound);
  switch (family.tag) {
    case FamilyTag::ScalarPair: {
      const auto& p = std::get<QuadraticConstants>(family.params);
      const EquationSpec spec{p.a, p.b, p.c, 2, 2};
      for (const auto& [t1, t2] : represent(p.a, p.b, p.c, param_bound)) {
        if (abs(t1) > param_bound || abs(t2) > param_bound) continue;
        out.push_back(make_pair_report(Mat2::scalar(t1), Mat2::scalar(t2), spec, family));
      }
      break;
    }
    case FamilyTag::ScalarTracelessRight:
    case FamilyTag::ScalarTracelessLeft: {
      const auto& p = std::get<QuadraticConstants>(family.params);
      const EquationSpec spec{p.a, p.b, p.c, 2, 2};
      const bool right = family.tag == FamilyTag::ScalarTracelessRight;
      for (const Int& scalar : r)
        for (const Triple& t : triples(param_bound)) {
          const Int sq = scalar * scalar;
          const Int q = traceless_square(t);
          const Int lhs = right ? Int(p.a * sq + p.b * q) : Int(p.a * q + p.b * sq);
          if (lhs != p.c) continue;
          const Mat2 S = Mat2::scalar(scalar);
          const Mat2 T = traceless(t);
          out.push_back(right ? make_pair_report(S, T, spec, family)
                              : make_pair_report(T, S, spec, family));
        }
      break;
    }
    case FamilyTag::PellParametrized: {
      const PellParams& p = family.pell_params();
      for (const Int& t1 : r)
        for (const Int& t2 : r)
          for (const Int& t3 : r)
            for (const Int& t4 : r)
              if (co1_violation(p, t1, t2, t3, t4).empty())
                out.push_back(co1_build(family, t1, t2, t3, t4));
      break;
    }
    case FamilyTag::NonCommTraceless: {
      const auto& p = std::get<QuadraticConstants>(family.params);
      const EquationSpec spec{p.a, p.b, p.c, 2, 2};
      auto pairs = traceless_pairs(
          param_bound, [&](const Int& qt, const Int& qs) { return p.a * qt + p.b * qs == p.c; });
      for (const auto& [t, s] : pairs)
        out.push_back(make_pair_report(traceless(t), traceless(s), spec, family));
      break;
    }
    case FamilyTag::NonCommQuartic: {
      const auto& p = std::get<QuarticParams>(family.params);
      const Int c4 = pow(p.c, 4);
      const EquationSpec spec{1, 1, c4, 4, 4};
      auto pairs = traceless_pairs(
          param_bound, [&](const Int& qt, const Int& qs) { return qt * qt + qs * qs == c4; });
      for (const auto& [t, s] : pairs)
        out.push_back(make_pair_report(traceless(t), traceless(s), spec, family));
      break;
    }
    case FamilyTag::DiagonalRHS: {
      const auto& p = std::get<DiagonalParams>(family.params);
      for (const Int& x1 : r)
        for (const Int& y1 : r) {
          if (p.a * pow(x1, p.m) + p.b * pow(y1, p.n) != p.c1) continue;
          for (const Int& x2 : r)
            for (const Int& y2 : r) {
              if (p.a * pow(x2, p.m) + p.b * pow(y2, p.n) != p.c2) continue;
              out.push_back(diag_rhs(p.a, p.b, p.m, p.n, p.c1, p.c2, {x1, x2}, {y1, y2}));
            }
        }
      break;
    }
  }
  for (const SolutionPair& sp : out) {
    if (!sp.satisfied) defect("its family identity");
  }
  std::sort(out.begin(), out.end(), [](const SolutionPair& x, const SolutionPair& y) {
    if (auto c = x.X <=> y.X; c != 0) return c < 0;
    return (x.Y <=> y.Y) < 0;
  });
  return out;
}

}  // namespace m2z
