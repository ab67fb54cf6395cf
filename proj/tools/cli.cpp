#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <climits>
#include <optional>
#include <stdexcept>

#include "m2z/error.hpp"
#include "m2z/families.hpp"
#include "m2z/json.hpp"
#include "m2z/mat2.hpp"
#include "m2z/numtheory.hpp"
#include "m2z/oracle.hpp"
#include "m2z/quadfield.hpp"
#include "m2z/solver.hpp"

namespace m2z::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int flag_int(const std::string& flag, const std::string& text) {
  try {
    return parse_int(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

unsigned long flag_positive(const std::string& flag, const std::string& text) {
  const Int value = flag_int(flag, text);
  if (value < 1 || !value.fits_ulong_p()) throw UsageError(flag + ": expected a positive integer");
  return value.get_ui();
}

std::size_t flag_count(const std::string& flag, const std::string& text) {
  const Int value = flag_int(flag, text);
  if (value < 0 || !value.fits_ulong_p()) {
    throw UsageError(flag + ": expected a non-negative integer");
  }
  return value.get_ui();
}

Mat2 flag_matrix(const std::string& flag, const std::string& text) {
  try {
    return parse_mat2(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

struct SpecFlags {
  std::string a, b, c, m, n, lambda;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
  cmd->add_option("--a", f.a, "coefficient of X^m");
  cmd->add_option("--b", f.b, "coefficient of Y^n");
  cmd->add_option("--c", f.c, "right-hand side scalar");
  cmd->add_option("--m", f.m, "exponent of X (default 2, or n with --lambda)");
  cmd->add_option("--n", f.n, "exponent of Y (default 2)");
  cmd->add_option("--lambda", f.lambda, "Fermat shape X^n + Y^n = lambda^n I");
}

EquationSpec build_spec(const SpecFlags& f) {
  EquationSpec spec;
  spec.n = f.n.empty() ? 2 : flag_positive("--n", f.n);
  if (!f.lambda.empty()) {
    spec.lambda = flag_int("--lambda", f.lambda);
    spec.a = f.a.empty() ? Int(1) : flag_int("--a", f.a);
    spec.b = f.b.empty() ? Int(1) : flag_int("--b", f.b);
    spec.m = f.m.empty() ? spec.n : flag_positive("--m", f.m);
    spec.c = pow(*spec.lambda, spec.n);
    if (!f.c.empty() && flag_int("--c", f.c) != spec.c) {
      throw UsageError("--c: must equal lambda^n when --lambda is given");
    }
  } else {
    if (f.a.empty() || f.b.empty() || f.c.empty()) {
      throw UsageError("--a, --b and --c are required (or --lambda for the Fermat shape)");
    }
    spec.a = flag_int("--a", f.a);
    spec.b = flag_int("--b", f.b);
    spec.c = flag_int("--c", f.c);
    spec.m = f.m.empty() ? 2 : flag_positive("--m", f.m);
  }
  try {
    spec.validate();
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("invalid equation: ") + e.what());
  }
  return spec;
}

bool text_format(const std::string& format) { return format == "text"; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// text rendering

void render_report(std::ostream& out, const SolvabilityReport& r, const std::string& indent) {
  out << indent << "verdict: " << verdict_name(r.verdict);
  if (!r.citation.empty()) out << " [" << r.citation << "]";
  out << " (" << side_name(r.side) << (r.complete ? ", complete" : "") << ")\n";
  for (const auto& f : r.families) out << indent << "  family " << describe(f) << '\n';
  for (const auto& h : r.scalar_solutions) {
    out << indent << "  X^" << h.k << " = " << to_string(h.alpha) << " I, Y^" << h.l << " = "
        << to_string(h.beta) << " I: X = " << to_string(h.X) << ", Y = " << to_string(h.Y)
        << (h.nontrivial ? "" : " (trivial)") << '\n';
  }
  for (const auto& fr : r.frames) {
    out << indent << "  frame e=" << to_string(fr.e) << " f=" << to_string(fr.f)
        << " g=" << to_string(fr.g) << ": disc " << to_string(fr.disc) << " = "
        << to_string(fr.k) << "^2 * " << to_string(fr.D) << '\n';
  }
  if (!r.truncation.empty()) out << indent << "  truncated: " << r.truncation << '\n';
  for (const auto& p : r.parts) render_report(out, p, indent + "  ");
}

std::string render_pair(const SolutionPair& p) {
  std::string s = "X = " + to_string(p.X) + ", Y = " + to_string(p.Y);
  s += p.commuting ? ", commuting" : ", non-commuting";
  s += p.nontrivial ? ", nontrivial" : ", trivial";
  if (p.family) s += ", " + describe(*p.family);
  return s;
}

// ---------------------------------------------------------------------------
// commands

struct Common {
  std::string format = "json";
};

int cmd_classify(const SpecFlags& sf, const std::string& bound, const std::string& uv_limit,
                 const Common& common, std::ostream& out) {
  const EquationSpec spec = build_spec(sf);
  ClassifyOptions options;
  options.noncomm_bound = flag_int("--bound", bound);
  options.uv_limit = flag_count("--uv-limit", uv_limit);
  const SolvabilityReport report = classify(spec, options);
  if (text_format(common.format)) {
    out << spec.describe() << '\n';
    render_report(out, report, "");
  } else {
    emit(out, as_json(report));
  }
  return kOk;
}

struct FamilyBlock {
  FamilyDescriptor family;
  std::optional<FamilyShape> shape;
  std::vector<SolutionPair> pairs;
};

struct CommutantBlock {
  ReductionFrame frame;
  std::vector<CommutantHit> hits;
};

int cmd_solve(const SpecFlags& sf, const std::string& bound, const std::string& uv_limit,
              const std::string& param_bound_text, const Common& common, std::ostream& out) {
  const EquationSpec spec = build_spec(sf);
  ClassifyOptions options;
  options.noncomm_bound = flag_int("--bound", bound);
  options.uv_limit = flag_count("--uv-limit", uv_limit);
  const Int param_bound = flag_int("--param-bound", param_bound_text);
  if (param_bound < 0) throw UsageError("--param-bound: expected a non-negative integer");
  const SolvabilityReport report = classify(spec, options);

  std::vector<FamilyBlock> blocks;
  for (const FamilyDescriptor& f : report.families) {
    FamilyBlock block{f, std::nullopt, family_instances(f, param_bound)};
    if (f.tag == FamilyTag::PellParametrized) block.shape = co1_shape(f);
    blocks.push_back(std::move(block));
  }
  std::vector<CommutantBlock> commutant;
  for (const ReductionFrame& fr : report.frames) {
    const CommutantFrame frame(fr.e, fr.f, fr.g);
    commutant.push_back({fr, commutant_search(spec, frame, param_bound)});
  }
  std::size_t count = report.scalar_solutions.size();
  for (const auto& b : blocks) count += b.pairs.size();
  for (const auto& c : commutant) count += c.hits.size();

  const std::string truncation =
      "families instantiated with free parameters in [-" + to_string(param_bound) + ", " +
      to_string(param_bound) + "]; commutant elements with |s|, |t| <= " +
      to_string(param_bound) + (report.truncation.empty() ? "" : "; " + report.truncation);

  if (text_format(common.format)) {
    out << spec.describe() << '\n';
    render_report(out, report, "");
    for (const auto& b : blocks) {
      out << describe(b.family) << ": " << b.pairs.size() << " instance(s)\n";
      if (b.shape) {
        out << "  X = [[" << to_string(b.shape->X[0]) << ", " << to_string(b.shape->X[1]) << "], ["
            << to_string(b.shape->X[2]) << ", " << to_string(b.shape->X[3]) << "]]\n";
        out << "  Y = [[" << to_string(b.shape->Y[0]) << ", " << to_string(b.shape->Y[1]) << "], ["
            << to_string(b.shape->Y[2]) << ", " << to_string(b.shape->Y[3]) << "]]\n";
      }
      for (const auto& p : b.pairs) out << "  " << render_pair(p) << '\n';
    }
    for (const auto& c : commutant) {
      out << "frame D=" << to_string(c.frame.D) << " (e=" << to_string(c.frame.e)
          << ", f=" << to_string(c.frame.f) << ", g=" << to_string(c.frame.g)
          << "): " << c.hits.size() << " hit(s)\n";
      for (const auto& h : c.hits) {
        out << "  X = " << to_string(h.X) << ", Y = " << to_string(h.Y)
            << (h.nontrivial ? "" : " (trivial)") << '\n';
      }
    }
    out << "solutions listed: " << count << '\n';
    out << "truncated: " << truncation << '\n';
  } else {
    Json j;
    j["spec"] = as_json(spec);
    j["report"] = as_json(report);
    Json fams = Json::array();
    for (const auto& b : blocks) {
      Json fb;
      fb["family"] = as_json(b.family);
      fb["shape"] = b.shape ? as_json(*b.shape) : Json(nullptr);
      Json pairs = Json::array();
      for (const auto& p : b.pairs) pairs.push_back(as_json(p));
      fb["instances"] = std::move(pairs);
      fams.push_back(std::move(fb));
    }
    j["families"] = std::move(fams);
    Json comm = Json::array();
    for (const auto& c : commutant) {
      Json cb;
      cb["frame"] = as_json(c.frame);
      Json hits = Json::array();
      for (const auto& h : c.hits) {
        Json hj;
        hj["x"] = as_json(h.X);
        hj["y"] = as_json(h.Y);
        hj["nontrivial"] = h.nontrivial;
        hits.push_back(std::move(hj));
      }
      cb["hits"] = std::move(hits);
      comm.push_back(std::move(cb));
    }
    j["commutant"] = std::move(comm);
    j["count"] = count;
    Json t;
    t["uv_limit"] = options.uv_limit;
    t["param_bound"] = as_json(param_bound);
    t["statement"] = truncation;
    j["truncation"] = std::move(t);
    emit(out, j);
  }
  return count == 0 ? kNoResult : kOk;
}

int cmd_verify(const SpecFlags& sf, const std::string& x, const std::string& y,
               const Common& common, std::ostream& out) {
  const EquationSpec spec = build_spec(sf);
  const Mat2 X = flag_matrix("--x", x);
  const Mat2 Y = flag_matrix("--y", y);
  const SolutionPair report = verify(X, Y, spec);
  const bool eigen = eigen_condition_check(X, Y, spec);
  if (text_format(common.format)) {
    out << spec.describe() << '\n';
    out << (report.satisfied ? "satisfied" : "not satisfied") << ": " << render_pair(report)
        << '\n';
    out << "eigenvalue condition: " << (eigen ? "holds" : "fails") << '\n';
  } else {
    Json j = as_json(report);
    j["eigen_condition"] = eigen;
    emit(out, j);
  }
  return report.satisfied ? kOk : kNoResult;
}

int cmd_oracle(const SpecFlags& sf, const std::string& bound_text, const std::string& jobs_text,
               const Common& common, std::ostream& out) {
  const EquationSpec spec = build_spec(sf);
  const Int bound = flag_int("--bound", bound_text);
  if (bound < 0) throw UsageError("--bound: expected a non-negative integer");
  const std::size_t jobs = flag_count("--jobs", jobs_text);
  if (jobs > 1024) throw UsageError("--jobs: at most 1024 workers");
  const OracleResult result = enumerate_solutions(spec, bound, static_cast<unsigned>(jobs));
  for (const SolutionPair& hit : result.solutions) {
    SolutionPair tagged = verify(hit.X, hit.Y, spec);
    if (text_format(common.format)) {
      out << render_pair(tagged) << '\n';
    } else {
      out << oracle_line(tagged).dump() << '\n';
    }
  }
  if (text_format(common.format)) {
    const OracleCounts& c = result.counts;
    out << "total " << c.total << ": commuting " << c.commuting << ", non-commuting "
        << c.noncommuting << ", nontrivial " << c.nontrivial << ", trivial " << c.trivial << '\n';
  }
  return result.solutions.empty() ? kNoResult : kOk;
}

int cmd_pell(const std::string& d, const SpecFlags& sf, const std::string& uv_limit,
             const Common& common, std::ostream& out) {
  if (!d.empty()) {
    const Int D = flag_int("--d", d);
    if (D <= 0 || is_perfect_square(D)) throw UsageError("--d: expected a positive non-square");
    const PellSolution sol = pell_fundamental(D);
    if (text_format(common.format)) {
      out << to_string(sol.u) << "^2 - " << to_string(D) << " * " << to_string(sol.v)
          << "^2 = 1\n";
    } else {
      Json j;
      j["u"] = as_json(sol.u);
      j["v"] = as_json(sol.v);
      out << j.dump() << '\n';
    }
    return kOk;
  }
  if (sf.a.empty() || sf.b.empty() || sf.c.empty()) {
    throw UsageError("pell: give --d, or --a, --b and --c for u^2 + ab v^2 = c^2");
  }
  const Int a = flag_int("--a", sf.a);
  const Int b = flag_int("--b", sf.b);
  const Int c = flag_int("--c", sf.c);
  const std::size_t limit = flag_count("--uv-limit", uv_limit);
  std::vector<IntPair> sols;
  try {
    sols = uv_solutions(a, b, c, limit);
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("pell: ") + e.what());
  }
  if (text_format(common.format)) {
    for (const auto& [u, v] : sols) out << "u = " << to_string(u) << ", v = " << to_string(v) << '\n';
  } else {
    Json list = Json::array();
    for (const auto& [u, v] : sols) list.push_back(Json::array({as_json(u), as_json(v)}));
    Json j;
    j["solutions"] = std::move(list);
    j["limit"] = limit;
    j["infinite"] = a * b < 0;
    out << j.dump() << '\n';
  }
  return sols.empty() ? kNoResult : kOk;
}

int cmd_power(const std::string& x, const std::string& n_text, const Common& common,
              std::ostream& out) {
  const Mat2 X = flag_matrix("--x", x);
  const unsigned long n = flag_positive("--n", n_text);
  const Mat2 P = pow_closed(X, n);
  const ScalarPowerClass order = scalar_order_classify(X);
  if (text_format(common.format)) {
    out << to_string(X) << "^" << n << " = " << to_string(P) << '\n';
    if (order) {
      out << "scalar order " << order->k << ": X^" << order->k << " = " << to_string(order->value)
          << " I\n";
    } else {
      out << "no power of X is scalar\n";
    }
  } else {
    Json j;
    j["x"] = as_json(X);
    j["n"] = n;
    j["power"] = as_json(P);
    j["trace"] = as_json(X.trace());
    j["det"] = as_json(X.det());
    if (order) {
      Json o;
      o["k"] = order->k;
      o["value"] = as_json(order->value);
      j["scalar_order"] = std::move(o);
    } else {
      j["scalar_order"] = nullptr;
    }
    emit(out, j);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve, enumerate and verify a X^m + b Y^n = c I over 2x2 integer matrices", "m2z"};
  app.require_subcommand(1);

  Common common;
  SpecFlags spec;
  std::string bound = "3", uv_limit = "8", param_bound = "3", jobs = "1", x, y, d, n = "";

  auto format_option = [&](CLI::App* cmd) {
    cmd->add_option("--format", common.format, "json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* classify_cmd = app.add_subcommand("classify", "solvability verdict for an equation");
  add_spec_flags(classify_cmd, spec);
  classify_cmd->add_option("--bound", bound, "bound for the scalar-power search");
  classify_cmd->add_option("--uv-limit", uv_limit, "number of (|u|,|v|) magnitudes to list");
  format_option(classify_cmd);

  auto* solve_cmd = app.add_subcommand("solve", "verdict plus explicit solutions");
  add_spec_flags(solve_cmd, spec);
  solve_cmd->add_option("--bound", bound, "bound for the scalar-power search");
  solve_cmd->add_option("--uv-limit", uv_limit, "number of (|u|,|v|) magnitudes to list");
  solve_cmd->add_option("--param-bound", param_bound, "bound on free family parameters");
  format_option(solve_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check a candidate pair (X, Y)");
  add_spec_flags(verify_cmd, spec);
  verify_cmd->add_option("--x", x, "matrix X as [[e11,e12],[e21,e22]]")->required();
  verify_cmd->add_option("--y", y, "matrix Y as [[e11,e12],[e21,e22]]")->required();
  format_option(verify_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search with bounded entries");
  add_spec_flags(oracle_cmd, spec);
  oracle_cmd->add_option("--bound", bound, "entry bound (default 3)");
  oracle_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  format_option(oracle_cmd);

  auto* pell_cmd = app.add_subcommand("pell", "Pell fundamental solution or u^2 + ab v^2 = c^2");
  pell_cmd->add_option("--d", d, "D for u^2 - D v^2 = 1");
  pell_cmd->add_option("--a", spec.a, "a in u^2 + ab v^2 = c^2");
  pell_cmd->add_option("--b", spec.b, "b in u^2 + ab v^2 = c^2");
  pell_cmd->add_option("--c", spec.c, "c in u^2 + ab v^2 = c^2");
  pell_cmd->add_option("--uv-limit", uv_limit, "number of solutions to list");
  format_option(pell_cmd);

  auto* power_cmd = app.add_subcommand("power", "closed-form power and scalar-power order");
  power_cmd->add_option("--x", x, "matrix as [[e11,e12],[e21,e22]]")->required();
  power_cmd->add_option("--n", n, "exponent")->required();
  format_option(power_cmd);

  if (!args.empty() && !args[0].starts_with("-") && app.get_subcommand_no_throw(args[0]) == nullptr) {
    err << "error: unknown command '" << args[0] << "'\n";
    return kUsage;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(spec, bound, uv_limit, common, out);
    if (*solve_cmd) return cmd_solve(spec, bound, uv_limit, param_bound, common, out);
    if (*verify_cmd) return cmd_verify(spec, x, y, common, out);
    if (*oracle_cmd) return cmd_oracle(spec, bound, jobs, common, out);
    if (*pell_cmd) return cmd_pell(d, spec, uv_limit, common, out);
    if (*power_cmd) return cmd_power(x, n, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace m2z::cli
