#include "m2z/oracle.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "m2z/error.hpp"
#include "m2z/numtheory.hpp"

namespace m2z {

namespace {

std::vector<Mat2> box(const Int& bound) {
  std::vector<Mat2> out;
  if (bound < 0) return out;
  std::vector<Int> r;
  for (Int x = -bound; x <= bound; ++x) r.push_back(x);
  out.reserve(r.size() * r.size() * r.size() * r.size());
  for (const Int& e11 : r)
    for (const Int& e12 : r)
      for (const Int& e21 : r)
        for (const Int& e22 : r) out.push_back({e11, e12, e21, e22});
  return out;
}

bool tuple_less(const SolutionPair& x, const SolutionPair& y) {
  if (auto c = x.X <=> y.X; c != 0) return c < 0;
  return (x.Y <=> y.Y) < 0;
}

}  // namespace

OracleResult enumerate_solutions(const EquationSpec& spec, const Int& bound, unsigned jobs) {
  OracleResult result{spec, bound, {}, {}};
  const std::vector<Mat2> candidates = box(bound);
  if (candidates.empty()) return result;

  // b Y^n -> indices of every Y producing it
  std::unordered_map<Mat2, std::vector<std::size_t>, Mat2Hash> by_value;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    by_value[spec.b * pow_closed(candidates[j], spec.n)].push_back(j);
  }

  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, candidates.size()));
  const Mat2 cI = Mat2::scalar(spec.c);
  std::vector<std::vector<SolutionPair>> partial(jobs);
  auto work = [&](unsigned w) {
    const std::size_t lo = candidates.size() * w / jobs;
    const std::size_t hi = candidates.size() * (w + 1) / jobs;
    for (std::size_t i = lo; i < hi; ++i) {
      const Mat2& X = candidates[i];
      auto it = by_value.find(cI - spec.a * pow_closed(X, spec.m));
      if (it == by_value.end()) continue;
      for (std::size_t j : it->second) partial[w].push_back(make_pair_report(X, candidates[j], spec));
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  for (auto& part : partial) {
    for (auto& sp : part) result.solutions.push_back(std::move(sp));
  }
  std::sort(result.solutions.begin(), result.solutions.end(), tuple_less);
  for (const SolutionPair& sp : result.solutions) {
    if (!sp.satisfied) throw Error("internal: oracle listed a non-solution");
    ++result.counts.total;
    ++(sp.commuting ? result.counts.commuting : result.counts.noncommuting);
    ++(sp.nontrivial ? result.counts.nontrivial : result.counts.trivial);
  }
  return result;
}

CompletenessReport completeness_check(const EquationSpec& spec, const Int& bound, unsigned jobs) {
  if (!spec.is_quadratic()) throw PreconditionError("completeness_check requires m = n = 2");
  spec.validate();
  if (is_perfect_square(-(spec.a * spec.b))) {
    throw PreconditionError("completeness_check requires -ab not a perfect square");
  }
  CompletenessReport report;
  report.oracle = enumerate_solutions(spec, bound, jobs);
  for (const SolutionPair& hit : report.oracle.solutions) {
    SolutionPair tagged = classify_pair(hit.X, hit.Y, spec);
    if (tagged.family && is_member(*tagged.family, hit.X, hit.Y)) {
      ++report.by_tag[tagged.family->tag];
    } else {
      tagged.family.reset();
      ++report.unclassified;
    }
    report.classified.push_back(std::move(tagged));
  }
  report.pass = report.unclassified == 0;
  return report;
}

}  // namespace m2z
