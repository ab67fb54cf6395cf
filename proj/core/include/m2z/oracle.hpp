#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "m2z/equation.hpp"
#include "m2z/families.hpp"
#include "m2z/integer.hpp"
#include "m2z/mat2.hpp"

namespace m2z {

struct OracleCounts {
  std::size_t total = 0;
  std::size_t commuting = 0;
  std::size_t noncommuting = 0;
  std::size_t nontrivial = 0;
  std::size_t trivial = 0;
  friend bool operator==(const OracleCounts&, const OracleCounts&) = default;
};

struct OracleResult {
  EquationSpec spec;
  Int bound;
  /// Sorted by the 8-tuple (X entries, Y entries); family is left empty.
  std::vector<SolutionPair> solutions;
  OracleCounts counts;
};

/// Every (X, Y) with entries in [-bound, bound] and a X^m + b Y^n = c I.
/// `jobs` splits the X range across threads (0 = hardware concurrency);
/// the result does not depend on it.
OracleResult enumerate_solutions(const EquationSpec& spec, const Int& bound,
                                 unsigned jobs = 1);

struct CompletenessReport {
  OracleResult oracle;
  /// Oracle hits in order, each with its family tag (if any).
  std::vector<SolutionPair> classified;
  std::size_t unclassified = 0;
  std::map<FamilyTag, std::size_t> by_tag;
  bool pass = false;
};

/// Classifies every oracle hit of a quadratic spec into its family.
/// Requires m = n = 2, c != 0, gcd(a, b, c) = 1 and -ab not a square.
CompletenessReport completeness_check(const EquationSpec& spec, const Int& bound,
                                      unsigned jobs = 1);

}  // namespace m2z
