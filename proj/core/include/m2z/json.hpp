#pragma once

/**
 * @file json.hpp
 * @brief JSON encodings shared by the CLI and tests.
 *
 * Integers that fit in 64 bits are JSON numbers; larger ones are decimal
 * strings. Object keys keep insertion order so output is byte-stable.
 */

#include <nlohmann/json.hpp>

#include "m2z/equation.hpp"
#include "m2z/families.hpp"
#include "m2z/integer.hpp"
#include "m2z/mat2.hpp"
#include "m2z/oracle.hpp"
#include "m2z/solver.hpp"

namespace m2z {

using Json = nlohmann::ordered_json;

Json as_json(const Int& value);
Json as_json(const Mat2& m);
Json as_json(const EquationSpec& spec);
/// {"tag": ..., "params": {...}} with the parameter struct's field names.
Json as_json(const FamilyDescriptor& family);
Json as_json(const FamilyShape& shape);
Json as_json(const SolutionPair& pair);
Json as_json(const NoncommHit& hit);
Json as_json(const ReductionFrame& frame);
/// {"verdict", "citation", "payload"}; nested reports appear under
/// payload.parts.
Json as_json(const SolvabilityReport& report);
Json as_json(const OracleCounts& counts);

/// One oracle line: {"x", "y", "family", "commuting", "nontrivial"}.
Json oracle_line(const SolutionPair& pair);

}  // namespace m2z
