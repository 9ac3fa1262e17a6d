#pragma once

/**
 * @file problem_io.hpp
 * @brief Problem files in and result documents out.
 *
 * Problem file (JSON):
 *   {"kind": "explicit",   "d": 2, "points": [[0,0],[1,"1/2"]]}
 *   {"kind": "knapsack01", "d": 3, "P": [[...]], "W": [[...]], "c": [...], "translate": [4,4,4]}
 *   {"kind": "ideal",      "d": 3, "generators": [[1,1,0],[0,1,1]]}
 *
 * Numbers are JSON integers, JSON decimals or strings holding an integer,
 * a decimal or "p/q"; all are read as exact rationals. Infinities are not
 * accepted in problem files.
 *
 * Result document:
 *   {"nondominated": [...], "local_upper_bounds": [...],
 *    "stats": {"n", "m", "scalarizations", "upper_bound_U"}, "translation": [...] | null}
 * Finite values are written as JSON integers when they fit in 64 bits and as
 * "p/q" strings otherwise; infinities as "inf" / "-inf".
 */

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tropmo/pareto_enum.hpp"
#include "tropmo/scalarization.hpp"

namespace tropmo {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ProblemKind { kExplicit, kKnapsack01, kIdeal };

struct ProblemDocument {
  ProblemKind kind = ProblemKind::kExplicit;
  std::size_t d = 0;
  std::vector<Outcome> points;      // explicit
  KnapsackData knapsack;            // knapsack01
  std::vector<Outcome> generators;  // ideal
};

ProblemDocument parse_problem(std::string_view json_text);
ProblemDocument load_problem(const std::filesystem::path& path);

/// Outcome set of an explicit or knapsack problem; the knapsack translation
/// is added only when apply_translation is set.
std::vector<Outcome> materialize_outcomes(const ProblemDocument& doc, bool apply_translation);

std::unique_ptr<ProblemOracle> make_oracle(const ProblemDocument& doc, bool apply_translation);

/// The translation that make_oracle applies, if any.
std::optional<std::vector<Rational>> applied_translation(const ProblemDocument& doc, bool apply_translation);

nlohmann::json scalar_to_json(const ExtendedScalar& x);
ExtendedScalar scalar_from_json(const nlohmann::json& j, bool allow_infinite);

/// Parsed form of a result document, used for round trips and expected-output checks.
struct ResultDocument {
  std::vector<Outcome> nondominated;
  std::vector<std::vector<ExtendedScalar>> local_upper_bounds;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t scalarizations = 0;
  std::uint64_t upper_bound = 0;

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

nlohmann::json result_to_json(const SolveResult& result,
                              const std::optional<std::vector<Rational>>& translation = std::nullopt);
ResultDocument result_from_json(const nlohmann::json& j);
ResultDocument to_document(const SolveResult& result);

/// One record per line: kind, then tab-separated values.
std::string result_to_tsv(const SolveResult& result);

/// Sorted apex vectors as a JSON array.
nlohmann::json apices_to_json(const std::vector<std::vector<ExtendedScalar>>& apices);

}  // namespace tropmo
